"""Non-commutative Groebner machinery over K<X1,...,Xn>: subword
divisibility, normal forms, overlap obstructions, normal-word counting and
rational Hilbert series, plus degree-wise slice elimination.

This module is deliberately independent of the lifting construction so it
can serve as its verification oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .algebra import AlgebraContext, FreePolynomial, Word, words_of_degree
from .linalg import rref
from .orders import FreeOrderSpec, leading_term_free, monic_free


def subword_divides(a: Word, b: Word) -> tuple[bool, list[int]]:
    """Does a occur as a contiguous factor of b?  Returns all offsets."""
    la, lb = len(a), len(b)
    offsets = [p for p in range(lb - la + 1) if b[p:p + la] == a]
    return bool(offsets), offsets


class PatternAutomaton:
    """Aho-Corasick automaton over the integer alphabet 1..n.

    Used both to locate leading-word occurrences during reduction and, with
    matched states treated as absorbing, to count normal words (this is the
    walk-counting automaton on normal-word suffixes).
    """

    def __init__(self, patterns: list[Word], n: int):
        self.n = n
        self.patterns = list(patterns)
        self.goto: list[dict[int, int]] = [{}]
        self.out: list[list[int]] = [[]]
        self.fail: list[int] = [0]
        for idx, pat in enumerate(self.patterns):
            if not pat:
                raise ValueError("empty pattern")
            s = 0
            for a in pat:
                nxt = self.goto[s].get(a)
                if nxt is None:
                    nxt = len(self.goto)
                    self.goto[s][a] = nxt
                    self.goto.append({})
                    self.out.append([])
                    self.fail.append(0)
                s = nxt
            self.out[s].append(idx)
        # BFS failure links
        queue = list(self.goto[0].values())
        for s in queue:
            self.fail[s] = 0
        while queue:
            s = queue.pop(0)
            for a, t in self.goto[s].items():
                queue.append(t)
                f = self.fail[s]
                while f and a not in self.goto[f]:
                    f = self.fail[f]
                self.fail[t] = self.goto[f].get(a, 0) if self.goto[f].get(a, 0) != t else 0
                self.out[t] = self.out[t] + self.out[self.fail[t]]
        # dense transition table (alphabet is small)
        self.step: list[dict[int, int]] = []
        for s in range(len(self.goto)):
            row = {}
            for a in range(1, n + 1):
                t = s
                while t and a not in self.goto[t]:
                    t = self.fail[t]
                row[a] = self.goto[t].get(a, 0)
            self.step.append(row)

    def first_match(self, word: Word) -> tuple[int, int] | None:
        """First (pattern index, end offset) occurrence, scanning left to right."""
        s = 0
        for pos, a in enumerate(word):
            s = self.step[s][a]
            if self.out[s]:
                return self.out[s][0], pos + 1
        return None

    def matches(self, word: Word) -> list[tuple[int, int]]:
        """All (pattern index, start offset) occurrences."""
        s, found = 0, []
        for pos, a in enumerate(word):
            s = self.step[s][a]
            for idx in self.out[s]:
                found.append((idx, pos + 1 - len(self.patterns[idx])))
        found.sort()
        return found


def naive_matches(patterns: list[Word], word: Word) -> list[tuple[int, int]]:
    """Linear-scan reference for PatternAutomaton.matches."""
    found = []
    for idx, pat in enumerate(patterns):
        _, offs = subword_divides(pat, word)
        found.extend((idx, o) for o in offs)
    found.sort()
    return found


class MonomialIdealFree:
    """Monomial ideal of the free algebra: antichain of words under
    contiguous-subword divisibility."""

    __slots__ = ("gens", "n", "_auto")

    def __init__(self, words, n: int, order: FreeOrderSpec = FreeOrderSpec()):
        uniq = sorted(set(tuple(w) for w in words), key=len)
        mins: list[Word] = []
        for w in uniq:
            if not any(subword_divides(g, w)[0] for g in mins):
                mins.append(w)
        mins.sort(key=order.word_key)
        self.gens = tuple(mins)
        self.n = n
        self._auto = PatternAutomaton(list(mins), n) if mins else None

    def member(self, w: Word) -> bool:
        if self._auto is None:
            return False
        return self._auto.first_match(w) is not None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdealFree)
            and self.n == other.n
            and set(self.gens) == set(other.gens)
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.gens)))

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __repr__(self) -> str:
        return f"MonomialIdealFree({[''.join(f'X{i}' for i in w) for w in self.gens]})"


@dataclass
class FreeGroebnerCandidate:
    """Monic homogeneous polynomials proposed as a Groebner basis."""

    ctx: AlgebraContext
    elements: list[FreePolynomial]
    order: FreeOrderSpec = FreeOrderSpec()

    def __post_init__(self):
        normalized = []
        for F in self.elements:
            if not F:
                raise ValueError("zero element in candidate basis")
            if not F.is_homogeneous():
                raise ValueError("candidate elements must be homogeneous")
            normalized.append(monic_free(F, self.order))
        self.elements = normalized
        self.leading_words = [leading_term_free(F, self.order)[0] for F in self.elements]
        self.automaton = PatternAutomaton(self.leading_words, self.ctx.n)


def normal_form(F: FreePolynomial, G: FreeGroebnerCandidate) -> FreePolynomial:
    """Fully reduce F: rewrite the largest reducible word A in(g) B into
    A (in(g) - g) B until no word contains a leading word of G."""
    key = G.order.word_key
    current = dict(F.terms)
    while True:
        reducible = None
        hit = None
        for w in current:
            match = G.automaton.first_match(w)
            if match is not None and (reducible is None or key(w) > key(reducible)):
                reducible, hit = w, match
        if reducible is None:
            return FreePolynomial(current)
        idx, end = hit
        g = G.elements[idx]
        lead = G.leading_words[idx]
        coeff = current.pop(reducible)
        prefix = reducible[: end - len(lead)]
        suffix = reducible[end:]
        for w, c in g.terms.items():
            if w == lead:
                continue
            key_w = prefix + w + suffix
            s = current.get(key_w, 0) - coeff * c
            if s:
                current[key_w] = s
            else:
                current.pop(key_w, None)


@dataclass(frozen=True)
class Obstruction:
    """An overlap or inclusion ambiguity between two leading words."""

    i: int
    j: int
    word: Word
    s_poly: FreePolynomial
    remainder: FreePolynomial | None = None

    @property
    def resolved(self) -> bool:
        return not self.remainder


def _ambiguities(w1: Word, w2: Word, same: bool) -> list[tuple[Word, Word, Word, Word]]:
    """(A, B, C, D) with A w2 B = w1 D = C w2 ... encoded as:
    the ambiguity word W plus the cofactors so that g1 * r - l * g2 matches.

    Returned tuples are (left1, right1, left2, right2): W = left1 w1 right1
    = left2 w2 right2 with the two occurrences genuinely overlapping.
    """
    out = []
    l1, l2 = len(w1), len(w2)
    # proper overlap: a suffix of w1 equals a prefix of w2
    for k in range(1, min(l1, l2)):
        if w1[l1 - k:] == w2[:k]:
            out.append(((), w2[k:], w1[:l1 - k], ()))
    # inclusion: w2 inside w1
    if l2 < l1 or (l2 == l1 and not same):
        for p in range(l1 - l2 + 1):
            if w1[p:p + l2] == w2:
                out.append(((), (), w1[:p], w1[p + l2:]))
    return out


def enumerate_obstructions(G: FreeGroebnerCandidate) -> list[tuple[int, int, Word, FreePolynomial]]:
    """All overlap and inclusion ambiguities with their S-polynomials,
    sorted by ambiguity degree."""
    found = []
    for i, w1 in enumerate(G.leading_words):
        for j, w2 in enumerate(G.leading_words):
            for left1, right1, left2, right2 in _ambiguities(w1, w2, i == j):
                word = left1 + w1 + right1
                s = (
                    FreePolynomial.monomial(left1) * G.elements[i] * FreePolynomial.monomial(right1)
                    - FreePolynomial.monomial(left2) * G.elements[j] * FreePolynomial.monomial(right2)
                )
                found.append((i, j, word, s))
    found.sort(key=lambda t: (len(t[2]), G.order.word_key(t[2])))
    return found


def obstructions_resolve(G: FreeGroebnerCandidate) -> tuple[bool, list[Obstruction]]:
    """Reduce every S-polynomial; (True, []) iff all vanish, otherwise the
    failing ambiguities are returned as certificates."""
    failures = []
    for i, j, word, s in enumerate_obstructions(G):
        rem = normal_form(s, G)
        if rem:
            failures.append(Obstruction(i, j, word, s, rem))
    return not failures, failures


def initial_ideal_free(G: FreeGroebnerCandidate) -> MonomialIdealFree:
    ok, _ = obstructions_resolve(G)
    if not ok:
        raise ValueError("candidate is not a Groebner basis: obstructions do not resolve")
    return MonomialIdealFree(G.leading_words, G.ctx.n, G.order)


def normal_word_count(B: MonomialIdealFree, d: int) -> int:
    """Number of degree-d words avoiding every generator of B, by dynamic
    programming over the pattern automaton."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return _normal_counts(B, d)[d]


def _automaton_states(B: MonomialIdealFree):
    """Live states and the transition function of the avoidance automaton."""
    if B._auto is None:
        return [0], {0: {a: 0 for a in range(1, B.n + 1)}}
    auto = B._auto
    live = [s for s in range(len(auto.step)) if not auto.out[s]]
    step = {
        s: {a: auto.step[s][a] for a in range(1, B.n + 1)}
        for s in live
    }
    return live, step


def _normal_counts(B: MonomialIdealFree, d: int) -> list[int]:
    live, step = _automaton_states(B)
    is_live = set(live)
    counts = [1]
    state_counts = {0: 1}
    for _ in range(d):
        nxt: dict[int, int] = {}
        for s, c in state_counts.items():
            for a in range(1, B.n + 1):
                t = step[s][a]
                if t in is_live:
                    nxt[t] = nxt.get(t, 0) + c
        state_counts = nxt
        counts.append(sum(state_counts.values()))
    return counts


def hilbert_rational(B: MonomialIdealFree) -> tuple[list[int], list[int]]:
    """Generating function of normal-word counts as a reduced rational
    function; coefficient lists ascending in t, denominator normalized to
    constant term 1 (so a polynomial comes back as (coeffs, [1])).

    The counts are walk numbers in the avoidance automaton: the series is
    e_root^T (I - tM)^{-1} 1 with M the transfer matrix on live states.  Its
    denominator divides det(I - tM), the reversed characteristic polynomial
    of M, and the numerator has smaller degree, so it is recovered exactly
    from the first k counts.
    """
    live, step = _automaton_states(B)
    index = {s: i for i, s in enumerate(live)}
    k = len(live)
    M = [[0] * k for _ in range(k)]
    for s in live:
        for a in range(1, B.n + 1):
            t = step[s][a]
            if t in index:
                M[index[t]][index[s]] += 1
    # det(I - tM) = t^k charpoly_M(1/t); all_coeffs is descending in lam,
    # which is ascending in t
    den = [int(c) for c in sympy.Matrix(M).charpoly().all_coeffs()]
    counts = _normal_counts(B, max(k - 1, 0))
    num = [
        sum(den[i] * counts[e - i] for i in range(e + 1))
        for e in range(k)
    ] or [1]
    t = sympy.Symbol("t")
    num_poly = sympy.Poly(list(reversed(num)), t)
    den_poly = sympy.Poly(list(reversed(den)), t)
    if not num_poly.is_zero:
        g = sympy.gcd(num_poly, den_poly)
        num_poly = sympy.div(num_poly, g, t)[0]
        den_poly = sympy.div(den_poly, g, t)[0]
    num = [int(c) for c in reversed(num_poly.all_coeffs())] or [0]
    den = [int(c) for c in reversed(den_poly.all_coeffs())]
    if den[0] == 0:
        raise ArithmeticError("denominator has vanishing constant term")
    if den[0] < 0:
        num = [-v for v in num]
        den = [-v for v in den]
    if den[0] != 1:
        # gcd cancellation is monic over Q; rescale to integer lists
        from math import gcd as _gcd

        g_all = 0
        for v in num + den:
            g_all = _gcd(g_all, abs(v))
        if g_all > 1:
            num = [v // g_all for v in num]
            den = [v // g_all for v in den]
    return num, den


def ideal_slice_rows(
    gens: list[FreePolynomial], ctx: AlgebraContext, d: int
) -> list[dict[Word, Fraction]]:
    """Spanning rows of the degree-d slice of the two-sided ideal: all word
    multiples A g B with |A| + deg g + |B| = d."""
    rows = []
    for g in gens:
        if not g:
            continue
        e = g.degree
        if e > d:
            continue
        for la in range(d - e + 1):
            lb = d - e - la
            for A in words_of_degree(ctx, la):
                left = FreePolynomial.monomial(A) * g
                for Bw in words_of_degree(ctx, lb):
                    rows.append((left * FreePolynomial.monomial(Bw)).terms)
    return rows


@dataclass(frozen=True)
class FreeInitialData:
    """Initial ideal of a free-algebra ideal computed degree by degree."""

    initial: MonomialIdealFree
    slice_dims: dict[int, int]
    basis_elements: tuple[FreePolynomial, ...]  # reduced rows at the minimal generators


def free_initial_ideal(
    gens: list[FreePolynomial],
    ctx: AlgebraContext,
    order: FreeOrderSpec,
    max_degree: int,
) -> FreeInitialData:
    """Degree-wise elimination: pivots of the row-reduced slice are the
    initial-ideal slice; pivots with no lower-degree generator as contiguous
    subword are new minimal generators, their reduced rows new basis
    elements."""
    key = order.word_key
    mingens: list[Word] = []
    basis: list[FreePolynomial] = []
    dims: dict[int, int] = {}
    dmin = min((g.degree for g in gens if g), default=max_degree + 1)
    for d in range(dmin, max_degree + 1):
        rows = rref(ideal_slice_rows(gens, ctx, d), key)
        dims[d] = len(rows)
        current = MonomialIdealFree(mingens, ctx.n, order) if mingens else None
        for row in rows:
            lead = max(row, key=key)
            if current is None or not current.member(lead):
                mingens.append(lead)
                basis.append(FreePolynomial(row))
    return FreeInitialData(
        initial=MonomialIdealFree(mingens, ctx.n, order),
        slice_dims=dims,
        basis_elements=tuple(basis),
    )

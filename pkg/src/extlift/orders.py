"""Term orders: the commutative base order (deglex or degrevlex) restricted
to square-free monomials, and its lift to a monoid well-order on words.

All comparisons are degree-first.  Within a degree, a word is compared by
the base order applied to its commutative image (the multiset of its
letters) and ties are broken lexicographically; on square-free strictly
increasing words this agrees with the exterior order through the section
delta.  Comparing commutative images (rather than only the square-free
ones) is what makes the lifted relation transitive: comparing words with a
repeated letter purely lexicographically admits cycles such as
X2X3 < X1X4 < X2X2 < X2X3 under deglex with four variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import ExtMonomial, ExtPolynomial, FreePolynomial, Word

KINDS = ("deglex", "degrevlex")


@dataclass(frozen=True)
class ExtOrderSpec:
    """Base order on monomials: kind plus an optional variable ranking.

    ``ranking`` permutes 1..n; ranking[i] is the rank of variable i+1, and
    variables of higher rank are larger.  Default is the natural ranking
    x1 < x2 < ... < xn.
    """

    kind: str = "deglex"
    ranking: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}; expected one of {KINDS}")
        if self.ranking is not None and sorted(self.ranking) != list(range(1, len(self.ranking) + 1)):
            raise ValueError("variable ranking must be a permutation of 1..n")

    def rank(self, i: int) -> int:
        if self.ranking is None:
            return i
        return self.ranking[i - 1]

    def multiset_key(self, letters: Word) -> tuple[int, ...]:
        """Key comparing commutative monomials of equal degree.

        deglex compares exponents from the largest variable down, which on
        letter multisets is lexicographic comparison of the descending rank
        tuple; degrevlex prefers the monomial *lacking* the smallest
        differing variable, which is lexicographic comparison of the
        ascending rank tuple.
        """
        ranks = [self.rank(i) for i in letters]
        ranks.sort(reverse=self.kind == "deglex")
        return tuple(ranks)

    def ext_key(self, m: ExtMonomial):
        sup = m.support
        return (len(sup), self.multiset_key(sup))


@dataclass(frozen=True)
class FreeOrderSpec:
    """Degree-first lift of an exterior order to the free monoid."""

    base: ExtOrderSpec = ExtOrderSpec()

    def lex_key(self, w: Word) -> tuple[int, ...]:
        return tuple(self.base.rank(i) for i in w)

    def word_key(self, w: Word):
        return (len(w), self.base.multiset_key(w), self.lex_key(w))


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def cmp_lex(M: Word, N: Word, spec: FreeOrderSpec = FreeOrderSpec()) -> int:
    """Letter-by-letter comparison of equal-degree words."""
    if len(M) != len(N):
        raise ValueError("lexicographic comparison requires words of equal degree")
    return _cmp(spec.lex_key(M), spec.lex_key(N))


def cmp_ext(m: ExtMonomial, u: ExtMonomial, spec: ExtOrderSpec) -> int:
    return _cmp(spec.ext_key(m), spec.ext_key(u))


def cmp_t(M: Word, N: Word, spec: FreeOrderSpec) -> int:
    return _cmp(spec.word_key(M), spec.word_key(N))


def leading_term_ext(f: ExtPolynomial, spec: ExtOrderSpec) -> tuple[ExtMonomial, Fraction]:
    if not f:
        raise ValueError("zero polynomial has no leading term")
    m = max(f.terms, key=spec.ext_key)
    return m, f.terms[m]


def leading_term_free(F: FreePolynomial, spec: FreeOrderSpec) -> tuple[Word, Fraction]:
    if not F:
        raise ValueError("zero polynomial has no leading term")
    w = max(F.terms, key=spec.word_key)
    return w, F.terms[w]


def monic_ext(f: ExtPolynomial, spec: ExtOrderSpec) -> ExtPolynomial:
    _, c = leading_term_ext(f, spec)
    return f.scale(1 / c)


def monic_free(F: FreePolynomial, spec: FreeOrderSpec) -> FreePolynomial:
    _, c = leading_term_free(F, spec)
    return F.scale(1 / c)


def sorted_terms_ext(f: ExtPolynomial, spec: ExtOrderSpec) -> list[tuple[ExtMonomial, Fraction]]:
    return [(m, f.terms[m]) for m in sorted(f.terms, key=spec.ext_key, reverse=True)]


def sorted_terms_free(F: FreePolynomial, spec: FreeOrderSpec) -> list[tuple[Word, Fraction]]:
    return [(w, F.terms[w]) for w in sorted(F.terms, key=spec.word_key, reverse=True)]

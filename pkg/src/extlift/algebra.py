"""Exact-rational arithmetic in the exterior algebra E(V) and the free
associative algebra K<X1,...,Xn>, together with the projection pi, its
section delta, and the GL(V) action on both algebras.

Conventions:
  - scalars are ``fractions.Fraction`` (exact, always reduced);
  - a free-monoid word is a tuple of variable indices in 1..n, () is 1;
  - an exterior monomial is a square-free product x_I, stored as the index
    set I (a bitmask); signs are never stored in monomials, they are folded
    into coefficients when multiplying or projecting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping

Word = tuple[int, ...]

MAX_VARS = 64


@dataclass(frozen=True)
class AlgebraContext:
    """Number of variables n; all indices must lie in 1..n."""

    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VARS:
            raise ValueError(f"number of variables must be in 1..{MAX_VARS}, got {self.n}")

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range 1..{self.n}")


class ExtMonomial:
    """Square-free exterior monomial x_I, I a strictly increasing index set."""

    __slots__ = ("bits",)

    def __init__(self, indices: Iterable[int] = ()):
        bits = 0
        for i in indices:
            if i < 1:
                raise ValueError(f"variable index {i} must be positive")
            bits |= 1 << i
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_bits(cls, bits: int) -> "ExtMonomial":
        m = cls.__new__(cls)
        object.__setattr__(m, "bits", bits)
        return m

    @property
    def support(self) -> Word:
        bits, out, i = self.bits, [], 0
        while bits:
            i = (bits & -bits).bit_length() - 1
            out.append(i)
            bits &= bits - 1
        return tuple(out)

    @property
    def degree(self) -> int:
        return self.bits.bit_count()

    def divides(self, other: "ExtMonomial") -> bool:
        return self.bits & ~other.bits == 0

    def __truediv__(self, other: "ExtMonomial") -> "ExtMonomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return ExtMonomial.from_bits(self.bits & ~other.bits)

    def disjoint(self, other: "ExtMonomial") -> bool:
        return self.bits & other.bits == 0

    def mul_sign(self, other: "ExtMonomial") -> int:
        """Sign of x_I * x_J = sign * x_{I|J}; 0 if the supports meet.

        The sign is (-1)^inv where inv counts pairs (i, j), i in I, j in J,
        with i > j.
        """
        if self.bits & other.bits:
            return 0
        inv, bits = 0, self.bits
        while bits:
            low = (bits & -bits).bit_length() - 1
            inv += (other.bits & ((1 << low) - 1)).bit_count()
            bits &= bits - 1
        return -1 if inv & 1 else 1

    def __mul__(self, other: "ExtMonomial") -> "ExtMonomial":
        # unsigned product; use mul_sign for the coefficient
        if self.bits & other.bits:
            raise ValueError("product of overlapping exterior monomials is zero")
        return ExtMonomial.from_bits(self.bits | other.bits)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExtMonomial) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __repr__(self) -> str:
        return f"ExtMonomial({list(self.support)})"

    def __str__(self) -> str:
        return "".join(f"x{i}" for i in self.support) or "1"


ONE_EXT = ExtMonomial()


def word_sort_sign(word: Word) -> tuple[int, Word]:
    """Sort a word's letters, counting transpositions: (sign, sorted word).

    Sign is 0 when a letter repeats (the square-free image vanishes).
    """
    letters = list(word)
    sign = 1
    for i in range(1, len(letters)):
        j = i
        while j > 0 and letters[j - 1] > letters[j]:
            letters[j - 1], letters[j] = letters[j], letters[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(letters, letters[1:]):
        if a == b:
            return 0, tuple(letters)
    return sign, tuple(letters)


class _TermPolynomial:
    """Shared term-map plumbing for both polynomial flavours."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for m, c in items:
            c = Fraction(c)
            if c:
                c0 = acc.get(m)
                if c0 is None:
                    acc[m] = c
                else:
                    c = c0 + c
                    if c:
                        acc[m] = c
                    else:
                        del acc[m]
        self.terms = acc

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return type(self)._raw(acc)

    def __sub__(self, other):
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m, 0) - c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return type(self)._raw(acc)

    def __neg__(self):
        return type(self)._raw({m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "_TermPolynomial":
        c = Fraction(c)
        if not c:
            return type(self)._raw({})
        return type(self)._raw({m: c * v for m, v in self.terms.items()})

    @classmethod
    def _raw(cls, terms: dict):
        p = cls.__new__(cls)
        p.terms = terms
        return p

    def degrees(self) -> set[int]:
        raise NotImplementedError

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("degree of a zero or non-homogeneous element is undefined")
        return degs.pop()


class ExtPolynomial(_TermPolynomial):
    """Element of E(V): finite map ExtMonomial -> nonzero Fraction."""

    def degrees(self) -> set[int]:
        return {m.degree for m in self.terms}

    def __mul__(self, other: "ExtPolynomial") -> "ExtPolynomial":
        acc: dict[ExtMonomial, Fraction] = {}
        for m, a in self.terms.items():
            for u, b in other.terms.items():
                s = m.mul_sign(u)
                if s == 0:
                    continue
                prod = m * u
                c = acc.get(prod, 0) + s * a * b
                if c:
                    acc[prod] = c
                else:
                    acc.pop(prod, None)
        return ExtPolynomial._raw(acc)

    @classmethod
    def monomial(cls, m: ExtMonomial, c=1) -> "ExtPolynomial":
        return cls([(m, c)])

    def __repr__(self) -> str:
        return f"ExtPolynomial({self.terms!r})"


class FreePolynomial(_TermPolynomial):
    """Element of K<X1,...,Xn>: finite map Word -> nonzero Fraction."""

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def __mul__(self, other: "FreePolynomial") -> "FreePolynomial":
        acc: dict[Word, Fraction] = {}
        for w, a in self.terms.items():
            for v, b in other.terms.items():
                prod = w + v
                c = acc.get(prod, 0) + a * b
                if c:
                    acc[prod] = c
                else:
                    acc.pop(prod, None)
        return FreePolynomial._raw(acc)

    @classmethod
    def monomial(cls, w: Word, c=1) -> "FreePolynomial":
        return cls([(tuple(w), c)])

    def __repr__(self) -> str:
        return f"FreePolynomial({self.terms!r})"


def mul_ext(a: ExtPolynomial, b: ExtPolynomial) -> ExtPolynomial:
    """Exterior product; x_I * x_J = (-1)^inv(I,J) x_{I union J}, 0 on overlap."""
    return a * b


def pi(F: FreePolynomial) -> ExtPolynomial:
    """Quotient map onto E(V): sort each word with its sign, kill repeats."""
    acc: dict[ExtMonomial, Fraction] = {}
    for w, c in F.terms.items():
        sign, sorted_word = word_sort_sign(w)
        if sign == 0:
            continue
        m = ExtMonomial(sorted_word)
        s = acc.get(m, 0) + sign * c
        if s:
            acc[m] = s
        else:
            acc.pop(m, None)
    return ExtPolynomial._raw(acc)


def delta(f: ExtPolynomial) -> FreePolynomial:
    """Linear section of pi: x_{i1}...x_{ir} (i1<...<ir) -> X_{i1}...X_{ir}."""
    return FreePolynomial._raw({m.support: c for m, c in f.terms.items()})


def delta_word(m: ExtMonomial) -> Word:
    return m.support


class GLMatrix:
    """Invertible n x n matrix of exact rationals, acting on variables by
    X_i -> sum_l g[l][i] X_l."""

    __slots__ = ("n", "entries")

    def __init__(self, entries: Iterable[Iterable] = ()):
        rows = [tuple(Fraction(e) for e in row) for row in entries]
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("matrix must be square and non-empty")
        self.n = n
        self.entries = tuple(rows)
        if self.det() == 0:
            raise ValueError("matrix is singular")

    def det(self) -> Fraction:
        a = [list(row) for row in self.entries]
        n, d = self.n, Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                d = -d
            d *= a[col][col]
            inv = 1 / a[col][col]
            for r in range(col + 1, n):
                if a[r][col]:
                    f = a[r][col] * inv
                    for c in range(col, n):
                        a[r][c] -= f * a[col][c]
        return d

    def __matmul__(self, other: "GLMatrix") -> "GLMatrix":
        n = self.n
        if other.n != n:
            raise ValueError("dimension mismatch")
        return GLMatrix(
            [[sum(self.entries[i][k] * other.entries[k][j] for k in range(n))
              for j in range(n)] for i in range(n)]
        )

    @classmethod
    def identity(cls, n: int) -> "GLMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def elementary(cls, n: int, i: int, j: int, c=1) -> "GLMatrix":
        """The coordinate change X_i -> X_i + c X_j, other variables fixed."""
        ent = [[Fraction(1) if r == s else Fraction(0) for s in range(n)] for r in range(n)]
        ent[j - 1][i - 1] = Fraction(c)
        return cls(ent)

    def image_of_variable(self, i: int) -> FreePolynomial:
        return FreePolynomial(
            [((l + 1,), self.entries[l][i - 1]) for l in range(self.n)]
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, GLMatrix) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"GLMatrix({[list(map(str, r)) for r in self.entries]})"


def apply_gl(g: GLMatrix, F: FreePolynomial) -> FreePolynomial:
    """Substitute X_i -> sum_l g[l][i] X_l and expand the word products."""
    images = {i: g.image_of_variable(i) for i in range(1, g.n + 1)}
    acc: dict[Word, Fraction] = {}
    for w, c in F.terms.items():
        # expand the product of linear forms letter by letter
        partial: dict[Word, Fraction] = {(): c}
        for letter in w:
            img = images[letter].terms
            nxt: dict[Word, Fraction] = {}
            for pw, pc in partial.items():
                for (l,), lc in img.items():
                    key = pw + (l,)
                    s = nxt.get(key, 0) + pc * lc
                    if s:
                        nxt[key] = s
                    else:
                        nxt.pop(key, None)
            partial = nxt
        for pw, pc in partial.items():
            s = acc.get(pw, 0) + pc
            if s:
                acc[pw] = s
            else:
                acc.pop(pw, None)
    return FreePolynomial._raw(acc)


def apply_gl_ext(g: GLMatrix, f: ExtPolynomial) -> ExtPolynomial:
    """Induced GL(V) action on E(V); equals pi(apply_gl(g, delta(f)))."""
    images = {
        i: pi(g.image_of_variable(i)) for i in range(1, g.n + 1)
    }
    acc = ExtPolynomial._raw({})
    for m, c in f.terms.items():
        part = ExtPolynomial.monomial(ONE_EXT, c)
        for letter in m.support:
            part = part * images[letter]
            if not part:
                break
        acc = acc + part
    return acc


def ext_monomials_of_degree(ctx: AlgebraContext, d: int) -> list[ExtMonomial]:
    """All square-free monomials of degree d, in index order."""
    if d < 0 or d > ctx.n:
        return []
    return [ExtMonomial(c) for c in combinations(range(1, ctx.n + 1), d)]


def words_of_degree(ctx: AlgebraContext, d: int) -> list[Word]:
    """All words of length d over 1..n, in lexicographic index order."""
    if d < 0:
        return []
    return [tuple(w) for w in product(range(1, ctx.n + 1), repeat=d)]

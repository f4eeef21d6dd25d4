"""Lifting a minimal exterior Groebner basis to a minimal Groebner basis of
its preimage in the free associative algebra.

The preimage J of an exterior ideal I is generated by the anti-commutators
(the defining relations of E(V)) together with delta of the generators of
I.  For I generated in degrees >= 2 the minimal lifted basis consists of
the anti-commutators plus delta(u * f) for each basis element f and each
square-free multiplier u drawn from the gap of the leading monomial of f;
the multiplier set collapses to {1} exactly when the initial ideal is
squeezed, in which case the naive lift delta(G) already works.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import (
    ONE_EXT,
    AlgebraContext,
    ExtMonomial,
    ExtPolynomial,
    FreePolynomial,
    Word,
    delta,
)
from .exterior import ExtGroebnerBasis, MonomialIdealExt
from .orders import ExtOrderSpec, FreeOrderSpec, leading_term_ext, monic_ext, monic_free


def anti_commutators(ctx: AlgebraContext) -> list[FreePolynomial]:
    """Monic defining relations of E(V): X_i X_j + X_j X_i for i < j and
    X_i^2 (the i = j relation 2 X_i^2, normalized); n(n+1)/2 in total.

    Under the lifted order each has leading word X_j X_i with j >= i.
    """
    out = []
    for i in range(1, ctx.n + 1):
        out.append(FreePolynomial.monomial((i, i)))
        for j in range(i + 1, ctx.n + 1):
            out.append(
                FreePolynomial([((i, j), 1), ((j, i), 1)])
            )
    return out


def anti_commutator_leading_words(ctx: AlgebraContext) -> list[Word]:
    return [(j, i) for i in range(1, ctx.n + 1) for j in range(i, ctx.n + 1)]


def compute_U(L: MonomialIdealExt, m: ExtMonomial) -> set[ExtMonomial]:
    """Square-free multipliers u over the variables strictly between the
    extreme indices of m with u*(m/x_min) and u*(m/x_max) both outside L.

    Candidates sharing a variable with m are excluded (u*m would vanish and
    cannot be lifted).  Contains 1 whenever m is a minimal generator.
    """
    if m.degree < 2:
        raise ValueError("multiplier set is defined for monomials of degree >= 2")
    if not L.member(m):
        raise ValueError(f"{m} does not lie in the monomial ideal")
    sup = m.support
    lo, hi = sup[0], sup[-1]
    between = [v for v in range(lo + 1, hi) if v not in sup]
    m_lo = m / ExtMonomial([lo])
    m_hi = m / ExtMonomial([hi])
    out: set[ExtMonomial] = set()
    for r in range(len(between) + 1):
        for c in combinations(between, r):
            u = ExtMonomial(c)
            if not L.member(u * m_lo) and not L.member(u * m_hi):
                out.add(u)
    return out


def is_squeezed(L: MonomialIdealExt) -> bool:
    ok, _ = squeezed_witness(L)
    return ok


def squeezed_witness(L: MonomialIdealExt) -> tuple[bool, tuple[ExtMonomial, ExtMonomial] | None]:
    """(True, None) if every minimal generator has multiplier set {1};
    otherwise (False, (generator, smallest nontrivial multiplier))."""
    key = ExtOrderSpec().ext_key
    for m in L.gens:
        if m.degree < 2:
            raise ValueError("squeezed predicate requires generators of degree >= 2")
        nontrivial = [u for u in compute_U(L, m) if u != ONE_EXT]
        if nontrivial:
            return False, (m, min(nontrivial, key=key))
    return True, None


def _exchange_ok(L: MonomialIdealExt, m: ExtMonomial, i: int, j: int) -> bool:
    # a vanishing exchange x_i (m / x_j) = 0 belongs to every ideal
    quotient = m / ExtMonomial([j])
    xi = ExtMonomial([i])
    if not xi.disjoint(quotient):
        return True
    return L.member(xi * quotient)


def _exchange_targets(j: int, toward_larger: bool, n: int | None) -> range:
    if not toward_larger:
        return range(1, j)
    if n is None:
        raise ValueError("the toward_larger direction needs the ambient variable count n")
    return range(j + 1, n + 1)


def stable_witness(
    L: MonomialIdealExt, toward_larger: bool = False, n: int | None = None
) -> tuple[bool, tuple[ExtMonomial, int, int] | None]:
    """Exchange property at the extreme index, checked on the minimal
    generators (which suffices: any m in L is a generator times a
    square-free multiplier, and the exchange factors through it).

    The default direction replaces the maximal variable of m by a
    smaller one; ``toward_larger`` mirrors this (replace the minimal
    variable by a larger one, up to the ambient count n), the variant
    satisfied by generic initial ideals when the term order ranks x1
    smallest.  The two variants are images of each other under
    reversing the variable indices.
    """
    for m in L.gens:
        sup = m.support
        if not sup:
            continue
        j = sup[0] if toward_larger else sup[-1]
        for i in _exchange_targets(j, toward_larger, n):
            if not _exchange_ok(L, m, i, j):
                return False, (m, i, j)
    return True, None


def strongly_stable_witness(
    L: MonomialIdealExt, toward_larger: bool = False, n: int | None = None
) -> tuple[bool, tuple[ExtMonomial, int, int] | None]:
    for m in L.gens:
        for j in m.support:
            for i in _exchange_targets(j, toward_larger, n):
                if not _exchange_ok(L, m, i, j):
                    return False, (m, i, j)
    return True, None


def is_stable(L: MonomialIdealExt, toward_larger: bool = False, n: int | None = None) -> bool:
    return stable_witness(L, toward_larger, n)[0]


def is_strongly_stable(
    L: MonomialIdealExt, toward_larger: bool = False, n: int | None = None
) -> bool:
    return strongly_stable_witness(L, toward_larger, n)[0]


@dataclass(frozen=True)
class LiftedBasis:
    """Minimal Groebner basis of the preimage ideal J."""

    ctx: AlgebraContext
    anti_commutators: tuple[FreePolynomial, ...]
    lifted: tuple[tuple[ExtPolynomial, ExtMonomial, FreePolynomial], ...]
    order: FreeOrderSpec
    initial_mingens: tuple[Word, ...]

    def elements(self) -> list[FreePolynomial]:
        return list(self.anti_commutators) + [F for _, _, F in self.lifted]


def _check_liftable(G: ExtGroebnerBasis) -> None:
    for f in G.elements:
        if f.degree < 2:
            raise ValueError(
                "cannot lift a basis with a degree-1 element: with a linear "
                "generator the lifted set is not minimal (for I = (x1) in two "
                "variables the preimage is already generated by X1 and X2^2, "
                "making two anti-commutators redundant)"
            )


def lift_groebner(G: ExtGroebnerBasis) -> LiftedBasis:
    """Lift of a minimal exterior Groebner basis, all elements of degree >= 2."""
    _check_liftable(G)
    order = FreeOrderSpec(G.order)
    L = MonomialIdealExt(G.leading_monomials(), G.order)
    lifted = []
    init: list[Word] = list(anti_commutator_leading_words(G.ctx))
    for f in G.elements:
        f = monic_ext(f, G.order)
        m, _ = leading_term_ext(f, G.order)
        for u in sorted(compute_U(L, m), key=G.order.ext_key):
            prod = ExtPolynomial.monomial(u) * f
            lifted.append((f, u, monic_free(delta(prod), order)))
            init.append((u * m).support)
    return LiftedBasis(
        ctx=G.ctx,
        anti_commutators=tuple(anti_commutators(G.ctx)),
        lifted=tuple(lifted),
        order=order,
        initial_mingens=tuple(init),
    )


def naive_lift(G: ExtGroebnerBasis) -> list[FreePolynomial]:
    """delta of the basis elements plus the anti-commutators, with no
    multipliers; a Groebner basis of J exactly when in(I) is squeezed."""
    _check_liftable(G)
    order = FreeOrderSpec(G.order)
    return anti_commutators(G.ctx) + [
        monic_free(delta(monic_ext(f, G.order)), order) for f in G.elements
    ]

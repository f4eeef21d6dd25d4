"""Shared test utilities: independent brute-force oracles and random
object generators.  Everything here avoids the library's own elimination
and rewriting code paths so it can serve as a cross-check."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from extlift.algebra import (
    AlgebraContext,
    ExtMonomial,
    ExtPolynomial,
    FreePolynomial,
    ext_monomials_of_degree,
)
from extlift.exterior import MonomialIdealExt
from extlift.orders import ExtOrderSpec


def dense_rank(rows, columns) -> int:
    """Row rank by dense fraction-free-ish Gaussian elimination; independent
    of extlift.linalg."""
    idx = {c: i for i, c in enumerate(columns)}
    mat = []
    for row in rows:
        vec = [Fraction(0)] * len(columns)
        for c, v in row.items():
            vec[idx[c]] = Fraction(v)
        mat.append(vec)
    rank = 0
    col = 0
    while col < len(columns) and rank < len(mat):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][col]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col] * inv
                for c in range(col, len(columns)):
                    mat[r][c] -= f * mat[rank][c]
        rank += 1
        col += 1
    return rank


def sign_by_sorting(indices) -> int:
    """Brute-force sign: sort by adjacent transpositions, count swaps; 0 on
    repeats."""
    arr = list(indices)
    swaps = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                swaps += 1
                changed = True
    if any(a == b for a, b in zip(arr, arr[1:])):
        return 0
    return -1 if swaps % 2 else 1


def random_ext_polynomial(rng: random.Random, ctx: AlgebraContext, degree: int,
                          height: int = 5) -> ExtPolynomial:
    """Random nonzero homogeneous exterior polynomial."""
    monos = ext_monomials_of_degree(ctx, degree)
    while True:
        terms = [(m, rng.randint(-height, height)) for m in monos]
        p = ExtPolynomial(terms)
        if p:
            return p


def random_free_polynomial(rng: random.Random, ctx: AlgebraContext, degree: int,
                           nterms: int = 4, height: int = 5) -> FreePolynomial:
    while True:
        terms = []
        for _ in range(nterms):
            w = tuple(rng.randint(1, ctx.n) for _ in range(degree))
            c = rng.randint(-height, height)
            terms.append((w, c))
        p = FreePolynomial(terms)
        if p:
            return p


def random_ext_ideal_gens(rng: random.Random, ctx: AlgebraContext,
                          min_deg: int = 2, max_deg: int | None = None,
                          max_gens: int = 3) -> list[ExtPolynomial]:
    """Random homogeneous generators with degrees in [min_deg, max_deg]."""
    if max_deg is None:
        max_deg = max(min_deg, ctx.n - 1)
    k = rng.randint(1, max_gens)
    return [
        random_ext_polynomial(rng, ctx, rng.randint(min_deg, max_deg))
        for _ in range(k)
    ]


def random_monomial_ideal(rng: random.Random, ctx: AlgebraContext,
                          min_deg: int = 2, max_gens: int = 4,
                          order: ExtOrderSpec = ExtOrderSpec()) -> MonomialIdealExt:
    monos = []
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(min_deg, ctx.n)
        monos.append(ExtMonomial(rng.sample(range(1, ctx.n + 1), d)))
    return MonomialIdealExt(monos, order)


def all_monomials_in(L: MonomialIdealExt, ctx: AlgebraContext):
    """Every square-free monomial of the ideal, by exhaustion."""
    out = []
    for d in range(ctx.n + 1):
        for m in ext_monomials_of_degree(ctx, d):
            if L.member(m):
                out.append(m)
    return out


def stable_closure(rng: random.Random, ctx: AlgebraContext, strongly: bool,
                   min_deg: int = 2, order: ExtOrderSpec = ExtOrderSpec()) -> MonomialIdealExt:
    """Random (strongly) stable ideal: close random generators under the
    exchange operation."""
    seed_ideal = random_monomial_ideal(rng, ctx, min_deg=min_deg, order=order)
    monos = set(seed_ideal.gens)
    frontier = list(monos)
    while frontier:
        m = frontier.pop()
        sup = m.support
        js = sup if strongly else sup[-1:]
        for j in js:
            base = m / ExtMonomial([j])
            for i in range(1, j):
                xi = ExtMonomial([i])
                if not xi.disjoint(base):
                    continue
                ex = xi * base
                if ex not in monos:
                    monos.add(ex)
                    frontier.append(ex)
    return MonomialIdealExt(monos, order)


def brute_force_U(L: MonomialIdealExt, m: ExtMonomial) -> set[ExtMonomial]:
    """Multiplier set by raw enumeration, straight from the definition."""
    sup = m.support
    lo, hi = sup[0], sup[-1]
    between = list(range(lo + 1, hi))
    m_lo_bits = m.bits & ~(1 << lo)
    m_hi_bits = m.bits & ~(1 << hi)
    out = set()
    for r in range(len(between) + 1):
        for c in combinations(between, r):
            u = ExtMonomial(c)
            # u sharing a variable with m makes both products vanish
            if u.bits & m.bits:
                continue
            p_lo = ExtMonomial.from_bits(u.bits | m_lo_bits)
            p_hi = ExtMonomial.from_bits(u.bits | m_hi_bits)
            if not L.member(p_lo) and not L.member(p_hi):
                out.add(u)
    return out

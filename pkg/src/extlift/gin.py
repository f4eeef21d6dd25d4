"""Generic initial ideals in both algebras by randomized degree-wise
Gaussian elimination, with Borel-fixedness diagnostics and Hilbert-series
consistency checks.

Genericity is handled probabilistically: each trial draws a fresh random
integer matrix from a seeded PRNG, and the trials must agree.  The seeds
are recorded in the result so every run can be replayed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import (
    AlgebraContext,
    FreePolynomial,
    GLMatrix,
    apply_gl,
    apply_gl_ext,
)
from .exterior import ExtIdeal, MonomialIdealExt, groebner_ext, ideal_degree_basis, initial_ideal_ext
from .freealg import MonomialIdealFree, free_initial_ideal, ideal_slice_rows, normal_word_count
from .lifting import anti_commutator_leading_words
from .linalg import rank
from .orders import ExtOrderSpec, FreeOrderSpec


def random_gl(ctx: AlgebraContext, seed: int, height: int) -> GLMatrix:
    """Deterministic random integer matrix with entries in [-height, height],
    resampled until invertible (Mersenne-Twister PRNG keyed by the seed)."""
    if height < 1:
        raise ValueError("coefficient height must be >= 1")
    rng = random.Random(seed)
    n = ctx.n
    while True:
        entries = [[rng.randint(-height, height) for _ in range(n)] for _ in range(n)]
        try:
            return GLMatrix(entries)
        except ValueError:
            continue


@dataclass(frozen=True)
class GinRequest:
    """Inputs of a gin computation.  ``trials`` independent samples must
    produce identical initial ideals for the result to count as generic."""

    max_degree: int
    seed: int
    trials: int = 2
    height: int = 100

    def __post_init__(self):
        if self.max_degree < 2:
            raise ValueError("degree cap must be >= 2")
        if self.trials < 2:
            raise ValueError("at least 2 trials are required")
        if self.height < 1:
            raise ValueError("coefficient height must be >= 1")

    def trial_seeds(self) -> list[int]:
        rng = random.Random(self.seed)
        return [rng.getrandbits(63) for _ in range(self.trials)]


@dataclass(frozen=True)
class GinResult:
    gin: MonomialIdealFree | MonomialIdealExt
    slice_dims: dict[int, int]
    trial_seeds: tuple[int, ...]
    agreement: bool


def gin_free(
    gens: list[FreePolynomial],
    ctx: AlgebraContext,
    req: GinRequest,
    order: FreeOrderSpec = FreeOrderSpec(),
) -> GinResult:
    """Generic initial ideal of the two-sided ideal on the given homogeneous
    generators, computed up to the degree cap."""
    for g in gens:
        if g and not g.is_homogeneous():
            raise ValueError("generators must be homogeneous")
    seeds = req.trial_seeds()
    results = []
    for s in seeds:
        g = random_gl(ctx, s, req.height)
        transformed = [apply_gl(g, f) for f in gens]
        results.append(free_initial_ideal(transformed, ctx, order, req.max_degree))
    first = results[0]
    agreement = all(r.initial == first.initial for r in results[1:])
    return GinResult(
        gin=first.initial,
        slice_dims=dict(first.slice_dims),
        trial_seeds=tuple(seeds),
        agreement=agreement,
    )


def gin_ext(I: ExtIdeal, req: GinRequest) -> GinResult:
    """Generic initial ideal in E(V): transform, recompute the Groebner
    basis, take leading monomials; per-degree dimensions come along."""
    seeds = req.trial_seeds()
    results = []
    dims_list = []
    for s in seeds:
        g = random_gl(I.ctx, s, req.height)
        transformed = ExtIdeal(
            I.ctx, [apply_gl_ext(g, f) for f in I.generators], I.order
        )
        gb = groebner_ext(transformed)
        results.append(initial_ideal_ext(gb))
        dims_list.append(
            {d: len(ideal_degree_basis(transformed, d)) for d in range(I.ctx.n + 1)}
        )
    agreement = all(r == results[0] for r in results[1:])
    return GinResult(
        gin=results[0],
        slice_dims=dims_list[0],
        trial_seeds=tuple(seeds),
        agreement=agreement,
    )


def gin_lifted(I: ExtIdeal, req: GinRequest) -> GinResult:
    """gin of the preimage ideal, built from gin_ext: delta of its minimal
    generators plus the words X_j X_i (i <= j), minimalized."""
    for f in I.generators:
        if f.degree < 2:
            raise ValueError("lifted gin requires generators of degree >= 2")
    ext_result = gin_ext(I, req)
    order = FreeOrderSpec(I.order)
    words = list(anti_commutator_leading_words(I.ctx))
    words += [m.support for m in ext_result.gin]
    lifted = MonomialIdealFree(words, I.ctx.n, order)
    # per-degree dimensions of the preimage slice: n^d minus normal words
    dims = {
        d: I.ctx.n**d - normal_word_count(lifted, d)
        for d in range(req.max_degree + 1)
    }
    return GinResult(
        gin=lifted,
        slice_dims=dims,
        trial_seeds=ext_result.trial_seeds,
        agreement=ext_result.agreement,
    )


def is_borel_fixed(
    B: MonomialIdealFree,
    ctx: AlgebraContext,
    upward: bool = True,
) -> tuple[bool, tuple[tuple[int, ...], tuple[int, int], tuple[int, ...]] | None]:
    """Check invariance under the elementary coordinate changes
    X_i -> X_i + X_j (i < j when upward, the convention matching the
    transformation X1 -> X1 + X2; i > j otherwise).

    Returns (True, None) or (False, (generator, (i, j), offending word)).
    """
    for w in B.gens:
        letters = sorted(set(w))
        for i in letters:
            for j in range(1, ctx.n + 1):
                if j == i or (upward and j < i) or (not upward and j > i):
                    continue
                b = GLMatrix.elementary(ctx.n, i, j)
                image = apply_gl(b, FreePolynomial.monomial(w))
                for word in image.terms:
                    if not B.member(word):
                        return False, (w, (i, j), word)
    return True, None


def hilbert_compare(
    gens: list[FreePolynomial],
    ctx: AlgebraContext,
    result: GinResult,
    max_degree: int,
    order: FreeOrderSpec = FreeOrderSpec(),
) -> bool:
    """dim of each original ideal slice vs the word count of the gin cone.

    This re-derives the slice dimensions from the untransformed generators,
    so it is an independent check of the Hilbert-series preservation."""
    gin = result.gin
    if not isinstance(gin, MonomialIdealFree):
        raise TypeError("hilbert_compare expects a free-algebra gin result")
    for d in range(max_degree + 1):
        dim = rank(ideal_slice_rows(gens, ctx, d), order.word_key)
        cone = ctx.n**d - normal_word_count(gin, d)
        if dim != cone:
            return False
    return True


def hilbert_compare_ext(I: ExtIdeal, result: GinResult) -> bool:
    """Exterior analogue: slice dimensions of I vs monomial counts of the
    exterior gin cone."""
    gin = result.gin
    if not isinstance(gin, MonomialIdealExt):
        raise TypeError("hilbert_compare_ext expects an exterior gin result")
    for d in range(I.ctx.n + 1):
        dim = len(ideal_degree_basis(I, d))
        if dim != gin.degree_count(I.ctx, d):
            return False
    return True

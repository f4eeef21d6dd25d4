import random
from itertools import permutations
from math import comb

import pytest

from extlift.algebra import (
    AlgebraContext,
    ExtMonomial,
    ExtPolynomial,
    ext_monomials_of_degree,
)
from extlift.exterior import (
    ExtIdeal,
    MonomialIdealExt,
    divides_ext,
    groebner_ext,
    hilbert_ext,
    ideal_degree_basis,
    initial_ideal_ext,
)
from extlift.orders import ExtOrderSpec, leading_term_ext, monic_ext

from helpers import dense_rank, random_ext_ideal_gens

DEGLEX = ExtOrderSpec("deglex")


def mono(*idx):
    return ExtPolynomial.monomial(ExtMonomial(idx))


def slice_rank_oracle(I: ExtIdeal, d: int) -> int:
    """Dimension of I_d by independent dense elimination over all
    two-sided monomial multiples."""
    rows = []
    for g in I.generators:
        if g.degree > d:
            continue
        for u in ext_monomials_of_degree(I.ctx, d - g.degree):
            for prod in (ExtPolynomial.monomial(u) * g, g * ExtPolynomial.monomial(u)):
                if prod:
                    rows.append(prod.terms)
    columns = ext_monomials_of_degree(I.ctx, d)
    return dense_rank(rows, columns)


class TestIdealDegreeBasis:
    def test_principal_monomial(self):
        ctx = AlgebraContext(3)
        I = ExtIdeal(ctx, [mono(1, 2)])
        basis = ideal_degree_basis(I, 3)
        assert len(basis) == 1
        assert basis[0] == mono(1, 2, 3)

    def test_below_generator_degree_empty(self):
        ctx = AlgebraContext(3)
        I = ExtIdeal(ctx, [mono(1, 2)])
        assert ideal_degree_basis(I, 1) == []

    def test_whole_slice_n2(self):
        ctx = AlgebraContext(2)
        I = ExtIdeal(ctx, [mono(1, 2)])
        assert ideal_degree_basis(I, 2) == [mono(1, 2)]

    @pytest.mark.parametrize("seed", range(25))
    def test_rank_matches_dense_two_sided_oracle(self, seed):
        rng = random.Random(seed)
        n = rng.choice([3, 4, 5])
        ctx = AlgebraContext(n)
        I = ExtIdeal(ctx, random_ext_ideal_gens(rng, ctx, min_deg=1))
        for d in range(n + 1):
            assert len(ideal_degree_basis(I, d)) == slice_rank_oracle(I, d)


class TestGroebnerExt:
    def test_monomial_ideal(self):
        ctx = AlgebraContext(3)
        gb = groebner_ext(ExtIdeal(ctx, [mono(2, 3)]))
        assert list(gb.elements) == [mono(2, 3)]

    def test_generic_quadric_initial(self):
        ctx = AlgebraContext(3)
        q = mono(1, 2).scale(4) + mono(1, 3).scale(-7) + mono(2, 3).scale(2)
        gb = groebner_ext(ExtIdeal(ctx, [q]))
        assert len(gb.elements) == 1
        lead, c = leading_term_ext(gb.elements[0], DEGLEX)
        assert lead == ExtMonomial([2, 3]) and c == 1
        assert initial_ideal_ext(gb) == MonomialIdealExt([ExtMonomial([2, 3])])

    def test_two_generator_example_dimensions(self):
        # oracle: per-degree span dimension equals the monomial cone of the
        # initial ideal
        ctx = AlgebraContext(4)
        I = ExtIdeal(ctx, [mono(1, 2) + mono(3, 4), mono(1, 3)])
        gb = groebner_ext(I)
        init = initial_ideal_ext(gb)
        for d in range(5):
            assert len(ideal_degree_basis(I, d)) == init.degree_count(ctx, d)

    def test_minimal_gb_leads_form_antichain(self):
        ctx = AlgebraContext(4)
        I = ExtIdeal(ctx, [mono(1, 2) + mono(3, 4), mono(1, 3)])
        leads = groebner_ext(I).leading_monomials()
        for a in leads:
            for b in leads:
                if a != b:
                    assert not a.divides(b)

    def test_reduced_tails_outside_initial_ideal(self):
        ctx = AlgebraContext(4)
        I = ExtIdeal(ctx, [mono(1, 2) + mono(3, 4), mono(1, 3), mono(2, 4) + mono(1, 4)])
        gb = groebner_ext(I)
        init = initial_ideal_ext(gb)
        for f in gb.elements:
            lead, _ = leading_term_ext(f, DEGLEX)
            for m in f.terms:
                if m != lead:
                    assert not init.member(m)

    @pytest.mark.parametrize("seed", range(10))
    def test_invariant_under_generator_permutation(self, seed):
        rng = random.Random(500 + seed)
        ctx = AlgebraContext(4)
        gens = random_ext_ideal_gens(rng, ctx, min_deg=2, max_gens=3)
        reference = set(groebner_ext(ExtIdeal(ctx, gens)).elements)
        for perm in permutations(gens):
            assert set(groebner_ext(ExtIdeal(ctx, list(perm))).elements) == reference

    def test_normal_form_oracle_s_obstructions(self):
        # every S-obstruction between GB elements reduces to zero under
        # plain leading-term rewriting
        rng = random.Random(42)
        for _ in range(10):
            n = rng.choice([3, 4, 5])
            ctx = AlgebraContext(n)
            I = ExtIdeal(ctx, random_ext_ideal_gens(rng, ctx))
            gb = groebner_ext(I)
            elems = [monic_ext(f, DEGLEX) for f in gb.elements]
            leads = [leading_term_ext(f, DEGLEX)[0] for f in elems]

            def reduce_full(p):
                while p:
                    lead, c = leading_term_ext(p, DEGLEX)
                    hit = next((k for k, lm in enumerate(leads) if lm.divides(lead)), None)
                    if hit is None:
                        return p
                    cof = lead / leads[hit]
                    scaled = ExtPolynomial.monomial(cof) * elems[hit]
                    _, sc = leading_term_ext(scaled, DEGLEX)
                    p = p - scaled.scale(c / sc)
                return p

            for i, f in enumerate(elems):
                for j, g in enumerate(elems):
                    lcm_bits = leads[i].bits | leads[j].bits
                    lcm = ExtMonomial.from_bits(lcm_bits)
                    if lcm.degree > n:
                        continue
                    cf = ExtPolynomial.monomial(lcm / leads[i]) * f
                    cg = ExtPolynomial.monomial(lcm / leads[j]) * g
                    if not cf or not cg:
                        continue
                    _, a = leading_term_ext(cf, DEGLEX)
                    _, b = leading_term_ext(cg, DEGLEX)
                    s = cf.scale(1 / a) - cg.scale(1 / b)
                    assert not reduce_full(s)


class TestMonomialIdeal:
    def test_divides(self):
        assert divides_ext(ExtMonomial([1]), ExtMonomial([1, 3]))
        assert not divides_ext(ExtMonomial([2]), ExtMonomial([1, 3]))

    def test_membership(self):
        L = MonomialIdealExt([ExtMonomial([1, 4])])
        assert not L.member(ExtMonomial([2, 4]))
        assert L.member(ExtMonomial([1, 2, 4]))

    def test_minimalization(self):
        L = MonomialIdealExt([ExtMonomial([1, 2, 3]), ExtMonomial([1, 2]), ExtMonomial([3])])
        assert set(L.gens) == {ExtMonomial([1, 2]), ExtMonomial([3])}


class TestHilbert:
    def test_zero_ideal(self):
        ctx = AlgebraContext(3)
        assert hilbert_ext(ExtIdeal(ctx, [])) == [1, 3, 3, 1]

    def test_principal_quadric_monomial(self):
        # oracle: count square-free monomials outside the ideal
        ctx = AlgebraContext(3)
        I = ExtIdeal(ctx, [mono(2, 3)])
        L = MonomialIdealExt([ExtMonomial([2, 3])])
        expected = [
            sum(1 for m in ext_monomials_of_degree(ctx, d) if not L.member(m))
            for d in range(4)
        ]
        assert hilbert_ext(I) == expected == [1, 3, 2, 0]

    def test_maximal_ideal_squared(self):
        ctx = AlgebraContext(2)
        assert hilbert_ext(ExtIdeal(ctx, [mono(1, 2)])) == [1, 2, 0]

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_macaulay_consistency_exhaustive(self, n):
        rng = random.Random(n)
        ctx = AlgebraContext(n)
        for _ in range(5):
            I = ExtIdeal(ctx, random_ext_ideal_gens(rng, ctx))
            init = initial_ideal_ext(groebner_ext(I))
            dims = hilbert_ext(I)
            for d in range(n + 1):
                outside = sum(
                    1 for m in ext_monomials_of_degree(ctx, d) if not init.member(m)
                )
                assert dims[d] == outside


class TestValidation:
    def test_nonhomogeneous_rejected(self):
        ctx = AlgebraContext(3)
        with pytest.raises(ValueError):
            ExtIdeal(ctx, [mono(1) + mono(1, 2)])

    def test_left_right_spans_agree(self):
        # homogeneous elements commute up to sign, so left multiples span
        # the two-sided slice; asserted against the two-sided oracle
        ctx = AlgebraContext(4)
        rng = random.Random(9)
        I = ExtIdeal(ctx, random_ext_ideal_gens(rng, ctx, min_deg=1))
        for d in range(5):
            assert len(ideal_degree_basis(I, d)) == slice_rank_oracle(I, d)

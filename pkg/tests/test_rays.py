import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eigencone.cone import (
    DomainError,
    FacetDescriptor,
    enumerate_facets,
    in_F2,
    is_member,
    on_facet,
    type1_pairs,
)
from eigencone.ratlinalg import rank
from eigencone.rays import (
    ProductPoint,
    all_extremal_rays,
    basic_ray,
    basic_rays,
    divisor_class,
    extremal_ray_search,
    facet_ray_candidates,
    induct,
    induction_terms,
    is_extremal,
    is_F_ray,
    make_ray,
    naive_induct,
    product_cone_rays,
    ray_from_weights,
    restrict_section,
)
from eigencone.schubert import InvalidMoveError, SchubertIndex, raise_index
from eigencone.weights import dual_weight, kappa

from oracles import eigencone_rays_dd

F = FacetDescriptor.from_sets
h = Fraction(1, 2)
GR24_FACET = F(4, (2, 3), (2, 4), (2, 4))
SL9 = F(9, (3, 7, 8), (3, 6, 9), (3, 6, 9))
SL9_WEIGHTS = ((3, 3, 3, 2, 2, 2, 2, 1, 0), (2, 2, 2, 1, 1, 1, 0, 0, 0), (2, 2, 2, 1, 1, 1, 0, 0, 0))


def omega(b, n):
    return tuple([1] * b + [0] * (n - b))


def flat(x):
    return [v for xi in x for v in xi]


def jump(x, j, a):
    return x[j - 1][a - 2] - x[j - 1][a - 1]


def sl3_point():
    third = kappa((1, 1, 0))
    return ProductPoint((third,) * 3, ((Fraction(0),) * 6,) * 3)


class TestBasicRays:
    def test_gr24_facet(self):
        ray = basic_ray(GR24_FACET, 1, 2)
        assert ray.weights == ((2, 1, 1, 0), (1, 1, 0, 0), (1, 1, 0, 0))
        assert ray.direction == ((1, 0, 0, -1), (h, h, -h, -h), (h, h, -h, -h))
        assert ray.provenance.kind == "basic" and ray.provenance.pair == (1, 2)

    def test_gr58_facet(self):
        f = F(8, (3, 4, 5, 7, 8), (2, 3, 5, 6, 8), (2, 3, 5, 6, 8))
        ray = basic_ray(f, 1, 3)
        assert ray.weights == ((3, 3, 2, 2, 2, 0, 0, 0), (4, 4, 4, 2, 2, 2, 0, 0), (4, 4, 4, 2, 2, 2, 0, 0))

    def test_n2(self):
        ray = basic_ray(F(2, (1,), (2,), (2,)), 2, 2)
        assert ray.weights == ((1, 0), (1, 0), (0, 0))

    def test_illegal_pair(self):
        with pytest.raises(InvalidMoveError):
            basic_ray(GR24_FACET, 1, 3)
        with pytest.raises(InvalidMoveError):
            basic_ray(F(2, (1,), (2,), (2,)), 1, 1)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_structure(self, n):
        for f in enumerate_facets(n, 3):
            pairs = type1_pairs(f)
            rays = basic_rays(f)
            assert len(rays) == len(pairs)
            if rays:
                assert rank([flat(r.direction) for r in rays]) == len(pairs)
            for (j0, a0), ray in zip(pairs, rays):
                lam = ray.weights
                assert is_member(ray.direction) and on_facet(f, ray.direction)
                assert not in_F2(f, ray.direction)
                for j, a in pairs:
                    assert jump(lam, j, a) == (1 if (j, a) == (j0, a0) else 0)

    def test_rays_are_extremal(self):
        for n in (2, 3, 4):
            for f in enumerate_facets(n, 3):
                for ray in basic_rays(f):
                    assert is_extremal(ray)


class TestDivisorClass:
    def test_matches_basic_ray(self):
        A = list(GR24_FACET.indices)
        A[0] = SchubertIndex.of(4, (1, 3))
        assert divisor_class(A) == basic_ray(GR24_FACET, 1, 2).direction

    def test_vanishing_instance(self):
        # first instance found by exhaustive search; none exist in Gr(2,4), s=3
        A = [SchubertIndex.of(5, I) for I in [(1, 5), (3, 4), (3, 4)]]
        assert divisor_class(A) == ((0,) * 5,) * 3

    def test_codim_check(self):
        with pytest.raises(ValueError):
            divisor_class([SchubertIndex.of(4, I) for I in [(2, 3), (2, 4), (2, 4)]])

    def test_legal_inputs_lie_on_facet(self):
        for n in (3, 4, 5):
            for f in enumerate_facets(n, 3):
                for j, a in type1_pairs(f):
                    A = list(f.indices)
                    A[j - 1] = raise_index(A[j - 1], a)
                    assert on_facet(f, divisor_class(A))


class TestInduction:
    def test_naive_placement(self):
        y = naive_induct(SL9, sl3_point())
        assert y[0] == (0, 0, Fraction(1, 3), 0, 0, 0, Fraction(1, 3), Fraction(-2, 3), 0)
        f = FacetDescriptor(2, F(4, (1, 2), (1, 2), (1, 2)).indices)
        p = ProductPoint(((h, -h),) * 3, ((h, -h),) * 3)
        assert naive_induct(f, p) == ((h, -h, h, -h),) * 3

    def test_sl9(self):
        z = induct(SL9, sl3_point())
        assert z == tuple(kappa(w) for w in SL9_WEIGHTS)
        assert in_F2(SL9, z) and on_facet(SL9, z)
        assert is_extremal(z)

    def test_sl9_correction_terms(self):
        y, terms = induction_terms(SL9, sl3_point())
        assert y == naive_induct(SL9, sl3_point())
        assert all(t.gap != 0 for t in terms)

    def test_zero(self):
        p = ProductPoint.zero(3, 9, 3)
        assert induct(SL9, p) == ((0,) * 9,) * 3
        assert restrict_section(SL9, ((0,) * 9,) * 3) == p

    def test_sl3_facet(self):
        f = F(3, (1, 2), (2, 3), (2, 3))
        zero = (Fraction(0),)
        w1 = kappa((1, 0))
        z = induct(f, ProductPoint(((0, 0), w1, w1), (zero,) * 3))
        assert z == (kappa(omega(2, 3)),) * 3
        z = induct(f, ProductPoint((w1, w1, (0, 0)), (zero,) * 3))
        assert z == (kappa(omega(1, 3)), kappa(omega(2, 3)), (0, 0, 0))

    def test_section_identity_sl9(self):
        z = induct(SL9, sl3_point())
        assert induct(SL9, restrict_section(SL9, z)) == z

    def test_section_rejects_points_off_F2(self):
        with pytest.raises(DomainError):
            restrict_section(GR24_FACET, basic_ray(GR24_FACET, 1, 2).direction)

    def test_product_point_validation(self):
        with pytest.raises(ValueError):
            ProductPoint(((1, 0),) * 3, ((0, 0),) * 3)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_induct_linear_and_lands_in_F2(data):
    n = data.draw(st.integers(3, 4))
    facets = enumerate_facets(n, 3)
    f = facets[data.draw(st.integers(0, len(facets) - 1))]
    sources = [p for _, _, p in product_cone_rays(f.r, n, 3)]
    if not sources:
        return
    coeffs = st.fractions(0, 5, max_denominator=4)
    alphas = [data.draw(coeffs) for _ in sources]
    betas = [data.draw(coeffs) for _ in sources]

    def combo(cs):
        left = tuple(tuple(sum(c * p.left[i][k] for c, p in zip(cs, sources)) for k in range(f.r)) for i in range(3))
        right = tuple(
            tuple(sum(c * p.right[i][k] for c, p in zip(cs, sources)) for k in range(n - f.r)) for i in range(3)
        )
        return ProductPoint(left, right)

    p, q = combo(alphas), combo(betas)
    a, b = data.draw(coeffs), data.draw(coeffs)
    both = combo([a * x + b * y for x, y in zip(alphas, betas)])
    zp, zq = induct(f, p), induct(f, q)
    assert induct(f, both) == tuple(tuple(a * u + b * v for u, v in zip(ui, vi)) for ui, vi in zip(zp, zq))
    assert on_facet(f, zp) and in_F2(f, zp) and is_member(zp)
    assert induct(f, restrict_section(f, zp)) == zp


class TestSearch:
    def test_n2(self):
        got = [r.weights for r in all_extremal_rays(2, 3)]
        assert sorted(got) == sorted([((1, 0), (1, 0), (0, 0)), ((1, 0), (0, 0), (1, 0)), ((0, 0), (1, 0), (1, 0))])

    def test_n3(self):
        got = {r.weights for r in all_extremal_rays(3, 3)}
        w1, w2, z = omega(1, 3), omega(2, 3), (0, 0, 0)
        assert (w2, w2, w2) in got
        for perm in permutations((w1, z, w2)):
            assert perm in got
        for ray in all_extremal_rays(3, 3):
            assert is_member(ray.direction) and is_extremal(ray)

    def test_n4_contains_example(self):
        got = {r.weights for r in all_extremal_rays(4, 3)}
        assert ((2, 1, 1, 0), (1, 1, 0, 0), (1, 1, 0, 0)) in got

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_against_double_description(self, n):
        got = {r.weights for r in all_extremal_rays(n, 3)}
        assert got == eigencone_rays_dd(n, 3, enumerate_facets(n, 3))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_closed_under_symmetries(self, n):
        got = {r.weights for r in all_extremal_rays(n, 3)}
        for w in got:
            for perm in permutations(range(3)):
                assert tuple(w[i] for i in perm) in got
            assert tuple(dual_weight(x) for x in w) in got

    def test_deterministic_order(self):
        first = [r.weights for r in all_extremal_rays(4, 3)]
        assert first == sorted(first)
        assert first == [r.weights for r in extremal_ray_search(4, 3).rays]

    def test_rejected_candidates_are_not_extremal(self):
        search = extremal_ray_search(4, 3)
        for ray in search.rejected:
            assert is_member(ray.direction) and not is_extremal(ray)

    def test_n2_facet_has_no_inductions(self):
        f = F(2, (1,), (2,), (2,))
        cands = facet_ray_candidates(f)
        assert sorted(r.weights for r in cands) == sorted(r.weights for r in basic_rays(f))

    def test_sl3_facet_candidates(self):
        f = F(3, (1, 2), (2, 3), (2, 3))
        got = {r.weights for r in facet_ray_candidates(f)}
        w1, w2 = omega(1, 3), omega(2, 3)
        assert (w2, w2, w2) in got and (w1, w2, (0, 0, 0)) in got
        for r in facet_ray_candidates(f):
            assert is_member(r.direction) and on_facet(f, r.direction)


class TestExtremality:
    def test_examples(self):
        assert is_extremal(basic_ray(GR24_FACET, 1, 2))
        w2 = kappa(omega(2, 3))
        assert is_extremal((w2, w2, w2))
        a = kappa((1, 0))
        assert not is_extremal(((1, -1), a, a))

    def test_errors(self):
        with pytest.raises(DomainError):
            is_extremal(((0, 0),) * 3)
        with pytest.raises(DomainError):
            is_extremal((kappa((1, 0)), (0, 0), (0, 0)))

    def test_make_ray(self):
        ray = make_ray(((1, -1), (1, -1), (0, 0)))
        assert ray.weights == ((1, 0), (1, 0), (0, 0))
        assert ray == ray_from_weights(((2, 0), (2, 0), (0, 0)))
        with pytest.raises(DomainError):
            make_ray(((0, 0),) * 3)


class TestFRays:
    def test_gr24_facet(self):
        assert is_F_ray(basic_ray(GR24_FACET, 1, 2), N_max=3)

    def test_sl9(self):
        assert not is_F_ray(ray_from_weights(SL9_WEIGHTS), N_max=1)


def test_random_rays_on_facet_stay_on_facet():
    rng = random.Random(5)
    for f in enumerate_facets(3, 3):
        cands = facet_ray_candidates(f)
        for _ in range(10):
            cs = [Fraction(rng.randint(0, 4)) for _ in cands]
            x = tuple(
                tuple(sum(c * r.direction[i][k] for c, r in zip(cs, cands)) for k in range(3)) for i in range(3)
            )
            assert on_facet(f, x) and is_member(x)

from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eigencone.weights import (
    dual_kappa,
    dual_weight,
    fundamental_decomposition,
    fundamental_weight,
    invariant_dimension,
    is_dominant,
    kappa,
    normalize_weight,
    weight_of_kappa,
)

from oracles import brute_invariants

h = Fraction(1, 2)


def dominant(n, top):
    return [tuple(p) + (0,) for p in combinations_with_replacement(range(top, -1, -1), n - 1)]


def weights(n, top=3):
    return st.lists(st.integers(0, top), min_size=n - 1, max_size=n - 1).map(
        lambda v: tuple(sorted(v, reverse=True)) + (0,)
    )


def test_kappa_examples():
    assert kappa((2, 1, 1, 0)) == (1, 0, 0, -1)
    assert kappa((1, 1, 0, 0)) == (h, h, -h, -h)
    assert kappa((0, 0, 0)) == (0, 0, 0)


def test_weight_of_kappa_examples():
    assert weight_of_kappa((1, 0, 0, -1)) == ((2, 1, 1, 0), 1)
    assert weight_of_kappa((0, 0, 0, 0)) == ((0, 0, 0, 0), 1)
    assert weight_of_kappa((h, h, -h, -h)) == ((1, 1, 0, 0), 1)


def test_fundamental_decomposition_examples():
    assert fundamental_decomposition((2, 1, 1, 0)) == {1: 1, 3: 1}
    assert fundamental_decomposition((3, 3, 2, 2, 2, 0, 0, 0)) == {2: 1, 5: 2}
    assert fundamental_decomposition((0, 0, 0)) == {}
    assert fundamental_weight(2, 4) == (1, 1, 0, 0)


def test_dual_weight_examples():
    assert dual_weight((1, 0, 0)) == (1, 1, 0)
    assert dual_weight((0, 0, 0)) == (0, 0, 0)
    assert dual_weight((2, 1, 1, 0)) == (2, 1, 1, 0)


def test_is_dominant():
    assert is_dominant((1, 0, 0, -1))
    assert not is_dominant((0, 1, -1))
    assert is_dominant((0, 0, 0))


def test_normalize():
    assert normalize_weight((3, 2, 2)) == (1, 0, 0)
    with pytest.raises(ValueError):
        normalize_weight((0, 1))


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(weights(n), st.integers(-3, 3), weights(n))))
def test_kappa_sees_only_the_sl_part(data):
    lam, c, mu = data
    shifted = tuple(v + c for v in lam)
    assert kappa(shifted) == kappa(lam)
    assert (kappa(lam) == kappa(mu)) == (lam == mu)


@given(
    st.integers(2, 6).flatmap(
        lambda n: st.lists(st.fractions(-5, 5, max_denominator=6), min_size=n - 1, max_size=n - 1)
    )
)
def test_weight_of_kappa_inverts_direction(v):
    x = sorted(v + [-sum(v)], reverse=True)
    w, scale = weight_of_kappa(x)
    assert scale > 0
    assert w[-1] == 0 and list(w) == sorted(w, reverse=True)
    assert list(kappa(w)) == [scale * t for t in x] or not any(x)


@given(st.integers(2, 6).flatmap(weights))
def test_dual_is_involution(lam):
    assert dual_weight(dual_weight(lam)) == lam
    assert dual_kappa(kappa(lam)) == kappa(dual_weight(lam))


def test_invariant_examples():
    assert invariant_dimension([(1, 1, 0)] * 3, 3) == 1
    assert invariant_dimension([(0, 0, 0)] * 3) == 1
    sl9 = [(3, 3, 3, 2, 2, 2, 2, 1, 0), (2, 2, 2, 1, 1, 1, 0, 0, 0), (2, 2, 2, 1, 1, 1, 0, 0, 0)]
    assert invariant_dimension(sl9) == 2


@pytest.mark.parametrize("n,top", [(2, 3), (3, 2), (4, 1)])
def test_invariants_against_schur_polynomials(n, top):
    ws = dominant(n, top)
    for triple in combinations_with_replacement(ws, 3):
        assert invariant_dimension(triple) == brute_invariants(triple), triple


def test_invariants_s4_against_schur_polynomials():
    for quad in combinations_with_replacement(dominant(3, 1), 4):
        assert invariant_dimension(quad) == brute_invariants(quad), quad


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(weights(n), weights(n), weights(n))), st.permutations([0, 1, 2]))
def test_invariants_symmetric_and_self_dual(triple, perm):
    d = invariant_dimension(triple)
    assert invariant_dimension([triple[i] for i in perm]) == d
    assert invariant_dimension([dual_weight(w) for w in triple]) == d
    if d > 0:
        assert sum(map(sum, triple)) % len(triple[0]) == 0

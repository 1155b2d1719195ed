from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frozen import (
    A2_PLAIN,
    A2_PLAIN_HANKEL,
    A2_SKEW,
    A2_SKEW_HANKEL,
    A2_TRIPLE,
    A3_W1W3_DOMINANT,
    B2_WCROSS_DIFF_R6,
    WCROSS_A2_R2,
    WCROSS_SIZES,
    WCROSS_SKEW_A2_R2,
    WCROSS_SKEW_R3,
)
from wsi.orbitalg import (
    PLAIN,
    SKEW,
    LaurentPoly,
    exact_divide,
    hypercross,
    is_lower_set,
    minkowski_sum,
    orbit_decompose,
    orbit_poly,
    orbit_product_expand,
    skew_orbit_poly,
    triple_expand,
    wcross,
)
from wsi.rootsys import make_root_system, stabilizer_order

small = st.dictionaries(st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
                        st.integers(-5, 5).filter(bool), max_size=5)


def lp(d):
    return LaurentPoly(d, 2)


@given(small, small, small)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    p, q, r = lp(a), lp(b), lp(c)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPoly({}, 2)


@given(small, small)
@settings(max_examples=60, deadline=None)
def test_exact_divide_inverts_multiplication(a, b):
    p, q = lp(a), lp(b)
    if not q:
        return
    assert exact_divide(p * q, q) == p


def test_exact_divide_rejects_remainder():
    with pytest.raises(ValueError):
        exact_divide(lp({(2, 0): 1, (0, 0): 1}), lp({(1, 0): 1, (0, 0): 1}))


def test_evaluation_with_negative_exponents():
    p = lp({(1, -1): 2, (-2, 0): 3})
    assert p((2, 3)) == F(4, 3) + F(3, 4)


def test_orbit_polynomials(A2):
    assert orbit_poly(A2, (1, 0)) == lp({(1, 0): 2, (-1, 1): 2, (0, -1): 2})
    assert orbit_poly(A2, (0, 0)) == LaurentPoly.constant(6, 2)
    assert skew_orbit_poly(A2, (2, 0)) == LaurentPoly({}, 2)
    assert len(skew_orbit_poly(A2, (1, 1)).terms) == 6


@pytest.mark.parametrize("pair,expected", list(A2_PLAIN.items()))
def test_plain_relations(A2, pair, expected):
    assert orbit_product_expand(A2, *pair, kind=PLAIN).terms == expected


@pytest.mark.parametrize("pair,expected", list(A2_SKEW.items()))
def test_skew_relations(A2, pair, expected):
    hat, b = pair
    a = tuple(x - 1 for x in hat)
    assert triple_expand(A2, a, b, (0, 0), SKEW).terms == {nu: 6 * c for nu, c in expected.items()}


@pytest.mark.parametrize("key,expected", list(A2_PLAIN_HANKEL.items()))
def test_plain_hankel_entries(A2, key, expected):
    assert triple_expand(A2, *key, kind=PLAIN).terms == expected


@pytest.mark.parametrize("key,expected", list(A2_SKEW_HANKEL.items()))
def test_skew_hankel_entries(A2, key, expected):
    assert triple_expand(A2, *key, kind=SKEW).terms == expected


def test_triple_product(A2):
    assert triple_expand(A2, (1, 0), (0, 1), (0, 1)).terms == A2_TRIPLE


def test_products_agree_with_laurent_multiplication(B2):
    for a in [(1, 0), (2, 1), (0, 3)]:
        for b in [(0, 1), (1, 1), (2, 0)]:
            combo = orbit_product_expand(B2, a, b)
            assert combo.to_laurent(B2) == orbit_poly(B2, a) * orbit_poly(B2, b)
            sk = orbit_product_expand(B2, tuple(x + 1 for x in a), b, kind=SKEW)
            assert sk.to_laurent(B2) == skew_orbit_poly(B2, tuple(x + 1 for x in a)) * orbit_poly(B2, b)


def test_a3_product_against_oracle(A3):
    prod = orbit_poly(A3, (1, 0, 0)) * orbit_poly(A3, (0, 0, 1))
    got = {e: c for e, c in prod.terms.items() if all(x >= 0 for x in e)}
    assert got == A3_W1W3_DOMINANT
    # coefficient of Theta_nu is the literal coefficient divided by |Stab(nu)|
    expected = {nu: c // stabilizer_order(A3, nu) for nu, c in A3_W1W3_DOMINANT.items()}
    assert orbit_product_expand(A3, (1, 0, 0), (0, 0, 1)).terms == expected


def test_orbit_decompose_roundtrip(B2):
    p = orbit_poly(B2, (2, 1)) * 3 + orbit_poly(B2, (0, 1)) * F(-1, 2)
    assert orbit_decompose(B2, p).terms == {(2, 1): 3, (0, 1): F(-1, 2)}


def test_orbit_decompose_rejects_non_invariant(A2):
    with pytest.raises(ValueError):
        orbit_decompose(A2, lp({(1, 0): 1}))


def test_hypercross():
    assert sorted(hypercross(2, 2)) == [(0, 0), (0, 1), (1, 0)]
    assert len(hypercross(2, 13)) == 37
    assert len(hypercross(3, 1)) == 1
    for n, r in [(2, 7), (3, 6)]:
        H = hypercross(n, r)
        assert is_lower_set(H)
        for a in H:
            p = 1
            for x in a:
                p *= x + 1
            assert p <= r


def test_lower_set_predicate():
    assert is_lower_set([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert not is_lower_set([(0, 0), (1, 1)])


def test_minkowski_sum():
    assert sorted(minkowski_sum([(0,), (1,)], [(0,), (2,)])) == [(0,), (1,), (2,), (3,)]


def test_wcross_small_sets(A2):
    assert sorted(wcross(A2, 2, PLAIN)) == sorted(WCROSS_A2_R2)
    assert sorted(wcross(A2, 2, SKEW)) == sorted(WCROSS_SKEW_A2_R2)


@pytest.mark.parametrize("key,size", list(WCROSS_SIZES.items()))
def test_wcross_sizes(key, size):
    rs = make_root_system(key[0])
    assert len(wcross(rs, key[1])) == size


def test_wcross_skew_r3(A2, B2):
    assert sorted(wcross(A2, 3, SKEW)) == WCROSS_SKEW_R3
    assert sorted(wcross(B2, 3, SKEW)) == WCROSS_SKEW_R3


def test_b2_wcross_outliers(B2):
    H = hypercross(2, 6)
    base = set(minkowski_sum(H, H, hypercross(2, 2)))
    assert sorted(set(wcross(B2, 6)) - base) == B2_WCROSS_DIFF_R6


def test_repr():
    assert repr(lp({(1, 0): 1, (0, -1): F(-1, 2), (0, 0): -3})) == "x1 - 3 - 1/2*x2^-1"
    assert repr(LaurentPoly({}, 2)) == "0"

from fractions import Fraction as F
from math import comb

import pytest

from frozen import A2_T, A2_U, B2_T, B2_U, ERRATA_T, parse_table_poly
from wsi.cheb import (
    character_poly,
    chebyshev_T,
    chebyshev_U,
    eval_dense,
    format_poly,
    parse_poly,
    substitute_orbits,
    theta_point,
)
from wsi.orbitalg import LaurentPoly, orbit_poly, skew_orbit_poly


def as_dict(p):
    return {e: F(c) for e, c in p.terms.items() if c != 0}


def shift_x(table, s):
    # table(X + s, Y), expanded
    out = {}
    for (a, b), c in table.items():
        for k in range(a + 1):
            key = (k, b)
            out[key] = out.get(key, 0) + c * comb(a, k) * F(s) ** (a - k)
    return {k: v for k, v in out.items() if v != 0}


def dim_A2(a, b):
    return (a + 1) * (b + 1) * (a + b + 2) // 2


def dim_B2(a, b):
    return (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) // 6


@pytest.mark.parametrize("alpha,text", list(A2_T.items()))
def test_a2_first_kind_table(A2, alpha, text):
    assert as_dict(chebyshev_T(A2, alpha)) == parse_table_poly(text)


@pytest.mark.parametrize("alpha,text", list(A2_U.items()))
def test_a2_second_kind_table(A2, alpha, text):
    assert as_dict(chebyshev_U(A2, alpha)) == parse_table_poly(text)


@pytest.mark.parametrize("alpha", list(B2_T))
def test_b2_first_kind_table(B2, alpha):
    text = ERRATA_T.get(("B2", alpha), B2_T[alpha])
    assert as_dict(chebyshev_T(B2, alpha)) == parse_table_poly(text)


def test_b2_t31_misprint_differs_only_in_one_monomial(B2):
    printed = parse_table_poly(B2_T[(3, 1)])
    fixed = parse_table_poly(ERRATA_T[("B2", (3, 1))])
    moved = dict(fixed)
    moved[(3, 1)] += moved.pop((2, 1))
    assert printed == moved


# printed B2 second-kind rows that equal U_alpha(X - 4, Y); the others differ further
B2_U_SHIFTED_ROWS = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (0, 3), (1, 2), (0, 4)]


@pytest.mark.parametrize("alpha", B2_U_SHIFTED_ROWS)
def test_b2_second_kind_printed_is_shifted(B2, alpha):
    printed = parse_table_poly(B2_U[alpha])
    assert shift_x(printed, 4) == as_dict(chebyshev_U(B2, alpha))


def test_b2_printed_second_kind_breaks_dimension(B2):
    # at x = (1, 1), i.e. X = Y = 8, U_{1,0} is dim V(omega_1) = 5; the printed row gives 3
    one = theta_point(B2, (1, 1))
    printed = parse_table_poly(B2_U[(1, 0)])
    assert sum(c * one[0] ** a * one[1] ** b for (a, b), c in printed.items()) == 3
    assert eval_dense(chebyshev_U(B2, (1, 0)), one) == 5


@pytest.mark.parametrize("rs_name,dim", [("A2", dim_A2), ("B2", dim_B2)])
def test_second_kind_gives_dimensions(rs_name, dim):
    from wsi.rootsys import make_root_system
    rs = make_root_system(rs_name)
    one = theta_point(rs, (1, 1))
    for a in range(5):
        for b in range(5):
            assert eval_dense(chebyshev_U(rs, (a, b)), one) == dim(a, b)


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_first_kind_definition(name):
    from wsi.rootsys import make_root_system
    rs = make_root_system(name)
    for a in range(4):
        for b in range(4):
            assert substitute_orbits(rs, chebyshev_T(rs, (a, b))) == orbit_poly(rs, (a, b))


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_weyl_character_formula(name):
    from wsi.rootsys import make_root_system
    rs = make_root_system(name)
    delta = skew_orbit_poly(rs, rs.delta)
    for a in range(3):
        for b in range(3):
            cha = character_poly(rs, (a, b))
            assert delta * cha == skew_orbit_poly(rs, (a + 1, b + 1))
            assert substitute_orbits(rs, chebyshev_U(rs, (a, b))) == cha


def test_a1_is_classical(A1):
    # Theta_1 = x + 1/x, so X = 2 cos t and U_n(2 cos t) = sin((n+1)t) / sin t
    for n in range(6):
        assert substitute_orbits(A1, chebyshev_T(A1, (n,))) == orbit_poly(A1, (n,))
    assert as_dict(chebyshev_U(A1, (2,))) == {(2,): F(1), (0,): F(-1)}


def test_a3_first_kind_degree(A3):
    T = chebyshev_T(A3, (1, 1, 0))
    assert substitute_orbits(A3, T) == orbit_poly(A3, (1, 1, 0))


def test_format_and_parse(A2):
    p = chebyshev_T(A2, (2, 2))
    text = format_poly(A2, p)
    assert text.startswith("1/16*X1^2*X2^2")
    assert parse_poly(A2, text) == p
    assert format_poly(A2, chebyshev_T(A2, (1, 1))) == "1/4*X1*X2 - 3"
    assert format_poly(A2, LaurentPoly({}, 2)) == "0"


def test_rejects_non_dominant(A2):
    with pytest.raises(ValueError):
        chebyshev_T(A2, (-1, 0))
    with pytest.raises(ValueError):
        chebyshev_U(A2, (0, 0, 0))

import random
from fractions import Fraction as F

import pytest

from frozen import CHEB1_EXPONENTS_R2, CHEB2_EXPONENTS_R2, MONOMIAL_POINTS_R2
from wsi.cheb import chebyshev_T, eval_dense
from wsi.interp import (
    CHEB1,
    CHEB2,
    MONOMIAL,
    BlackBox,
    SparseRepresentation,
    XiConfig,
    default_xi0,
    evaluation_points,
    evaluation_set,
    first_kind_interpolate,
    floor_log_exp,
    interpolate,
    laurent_interpolate,
    nint_log_exp,
    orbit_value,
    recover_weight,
    theta_at,
    verify_interpolant,
    xi_config,
)
from wsi.orbitalg import orbit_poly, skew_orbit_poly
from wsi.rootsys import make_root_system, strongly_dominant_basis
from wsi.supportrec import RecoveryError


def gram_row(rs, nu):
    return tuple(sum(F(nu[i]) * rs.S[i][j] for i in range(rs.rank)) for j in range(rs.rank))


def test_default_xi0():
    assert [default_xi0(make_root_system(n)) for n in ("A1", "A2", "B2", "A3")] == [10, 82, 145, 1297]


def test_floor_and_nearest_log():
    assert floor_log_exp(F(82 ** 5), 82) == 5
    assert floor_log_exp(F(82 ** 5) - 1, 82) == 4
    assert floor_log_exp(F(1, 3), 2) == -2
    assert nint_log_exp(F(82 ** 3) * F(9, 10), 82) == 3
    with pytest.raises(ValueError):
        nint_log_exp(F(82 ** 3) * 9, 82)         # 9 > 82^(1/4)
    with pytest.raises(ValueError):
        floor_log_exp(0, 82)


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_commutation(name):
    # Theta_w(xi^{nu S}) = Theta_nu(xi^{w S})
    rs = make_root_system(name)
    xi0 = default_xi0(rs)
    for w, nu in [((1, 0), (0, 1)), ((2, 3), (1, 1)), ((0, 4), (3, 0))]:
        pt = tuple(F(xi0) ** int(rs.D * e) for e in gram_row(rs, nu))
        assert orbit_poly(rs, w)(pt) == orbit_value(rs, nu, w, xi0)
        assert skew_orbit_poly(rs, tuple(x + 1 for x in w))(pt) == \
            orbit_value(rs, tuple(x + 1 for x in w), nu, xi0, skew=True)


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_weight_recovery(name):
    rs = make_root_system(name)
    xi0 = default_xi0(rs)
    rng = random.Random(7)
    basis = strongly_dominant_basis(rs)
    for _ in range(20):
        w = (rng.randint(0, 10), rng.randint(0, 10))
        vals = [orbit_value(rs, w, mu, xi0) for mu in basis]
        assert recover_weight(rs, xi0, vals) == w
        ws = (w[0] + 1, w[1] + 1)
        svals = [orbit_value(rs, ws, mu, xi0, skew=True) for mu in basis]
        assert recover_weight(rs, xi0, svals, mode="skew") == ws


def test_theta_at_matches_polynomials(A2):
    th = theta_at(A2, (2, 1), 82)
    pt = tuple(F(82) ** int(3 * e) for e in gram_row(A2, (2, 1)))
    assert th == (orbit_poly(A2, (1, 0))(pt), orbit_poly(A2, (0, 1))(pt))
    assert eval_dense(chebyshev_T(A2, (1, 1)), th) == orbit_poly(A2, (1, 1))(pt)


def test_monomial_evaluation_set():
    assert sorted(evaluation_set(None, 2, MONOMIAL, n=2)) == sorted(MONOMIAL_POINTS_R2)


def test_chebyshev_evaluation_sets(A2):
    got1 = {gram_row(A2, nu) for nu in evaluation_set(A2, 2, CHEB1)}
    got2 = {gram_row(A2, nu) for nu in evaluation_set(A2, 2, CHEB2)}
    assert got1 == {tuple(F(x) for x in p) for p in CHEB1_EXPONENTS_R2}
    assert got2 == {tuple(F(x) for x in p) for p in CHEB2_EXPONENTS_R2}


def test_evaluation_points_are_rational(A2):
    pts = evaluation_points(A2, 3, CHEB1, xi_config(A2))
    assert all(isinstance(x, F) for p in pts for x in p)


def test_representation_validation(A2):
    with pytest.raises(ValueError):
        SparseRepresentation(CHEB1, [(1, (1, 0)), (2, (1, 0))], A2)
    with pytest.raises(ValueError):
        SparseRepresentation(CHEB1, [(1, (-1, 0))], A2)
    with pytest.raises(ValueError):
        SparseRepresentation(MONOMIAL, [(0, (1, 0))])
    with pytest.raises(ValueError):
        SparseRepresentation("legendre", [(1, (1,))])


def test_blackbox_memoizes():
    bb = BlackBox(lambda p: p[0] + p[1])
    bb((1, 2))
    bb((F(1), F(2)))
    bb((2, 2))
    assert bb.calls == 2


def test_laurent_negative_exponents():
    spec = SparseRepresentation(MONOMIAL, [(3, (-1, 2)), (F(-2, 5), (4, 0)), (1, (0, -3))])
    rep = interpolate(spec)
    assert rep.result.same_as(spec)


def test_laurent_rational_xi():
    spec = SparseRepresentation(MONOMIAL, [(2, (1, 1)), (5, (0, 3))])
    f = BlackBox(spec)
    rep = laurent_interpolate(2, 2, f, xi=F(3, 2))
    assert rep.result.same_as(spec)


@pytest.mark.parametrize("basis", [MONOMIAL, CHEB1, CHEB2])
def test_round_trip_a2(A2, basis):
    rng = random.Random(11)
    for _ in range(4):
        r = rng.randint(1, 4)
        ws = rng.sample([(a, b) for a in range(7) for b in range(7)], r)
        terms = [(F(rng.randint(-9, 9) or 1, rng.randint(1, 4)), w) for w in ws]
        spec = SparseRepresentation(basis, terms, None if basis == MONOMIAL else A2)
        rep = interpolate(spec)
        assert rep.result.same_as(spec)
        assert verify_interpolant(rep.result, rep.observations, rep.xi)


@pytest.mark.parametrize("name", ["A1", "B2", "A3"])
def test_round_trip_other_systems(name):
    rs = make_root_system(name)
    terms = [(F(3), (1,) * rs.rank), (F(-1, 2), (0,) * (rs.rank - 1) + (2,))]
    for basis in (CHEB1, CHEB2):
        spec = SparseRepresentation(basis, terms, rs)
        assert interpolate(spec).result.same_as(spec)


def test_evaluation_budget(A2):
    spec = SparseRepresentation(CHEB1, [(1, (3, 1)), (2, (0, 2)), (-1, (1, 0))], A2)
    rep = interpolate(spec)
    assert rep.evaluations == len(evaluation_set(A2, 3, CHEB1))


def test_overestimated_sparsity(A2):
    spec = SparseRepresentation(CHEB1, [(5, (2, 2)), (-3, (1, 0))], A2)
    rep = interpolate(spec, r=4)
    assert rep.result.same_as(spec)


def test_constant(A2):
    spec = SparseRepresentation(CHEB2, [(7, (0, 0))], A2)
    assert interpolate(spec).result.same_as(spec)


def test_not_a_sparse_sum_fails_cleanly(A2):
    # a non-polynomial black box has no finite-rank Hankel structure
    with pytest.raises(RecoveryError):
        first_kind_interpolate(A2, 2, lambda p: 1 / (p[0] ** 2 + 1), max_bits=512)


def test_certification_rejects_perturbations(A2):
    spec = SparseRepresentation(CHEB1, [(2, (1, 2)), (F(-1, 3), (3, 0))], A2)
    rep = interpolate(spec)
    assert verify_interpolant(spec, rep.observations, rep.xi)
    bad_coeff = SparseRepresentation(CHEB1, [(2, (1, 2)), (F(-1, 3) + F(1, 10 ** 12), (3, 0))], A2)
    bad_weight = SparseRepresentation(CHEB1, [(2, (1, 2)), (F(-1, 3), (2, 1))], A2)
    swapped = SparseRepresentation(CHEB1, [(F(-1, 3), (1, 2)), (2, (3, 0))], A2)
    for cand in (bad_coeff, bad_weight, swapped):
        assert not verify_interpolant(cand, rep.observations, rep.xi)


def test_xi_config_rejects_small_base(A2):
    with pytest.raises(ValueError):
        xi_config(A2, 1)
    assert XiConfig(F(2), 3).xi == 8

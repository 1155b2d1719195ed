"""Sparse interpolation in the monomial and Chebyshev bases.

The black box is only ever called at exact rational points.  For the
Chebyshev bases the points are ``theta(nu) = (Theta_{omega_i}(xi^{nu S}))``
with ``xi = xi0^D``, which makes every coordinate a rational number.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import mpmath

from . import linalg
from .cheb import chebyshev_T, chebyshev_U, eval_dense
from .orbitalg import PLAIN, SKEW, gamma_set, hypercross, minkowski_sum, wcross
from .rootsys import RootSystem, mat_vec, strongly_dominant_basis
from .supportrec import (
    MAX_BITS,
    MONOMIAL,
    RecoveryError,
    SnapError,
    SparsityMismatch,
    assemble_omega_values,
    invariant_support_and_coeffs,
    monomial_table,
    support_and_coeffs,
)

CHEB1 = "cheb1"
CHEB2 = "cheb2"
BASES = (MONOMIAL, CHEB1, CHEB2)
DEFAULT_BITS = 256


# ---------------------------------------------------------------- representation

@dataclass
class SparseRepresentation:
    """``sum c_i B_{w_i}`` where ``B`` is ``x^w``, ``T_w`` or ``U_w``."""

    basis: str
    terms: list                      # [(Fraction, weight tuple)]
    rs: RootSystem | None = None

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        self.terms = [(Fraction(c), tuple(int(x) for x in w)) for c, w in self.terms]
        if not self.terms:
            raise ValueError("representation needs at least one term")
        if any(c == 0 for c, _ in self.terms):
            raise ValueError("coefficients must be nonzero")
        if len({w for _, w in self.terms}) != len(self.terms):
            raise ValueError("weights must be pairwise distinct")
        if len({len(w) for _, w in self.terms}) != 1:
            raise ValueError("weights have different lengths")
        if self.basis != MONOMIAL:
            if self.rs is None:
                raise ValueError("Chebyshev bases need a root system")
            for _, w in self.terms:
                if len(w) != self.rs.rank or any(x < 0 for x in w):
                    raise ValueError(f"{w} is not a dominant weight")

    @property
    def nvars(self) -> int:
        if self.rs is not None:
            return self.rs.rank
        return len(self.terms[0][1])

    def canonical(self) -> list:
        """Terms sorted by weight."""
        return sorted(self.terms, key=lambda t: t[1])

    def same_as(self, other: "SparseRepresentation") -> bool:
        return self.basis == other.basis and self.canonical() == other.canonical()

    def __call__(self, point: Sequence) -> Fraction:
        """Direct exact evaluation (expands the Chebyshev polynomials)."""
        total = Fraction(0)
        for c, w in self.terms:
            if self.basis == MONOMIAL:
                v = Fraction(1)
                for x, k in zip(point, w):
                    v *= Fraction(x) ** k
            elif self.basis == CHEB1:
                v = eval_dense(chebyshev_T(self.rs, w), point)
            else:
                v = eval_dense(chebyshev_U(self.rs, w), point)
            total += c * v
        return total


class BlackBox:
    """Memoizing wrapper that counts distinct evaluation points."""

    def __init__(self, fn: Callable):
        self.fn = fn
        self.cache: dict = {}

    def __call__(self, point: Sequence) -> Fraction:
        key = tuple(Fraction(x) for x in point)
        if key not in self.cache:
            self.cache[key] = Fraction(self.fn(key))
        return self.cache[key]

    @property
    def calls(self) -> int:
        return len(self.cache)


def make_blackbox(spec: SparseRepresentation) -> BlackBox:
    return BlackBox(spec)


# ---------------------------------------------------------------- evaluation points

@dataclass(frozen=True)
class XiConfig:
    """``xi = xi0^D``; for the monomial basis ``D = 1`` and ``xi0`` may be rational."""

    xi0: Fraction
    D: int = 1

    @property
    def xi(self) -> Fraction:
        return Fraction(self.xi0) ** self.D


def default_xi0(rs: RootSystem) -> int:
    """Smallest integer strictly above ``(3/2 |W|)^2``."""
    bound = Fraction(3 * rs.order, 2) ** 2
    return math.floor(bound) + 1


def xi_config(rs: RootSystem, xi0=None) -> XiConfig:
    xi0 = default_xi0(rs) if xi0 is None else xi0
    if Fraction(xi0) <= 1:
        raise ValueError("xi0 must exceed 1")
    return XiConfig(Fraction(xi0), rs.D)


def _exponents(rs: RootSystem, alpha: Sequence) -> tuple:
    """Integers ``D (alpha^T S)_j``."""
    n = rs.rank
    out = []
    for j in range(n):
        v = rs.D * sum(Fraction(alpha[i]) * rs.S[i][j] for i in range(n))
        out.append(int(v))
    return tuple(out)


def eval_point(rs: RootSystem, xi: XiConfig, alpha: Sequence) -> tuple:
    """``xi^{alpha^T S}`` as exact rationals."""
    return tuple(Fraction(xi.xi0) ** e for e in _exponents(rs, alpha))


@lru_cache(maxsize=None)
def _orbit_exponents(rs: RootSystem, omega: tuple, alpha: tuple, skew: bool) -> tuple:
    ex = _exponents(rs, alpha)
    acc: dict = {}
    for B in rs.group:
        e = sum(a * b for a, b in zip(ex, mat_vec(B, omega)))
        acc[e] = acc.get(e, 0) + (rs.det(B) if skew else 1)
    return tuple(sorted(acc.items()))


def orbit_value(rs: RootSystem, omega: Sequence, alpha: Sequence, xi0, skew: bool = False) -> Fraction:
    """``Theta_omega(xi^{alpha^T S})`` (or the skew version), exactly."""
    x = Fraction(xi0)
    return sum((c * x ** e for e, c in _orbit_exponents(rs, tuple(omega), tuple(alpha), skew)), Fraction(0))


def theta_at(rs: RootSystem, alpha: Sequence, xi0) -> tuple:
    return tuple(orbit_value(rs, rs.fundamental(i), alpha, xi0) for i in range(rs.rank))


# ---------------------------------------------------------------- weight recovery

def floor_log_exp(value, xi0) -> int:
    """Largest ``k`` with ``xi0^k <= value`` (exact)."""
    v, b = Fraction(value), Fraction(xi0)
    if v <= 0 or b <= 1:
        raise ValueError("floor_log_exp needs value > 0 and base > 1")
    k = math.floor((math.log(v.numerator) - math.log(v.denominator)) / (math.log(b.numerator) - math.log(b.denominator)))
    while b ** k > v:
        k -= 1
    while b ** (k + 1) <= v:
        k += 1
    return k


def nint_log_exp(value, xi0) -> int:
    """The ``k`` with ``xi0^(4k-1) < value^4 < xi0^(4k+1)``; ValueError if none."""
    v, b = Fraction(value), Fraction(xi0)
    if b <= 1:
        raise ValueError("base must exceed 1")
    if v <= 0:
        raise ValueError("nint_log_exp needs a positive value")
    est = round((math.log(v.numerator) - math.log(v.denominator)) / (math.log(b.numerator) - math.log(b.denominator)))
    v4 = v ** 4
    for k in (est, est - 1, est + 1):
        if b ** (4 * k - 1) < v4 < b ** (4 * k + 1):
            return k
    raise ValueError("value is not within a quarter power of the base")


def recover_weight(rs: RootSystem, xi0, values: Sequence, basis: Sequence | None = None,
                   mode: str = PLAIN) -> tuple:
    """Weight ``w`` from ``values[i] = Theta_w(xi^{mu_i S})`` (plain) or the
    skew values (``mode='skew'``), for ``mu_i`` in ``basis``."""
    basis = basis or strongly_dominant_basis(rs)
    if mode == PLAIN:
        ms = [floor_log_exp(v, xi0) for v in values]
    else:
        ms = [nint_log_exp(v, xi0) for v in values]
    A = [[rs.D * sum(Fraction(mu[i]) * rs.S[i][j] for i in range(rs.rank)) for j in range(rs.rank)] for mu in basis]
    sol = linalg.solve(A, ms)
    if any(x.denominator != 1 for x in sol):
        raise ValueError("recovered weight is not integral")
    return tuple(int(x) for x in sol)


def _approx_floor_log(v, xi0) -> int:
    # the fractional part of log_xi0 lies in [0, 1/2), so shifting by 1/4 absorbs rounding
    if v <= 0:
        raise SnapError("non-positive orbit value")
    x = mpmath.log(v) / mpmath.log(mpmath.mpf(Fraction(xi0).numerator) / Fraction(xi0).denominator)
    return int(mpmath.floor(x + mpmath.mpf(1) / 4))


def _approx_eval(p, point) -> object:
    total = mpmath.mpf(0)
    for e, c in p.terms.items():
        t = mpmath.mpf(Fraction(c).numerator) / Fraction(c).denominator
        for x, k in zip(point, e):
            if k:
                t *= x ** k
        total += t
    return total


def _solve_weight(rs: RootSystem, ms: Sequence, basis: Sequence) -> tuple:
    A = [[rs.D * sum(Fraction(mu[i]) * rs.S[i][j] for i in range(rs.rank)) for j in range(rs.rank)] for mu in basis]
    sol = linalg.solve(A, ms)
    if any(x.denominator != 1 for x in sol):
        raise SnapError("recovered weight is not integral")
    return tuple(int(x) for x in sol)


# ---------------------------------------------------------------- evaluation sets

def monomial_eval_exponents(n: int, r: int) -> list:
    return minkowski_sum(hypercross(n, r), hypercross(n, r), gamma_set(n))


def evaluation_set(rs: RootSystem | None, r: int, basis: str, n: int | None = None) -> list:
    """Indices at which the black box is evaluated."""
    if basis == MONOMIAL:
        return monomial_eval_exponents(n if n is not None else rs.rank, r)
    return wcross(rs, r, PLAIN if basis == CHEB1 else SKEW)


def evaluation_points(rs: RootSystem | None, r: int, basis: str, xi: XiConfig, n: int | None = None) -> list:
    idx = evaluation_set(rs, r, basis, n)
    if basis == MONOMIAL:
        return [tuple(xi.xi ** k for k in e) for e in idx]
    return [theta_at(rs, nu, xi.xi0) for nu in idx]


# ---------------------------------------------------------------- algorithms

@dataclass
class InterpReport:
    result: SparseRepresentation
    evaluations: int
    gamma: list
    bits: int
    xi: XiConfig
    wall_ms: float
    observations: dict = field(repr=False, default_factory=dict)


def _bits_default(bits):
    import os

    if bits is not None:
        return int(bits)
    env = os.environ.get("WSI_BITS")
    return int(env) if env else DEFAULT_BITS


def _with_rank_retry(run, r: int):
    try:
        return run(r)
    except SparsityMismatch as exc:
        if 0 < exc.rank < r:
            return run(exc.rank)
        raise RecoveryError(f"sparsity mismatch: {exc}") from None


def laurent_interpolate(n: int, r: int, f: Callable, xi=2, bits=None, max_bits: int = MAX_BITS) -> InterpReport:
    """Recover ``f = sum a_i x^{w_i}`` with at most ``r`` terms.

    ``f`` is evaluated at ``xi^e`` for ``e`` in ``H + H + {0, e_j}``.  The
    eigenvalues are snapped to integer powers of ``xi``.
    """
    t0 = time.perf_counter()
    bits = _bits_default(bits)
    cfg = XiConfig(Fraction(xi), 1)
    x = cfg.xi
    if x <= 0 or x == 1:
        raise ValueError("xi must be positive and different from 1")
    bb = f if isinstance(f, BlackBox) else BlackBox(f)

    def snap(approx, b):
        out = []
        with mpmath.workprec(b):
            lx = mpmath.log(mpmath.mpf(x.numerator)) - mpmath.log(mpmath.mpf(x.denominator))
            for p in approx:
                pt = []
                for z in p:
                    if z <= 0:
                        raise SnapError("eigenvalue is not a positive power of xi")
                    k = int(mpmath.nint(mpmath.log(z) / lx))
                    if abs(z / (mpmath.mpf(x.numerator) / x.denominator) ** k - 1) > mpmath.mpf(1) / 4:
                        raise SnapError("eigenvalue is not close to a power of xi")
                    pt.append(x ** k)
                out.append(tuple(pt))
        return out

    def run(rr):
        table = monomial_table(n, rr, lambda e: bb(tuple(x ** k for k in e)))
        return support_and_coeffs(table, snap, bits, max_bits)

    res = _with_rank_retry(run, r)
    terms = []
    for p, c in zip(res.points, res.coeffs):
        w = tuple(_exact_log(z, x) for z in p)
        terms.append((c, w))
    rep = SparseRepresentation(MONOMIAL, terms)
    obs = {e: bb(tuple(x ** k for k in e)) for e in monomial_eval_exponents(n, r)}
    return InterpReport(rep, bb.calls, res.gamma, res.bits, cfg, (time.perf_counter() - t0) * 1000, obs)


def _exact_log(z: Fraction, x: Fraction) -> int:
    k = round(math.log(abs(z)) / math.log(x)) if z != 1 else 0
    for cand in (k, k - 1, k + 1):
        if x ** cand == z:
            return cand
    raise SnapError("point is not a power of xi")


def _invariant_snap(rs: RootSystem, xi0, basis, shift_delta: bool, found: dict):
    def snap(approx, b):
        out = []
        with mpmath.workprec(b):
            for th in approx:
                ms = [_approx_floor_log(_approx_eval(chebyshev_T(rs, mu), th), xi0) for mu in basis]
                w = _solve_weight(rs, ms, basis)
                if any(c < (1 if shift_delta else 0) for c in w):
                    raise SnapError(f"recovered weight {w} is not admissible")
                exact = theta_at(rs, w, xi0)
                found[exact] = w
                out.append(exact)
        return out

    return snap


def first_kind_interpolate(rs: RootSystem, r: int, F: Callable, xi0=None, bits=None,
                           mu_basis=None, max_bits: int = MAX_BITS) -> InterpReport:
    """Recover ``F = sum a_i T_{w_i}`` with at most ``r`` terms."""
    t0 = time.perf_counter()
    bits = _bits_default(bits)
    cfg = xi_config(rs, xi0)
    basis = mu_basis or strongly_dominant_basis(rs)
    bb = F if isinstance(F, BlackBox) else BlackBox(F)
    found: dict = {}

    def run(rr):
        omega = {nu: bb(theta_at(rs, nu, cfg.xi0)) for nu in wcross(rs, rr, PLAIN)}
        table = assemble_omega_values(rs, rr, PLAIN, omega)
        return invariant_support_and_coeffs(table, _invariant_snap(rs, cfg.xi0, basis, False, found), bits, max_bits)

    res = _with_rank_retry(run, r)
    terms = [(c / rs.order, found[p]) for p, c in zip(res.points, res.coeffs)]
    rep = SparseRepresentation(CHEB1, terms, rs)
    obs = {nu: bb(theta_at(rs, nu, cfg.xi0)) for nu in wcross(rs, r, PLAIN)}
    return InterpReport(rep, bb.calls, res.gamma, res.bits, cfg, (time.perf_counter() - t0) * 1000, obs)


def second_kind_interpolate(rs: RootSystem, r: int, F: Callable, xi0=None, bits=None,
                            mu_basis=None, max_bits: int = MAX_BITS) -> InterpReport:
    """Recover ``F = sum a_i U_{w_i}`` with at most ``r`` terms.

    The form is ``Omega(Theta-hat_nu) = Theta-hat_delta(xi^{nu S}) F(theta(nu))``
    on strongly dominant ``nu``; its support points are ``xi^{(delta+w) S}``.
    """
    t0 = time.perf_counter()
    bits = _bits_default(bits)
    cfg = xi_config(rs, xi0)
    basis = mu_basis or strongly_dominant_basis(rs)
    bb = F if isinstance(F, BlackBox) else BlackBox(F)
    found: dict = {}
    delta = rs.delta

    def run(rr):
        omega = {}
        for nu in wcross(rs, rr, SKEW):
            omega[nu] = orbit_value(rs, delta, nu, cfg.xi0, skew=True) * bb(theta_at(rs, nu, cfg.xi0))
        table = assemble_omega_values(rs, rr, SKEW, omega)
        return invariant_support_and_coeffs(table, _invariant_snap(rs, cfg.xi0, basis, True, found), bits, max_bits)

    res = _with_rank_retry(run, r)
    terms = []
    for p, c in zip(res.points, res.coeffs):
        w = found[p]
        denom = orbit_value(rs, delta, w, cfg.xi0, skew=True)
        terms.append((c / denom, tuple(x - 1 for x in w)))
    rep = SparseRepresentation(CHEB2, terms, rs)
    obs = {nu: bb(theta_at(rs, nu, cfg.xi0)) for nu in wcross(rs, r, SKEW)}
    return InterpReport(rep, bb.calls, res.gamma, res.bits, cfg, (time.perf_counter() - t0) * 1000, obs)


# ---------------------------------------------------------------- certification

def predicted_value(candidate: SparseRepresentation, index: Sequence, xi: XiConfig) -> Fraction:
    """Black-box value the candidate would produce at evaluation index ``index``.

    Uses the commutation ``Theta_w(xi^{nu S}) = Theta_nu(xi^{w S})`` so no
    Chebyshev polynomial is expanded.
    """
    if candidate.basis == MONOMIAL:
        x = xi.xi
        total = Fraction(0)
        for c, w in candidate.terms:
            total += c * x ** sum(a * b for a, b in zip(index, w))
        return total
    rs = candidate.rs
    if candidate.basis == CHEB1:
        return sum((c * orbit_value(rs, w, index, xi.xi0) for c, w in candidate.terms), Fraction(0))
    den = orbit_value(rs, rs.delta, index, xi.xi0, skew=True)
    if den == 0:
        raise ZeroDivisionError("evaluation point lies on a wall")
    num = sum((c * orbit_value(rs, tuple(x + 1 for x in w), index, xi.xi0, skew=True)
               for c, w in candidate.terms), Fraction(0))
    return num / den


def verify_interpolant(candidate: SparseRepresentation, observations: dict, xi: XiConfig) -> bool:
    """Exact check of ``candidate`` against every collected black-box value."""
    return all(predicted_value(candidate, idx, xi) == v for idx, v in observations.items())


def interpolate(spec: SparseRepresentation, r: int | None = None, xi0=None, bits=None) -> InterpReport:
    """Round trip: build a black box from ``spec`` and recover it."""
    r = r if r is not None else len(spec.canonical())
    bb = make_blackbox(spec)
    if spec.basis == MONOMIAL:
        return laurent_interpolate(spec.nvars, r, bb, xi=2 if xi0 is None else xi0, bits=bits)
    if spec.basis == CHEB1:
        return first_kind_interpolate(spec.rs, r, bb, xi0=xi0, bits=bits)
    return second_kind_interpolate(spec.rs, r, bb, xi0=xi0, bits=bits)

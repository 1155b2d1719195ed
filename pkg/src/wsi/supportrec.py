"""Support and coefficient recovery from a linear form via Hankel matrices.

A table of values of the linear form ``Omega`` is turned into Hankel
matrices ``H_0, H_1, ..., H_n`` indexed by a lower set ``Gamma``.  The
matrices ``M_j = H_0^{-1} H_j`` commute and share their left eigenvectors,
whose entries are the evaluations of the basis at the support points.

Eigenvectors are computed numerically, snapped back to exact points by a
caller-supplied ``snap`` function, and every table value is then checked
with exact rational arithmetic.  Precision is doubled on failure.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import mpmath

from . import linalg
from .cheb import chebyshev_T, chebyshev_U, eval_dense
from .orbitalg import PLAIN, SKEW, gamma_set, hypercross, sort_admissible, triple_expand
from .rootsys import RootSystem

log = logging.getLogger(__name__)

MONOMIAL = "monomial"
MAX_BITS = 4096
ELL_SHIFTS = 9


class SparsityMismatch(ValueError):
    """The Hankel matrix rank differs from the announced sparsity."""

    def __init__(self, rank: int, expected: int):
        super().__init__(f"Hankel rank is {rank}, expected {expected}")
        self.rank = rank
        self.expected = expected


class SnapError(ValueError):
    pass


class RecoveryError(RuntimeError):
    pass


@dataclass
class OmegaTable:
    """Values of the linear form needed for the Hankel matrices.

    ``kind`` is ``"monomial"`` (keys are exponents ``a+b+c``), ``"plain"``
    or ``"skew"`` (keys are triples ``(a, b, c)``).
    """

    kind: str
    n: int
    r: int
    values: dict
    rs: RootSystem | None = None

    def index_set(self) -> list:
        H = hypercross(self.n, self.r)
        if self.kind == MONOMIAL:
            # graded, then x1 before x2 before ...
            return sorted(H, key=lambda a: (sum(a), tuple(-x for x in a)))
        return sort_admissible(self.rs, H)

    def entry(self, a, b, j: int):
        """``H_j[a, b]``; ``j = 0`` is ``H_0``, otherwise shift by ``omega_j``.

        Invariant tables store products with ``Theta_0 = |W|`` for ``j = 0``,
        so that factor is divided out here.
        """
        g = gamma_set(self.n)[j]
        if self.kind == MONOMIAL:
            return self.values[tuple(x + y + z for x, y, z in zip(a, b, g))]
        v = self.values[(tuple(a), tuple(b), g)]
        return v / self.rs.order if j == 0 else v


@dataclass
class SupportResult:
    points: list          # exact support points (x-space or theta-space)
    coeffs: list          # a (monomial), |W| a (plain), or a * Theta-hat_delta (skew)
    gamma: list
    bits: int
    shift: int
    residual: object = None
    extra: dict = field(default_factory=dict)


def monomial_table(n: int, r: int, omega: Callable) -> OmegaTable:
    """Tabulate ``omega(e)`` on ``H + H + {0, e_1, ..., e_n}``."""
    H = hypercross(n, r)
    values = {}
    for a in H:
        for b in H:
            for g in gamma_set(n):
                e = tuple(x + y + z for x, y, z in zip(a, b, g))
                if e not in values:
                    values[e] = Fraction(omega(e))
    return OmegaTable(MONOMIAL, n, r, values)


def assemble_omega_values(rs: RootSystem, r: int, kind: str, omega) -> OmegaTable:
    """Combine ``omega[nu]`` (the form on single orbit polynomials) into the
    triple-product entries via their orbit expansions."""
    H = hypercross(rs.rank, r)
    values = {}
    for a in H:
        for b in H:
            for g in gamma_set(rs.rank):
                combo = triple_expand(rs, a, b, g, kind).terms
                values[(a, b, g)] = sum((c * Fraction(omega[nu]) for nu, c in combo.items()), Fraction(0))
    return OmegaTable(kind, rs.rank, r, values, rs)


def hankel(table: OmegaTable, rows: Sequence, cols: Sequence, j: int = 0) -> list:
    return [[table.entry(a, b, j) for b in cols] for a in rows]


def _is_lower_extension(gamma: frozenset, u: tuple) -> bool:
    for i, x in enumerate(u):
        if x > 0 and u[:i] + (x - 1,) + u[i + 1:] not in gamma:
            return False
    return True


def select_lower_set(H0_full, universe: Sequence, r: int) -> list:
    """Find a lower set ``Gamma`` of size ``r`` inside ``universe`` with a
    nonsingular principal minor of ``H0_full``.

    Depth-first over lower sets, trying extensions that raise the rank of
    the principal minor first.  Exhaustive, so it also handles forms for
    which small lower sets are singular (e.g. ``Omega(1) = 0``).
    """
    pos = {u: k for k, u in enumerate(universe)}
    zero = universe[0]
    if any(zero):
        raise ValueError("universe must start with the origin")
    seen = set()

    def minor_ok(g):
        return linalg.principal_minor_nonsingular(H0_full, [pos[u] for u in g])

    def dfs(g: list):
        fs = frozenset(g)
        if fs in seen:
            return None
        seen.add(fs)
        if len(g) == r:
            return list(g) if minor_ok(g) else None
        cands = [u for u in universe if u not in fs and _is_lower_extension(fs, u)]
        good = [u for u in cands if minor_ok(g + [u])]
        rest = [u for u in cands if u not in good]
        for u in good + rest:
            out = dfs(g + [u])
            if out is not None:
                return out
        return None

    found = dfs([zero])
    if found is None:
        raise SparsityMismatch(-1, r)
    return sorted(found, key=pos.__getitem__)


def _exact_rows(table: OmegaTable, points: list, gamma: list) -> list:
    if table.kind == MONOMIAL:
        return [[_monomial_value(p, g) for g in gamma] for p in points]
    return [[eval_dense(chebyshev_T(table.rs, g), p) for g in gamma] for p in points]


def _monomial_value(p, e) -> Fraction:
    v = Fraction(1)
    for x, k in zip(p, e):
        v *= Fraction(x) ** k
    return v


def _verify_table(table: OmegaTable, points: list, coeffs: list) -> bool:
    if any(c == 0 for c in coeffs):
        return False
    if table.kind == MONOMIAL:
        for e, v in table.values.items():
            if sum((c * _monomial_value(p, e) for p, c in zip(points, coeffs)), Fraction(0)) != v:
                return False
        return True
    rs = table.rs
    H = hypercross(table.n, table.r)
    T = {}
    U = {}
    for i, p in enumerate(points):
        for a in set(H) | set(gamma_set(table.n)):
            T[i, a] = eval_dense(chebyshev_T(rs, a), p)
            if table.kind == SKEW:
                U[i, a] = eval_dense(chebyshev_U(rs, a), p)
    for (a, b, g), v in table.values.items():
        total = Fraction(0)
        for i, c in enumerate(coeffs):
            left = T[i, a] / rs.order if table.kind == PLAIN else U[i, a]
            total += c * left * T[i, b] * T[i, g]
        if total != v:
            return False
    return True


def default_snap(approx_points: list, bits: int) -> list:
    """Nearest rationals with denominators below ``2^(bits/4)``."""
    bound = 2 ** max(8, bits // 4)
    out = []
    for p in approx_points:
        out.append(tuple(mpf_to_fraction(x).limit_denominator(bound) for x in p))
    return out


def mpf_to_fraction(x) -> Fraction:
    man, exp = x.man_exp if isinstance(x, mpmath.mpf) else mpmath.mpf(x).man_exp
    return Fraction(man) * Fraction(2) ** exp


def _recover(table: OmegaTable, snap, bits: int, max_bits: int) -> SupportResult:
    r = table.r
    U = table.index_set()
    H0_full = hankel(table, U, U, 0)
    rk = linalg.rank(H0_full)
    if rk != r:
        raise SparsityMismatch(rk, r)
    gamma = select_lower_set(H0_full, U, r)
    H0 = hankel(table, gamma, gamma, 0)
    Ms = [linalg.solve(H0, hankel(table, gamma, gamma, j)) for j in range(1, table.n + 1)]
    h = H0[0]
    norm = 1 if table.kind == MONOMIAL else table.rs.order
    snap = snap or default_snap
    b = bits
    last = "no attempt"
    while b <= max_bits:
        for shift in range(ELL_SHIFTS):
            ell = linalg.generic_weights(table.n, shift)
            try:
                eig = linalg.generic_eigen(Ms, ell, norm, b)
            except linalg.EigenCollisionError as exc:
                last = str(exc)
                continue
            approx = [tuple(eig.D[j][i] for j in range(table.n)) for i in range(r)]
            try:
                points = snap(approx, b)
            except SnapError as exc:
                last = f"snap failed: {exc}"
                break
            if len(set(points)) != r:
                last = "snapped points are not distinct"
                break
            Wx = _exact_rows(table, points, gamma)
            try:
                coeffs = linalg.solve(linalg.transpose(Wx), h)
            except linalg.SingularMatrixError:
                last = "exact eigenvector matrix is singular"
                break
            if _verify_table(table, points, coeffs):
                return SupportResult(points, coeffs, gamma, b, shift, eig.residual)
            last = "exact verification failed"
            break
        log.debug("support recovery at %d bits: %s", b, last)
        b *= 2
    raise RecoveryError(f"support recovery failed up to {max_bits} bits ({last})")


def support_and_coeffs(table: OmegaTable, snap=None, bits: int = 256, max_bits: int = MAX_BITS) -> SupportResult:
    """Recover ``(zeta_i, a_i)`` with ``Omega = sum a_i ev_{zeta_i}`` from a
    monomial table.  ``snap`` maps approximate points to exact ones."""
    if table.kind != MONOMIAL:
        raise ValueError("use invariant_support_and_coeffs for invariant tables")
    return _recover(table, snap, bits, max_bits)


def invariant_support_and_coeffs(table: OmegaTable, snap=None, bits: int = 256,
                                 max_bits: int = MAX_BITS) -> SupportResult:
    """Same for plain or skew tables; points are ``theta_i`` vectors
    ``(Theta_{omega_1}(zeta_i), ...)``.

    Coefficients come back as ``|W| a_i`` (plain) or
    ``Theta-hat_delta(zeta_i) a_i`` (skew).
    """
    if table.kind not in (PLAIN, SKEW):
        raise ValueError("table is not an invariant table")
    return _recover(table, snap, bits, max_bits)

"""Root systems presented in fundamental-weight coordinates.

Weights are integer tuples (coordinates on the fundamental weights), Weyl
group elements are integer matrices stored as tuples of row tuples.  The
inner product on weights is ``u^T S v`` with a rational Gram matrix ``S``.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

Weight = tuple
Matrix = tuple

DEFAULT_GROUP_CAP = 10**5


class RootSystemError(ValueError):
    pass


def mat_vec(A: Matrix, v: Sequence) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def int_det(A: Matrix) -> int:
    """Determinant of a small integer matrix (Bareiss)."""
    M = [list(r) for r in A]
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable root system data; hashed by identity so it can key caches."""

    name: str
    rank: int
    base: tuple            # base roots in weight coordinates
    S: tuple               # Gram matrix, Fractions
    D: int                 # lcm of the denominators of S
    generators: tuple      # simple reflections
    group: tuple           # all Weyl group elements, identity first
    dets: dict = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.group)

    @property
    def delta(self) -> Weight:
        return (1,) * self.rank

    @property
    def coroot_pairings(self) -> tuple:
        """``C[i][j] = <rho_j, rho_i^vee>``, the Cartan-type integers."""
        return tuple(tuple(self.base[j][i] for j in range(self.rank)) for i in range(self.rank))

    def fundamental(self, i: int) -> Weight:
        return tuple(int(i == j) for j in range(self.rank))

    def det(self, A: Matrix) -> int:
        return self.dets[A]

    def __repr__(self) -> str:
        return f"RootSystem({self.name}, |W|={self.order})"


def _reflection(rho: Sequence[int], S) -> Matrix:
    n = len(rho)
    Srho = [sum(S[i][j] * rho[i] for i in range(n)) for j in range(n)]  # rho^T S
    norm = sum(Srho[j] * rho[j] for j in range(n))
    if norm <= 0:
        raise RootSystemError("base root of non-positive norm")
    cols = []
    for j in range(n):
        c = 2 * Srho[j] / norm
        cols.append([Fraction(int(i == j)) - c * rho[i] for i in range(n)])
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            v = cols[j][i]
            if v.denominator != 1:
                raise RootSystemError(f"reflection for root {tuple(rho)} is not integral")
            row.append(int(v))
        rows.append(tuple(row))
    return tuple(rows)


def _closure(gens, n: int, cap: int) -> list:
    e = identity(n)
    seen = {e}
    out = [e]
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = mat_mul(s, g)
            if h not in seen:
                seen.add(h)
                out.append(h)
                queue.append(h)
                if len(out) > cap:
                    raise RootSystemError(f"Weyl group closure exceeds cap {cap}")
    return out


def _check_gram(S, n: int) -> None:
    if len(S) != n or any(len(r) != n for r in S):
        raise RootSystemError("Gram matrix has wrong shape")
    for i in range(n):
        for j in range(n):
            if S[i][j] != S[j][i]:
                raise RootSystemError("Gram matrix is not symmetric")
    # Sylvester: leading principal minors positive
    for k in range(1, n + 1):
        M = [[S[i][j] for j in range(k)] for i in range(k)]
        if _frac_det(M) <= 0:
            raise RootSystemError("Gram matrix is not positive definite")


def _frac_det(M) -> Fraction:
    M = [[Fraction(x) for x in r] for r in M]
    n = len(M)
    d = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            M[k], M[p] = M[p], M[k]
            d = -d
        d *= M[k][k]
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            for j in range(k, n):
                M[i][j] -= f * M[k][j]
    return d


def _build(name: str, base, S, cap: int) -> RootSystem:
    n = len(base)
    if n < 1:
        raise RootSystemError("rank must be at least 1")
    S = tuple(tuple(Fraction(x) for x in row) for row in S)
    _check_gram(S, n)
    base = tuple(tuple(int(x) for x in b) for b in base)
    if any(len(b) != n for b in base):
        raise RootSystemError("base roots must have length equal to the rank")
    gens = tuple(_reflection(b, S) for b in base)
    group = _closure(gens, n, cap)
    for A in group:
        AtSA = mat_mul(mat_mul(tuple(zip(*A)), S), A)
        if AtSA != S:
            raise RootSystemError("group element does not preserve the inner product")
    D = lcm(*(x.denominator for row in S for x in row))
    dets = {A: int_det(A) for A in group}
    return RootSystem(name, n, base, S, D, gens, tuple(group), dets)


def type_A(n: int, cap: int = DEFAULT_GROUP_CAP) -> RootSystem:
    if n < 1:
        raise RootSystemError("rank must be at least 1")
    S = [[Fraction(min(i, j)) - Fraction(i * j, n + 1) for j in range(1, n + 1)] for i in range(1, n + 1)]
    base = []
    for i in range(n):
        row = [0] * n
        row[i] = 2
        if i > 0:
            row[i - 1] = -1
        if i < n - 1:
            row[i + 1] = -1
        base.append(row)
    return _build(f"A{n}", base, S, cap)


def type_B2(cap: int = DEFAULT_GROUP_CAP) -> RootSystem:
    S = [[1, Fraction(1, 2)], [Fraction(1, 2), Fraction(1, 2)]]
    return _build("B2", [[2, -2], [-1, 2]], S, cap)


def make_root_system(spec, cap: int = DEFAULT_GROUP_CAP) -> RootSystem:
    """Build a root system from ``"A2"``-style names or a JSON-like dict.

    Accepted dicts: ``{"type": "A", "rank": n}``, ``{"type": "B", "rank": 2}``
    or a custom system ``{"rank": n, "base_roots": [...], "S_num": [...],
    "S_den": d}``.
    """
    if isinstance(spec, RootSystem):
        return spec
    if isinstance(spec, str):
        s = spec.strip().upper().replace("_", "")
        if len(s) < 2 or not s[1:].isdigit():
            raise RootSystemError(f"cannot parse system name {spec!r}")
        spec = {"type": s[0], "rank": int(s[1:])}
    if not isinstance(spec, dict):
        raise RootSystemError("root system spec must be a name or a dict")
    if "type" in spec:
        t, n = str(spec["type"]).upper(), int(spec["rank"])
        if t == "A":
            return type_A(n, cap)
        if t == "B" and n == 2:
            return type_B2(cap)
        raise RootSystemError(f"named system {t}{n} is not tabulated; pass a custom system")
    try:
        n = int(spec["rank"])
        den = int(spec.get("S_den", 1))
        S = [[Fraction(int(x), den) for x in row] for row in spec["S_num"]]
        base = spec["base_roots"]
    except (KeyError, TypeError) as exc:
        raise RootSystemError(f"malformed custom root system: {exc}") from None
    if len(base) != n:
        raise RootSystemError("number of base roots differs from rank")
    return _build(spec.get("name", f"custom{n}"), base, S, cap)


def load_root_system(path: str, cap: int = DEFAULT_GROUP_CAP) -> RootSystem:
    with open(path, encoding="utf-8") as fh:
        return make_root_system(json.load(fh), cap)


def inner(rs: RootSystem, u: Sequence, v: Sequence) -> Fraction:
    n = rs.rank
    if len(u) != n or len(v) != n:
        raise ValueError("dimension mismatch")
    return sum((Fraction(u[i]) * rs.S[i][j] * v[j] for i in range(n) for j in range(n)), Fraction(0))


def orbit(rs: RootSystem, w: Sequence) -> set:
    w = tuple(w)
    return {mat_vec(A, w) for A in rs.group}


def stabilizer_order(rs: RootSystem, w: Sequence) -> int:
    return rs.order // len(orbit(rs, w))


def is_dominant(w: Sequence) -> bool:
    return all(x >= 0 for x in w)


def is_strongly_dominant(w: Sequence) -> bool:
    return all(x >= 1 for x in w)


def dominant_rep(rs: RootSystem, w: Sequence) -> tuple:
    """Return ``(mu, A)`` with ``mu`` dominant and ``A w = mu``.

    Reflects at a negative coordinate until none is left; each step raises
    the weight in the root order so this terminates.
    """
    w = tuple(w)
    A = identity(rs.rank)
    while True:
        i = next((k for k, x in enumerate(w) if x < 0), None)
        if i is None:
            return w, A
        s = rs.generators[i]
        w = mat_vec(s, w)
        A = mat_mul(s, A)


def signed_dominant_rep(rs: RootSystem, w: Sequence):
    """``(mu, det A)`` with ``mu`` strongly dominant, or None on a wall."""
    mu, A = dominant_rep(rs, w)
    if any(x == 0 for x in mu):
        return None
    return mu, rs.det(A)


def strongly_dominant_basis(rs: RootSystem) -> list:
    d = rs.delta
    out = [d]
    for i in range(1, rs.rank):
        out.append(tuple(x + (1 if j == i else 0) for j, x in enumerate(d)))
    return out


def base_coordinates(rs: RootSystem, v: Sequence) -> tuple:
    """Coordinates of ``v`` on the base roots (exact rationals)."""
    n = rs.rank
    # columns of B are the base roots
    M = [[Fraction(rs.base[j][i]) for j in range(n)] + [Fraction(v[i])] for i in range(n)]
    for k in range(n):
        p = next(i for i in range(k, n) if M[i][k] != 0)
        M[k], M[p] = M[p], M[k]
        piv = M[k][k]
        M[k] = [x / piv for x in M[k]]
        for i in range(n):
            if i != k and M[i][k] != 0:
                f = M[i][k]
                M[i] = [a - f * b for a, b in zip(M[i], M[k])]
    return tuple(M[i][n] for i in range(n))


def precedes(rs: RootSystem, mu: Sequence, nu: Sequence) -> bool:
    """True when ``nu - mu`` is a nonnegative integer combination of base roots."""
    c = base_coordinates(rs, [b - a for a, b in zip(mu, nu)])
    return all(x.denominator == 1 and x >= 0 for x in c)


def order_key(rs: RootSystem, alpha: Sequence) -> tuple:
    """Sort key of the admissible order: <delta, a>, then <rho_2, a>, ..."""
    key = [inner(rs, rs.delta, alpha)]
    key.extend(inner(rs, rs.base[i], alpha) for i in range(1, rs.rank))
    return tuple(key)

"""Exact rational linear algebra and a high-precision simultaneous eigensolver.

Matrices are lists of rows of :class:`fractions.Fraction`.  The eigen step
is the only floating-point computation in the package; callers snap its
output back to exact data and re-verify.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import mpmath


class SingularMatrixError(ArithmeticError):
    pass


class EigenCollisionError(ArithmeticError):
    """Two eigenvalues of the generic combination are too close to separate."""


def to_fraction_matrix(A) -> list:
    return [[Fraction(x) for x in row] for row in A]


def _integer_rows(A) -> list:
    out = []
    for row in A:
        m = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * m) for x in row])
    return out


def det(A) -> Fraction:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in A:
        m = lcm(*(Fraction(x).denominator for x in row))
        scale /= m
        rows.append([int(Fraction(x) * m) for x in row])
    sign, prev = 1, 1
    M = rows
    for k in range(n - 1):
        if M[k][k] == 0:
            p = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            M[k], M[p] = M[p], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] * scale


def rank(A) -> int:
    M = _integer_rows(A)
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(r + 1, rows):
            if M[i][c]:
                a, b = M[r][c], M[i][c]
                M[i] = [a * x - b * y for x, y in zip(M[i], M[r])]
        r += 1
        if r == rows:
            break
    return r


def solve(A, B) -> list:
    """Solve ``A X = B`` exactly; ``B`` is a vector or a list of rows.

    Gauss-Jordan on Fractions with row pivoting.  Raises
    SingularMatrixError when ``A`` is singular.
    """
    n = len(A)
    vec = bool(B) and not isinstance(B[0], (list, tuple))
    Bm = [[Fraction(b)] for b in B] if vec else [[Fraction(x) for x in row] for row in B]
    M = [[Fraction(x) for x in A[i]] + Bm[i] for i in range(n)]
    width = len(M[0]) if M else 0
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k] != 0), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        M[k], M[p] = M[p], M[k]
        piv = M[k][k]
        if piv != 1:
            M[k] = [x / piv for x in M[k]]
        for i in range(n):
            if i != k and M[i][k] != 0:
                f = M[i][k]
                Mk = M[k]
                M[i] = [a - f * b for a, b in zip(M[i], Mk)]
    X = [row[n:width] for row in M]
    return [x[0] for x in X] if vec else X


def matmul(A, B) -> list:
    cols = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in A]


def transpose(A) -> list:
    return [list(r) for r in zip(*A)]


def principal_minor_nonsingular(H, idx: Sequence[int]) -> bool:
    sub = [[H[i][j] for j in idx] for i in idx]
    return det(sub) != 0


@dataclass
class EigenResult:
    """Common left eigenvectors ``W`` (one row per eigenvector, scaled so the
    first entry is ``norm_const``, or the largest entry is 1 when the first
    vanishes) and per-matrix eigenvalues ``D[j][i]``."""

    W: list
    D: list
    residual: object
    bits: int


def first_primes(k: int) -> list:
    out, c = [], 2
    while len(out) < k:
        if all(c % p for p in out if p * p <= c):
            out.append(c)
        c += 1
    return out


def generic_weights(n: int, shift: int = 0) -> list:
    """``l_j = p_{j+s} / p_{n+s}``: distinct rationals in (0, 1]."""
    ps = first_primes(n + shift)
    return [Fraction(ps[j + shift], ps[n - 1 + shift]) for j in range(n)]


def generic_eigen(Ms: Sequence, ell: Sequence, norm_const=1, bits: int = 256) -> EigenResult:
    """Simultaneous left eigenvectors of commuting matrices ``Ms``.

    Diagonalizes ``L = sum l_j M_j`` at ``bits`` of precision; its left
    eigenvectors are common to every ``M_j`` when the ``L`` spectrum is
    simple.  Raises EigenCollisionError when two eigenvalues are closer than
    ``2^(-bits/2)`` relative to the largest one.
    """
    r = len(Ms[0])
    with mpmath.workprec(bits):
        mats = [mpmath.matrix([[mpmath.mpf(x.numerator) / x.denominator for x in row] for row in M]) for M in Ms]
        L = mpmath.zeros(r, r)
        for l, M in zip(ell, mats):
            L += (mpmath.mpf(Fraction(l).numerator) / Fraction(l).denominator) * M
        vals, vecs = mpmath.eig(L.T)
        vals = [mpmath.re(v) if abs(mpmath.im(v)) <= abs(v) * mpmath.mpf(2) ** (-bits // 2) else v for v in vals]
        big = max(abs(v) for v in vals) or mpmath.mpf(1)
        tol = big * mpmath.mpf(2) ** (-(bits // 2))
        for i in range(r):
            for j in range(i + 1, r):
                if abs(vals[i] - vals[j]) <= tol:
                    raise EigenCollisionError(f"eigenvalues {i} and {j} collide at {bits} bits")
        if any(isinstance(v, mpmath.mpc) for v in vals):
            raise EigenCollisionError("complex spectrum; combination is not generic")
        W = []
        for i in range(r):
            v = [vecs[k, i] for k in range(r)]
            big_entry = max(v, key=abs)
            if abs(v[0]) > mpmath.mpf(2) ** (-(bits // 2)) * abs(big_entry):
                s = mpmath.mpf(norm_const) / v[0]
            else:
                # first entry is numerically zero: scale the largest entry to 1
                s = 1 / big_entry
            W.append([mpmath.re(x * s) for x in v])
        D, res = [], mpmath.mpf(0)
        Wm = mpmath.matrix(W)
        for M in mats:
            WM = Wm * M
            d = []
            for i in range(r):
                # Rayleigh-type quotient on the largest entry
                k = max(range(r), key=lambda c: abs(W[i][c]))
                d.append(WM[i, k] / W[i][k])
            scale = max(abs(WM[i, k]) for i in range(r) for k in range(r)) or mpmath.mpf(1)
            for i in range(r):
                for k in range(r):
                    res = max(res, abs(WM[i, k] - d[i] * W[i][k]) / scale)
            D.append(d)
    return EigenResult(W, D, res, bits)

"""Generalized Chebyshev polynomials of the first and second kind.

``T_alpha`` and ``U_alpha`` are polynomials in ``X_i = Theta_{omega_i}``
with ``T_alpha(Theta_{omega_1}, ...) = Theta_alpha`` and
``U_alpha(...) = Theta-hat_{delta+alpha} / Theta-hat_delta``.  They are
stored as :class:`LaurentPoly` objects whose exponents are nonnegative.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .orbitalg import (
    LaurentPoly,
    exact_divide,
    laurent_eval,
    orbit_decompose,
    orbit_poly,
    orbit_product_expand,
    skew_orbit_poly,
)
from .rootsys import RootSystem, order_key

DensePoly = LaurentPoly


def _norm(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else c


def _X(rs: RootSystem, i: int) -> LaurentPoly:
    return LaurentPoly.monomial(rs.fundamental(i))


@lru_cache(maxsize=None)
def chebyshev_T(rs: RootSystem, alpha: tuple) -> DensePoly:
    """First-kind polynomial, built by induction on the admissible order.

    With ``i`` the first index where ``alpha_i >= 1``,
    ``Theta_{omega_i} Theta_{alpha-omega_i}`` has leading term
    ``a_alpha Theta_alpha`` and every other term is strictly smaller.
    """
    alpha = tuple(alpha)
    if any(a < 0 for a in alpha) or len(alpha) != rs.rank:
        raise ValueError(f"{alpha} is not a dominant weight of {rs.name}")
    if not any(alpha):
        return LaurentPoly.constant(rs.order, rs.rank)
    i = next(k for k, a in enumerate(alpha) if a >= 1)
    rest = tuple(a - (k == i) for k, a in enumerate(alpha))
    combo = orbit_product_expand(rs, rs.fundamental(i), rest).terms
    lead = combo[alpha]
    acc = _X(rs, i) * chebyshev_T(rs, rest)
    for nu, c in combo.items():
        if nu != alpha:
            acc = acc - chebyshev_T(rs, nu) * c
    return LaurentPoly({e: _norm(Fraction(c) / lead) for e, c in acc.terms.items()}, rs.rank)


@lru_cache(maxsize=None)
def character_poly(rs: RootSystem, alpha: tuple) -> LaurentPoly:
    """``Theta-hat_{delta+alpha} / Theta-hat_delta`` as a Laurent polynomial."""
    top = skew_orbit_poly(rs, tuple(a + 1 for a in alpha))
    return exact_divide(top, skew_orbit_poly(rs, rs.delta))


@lru_cache(maxsize=None)
def chebyshev_U(rs: RootSystem, alpha: tuple) -> DensePoly:
    """Second-kind polynomial ``sum n_beta T_beta`` from the orbit expansion
    of the character."""
    alpha = tuple(alpha)
    if any(a < 0 for a in alpha) or len(alpha) != rs.rank:
        raise ValueError(f"{alpha} is not a dominant weight of {rs.name}")
    combo = orbit_decompose(rs, character_poly(rs, alpha))
    acc = LaurentPoly({}, rs.rank)
    for beta, c in combo.terms.items():
        acc = acc + chebyshev_T(rs, beta) * c
    return acc


def eval_dense(p: DensePoly, point: Sequence) -> Fraction:
    """Exact evaluation; zero coordinates are allowed since exponents are >= 0."""
    pt = [Fraction(x) for x in point]
    total = Fraction(0)
    for e, c in p.terms.items():
        term = Fraction(c)
        for x, k in zip(pt, e):
            if k:
                term *= x ** k
        total += term
    return total


def theta_point(rs: RootSystem, x: Sequence) -> tuple:
    """``(Theta_{omega_1}(x), ..., Theta_{omega_n}(x))``."""
    return tuple(laurent_eval(orbit_poly(rs, rs.fundamental(i)), x) for i in range(rs.rank))


def format_poly(rs: RootSystem, p: DensePoly, var: str = "X") -> str:
    """Canonical text, terms in decreasing admissible order.

    Example: ``1/4*X1*X2 - 3``.
    """
    if not p.terms:
        return "0"
    exps = sorted(p.terms, key=lambda e: (order_key(rs, e), e), reverse=True)
    out = []
    for idx, e in enumerate(exps):
        c = Fraction(p.terms[e])
        mono = "*".join(f"{var}{i + 1}^{k}" if k > 1 else f"{var}{i + 1}" for i, k in enumerate(e) if k)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = f"{mag}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def parse_poly(rs: RootSystem, text: str, var: str = "X") -> DensePoly:
    """Inverse of :func:`format_poly`."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    terms: dict = {}
    # split on +/- that start a term
    chunks, cur = [], ""
    for ch in s:
        if ch in "+-" and cur and not cur.endswith("^"):
            chunks.append(cur)
            cur = ch
        else:
            cur += ch
    chunks.append(cur)
    for ch in chunks:
        sign = -1 if ch.startswith("-") else 1
        ch = ch.lstrip("+-")
        coeff = Fraction(1)
        exp = [0] * rs.rank
        for factor in ch.split("*"):
            if factor.startswith(var):
                name, _, power = factor.partition("^")
                k = int(name[len(var):]) - 1
                if not 0 <= k < rs.rank:
                    raise ValueError(f"variable {name} out of range")
                exp[k] += int(power) if power else 1
            else:
                coeff *= Fraction(factor)
        e = tuple(exp)
        terms[e] = terms.get(e, 0) + sign * coeff
    return LaurentPoly({e: _norm(c) for e, c in terms.items()}, rs.rank)


def substitute_orbits(rs: RootSystem, p: DensePoly) -> LaurentPoly:
    """``p(Theta_{omega_1}, ..., Theta_{omega_n})`` as a Laurent polynomial."""
    gens = [orbit_poly(rs, rs.fundamental(i)) for i in range(rs.rank)]
    powers: dict = {}

    def power(i: int, k: int) -> LaurentPoly:
        if (i, k) not in powers:
            powers[i, k] = LaurentPoly.constant(1, rs.rank) if k == 0 else power(i, k - 1) * gens[i]
        return powers[i, k]

    out = LaurentPoly({}, rs.rank)
    for e, c in p.terms.items():
        term = LaurentPoly.constant(c, rs.rank)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        out = out + term
    return out

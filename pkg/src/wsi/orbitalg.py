"""Laurent polynomials, orbit polynomials and their product expansions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence

from .rootsys import (
    RootSystem,
    dominant_rep,
    mat_vec,
    order_key,
    signed_dominant_rep,
    stabilizer_order,
)

PLAIN = "plain"
SKEW = "skew"


class LaurentPoly:
    """Sparse Laurent polynomial: a dict from integer exponent tuples to
    exact coefficients.  Zero coefficients are never stored."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms=None, nvars: int | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            if c != 0:
                clean[tuple(e)] = c
        if nvars is None:
            if not clean:
                raise ValueError("nvars needed for the zero polynomial")
            nvars = len(next(iter(clean)))
        self.terms = clean
        self.nvars = nvars

    @classmethod
    def constant(cls, c, nvars: int) -> "LaurentPoly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> "LaurentPoly":
        return cls({tuple(exp): c}, len(exp))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.nvars)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({e: c * other for e, c in self.terms.items()}, self.nvars)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, self.nvars)

    __rmul__ = __mul__

    def act(self, A) -> "LaurentPoly":
        """Substitute ``x^a -> x^{A a}``."""
        return LaurentPoly({mat_vec(A, e): c for e, c in self.terms.items()}, self.nvars)

    def __call__(self, point: Sequence) -> Fraction:
        return laurent_eval(self, point)

    def support(self) -> list:
        return sorted(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for idx, e in enumerate(sorted(self.terms, reverse=True)):
            c = self.terms[e]
            mono = "*".join(f"x{i + 1}^{k}" if k != 1 else f"x{i + 1}" for i, k in enumerate(e) if k)
            mag = abs(c)
            body = (mono if mag == 1 else f"{mag}*{mono}") if mono else f"{mag}"
            sign = ("-" if c < 0 else "") if idx == 0 else (" - " if c < 0 else " + ")
            out.append(sign + body)
        return "".join(out)


def laurent_eval(p: LaurentPoly, point: Sequence) -> Fraction:
    """Exact evaluation at a point of nonzero rationals."""
    pt = [Fraction(x) for x in point]
    if any(x == 0 for x in pt):
        raise ZeroDivisionError("Laurent polynomial evaluated at a zero coordinate")
    total = Fraction(0)
    for e, c in p.terms.items():
        total += c * prod((x ** k for x, k in zip(pt, e)), start=Fraction(1))
    return total


def exact_divide(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Exact Laurent division ``p / d``; raises ValueError if inexact.

    Uses lex order on exponents, which is a group order on Z^n so leading
    terms multiply.  Quotient exponents are confined to the box allowed by
    the Newton polytopes, which bounds the loop.
    """
    if not d.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    n = p.nvars
    if not p.terms:
        return LaurentPoly({}, n)
    lead_d = max(d.terms)
    cd = d.terms[lead_d]
    lo = [min(e[k] for e in p.terms) - min(e[k] for e in d.terms) for k in range(n)]
    hi = [max(e[k] for e in p.terms) - max(e[k] for e in d.terms) for k in range(n)]
    rem = dict(p.terms)
    quot = {}
    while rem:
        lead = max(rem)
        q = tuple(a - b for a, b in zip(lead, lead_d))
        if any(not (lo[k] <= q[k] <= hi[k]) for k in range(n)):
            raise ValueError("Laurent division is not exact")
        c = Fraction(rem[lead]) / cd
        quot[q] = c
        for e, v in d.terms.items():
            t = tuple(a + b for a, b in zip(q, e))
            r = rem.get(t, 0) - c * v
            if r == 0:
                rem.pop(t, None)
            else:
                rem[t] = r
    return LaurentPoly({e: (int(c) if c.denominator == 1 else c) for e, c in quot.items()}, n)


@lru_cache(maxsize=None)
def orbit_poly(rs: RootSystem, alpha: tuple) -> LaurentPoly:
    """``Theta_alpha = sum over the group of x^{B alpha}``."""
    out: dict = {}
    for B in rs.group:
        e = mat_vec(B, alpha)
        out[e] = out.get(e, 0) + 1
    return LaurentPoly(out, rs.rank)


@lru_cache(maxsize=None)
def skew_orbit_poly(rs: RootSystem, alpha: tuple) -> LaurentPoly:
    """``Theta-hat_alpha = sum of det(B) x^{B alpha}``."""
    out: dict = {}
    for B in rs.group:
        e = mat_vec(B, alpha)
        out[e] = out.get(e, 0) + rs.det(B)
    return LaurentPoly(out, rs.rank)


@dataclass
class OrbitCombo:
    """Linear combination of orbit polynomials keyed by (strongly) dominant weights."""

    kind: str
    terms: dict = field(default_factory=dict)

    def support(self) -> list:
        return sorted(self.terms)

    def to_laurent(self, rs: RootSystem) -> LaurentPoly:
        f = orbit_poly if self.kind == PLAIN else skew_orbit_poly
        out = LaurentPoly({}, rs.rank)
        for mu, c in self.terms.items():
            out = out + f(rs, mu) * c
        return out


def _fold(rs: RootSystem, weights: Iterable, kind: str) -> dict:
    out: dict = {}
    for w in weights:
        if kind == PLAIN:
            mu, _ = dominant_rep(rs, w)
            out[mu] = out.get(mu, 0) + 1
        else:
            r = signed_dominant_rep(rs, w)
            if r is None:
                continue
            mu, sgn = r
            out[mu] = out.get(mu, 0) + sgn
    return {k: v for k, v in out.items() if v != 0}


@lru_cache(maxsize=None)
def _product(rs: RootSystem, alpha: tuple, beta: tuple, kind: str) -> tuple:
    ws = (tuple(a + b for a, b in zip(alpha, mat_vec(B, beta))) for B in rs.group)
    return tuple(sorted(_fold(rs, ws, kind).items()))


def orbit_product_expand(rs: RootSystem, alpha: Sequence, beta: Sequence, kind: str = PLAIN) -> OrbitCombo:
    """Expand ``Theta_alpha Theta_beta`` (plain) or ``Theta-hat_alpha Theta_beta`` (skew).

    Both products equal a sum over the group of orbit polynomials at
    ``alpha + B beta``, folded back to dominant representatives.
    """
    if kind not in (PLAIN, SKEW):
        raise ValueError(f"unknown kind {kind!r}")
    return OrbitCombo(kind, dict(_product(rs, tuple(alpha), tuple(beta), kind)))


@lru_cache(maxsize=None)
def _triple(rs: RootSystem, alpha: tuple, beta: tuple, gamma: tuple, kind: str) -> tuple:
    out: dict = {}
    first = alpha if kind == PLAIN else tuple(a + 1 for a in alpha)
    for nu, c in _product(rs, first, beta, kind):
        for mu, d in _product(rs, nu, gamma, kind):
            out[mu] = out.get(mu, 0) + c * d
    return tuple(sorted((k, v) for k, v in out.items() if v != 0))


def triple_expand(rs: RootSystem, alpha: Sequence, beta: Sequence, gamma: Sequence, kind: str = PLAIN) -> OrbitCombo:
    """``Theta_a Theta_b Theta_c`` (plain) or ``Theta-hat_{delta+a} Theta_b Theta_c`` (skew)."""
    return OrbitCombo(kind, dict(_triple(rs, tuple(alpha), tuple(beta), tuple(gamma), kind)))


def hypercross(n: int, r: int) -> list:
    """All ``alpha`` in N^n with ``prod(alpha_i + 1) <= r``, sorted."""
    if n < 1 or r < 1:
        raise ValueError("hypercross needs n >= 1 and r >= 1")
    out = []

    def rec(prefix: list, budget: int):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        k = 0
        while k + 1 <= budget:
            rec(prefix + [k], budget // (k + 1))
            k += 1

    rec([], r)
    return sorted(out)


def minkowski_sum(*sets: Iterable) -> list:
    acc = {()}
    first = True
    for s in sets:
        s = list(s)
        if first:
            acc = set(map(tuple, s))
            first = False
        else:
            acc = {tuple(a + b for a, b in zip(x, y)) for x in acc for y in s}
    return sorted(acc)


def is_lower_set(points: Iterable) -> bool:
    pts = set(map(tuple, points))
    for p in pts:
        for i, x in enumerate(p):
            if x > 0 and p[:i] + (x - 1,) + p[i + 1:] not in pts:
                return False
    return True


def gamma_set(n: int) -> list:
    """``{0, omega_1, ..., omega_n}``."""
    out = [(0,) * n]
    out.extend(tuple(int(i == j) for j in range(n)) for i in range(n))
    return out


def wcross(rs: RootSystem, r: int, kind: str = PLAIN) -> list:
    """Union of the supports of the triple products over the hypercross.

    Plain indices are dominant weights; skew indices are strongly dominant.
    """
    H = hypercross(rs.rank, r)
    out = set()
    for a in H:
        for b in H:
            for g in gamma_set(rs.rank):
                out.update(triple_expand(rs, a, b, g, kind).terms)
    return sorted(out)


def sort_admissible(rs: RootSystem, weights: Iterable) -> list:
    return sorted(weights, key=lambda w: (order_key(rs, w), tuple(w)))


def orbit_decompose(rs: RootSystem, p: LaurentPoly) -> OrbitCombo:
    """Write an invariant Laurent polynomial as a combination of orbit sums.

    Each orbit contains exactly one dominant weight, so the coefficient of
    ``Theta_mu`` is the coefficient of ``x^mu`` over the stabilizer order.
    Raises ValueError when ``p`` is not invariant.
    """
    terms = {}
    for e, c in p.terms.items():
        if all(x >= 0 for x in e):
            v = Fraction(c) / stabilizer_order(rs, e)
            terms[e] = int(v) if v.denominator == 1 else v
    combo = OrbitCombo(PLAIN, terms)
    if combo.to_laurent(rs) != p:
        raise ValueError("polynomial is not invariant under the group")
    return combo

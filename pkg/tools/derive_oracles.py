"""Independent oracle for the frozen values in the test suite.

Uses sympy for Laurent-polynomial products and only the raw Weyl group
matrices from the package, so the product-expansion and Chebyshev code paths
are not involved.  Run ``python tools/derive_oracles.py`` and compare with the
constants in ``tests/frozen.py``.
"""
import itertools
import json
from fractions import Fraction

import sympy as sp

from wsi.rootsys import make_root_system


def orbit_expr(rs, alpha, xs, skew=False):
    tot = 0
    for B in rs.group:
        e = [sum(B[i][j] * alpha[j] for j in range(rs.rank)) for i in range(rs.rank)]
        sgn = rs.det(B) if skew else 1
        tot += sgn * sp.Mul(*[x ** k for x, k in zip(xs, e)])
    return sp.expand(tot)


def dominant_support(expr, xs, strict=False):
    poly = sp.Poly(sp.expand(expr * sp.Mul(*[x ** 200 for x in xs])), *xs)
    out = set()
    for mon, c in poly.terms():
        e = tuple(m - 200 for m in mon)
        if c != 0 and all(k >= (1 if strict else 0) for k in e):
            out.add(e)
    return out


def hyper(n, r):
    return [a for a in itertools.product(range(r), repeat=n)
            if __import__("math").prod(x + 1 for x in a) <= r]


def wcross_oracle(rs, r, skew=False):
    xs = sp.symbols(f"x1:{rs.rank + 1}")
    H = hyper(rs.rank, r)
    gam = [(0,) * rs.rank] + [tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank)]
    orb = {}

    def O(a, sk=False):
        if (a, sk) not in orb:
            orb[a, sk] = orbit_expr(rs, a, xs, sk)
        return orb[a, sk]

    out = set()
    for a in H:
        for b in H:
            for g in gam:
                first = O(tuple(x + 1 for x in a), True) if skew else O(a)
                out |= dominant_support(first * O(b) * O(g), xs, strict=skew)
    return sorted(out)


def minkowski(*sets):
    acc = {tuple([0] * len(sets[0][0]))}
    for s in sets:
        acc = {tuple(p + q for p, q in zip(x, y)) for x in acc for y in s}
    return acc


if __name__ == "__main__":
    res = {}
    B2 = make_root_system("B2")
    A2 = make_root_system("A2")
    w = wcross_oracle(B2, 6)
    H = hyper(2, 6)
    res["B2_wcross_diff_r6"] = sorted(set(w) - minkowski(H, H, hyper(2, 2)))
    for name, rs in (("A2", A2), ("B2", B2)):
        for r in (2, 4, 8):
            res[f"{name}_wcross_size_r{r}"] = len(wcross_oracle(rs, r))
        res[f"{name}_wcross_skew_r3"] = wcross_oracle(rs, 3, skew=True)
    # A_3 literal product coefficient oracle: Theta_{w1} * Theta_{w3}
    A3 = make_root_system("A3")
    xs = sp.symbols("x1:4")
    prod13 = sp.expand(orbit_expr(A3, (1, 0, 0), xs) * orbit_expr(A3, (0, 0, 1), xs))
    poly = sp.Poly(sp.expand(prod13 * xs[0] ** 9 * xs[1] ** 9 * xs[2] ** 9), *xs)
    coeffs = {}
    for mon, c in poly.terms():
        e = tuple(m - 9 for m in mon)
        if all(k >= 0 for k in e):
            coeffs[e] = int(c)
    res["A3_w1_w3_dominant_coeffs"] = {str(k): v for k, v in sorted(coeffs.items())}
    print(json.dumps(res, indent=1, default=list))

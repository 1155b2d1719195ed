"""Recover sparse polynomials from black-box evaluations.

For each basis a hidden sparse polynomial is wrapped in a counting black
box, recovered exactly and then certified against every collected value.

Run: python3 demos/03_round_trip.py
"""
from fractions import Fraction as F

from wsi import SparseRepresentation, interpolate, make_root_system, verify_interpolant
from wsi.cheb import format_poly

A2 = make_root_system("A2")

hidden = [
    SparseRepresentation("monomial", [(3, (2, 5)), (F(-7, 2), (-1, 4)), (1, (0, 0))]),
    SparseRepresentation("cheb1", [(2, (2, 1)), (5, (1, 3)), (F(-1, 3), (4, 0))], A2),
    SparseRepresentation("cheb2", [(F(1, 2), (0, 2)), (-4, (3, 3))], A2),
]

for spec in hidden:
    rep = interpolate(spec)
    print(f"[{spec.basis}]")
    print("  recovered:", [(str(c), w) for c, w in rep.result.canonical()])
    print(f"  exact match: {rep.result.same_as(spec)}, evaluations: {rep.evaluations}, "
          f"Gamma: {rep.gamma}, precision: {rep.bits} bits, {rep.wall_ms:.0f} ms")
    print("  certified:", verify_interpolant(rep.result, rep.observations, rep.xi))

# the same cheb1 polynomial written out in X1 = Theta_{omega_1}, X2 = Theta_{omega_2}
from wsi.cheb import chebyshev_T  # noqa: E402

total = None
for c, w in hidden[1].terms:
    term = chebyshev_T(A2, w) * c
    total = term if total is None else total + term
print()
print("cheb1 example expanded:", format_poly(A2, total))

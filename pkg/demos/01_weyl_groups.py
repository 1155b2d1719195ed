"""Weyl groups, orbit polynomials and their products.

Run: python3 demos/01_weyl_groups.py
"""
from wsi import make_root_system, orbit_poly, skew_orbit_poly
from wsi.orbitalg import SKEW, orbit_product_expand
from wsi.rootsys import orbit, stabilizer_order

for name in ("A1", "A2", "B2", "A3"):
    rs = make_root_system(name)
    print(f"{name}: |W| = {rs.order}, D = {rs.D}, S = {[[str(x) for x in row] for row in rs.S]}")

A2 = make_root_system("A2")
print()
print("orbit of (1,0) in A2:", sorted(orbit(A2, (1, 0))), "stabilizer", stabilizer_order(A2, (1, 0)))
print("Theta_(1,0)      =", orbit_poly(A2, (1, 0)))
print("Theta-hat_(1,1)  =", skew_orbit_poly(A2, (1, 1)))

# products of orbit polynomials stay in the span of orbit polynomials
print()
for a, b in [((1, 0), (1, 0)), ((1, 1), (0, 1)), ((2, 0), (1, 0))]:
    combo = orbit_product_expand(A2, a, b)
    print(f"Theta_{a} Theta_{b} =", " + ".join(f"{c} Theta_{nu}" for nu, c in sorted(combo.terms.items())))

combo = orbit_product_expand(A2, (2, 1), (1, 0), kind=SKEW)
print("Theta-hat_(2, 1) Theta_(1, 0) =",
      " + ".join(f"{c} Theta-hat_{nu}" for nu, c in sorted(combo.terms.items())))

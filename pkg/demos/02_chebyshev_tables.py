"""Generalized Chebyshev polynomials of both kinds for A2 and B2.

T_alpha(X1, X2) expresses Theta_alpha in terms of X_i = Theta_{omega_i};
U_alpha does the same for the character Theta-hat_{delta+alpha} / Theta-hat_delta.

Run: python3 demos/02_chebyshev_tables.py
"""
from wsi import chebyshev_T, chebyshev_U, format_poly, make_root_system
from wsi.cheb import eval_dense, theta_point

for name in ("A2", "B2"):
    rs = make_root_system(name)
    print(f"== {name}")
    for deg in range(4):
        for a in range(deg, -1, -1):
            alpha = (a, deg - a)
            print(f"  T{alpha} = {format_poly(rs, chebyshev_T(rs, alpha))}")
            print(f"  U{alpha} = {format_poly(rs, chebyshev_U(rs, alpha))}")
    # at the identity point U_alpha gives the dimension of the irreducible representation
    one = theta_point(rs, (1, 1))
    dims = {alpha: eval_dense(chebyshev_U(rs, alpha), one) for alpha in [(1, 0), (0, 1), (1, 1), (2, 0)]}
    print(f"  dimensions: {dims}")

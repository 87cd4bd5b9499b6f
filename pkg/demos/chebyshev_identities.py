"""Chebyshev polynomials and the integer coefficients nu_r.

These supply the exact combinatorics linking powers of w to powers of
y_1...y_n.  Run:  python3 demos/chebyshev_identities.py
"""

from twisted_hecke import chebyshev_T, identity_che1, identity_che2, identity_rho, nu

print("Chebyshev polynomials of the first kind:")
for m in range(6):
    print(f"  T_{m} = {chebyshev_T(m)}")

print()
print("nu_r = (-1)^r (ell/(ell-r)) C(ell-r, r) is always an integer:")
for ell in (2, 3, 4, 5, 6):
    values = ", ".join(str(nu(ell, r)) for r in range(ell // 2 + 1))
    print(f"  ell={ell}: nu = ({values})")

print()
print("The three exact identities, for ell = 1..16:")
ok1 = all(identity_che1(ell) for ell in range(1, 17))
ok2 = all(identity_che2(ell) for ell in range(1, 17))
ok3 = all(identity_rho(ell) for ell in range(1, 17))
print(f"  2 T_ell(xi/2) == sum_r nu_r xi^(ell-2r)                    : {ok1}")
print(f"  2 T_ell((xi + 1/xi)/2) == xi^ell + xi^-ell                 : {ok2}")
print(f"  xi^ell + s^ell xi^-ell == sum_r nu_r s^r (xi + s/xi)^(ell-2r): {ok3}")

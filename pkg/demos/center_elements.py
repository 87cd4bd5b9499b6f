"""The central elements x_i^ell and w, and noncentrality witnesses.

Run:  python3 demos/center_elements.py
"""

from twisted_hecke import Cyclotomic, HeckeAlgebra

for n, ell in [(3, 2), (4, 3)]:
    H = HeckeAlgebra(n, ell)
    print(f"--- n = {n}, ell = {ell} ---")
    w = H.build_w()
    print(f"w = {w}")
    ok, _ = H.is_central(w)
    print(f"is_central(w) = {ok}")
    for i in (1, n):
        ok, _ = H.is_central(H.x_pow_ell(i))
        print(f"is_central(x{i}^{ell}) = {ok}")
    ok, witness = H.is_central(H.gen_x(1))
    print(f"is_central(x1) = {ok}, witness commutator = {witness}")
    print()

print("At t = 0 the deformation disappears and w collapses to x_1...x_n:")
zeros = tuple(Cyclotomic.zero(2) for _ in range(3))
H0 = HeckeAlgebra(3, 2, zeros)
print(f"  w|_(t=0) = {H0.build_w()}")

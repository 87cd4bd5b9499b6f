"""The embedding theta into the Laurent crossed product, and its closed forms.

The Laurent algebra multiplies without any rewriting, so theta doubles as an
independent oracle for the PBW engine.  Run:  python3 demos/theta_embedding.py
"""

import random

from twisted_hecke import HeckeAlgebra, LaurentAlgebra
from twisted_hecke.suite import random_hecke_elem

n, ell = 3, 3
H = HeckeAlgebra(n, ell)
L = LaurentAlgebra(n, ell)

print(f"Generator images (n={n}, ell={ell}):")
for i in range(1, n + 1):
    print(f"  theta(x{i}) = {L.theta_x(i)}")

print()
print("ell-th powers collapse to two-term closed forms:")
for i in range(1, n + 1):
    img = L.theta(H.x_pow_ell(i))
    closed = L.theta_xi_ell_closed(i)
    print(f"  theta(x{i}^{ell}) = {img}")
    assert img == closed

print()
print("... and so does the image of w:")
img_w = L.theta(H.build_w())
print(f"  theta(w) = {img_w}")
assert img_w == L.theta_w_closed()

print()
print("theta is a homomorphism: theta(a*b) == theta(a)*theta(b) on random pairs:")
rng = random.Random(0)
for k in range(3):
    a = random_hecke_elem(H, rng)
    b = random_hecke_elem(H, rng)
    agree = L.theta(H.mul(a, b)) == L.lmul(L.theta(a), L.theta(b))
    print(f"  pair {k}: {agree}")

print()
print("Triangularity (the leading term of theta(x^p g) is y^p g):")
print(f"  injectivity_spotcheck(3) = {L.injectivity_spotcheck(3)}")

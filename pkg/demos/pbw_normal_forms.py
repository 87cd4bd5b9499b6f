"""Normal-form multiplication in the twisted graded Hecke algebra.

Every product is rewritten into the PBW basis x_1^(p_1)...x_n^(p_n) g with
coefficients in Q(zeta)[t_1..t_n].  Run:  python3 demos/pbw_normal_forms.py
"""

from twisted_hecke import HeckeAlgebra, eval_hecke

H = HeckeAlgebra(3, 2)
x1, x2, x3 = H.gen_x(1), H.gen_x(2), H.gen_x(3)
g1 = H.gen_g(1)

print("Defining relations, rediscovered by the rewriting engine (n=3, ell=2):")
print(f"  x2*x1       = {H.mul(x2, x1)}")
print(f"  x3*x1       = {H.mul(x3, x1)}")
print(f"  [x1, x2]    = {H.commutator(x1, x2)}")
print(f"  g1*x1       = {H.mul(g1, x1)}        (the action twists by zeta = -1)")

print()
print("Deeper rewrites pick up geometric factors in zeta:")
H4 = HeckeAlgebra(4, 3)
lhs = H4.mul(H4.gen_x(2), H4.monomial((2, 0, 0, 0)))
print(f"  n=4, ell=3:  x2*x1^2 = {lhs}")

print()
print("The same computations through the expression language:")
for text in ("x2*x1", "x1*x2 - x2*x1", "(x1 + t1*g1)^2"):
    print(f"  {text:22} -> {eval_hecke(text, H)}")

print()
print("Products of high powers stay exact; for example x3^4 * x1^4 at n=3, ell=2:")
prod = H.mul(H.monomial((0, 0, 4)), H.monomial((4, 0, 0)))
print(f"  {prod}")

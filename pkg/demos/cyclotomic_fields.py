"""A tour of the exact cyclotomic arithmetic underneath everything else.

Run:  python3 demos/cyclotomic_fields.py
"""

from fractions import Fraction

from twisted_hecke import Cyclotomic, cyclotomic_polynomial, zeta_power


def poly_str(coeffs):
    bits = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k == 0:
            bits.append(str(c))
        elif k == 1:
            bits.append(f"{c}*z" if c != 1 else "z")
        else:
            bits.append(f"{c}*z^{k}" if c != 1 else f"z^{k}")
    return " + ".join(bits).replace("+ -", "- ")


print("Cyclotomic polynomials (ascending coefficients):")
for ell in (1, 2, 3, 4, 6, 12):
    print(f"  Phi_{ell:<2} = {poly_str(cyclotomic_polynomial(ell))}")

print()
print("zeta is realized as the residue of z, so zeta^ell = 1 exactly:")
for ell in (2, 3, 5):
    powers = " , ".join(str(zeta_power(ell, k)) for k in range(ell + 1))
    print(f"  ell={ell}:  1 -> {powers}")

print()
print("Field inverses come from the extended Euclidean algorithm:")
for ell in (2, 3, 4):
    a = zeta_power(ell, 1) - 1
    print(f"  ell={ell}:  1/(zeta - 1) = {a.inv()}   check: (zeta-1)*inv = {a * a.inv()}")

print()
print("Sums over a full period vanish for prime ell:")
for ell in (3, 5, 7):
    total = Cyclotomic.zero(ell)
    for k in range(ell):
        total = total + zeta_power(ell, k)
    print(f"  ell={ell}:  1 + zeta + ... + zeta^{ell - 1} = {total}")

print()
print("All arithmetic is exact rational, e.g. (1/3 + zeta/2)^3 at ell = 6:")
x = Cyclotomic(6, [Fraction(1, 3), Fraction(1, 2)])
print(f"  x   = {x}")
print(f"  x^3 = {x**3}")

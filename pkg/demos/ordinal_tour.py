"""A walk through ordinal arithmetic in Veblen normal form.

Run:  python demos/ordinal_tour.py
"""

from ordlab import (
    EPSILON0,
    OMEGA,
    add,
    compare,
    enumerate_terms,
    mul_nat,
    next_phi_value,
    parse_ordinal,
    phi_plus_iter,
    veblen,
)

print("== parsing and normalization ==")
for text in ("w^(w+1)", "1+w", "phi(0, phi(1,0))", "w+w+1"):
    print(f"  {text!r:24} -> {parse_ordinal(text)}")

print()
print("== absorption in ordinal addition ==")
print("  1 + w  =", add(1, OMEGA))
print("  w + 1  =", add(OMEGA, 1))
print("  w^w + w + w^2  =", add(parse_ordinal("w^w+w"), parse_ordinal("w^2")))

print()
print("== finite multiples ==")
print("  e0 * 2      =", mul_nat(EPSILON0, 2))
print("  (w+1) * 2   =", mul_nat(add(OMEGA, 1), 2), "   (the inner w+ is absorbed)")

print()
print("== the Veblen hierarchy ==")
print("  phi_0(1)    =", veblen(0, 1), "          (phi_0 is the w-power map)")
print("  phi_1(0)    =", veblen(1, 0), "         (least fixed point of w^x)")
print("  phi_0(e0)   =", veblen(0, EPSILON0), "         (e0 is a fixed point: w^e0 = e0)")
print("  phi_2(0)    =", veblen(2, 0))

print()
print("== stepping through phi-values ==")
print("  least w-power above w+1   :", next_phi_value(0, parse_ordinal("w+1")))
print("  least epsilon above e0    :", next_phi_value(1, EPSILON0))
print("  2nd w-power above w       :", phi_plus_iter(0, OMEGA, 1))
print("  w-th epsilon number       :", phi_plus_iter(1, 0, OMEGA))

print()
print("== every canonical term with at most 3 atoms ==")
print(" ", ", ".join(str(t) for t in enumerate_terms(3)))

print()
print("compare(w^w+1, e0) =", compare(parse_ordinal("w^w+1"), EPSILON0), "(-1 means less)")

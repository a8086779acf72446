"""Worms, iterated reflection, and proof-theoretic ordinals, side by side.

Run:  python demos/worms_and_reflection.py
"""

from ordlab import (
    PA,
    Reflect,
    ONE,
    catalog_lookup,
    format_theory,
    omega_model_dilator,
    parse_ordinal,
    parse_theory,
    pi_ordinal,
    progression_stage,
    reduce_to_level,
    theory_of_worm,
    worm_of_ordinal,
    worm_ordinal,
    parse_worm,
)

print("== worms and their ordinals ==")
for text in ("T", "0", "0 0 0", "1", "1 1", "2", "1 0 1", "2 0 1"):
    w = parse_worm(text)
    print(f"  o({text!r:8}) = {worm_ordinal(w)}")

print()
print("== canonical worms for ordinals below e0 ==")
for text in ("0", "5", "w", "w+1", "w*2", "w^w", "w^(w+1)+w^2+3"):
    x = parse_ordinal(text)
    print(f"  {text:16} <- worm {worm_of_ordinal(x)}")

print()
print("== a worm is a tower of single reflection steps over EA+ ==")
w = parse_worm("1 1")
print("  worm 1 1     ->", format_theory(theory_of_worm(w)))
print("  its Pi_1 ordinal:", pi_ordinal(theory_of_worm(w), 1), " (= o(1 1))")

print()
print("== Schmerl-style level drops ==")
t = parse_theory("(rfn 2 1 EA+)")
print("  one step of Pi_2 reflection reduces at level 1 to:", format_theory(reduce_to_level(t, 1)))
t = parse_theory("(rfn 3 1 EA+)")
print("  one step of Pi_3 reflection reduces at level 1 to:", format_theory(reduce_to_level(t, 1)))
t = parse_theory("(con 2 (rfn 2 w EA+))")
print("  a mixed tower:", format_theory(t), "->", format_theory(reduce_to_level(t, 1)))

print()
print("== the classical calibration points ==")
print("  |PA|_Pi1          =", pi_ordinal(PA, 1))
print("  |PA+Con(PA)|_Pi1  =", pi_ordinal(catalog_lookup("PA+Con(PA)"), 1))
print("  |PA+Con^2(PA)|_Pi1 =", pi_ordinal(Reflect(1, parse_ordinal("2"), PA), 1))

print()
print("== progression stages compose ==")
stage = progression_stage(catalog_lookup("EA+"), parse_ordinal("w"))
print("  stage w over EA+        :", format_theory(stage))
print("  then stage 1 more       :", format_theory(progression_stage(stage, ONE)))

print()
print("== the omega-model reflection dilator ==")
for a, b in (("0", "0"), ("0", "e0"), ("1", "0"), ("w", "0")):
    value = omega_model_dilator(parse_ordinal(a), parse_ordinal(b))
    print(f"  dilator({a}, {b}) = {value}")

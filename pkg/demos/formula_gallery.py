"""The explicit formula constructions, printed in both output modes.

Run:  python demos/formula_gallery.py
"""

from ordlab import (
    TOP,
    Hole,
    con_star_equation,
    pretty,
    rosser_combination,
    slowcon,
    sv,
    sv_star,
)

phi, psi, theta = Hole("φ"), Hole("ψ"), Hole("θ")

gallery = [
    ("slow consistency of phi", slowcon(phi)),
    ("slow consistency of PA", slowcon(TOP)),
    ("Shavrukov-Visser operator", sv(phi)),
    ("Shavrukov-Visser density function", sv_star(phi, psi)),
    ("Rosser-style interpolant", rosser_combination(phi, psi, theta)),
]

for title, formula in gallery:
    print(f"== {title} ==")
    print("  utf-8:", pretty(formula))
    print("  ascii:", pretty(formula, ascii_mode=True))
    print()

print("== iterated-consistency fixed point (documentation artifact) ==")
print("  utf-8:", con_star_equation("α", "T"))
print("  ascii:", con_star_equation("α", "T", ascii_mode=True))

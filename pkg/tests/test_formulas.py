import random

import pytest

from ordlab.errors import CaptureError, RangeError
from ordlab.formulas import (
    TOP,
    And,
    ConAtom,
    Defined,
    Equals,
    ForAll,
    Hole,
    Implies,
    Not,
    Num,
    Or,
    TheoryRef,
    Var,
    con_star_equation,
    fill_hole,
    free_vars,
    pretty,
    rosser_combination,
    slowcon,
    sv,
    sv_star,
)

PHI, PSI, THETA = Hole("φ"), Hole("ψ"), Hole("θ")

SV_BODY = "∀x(Con(ISigma_x + φ) → Con²(ISigma_x + φ))"

GOLDENS = {
    "slowcon": "∀x(F_e0(x)↓ → Con(ISigma_x + φ))",
    "slowcon_top": "∀x(F_e0(x)↓ → Con(ISigma_x))",
    "sv": f"φ ∧ {SV_BODY}",
    "sv_star": (
        "φ ∨ (¬φ ∧ ψ ∧ ∀x(Con(ISigma_x + (¬φ ∧ ψ)) → "
        "Con²(ISigma_x + (¬φ ∧ ψ))) ∧ ψ)"
    ),
    "rosser": "φ ∨ (ψ ∧ θ)",
    "constar": "PA ⊢ Con★(α,T) ↔ ∀β ≺ α Con(T+⌜Con★(β,T)⌝)",
}

GOLDENS_ASCII = {
    "slowcon": "forall x (F_e0(x)| -> Con(ISigma_x + phi))",
    "slowcon_top": "forall x (F_e0(x)| -> Con(ISigma_x))",
    "sv": "phi and forall x (Con(ISigma_x + phi) -> Con^2(ISigma_x + phi))",
    "sv_star": (
        "phi or (not phi and psi and forall x (Con(ISigma_x + (not phi and psi)) -> "
        "Con^2(ISigma_x + (not phi and psi))) and psi)"
    ),
    "rosser": "phi or (psi and theta)",
    "constar": "PA |- Con*(alpha,T) <-> forall beta < alpha Con(T+[Con*(beta,T)])",
}


def _build(name):
    if name == "slowcon":
        return slowcon(PHI)
    if name == "slowcon_top":
        return slowcon(TOP)
    if name == "sv":
        return sv(PHI)
    if name == "sv_star":
        return sv_star(PHI, PSI)
    return rosser_combination(PHI, PSI, THETA)


@pytest.mark.parametrize("name", ["slowcon", "slowcon_top", "sv", "sv_star", "rosser"])
def test_goldens_utf8(name):
    assert pretty(_build(name)) == GOLDENS[name]


@pytest.mark.parametrize("name", ["slowcon", "slowcon_top", "sv", "sv_star", "rosser"])
def test_goldens_ascii(name):
    assert pretty(_build(name), ascii_mode=True) == GOLDENS_ASCII[name]


def test_constar_goldens():
    assert con_star_equation("α", "T") == GOLDENS["constar"]
    assert con_star_equation("α", "T", ascii_mode=True) == GOLDENS_ASCII["constar"]
    assert con_star_equation("a", "PA") == (
        "PA ⊢ Con★(a,PA) ↔ ∀β ≺ a Con(PA+⌜Con★(β,PA)⌝)"
    )


def test_constar_avoids_bound_name_collision():
    text = con_star_equation("β", "T")
    assert "∀γ" in text
    with pytest.raises(RangeError):
        con_star_equation("", "T")


# --- shapes ---------------------------------------------------------------------

def test_slowcon_shape():
    f = slowcon(PHI)
    assert isinstance(f, ForAll) and f.var == "x"
    assert isinstance(f.body, Implies)
    assert f.body.left == Defined("F_e0", Var("x"))
    con = f.body.right
    assert isinstance(con, ConAtom) and con.power == 1
    assert con.theory == TheoryRef("ISigma", index=Var("x"), added=PHI)


def test_slowcon_top_omits_added_component():
    con = slowcon(TOP).body.right
    assert con.theory.added is None


def test_sv_shape():
    f = sv(PHI)
    assert isinstance(f, And) and f.left is PHI
    inner = f.right.body
    assert isinstance(inner.left, ConAtom) and inner.left.power == 1
    assert isinstance(inner.right, ConAtom) and inner.right.power == 2


def test_sv_star_shape():
    f = sv_star(PHI, PSI)
    assert isinstance(f, Or) and f.left is PHI
    assert isinstance(f.right, And) and f.right.right is PSI
    assert f.right.left.left == And(Not(PHI), PSI)  # sv receives ¬φ∧ψ
    assert f.right.left == sv(And(Not(PHI), PSI))


def test_rosser_keeps_shape_unsimplified():
    f = rosser_combination(PHI, PSI, TOP)
    assert f == Or(PHI, And(PSI, TOP))


def test_constructions_closed_except_holes():
    for f in (slowcon(PHI), sv(PHI), sv_star(PHI, PSI), slowcon(TOP)):
        assert free_vars(f) == frozenset()


# --- pretty -----------------------------------------------------------------------

def test_precedence_rendering():
    a, b, c = Hole("a"), Hole("b"), Hole("c")
    assert pretty(And(a, Or(b, c))) == "a ∧ (b ∨ c)"
    assert pretty(Or(a, And(b, c))) == "a ∨ (b ∧ c)"
    assert pretty(Implies(a, Implies(b, c))) == "a → b → c"
    assert pretty(Implies(Implies(a, b), c)) == "(a → b) → c"
    assert pretty(And(And(a, b), c)) == "a ∧ b ∧ c"
    assert pretty(And(a, And(b, c))) == "a ∧ (b ∧ c)"
    assert pretty(Not(And(a, b))) == "¬(a ∧ b)"
    assert pretty(Not(a)) == "¬a"


def test_power_rendering():
    ref = TheoryRef("PA")
    assert pretty(ConAtom(ref)) == "Con(PA)"
    assert pretty(ConAtom(ref, power=2)) == "Con²(PA)"
    assert pretty(ConAtom(ref, power=12)) == "Con¹²(PA)"
    assert pretty(ConAtom(ref, power=3), ascii_mode=True) == "Con^3(PA)"
    with pytest.raises(RangeError):
        ConAtom(ref, power=0)


def test_determinism():
    for _ in range(3):
        assert pretty(sv_star(PHI, PSI)) == GOLDENS["sv_star"]
        assert con_star_equation("α", "T") == GOLDENS["constar"]


# --- substitution ---------------------------------------------------------------------

def _random_formula(rng, depth):
    if depth == 0 or rng.random() < 0.4:
        return rng.choice([
            Hole("φ"), Hole("ψ"),
            Equals(Var("y"), Num(rng.randint(0, 9))),
            ConAtom(TheoryRef("PA")),
            TOP,
        ])
    kind = rng.choice([And, Or, Implies, Not])
    if kind is Not:
        return Not(_random_formula(rng, depth - 1))
    return kind(_random_formula(rng, depth - 1), _random_formula(rng, depth - 1))


def test_substitution_commutes_with_construction():
    rng = random.Random(7)
    fills = [Equals(Var("y"), Num(3)), ConAtom(TheoryRef("PA")), TOP]
    for _ in range(50):
        g = _random_formula(rng, 3)
        fill = rng.choice(fills)
        for build in (slowcon, sv):
            built_after = build(fill_hole(g, "φ", fill))
            built_before = fill_hole(build(g), "φ", fill)
            assert built_after == built_before


def test_capture_is_rejected():
    open_x = Equals(Var("x"), Num(1))
    with pytest.raises(CaptureError):
        slowcon(open_x)
    with pytest.raises(CaptureError):
        sv(open_x)
    with pytest.raises(CaptureError):
        sv_star(PHI, open_x)
    with pytest.raises(CaptureError):
        fill_hole(slowcon(PHI), "φ", open_x)


def test_fresh_binder_with_respect_to_inputs():
    ok = Equals(Var("y"), Num(1))
    f = slowcon(ok)
    assert free_vars(f) == {"y"}

"""First-order arithmetic formula ASTs for the explicit constructions around
slow consistency and the Shavrukov--Visser density operator.

Formulas are plain immutable trees.  Con is an uninterpreted atom over a
theory reference (optionally with an attached formula and an iteration
power), not an arithmetized provability predicate, and F_e0 enters only
through a definedness atom; nothing here searches for proofs.  Schematic
inputs are Hole placeholders that can be filled later.

Rendering supports UTF-8 and a pure-ASCII mode; both are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import CaptureError, RangeError

# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Num:
    value: int


Term = Union[Var, Num]


# ---------------------------------------------------------------------------
# Formulas


class Formula:
    def __str__(self) -> str:
        return pretty(self)


@dataclass(frozen=True)
class Verum(Formula):
    pass


@dataclass(frozen=True)
class Equals(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Leq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Defined(Formula):
    """function(argument) halts -- the downward-arrow atom."""

    function: str
    argument: Term


@dataclass(frozen=True)
class TheoryRef:
    """A named theory, optionally indexed (ISigma_x) and optionally extended
    by a formula (ISigma_x + phi)."""

    base: str
    index: Optional[Term] = None
    added: Optional[Formula] = None


@dataclass(frozen=True)
class ConAtom(Formula):
    theory: TheoryRef
    power: int = 1

    def __post_init__(self):
        if self.power < 1:
            raise RangeError("consistency power must be >= 1")


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class ForAll(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Hole(Formula):
    """Schematic placeholder for a sentence."""

    name: str


TOP = Verum()


def free_vars(f: Formula) -> frozenset[str]:
    return _free(f, frozenset())


def _term_vars(t: Optional[Term]) -> frozenset[str]:
    return frozenset((t.name,)) if isinstance(t, Var) else frozenset()


def _free(f: Formula, bound: frozenset[str]) -> frozenset[str]:
    if isinstance(f, (Verum, Hole)):
        return frozenset()
    if isinstance(f, (Equals, Leq)):
        return (_term_vars(f.left) | _term_vars(f.right)) - bound
    if isinstance(f, Defined):
        return _term_vars(f.argument) - bound
    if isinstance(f, ConAtom):
        out = _term_vars(f.theory.index) - bound
        if f.theory.added is not None:
            out |= _free(f.theory.added, bound)
        return out
    if isinstance(f, Not):
        return _free(f.body, bound)
    if isinstance(f, (And, Or, Implies)):
        return _free(f.left, bound) | _free(f.right, bound)
    if isinstance(f, (ForAll, Exists)):
        return _free(f.body, bound | {f.var})
    raise TypeError(f"not a formula: {f!r}")


def fill_hole(f: Formula, name: str, replacement: Formula) -> Formula:
    """Substitute replacement for every Hole(name); raises when a binder in
    scope would capture one of the replacement's free variables."""
    return _fill(f, name, replacement, frozenset())


def _fill(f: Formula, name: str, repl: Formula, bound: frozenset[str]) -> Formula:
    if isinstance(f, Hole):
        if f.name != name:
            return f
        captured = free_vars(repl) & bound
        if captured:
            raise CaptureError(
                f"filling hole {name!r} would capture {sorted(captured)}"
            )
        return repl
    if isinstance(f, (Verum, Equals, Leq, Defined)):
        return f
    if isinstance(f, ConAtom):
        if f.theory.added is None:
            return f
        added = _fill(f.theory.added, name, repl, bound)
        if added is f.theory.added:
            return f
        return ConAtom(TheoryRef(f.theory.base, f.theory.index, added), f.power)
    if isinstance(f, Not):
        return Not(_fill(f.body, name, repl, bound))
    if isinstance(f, (And, Or, Implies)):
        return type(f)(_fill(f.left, name, repl, bound), _fill(f.right, name, repl, bound))
    if isinstance(f, (ForAll, Exists)):
        return type(f)(f.var, _fill(f.body, name, repl, bound | {f.var}))
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Constructions

_TEMPLATE_VAR = "x"


def _check_template_input(f: Formula, construction: str):
    if _TEMPLATE_VAR in free_vars(f):
        raise CaptureError(
            f"{construction} binds {_TEMPLATE_VAR!r}, which occurs free in its input"
        )


def _isigma(added: Formula) -> TheoryRef:
    if isinstance(added, Verum):
        return TheoryRef("ISigma", index=Var(_TEMPLATE_VAR))
    return TheoryRef("ISigma", index=Var(_TEMPLATE_VAR), added=added)


def slowcon(phi: Formula) -> Formula:
    """forall x (F_e0(x) halts -> Con(ISigma_x + phi)); the "+ phi" part is
    omitted for verum, giving the slow consistency of PA itself."""
    _check_template_input(phi, "slowcon")
    return ForAll(
        _TEMPLATE_VAR,
        Implies(Defined("F_e0", Var(_TEMPLATE_VAR)), ConAtom(_isigma(phi))),
    )


def sv(phi: Formula) -> Formula:
    """phi and forall x (Con(ISigma_x + phi) -> Con^2(ISigma_x + phi))."""
    _check_template_input(phi, "sv")
    ref = _isigma(phi)
    return And(
        phi,
        ForAll(_TEMPLATE_VAR, Implies(ConAtom(ref), ConAtom(ref, power=2))),
    )


def sv_star(phi: Formula, psi: Formula) -> Formula:
    """phi or (SV(not phi and psi) and psi), with the SV part expanded."""
    _check_template_input(phi, "sv_star")
    _check_template_input(psi, "sv_star")
    return Or(phi, And(sv(And(Not(phi), psi)), psi))


def rosser_combination(phi: Formula, psi: Formula, theta: Formula) -> Formula:
    """phi or (psi and theta) -- the Rosser-style interpolant shape; no
    simplification is performed, the shape is kept as-is."""
    return Or(phi, And(psi, theta))


_BOUND_CHOICES = ("β", "γ", "δ", "ξ")


def con_star_equation(alpha_name: str, theory_name: str, ascii_mode: bool = False) -> str:
    """The fixed-point equation defining iterated consistency along an
    ordering, with the given ordinal and theory names; a documentation
    artifact with no attached semantics."""
    if not alpha_name or not theory_name:
        raise RangeError("con_star_equation needs nonempty names")
    bound = next(
        b for b in _BOUND_CHOICES
        if b != alpha_name and _GREEK_ASCII.get(b, b) != alpha_name
    )
    a, t = alpha_name, theory_name
    text = (
        f"PA ⊢ Con★({a},{t}) ↔ ∀{bound} ≺ {a} Con({t}+⌜Con★({bound},{t})⌝)"
    )
    return _transliterate(text) if ascii_mode else text


# ---------------------------------------------------------------------------
# Rendering
#
# Precedence: not > and > or > implies; quantifier scope is maximal (the body
# is always delimited).  Same-connective chains print without parentheses in
# their conventional association (and/or left, implies right); any other
# binary child is parenthesized.

_PREC = {Implies: 1, Or: 2, And: 3}

_GREEK_ASCII = {
    "φ": "phi", "ψ": "psi", "θ": "theta", "α": "alpha", "β": "beta",
    "γ": "gamma", "δ": "delta", "ξ": "xi",
}

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")

_ASCII_TOKENS = {
    "↓": "|", "→": "->", "↔": "<->", "∧": "and", "∨": "or", "¬": "not ",
    "⊤": "top", "⊢": "|-", "≺": "<", "⌜": "[", "⌝": "]", "★": "*", "≤": "<=",
}


def _transliterate(text: str) -> str:
    out = []
    for ch in text:
        if ch in _GREEK_ASCII:
            out.append(_GREEK_ASCII[ch])
        elif ch in _ASCII_TOKENS:
            out.append(_ASCII_TOKENS[ch])
        elif ch == "∀":
            out.append("forall ")
        elif ch == "∃":
            out.append("exists ")
        else:
            out.append(ch)
    return "".join(out)


def _term_text(t: Term) -> str:
    return t.name if isinstance(t, Var) else str(t.value)


def pretty(f: Formula, ascii_mode: bool = False) -> str:
    return _render(f, ascii_mode)


def _name(symbol: str, ascii_mode: bool) -> str:
    if not ascii_mode:
        return symbol
    return "".join(_GREEK_ASCII.get(ch, ch) for ch in symbol)


def _render(f: Formula, a: bool) -> str:
    if isinstance(f, Verum):
        return "top" if a else "⊤"
    if isinstance(f, Hole):
        return _name(f.name, a)
    if isinstance(f, Equals):
        return f"{_term_text(f.left)} = {_term_text(f.right)}"
    if isinstance(f, Leq):
        op = "<=" if a else "≤"
        return f"{_term_text(f.left)} {op} {_term_text(f.right)}"
    if isinstance(f, Defined):
        return f"{f.function}({_term_text(f.argument)}){'|' if a else '↓'}"
    if isinstance(f, ConAtom):
        if f.power == 1:
            head = "Con"
        elif a:
            head = f"Con^{f.power}"
        else:
            head = "Con" + str(f.power).translate(_SUPERSCRIPTS)
        return f"{head}({_theory_text(f.theory, a)})"
    if isinstance(f, Not):
        body = _render(f.body, a)
        if type(f.body) in _PREC:
            body = f"({body})"
        return ("not " if a else "¬") + body
    if isinstance(f, (And, Or, Implies)):
        op = {And: ("∧", "and"), Or: ("∨", "or"), Implies: ("→", "->")}[type(f)]
        left = _child(f.left, f, right_side=False, a=a)
        right = _child(f.right, f, right_side=True, a=a)
        return f"{left} {op[1] if a else op[0]} {right}"
    if isinstance(f, (ForAll, Exists)):
        quant = ("forall " if a else "∀") if isinstance(f, ForAll) else ("exists " if a else "∃")
        sep = " " if a else ""
        return f"{quant}{f.var}{sep}({_render(f.body, a)})"
    raise TypeError(f"not a formula: {f!r}")


def _child(child: Formula, parent: Formula, right_side: bool, a: bool) -> str:
    text = _render(child, a)
    if type(child) not in _PREC:
        return text
    if type(child) is type(parent):
        keep_flat = (isinstance(parent, Implies) and right_side) or (
            isinstance(parent, (And, Or)) and not right_side
        )
        return text if keep_flat else f"({text})"
    return f"({text})"


def _theory_text(ref: TheoryRef, a: bool) -> str:
    text = ref.base
    if ref.index is not None:
        text += f"_{_term_text(ref.index)}"
    if ref.added is not None:
        added = _render(ref.added, a)
        if type(ref.added) in _PREC:
            added = f"({added})"
        text += f" + {added}"
    return text

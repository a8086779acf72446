"""Ordinals below Gamma_0 in Veblen normal form.

A term is a finite non-increasing sum of atoms phi(a, b), each denoting the
value of the a-th Veblen function at b (phi_0(b) = w^b, phi_{a+1} enumerates
the fixed points of phi_a).  Equal adjacent atoms are stored run-length
encoded as (atom, count) pairs, so the natural number n is the single pair
(phi(0,0), n).  Every constructor normalizes eagerly; the canonical-form
invariant makes structural equality coincide with ordinal equality, so ``==``
and ``hash`` on terms are meaningful.

Canonicity of an atom phi(a, b) requires that b is not itself a single atom
phi(c, d) with c > a: such a b is a fixed point of phi_a and the atom would
denote b.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key, total_ordering

from .errors import ParseError, RangeError

LT, EQ, GT = -1, 0, 1

DEFAULT_NAT_CAP = 2**32
DEFAULT_ENUM_CAP = 10


@dataclass(frozen=True)
class VeblenAtom:
    """One phi(index, arg) building block of a normal form."""

    index: "Ordinal"
    arg: "Ordinal"


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    """Canonical Veblen normal form: ((atom, count), ...) with atoms strictly
    decreasing and counts >= 1.  The empty tuple is zero."""

    parts: tuple[tuple[VeblenAtom, int], ...] = ()

    def is_zero(self) -> bool:
        return not self.parts

    def __str__(self) -> str:
        return format_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal({format_ordinal(self)!r})"

    def __lt__(self, other: "Ordinal") -> bool:
        return compare(self, other) < 0


ZERO = Ordinal()
_ATOM_ONE = VeblenAtom(ZERO, ZERO)


def from_int(n: int, nat_cap: int = DEFAULT_NAT_CAP) -> Ordinal:
    """The finite ordinal n, stored as n copies of phi(0,0)."""
    if n < 0:
        raise RangeError("ordinals cannot be negative")
    if n > nat_cap:
        raise RangeError(f"numeral {n} exceeds the natural-number width {nat_cap}")
    if n == 0:
        return ZERO
    return Ordinal(((_ATOM_ONE, n),))


ONE = from_int(1)


def _coerce(x: Ordinal | int) -> Ordinal:
    return from_int(x) if isinstance(x, int) else x


def is_natural(x: Ordinal) -> bool:
    return not x.parts or (len(x.parts) == 1 and x.parts[0][0] == _ATOM_ONE)


def to_int(x: Ordinal) -> int:
    if not is_natural(x):
        raise RangeError(f"{x} is not a natural number")
    return x.parts[0][1] if x.parts else 0


def single_atom(x: Ordinal) -> VeblenAtom | None:
    """The atom of x when x is exactly one atom taken once, else None."""
    if len(x.parts) == 1 and x.parts[0][1] == 1:
        return x.parts[0][0]
    return None


def atom_term(atom: VeblenAtom) -> Ordinal:
    return Ordinal(((atom, 1),))


def compare(x: Ordinal | int, y: Ordinal | int) -> int:
    """Trichotomous order on canonical terms: LT (-1), EQ (0), or GT (1).

    Sums compare lexicographically by atom then run length; runs of a larger
    atom dominate any tail of strictly smaller ones.
    """
    x, y = _coerce(x), _coerce(y)
    for (ax, nx), (ay, ny) in zip(x.parts, y.parts):
        c = _compare_atoms(ax, ay)
        if c:
            return c
        if nx != ny:
            return LT if nx < ny else GT
    if len(x.parts) == len(y.parts):
        return EQ
    return LT if len(x.parts) < len(y.parts) else GT


def _compare_atoms(a: VeblenAtom, b: VeblenAtom) -> int:
    ci = compare(a.index, b.index)
    if ci == EQ:
        return compare(a.arg, b.arg)
    # Unequal indices: phi(a1,b1) < phi(a2,b2) with a1 < a2 iff b1 < phi(a2,b2);
    # equality of b1 with the whole atom cannot occur in normal form.
    if ci == LT:
        return compare(a.arg, atom_term(b))
    return -compare(b.arg, atom_term(a))


def add(x: Ordinal | int, y: Ordinal | int) -> Ordinal:
    """Ordinal sum: the suffix of x strictly below y's leading atom is absorbed."""
    x, y = _coerce(x), _coerce(y)
    if y.is_zero():
        return x
    if x.is_zero():
        return y
    lead = y.parts[0][0]
    i = len(x.parts)
    while i and _compare_atoms(x.parts[i - 1][0], lead) == LT:
        i -= 1
    head = x.parts[:i]
    if head and _compare_atoms(head[-1][0], lead) == EQ:
        merged = (lead, head[-1][1] + y.parts[0][1])
        return Ordinal(head[:-1] + (merged,) + y.parts[1:])
    return Ordinal(head + y.parts)


def successor(x: Ordinal | int) -> Ordinal:
    return add(x, ONE)


def mul_nat(x: Ordinal | int, n: int) -> Ordinal:
    """x * n; same value as folding add n times, since the tail of x is
    absorbed into the leading run at every step."""
    x = _coerce(x)
    if n < 0:
        raise RangeError("multiplier must be a natural number")
    if n == 0 or x.is_zero():
        return ZERO
    (lead, c), rest = x.parts[0], x.parts[1:]
    return Ordinal(((lead, c * n),) + rest)


def veblen(a: Ordinal | int, b: Ordinal | int) -> Ordinal:
    """The canonical term for phi_a(b); collapses fixed-point arguments."""
    a, b = _coerce(a), _coerce(b)
    inner = single_atom(b)
    if inner is not None and compare(inner.index, a) == GT:
        return b
    return atom_term(VeblenAtom(a, b))


def omega_power(b: Ordinal | int) -> Ordinal:
    return veblen(ZERO, b)


def iter_omega(m: int, x: Ordinal | int) -> Ordinal:
    """m-fold omega power: iter_omega(0, x) = x, then w^(...) applied m times."""
    if m < 0:
        raise RangeError("iteration count must be a natural number")
    out = _coerce(x)
    for _ in range(m):
        out = veblen(ZERO, out)
    return out


def in_phi_range(a: Ordinal | int, x: Ordinal) -> bool:
    """True when x is a value of phi_a: a single atom phi(c, d) with c >= a
    (c > a makes x a fixed point of phi_a, hence a value)."""
    a = _coerce(a)
    atom = single_atom(x)
    return atom is not None and compare(atom.index, a) >= 0


def phi_argument(a: Ordinal | int, x: Ordinal) -> Ordinal:
    """The mu with phi_a(mu) = x, for x a value of phi_a."""
    a = _coerce(a)
    atom = single_atom(x)
    if atom is None or compare(atom.index, a) == LT:
        raise RangeError(f"{x} is not a value of phi_{a}")
    return x if compare(atom.index, a) == GT else atom.arg


def next_phi_value(a: Ordinal | int, beta: Ordinal | int) -> Ordinal:
    """Least value of phi_a strictly above beta.

    Below phi_a(0) the answer is phi_a(0).  If beta is itself a value
    phi_a(mu), the answer is phi_a(mu + 1).  Otherwise recurse structurally:
    a value dominates a sum iff it dominates the leading atom, and it
    dominates an atom phi(c, d) with c < a iff it dominates d.
    """
    a, beta = _coerce(a), _coerce(beta)
    floor = atom_term(VeblenAtom(a, ZERO))
    if compare(beta, floor) == LT:
        return floor
    atom = single_atom(beta)
    if atom is not None:
        ci = compare(atom.index, a)
        if ci >= 0:
            mu = beta if ci == GT else atom.arg
            return veblen(a, successor(mu))
        return next_phi_value(a, atom.arg)
    return next_phi_value(a, atom_term(beta.parts[0][0]))


def phi_plus_iter(a: Ordinal | int, beta: Ordinal | int, gamma: Ordinal | int) -> Ordinal:
    """The gamma-th value of phi_a strictly above beta, counting from 0:
    phi_plus_iter(a, beta, 0) = next_phi_value(a, beta), and in general
    phi_a(mu + gamma) where phi_a(mu) is that next value."""
    a, gamma = _coerce(a), _coerce(gamma)
    first = next_phi_value(a, beta)
    mu = phi_argument(a, first)
    return veblen(a, add(mu, gamma))


OMEGA = veblen(ZERO, ONE)
EPSILON0 = veblen(ONE, ZERO)


# ---------------------------------------------------------------------------
# Enumeration (test oracle)

def term_size(x: Ordinal) -> int:
    """Structural size: every atom occurrence counts one, plus the sizes of
    its index and argument; run lengths count with multiplicity."""
    return sum(c * (1 + term_size(a.index) + term_size(a.arg)) for a, c in x.parts)


def enumerate_terms(max_nodes: int, cap: int = DEFAULT_ENUM_CAP) -> list[Ordinal]:
    """All canonical terms of structural size <= max_nodes, sorted ascending."""
    if max_nodes < 0:
        raise RangeError("max_nodes must be a natural number")
    if max_nodes > cap:
        raise RangeError(f"enumeration size {max_nodes} exceeds the cap {cap}")

    terms_by_size: dict[int, list[Ordinal]] = {0: [ZERO]}
    atoms: list[tuple[VeblenAtom, int]] = []
    for s in range(1, max_nodes + 1):
        new_atoms = []
        for sa in range(s):
            for a in terms_by_size[sa]:
                for b in terms_by_size[s - 1 - sa]:
                    inner = single_atom(b)
                    if inner is not None and compare(inner.index, a) == GT:
                        continue
                    new_atoms.append((VeblenAtom(a, b), s))
        atoms.extend(new_atoms)
        terms_by_size[s] = _sums_of_exact_size(atoms, s)
    out = [t for ts in terms_by_size.values() for t in ts]
    out.sort(key=cmp_to_key(compare))
    return out


def _sums_of_exact_size(atoms: list[tuple[VeblenAtom, int]], size: int) -> list[Ordinal]:
    desc = sorted(atoms, key=cmp_to_key(lambda p, q: _compare_atoms(p[0], q[0])), reverse=True)
    found: list[Ordinal] = []

    def extend(start: int, budget: int, prefix: tuple[tuple[VeblenAtom, int], ...]):
        for i in range(start, len(desc)):
            atom, sz = desc[i]
            count = 1
            while count * sz <= budget:
                parts = prefix + ((atom, count),)
                if count * sz == budget:
                    found.append(Ordinal(parts))
                else:
                    extend(i + 1, budget - count * sz, parts)
                count += 1

    extend(0, size, ())
    return found


# ---------------------------------------------------------------------------
# Text format
#
# Grammar:   ord     := sum
#            sum     := prod ("+" prod)*
#            prod    := atom ("*" nat)?
#            atom    := nat | "w" | "w^" atom | "e0" | "phi(" ord "," ord ")"
#                     | "(" ord ")"
# Sugar: w = phi(0,1), e0 = phi(1,0), w^x = phi(0,x).  Non-normal input (for
# instance a fixed-point argument) is normalized, never rejected.

class _Parser:
    def __init__(self, text: str, nat_cap: int):
        self.text = text
        self.pos = 0
        self.nat_cap = nat_cap

    def error(self, message: str):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a numeral")
        n = int(self.text[start:self.pos])
        if n > self.nat_cap:
            raise RangeError(
                f"numeral {n} at position {start} exceeds the natural-number width {self.nat_cap}"
            )
        return n

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]

    def sum(self) -> Ordinal:
        value = self.prod()
        while self.peek() == "+":
            self.pos += 1
            value = add(value, self.prod())
        return value

    def prod(self) -> Ordinal:
        value = self.atom()
        if self.peek() == "*":
            self.pos += 1
            value = mul_nat(value, self.nat())
        return value

    def atom(self) -> Ordinal:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.sum()
            self.eat(")")
            return value
        if ch.isdigit():
            return from_int(self.nat(), self.nat_cap)
        if ch.isalpha():
            name = self.word()
            if name == "w":
                if self.peek() == "^":
                    self.pos += 1
                    return veblen(ZERO, self.atom())
                return OMEGA
            if name == "e0":
                return EPSILON0
            if name == "phi":
                self.eat("(")
                a = self.sum()
                self.eat(",")
                b = self.sum()
                self.eat(")")
                return veblen(a, b)
            self.pos -= len(name)
            self.error(f"unknown name {name!r}")
        self.error("expected an ordinal term")


def parse_ordinal(text: str, nat_cap: int = DEFAULT_NAT_CAP) -> Ordinal:
    """Parse the ordinal grammar; returns the canonical normal form."""
    parser = _Parser(text, nat_cap)
    value = parser.sum()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("trailing input")
    return value


def parse_ordinal_prefix(text: str, pos: int, nat_cap: int = DEFAULT_NAT_CAP) -> tuple[Ordinal, int]:
    """Parse an ordinal starting at pos; returns (value, position after it)."""
    parser = _Parser(text, nat_cap)
    parser.pos = pos
    value = parser.sum()
    return value, parser.pos


def format_ordinal(x: Ordinal) -> str:
    """Canonical lowest-sugar text; parse_ordinal(format_ordinal(x)) == x."""
    if x.is_zero():
        return "0"
    pieces = []
    for atom, count in x.parts:
        if atom == _ATOM_ONE:
            pieces.append(str(count))
        elif count == 1:
            pieces.append(_format_atom(atom))
        else:
            pieces.append(f"{_format_atom(atom)}*{count}")
    return "+".join(pieces)


def _format_atom(atom: VeblenAtom) -> str:
    if atom.index.is_zero():
        if atom.arg == ONE:
            return "w"
        return f"w^{_format_exponent(atom.arg)}"
    if atom.index == ONE and atom.arg.is_zero():
        return "e0"
    return f"phi({format_ordinal(atom.index)},{format_ordinal(atom.arg)})"


def _format_exponent(b: Ordinal) -> str:
    # A lone atom or a bare numeral is already a grammar atom; anything with
    # "+" or "*" needs parentheses under "^".
    if is_natural(b) or single_atom(b) is not None:
        return format_ordinal(b)
    return f"({format_ordinal(b)})"

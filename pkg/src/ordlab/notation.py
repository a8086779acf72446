"""Pathological presentations of omega, gated on a decidable predicate.

A presentation reorders the naturals around the least counterexample k of a
predicate P: below k the order is standard, everything below k precedes
everything at or above k, and from k on the order is reversed.  When P holds
everywhere the order is plain omega; when P first fails at k the tail
k, k+1, k+2, ... is an infinite strictly descending chain.  Deciding a single
comparison only ever inspects P at arguments up to max(a, b), so the
well-foundedness of the order is exactly as hidden as the truth of P.

Predicates are a tiny total expression language over one variable x with
+, *, numerals, comparisons and boolean connectives, e.g. "x != 7" or
"x*x <= 10000 or x != 50".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import PredicateError, RangeError

_COMPARISONS = {
    "<=": lambda a, b: a <= b,
    "<": lambda a, b: a < b,
    ">=": lambda a, b: a >= b,
    ">": lambda a, b: a > b,
    "=": lambda a, b: a == b,
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
}


@dataclass(frozen=True)
class PredicateExpr:
    """Parsed predicate; ``source`` is the original text and ``_fn`` an
    equivalent compiled form of the AST stored in ``tree``."""

    source: str
    tree: tuple
    _fn: Callable[[int], bool]

    def evaluate(self, n: int) -> bool:
        return bool(self._fn(n))


def eval_tree(tree: tuple, n: int):
    """Reference evaluator for the predicate AST (the compiled form must
    agree with this on every input)."""
    tag = tree[0]
    if tag == "bool":
        return tree[1]
    if tag == "num":
        return tree[1]
    if tag == "var":
        return n
    if tag == "not":
        return not eval_tree(tree[1], n)
    if tag == "and":
        return eval_tree(tree[1], n) and eval_tree(tree[2], n)
    if tag == "or":
        return eval_tree(tree[1], n) or eval_tree(tree[2], n)
    if tag == "+":
        return eval_tree(tree[1], n) + eval_tree(tree[2], n)
    if tag == "*":
        return eval_tree(tree[1], n) * eval_tree(tree[2], n)
    return _COMPARISONS[tag](eval_tree(tree[1], n), eval_tree(tree[2], n))


class _PredicateParser:
    """Recursive descent: or < and < not < comparison < + < *."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise PredicateError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def peek_word(self) -> str:
        self.skip_ws()
        end = self.pos
        while end < len(self.text) and self.text[end].isalpha():
            end += 1
        return self.text[self.pos:end]

    def take_word(self) -> str:
        word = self.peek_word()
        self.pos += len(word)
        return word

    def or_expr(self) -> tuple:
        node = self.and_expr()
        while self.peek_word() == "or":
            self.take_word()
            node = ("or", node, self.and_expr())
        return node

    def and_expr(self) -> tuple:
        node = self.not_expr()
        while self.peek_word() == "and":
            self.take_word()
            node = ("and", node, self.not_expr())
        return node

    def not_expr(self) -> tuple:
        if self.peek_word() == "not":
            self.take_word()
            return ("not", self.not_expr())
        return self.comparison()

    def comparison(self) -> tuple:
        word = self.peek_word()
        if word in ("true", "false"):
            self.take_word()
            return ("bool", word == "true")
        if self.peek() == "(":
            # parenthesized boolean, e.g. "(x != 7 and x != 9)"
            save = self.pos
            self.pos += 1
            try:
                node = self.or_expr()
                self.skip_ws()
                if self.peek() != ")":
                    self.error("expected ')'")
                self.pos += 1
                return node
            except PredicateError:
                self.pos = save
        left = self.arith()
        self.skip_ws()
        for op in ("<=", ">=", "==", "!=", "<", ">", "="):
            if self.text.startswith(op, self.pos):
                self.pos += len(op)
                return (op if op != "==" else "=", left, self.arith())
        self.error("expected a comparison operator")

    def arith(self) -> tuple:
        node = self.term()
        while self.peek() == "+":
            self.pos += 1
            node = ("+", node, self.term())
        return node

    def term(self) -> tuple:
        node = self.factor()
        while self.peek() == "*":
            self.pos += 1
            node = ("*", node, self.factor())
        return node

    def factor(self) -> tuple:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.arith()
            self.skip_ws()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return node
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return ("num", int(self.text[start:self.pos]))
        if self.peek_word() == "x":
            self.take_word()
            return ("var",)
        self.error("expected a numeral, 'x', or '('")


def _compile_tree(tree: tuple) -> Callable[[int], bool]:
    src = _tree_to_python(tree)
    return eval(f"lambda x: {src}", {"__builtins__": {}})


def _tree_to_python(tree: tuple) -> str:
    tag = tree[0]
    if tag == "bool":
        return "True" if tree[1] else "False"
    if tag == "num":
        return str(tree[1])
    if tag == "var":
        return "x"
    if tag == "not":
        return f"(not {_tree_to_python(tree[1])})"
    if tag in ("and", "or"):
        return f"({_tree_to_python(tree[1])} {tag} {_tree_to_python(tree[2])})"
    op = {"=": "=="}.get(tag, tag)
    return f"({_tree_to_python(tree[1])} {op} {_tree_to_python(tree[2])})"


def parse_predicate(text: str) -> PredicateExpr:
    parser = _PredicateParser(text)
    tree = parser.or_expr()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("trailing input")
    return PredicateExpr(text.strip(), tree, _compile_tree(tree))


@dataclass(frozen=True)
class Presentation:
    """A decidable strict linear order on the naturals derived from a
    predicate; see the module docstring for the three-zone definition."""

    predicate: PredicateExpr
    description: str

    def least_counterexample(self, bound: int, recorder: list | None = None) -> Optional[int]:
        """First n <= bound with not P(n), scanning upward; never inspects
        the predicate above bound."""
        fn = self.predicate._fn
        if recorder is None:
            for n in range(bound + 1):
                if not fn(n):
                    return n
            return None
        for n in range(bound + 1):
            recorder.append(n)
            if not fn(n):
                return n
        return None

    def less(self, a: int, b: int, recorder: list | None = None) -> bool:
        if a < 0 or b < 0:
            raise RangeError("the order is on natural numbers")
        k = self.least_counterexample(max(a, b), recorder)
        if k is None or (a < k and b < k):
            return a < b
        if (a < k) != (b < k):
            return a < k
        return a > b


def kreisel_presentation(predicate: PredicateExpr | str) -> Presentation:
    if isinstance(predicate, str):
        predicate = parse_predicate(predicate)
    return Presentation(predicate, f"order of omega gated on [{predicate.source}]")


def check_ascending(p: Presentation, n: int, fuel: int = 10000) -> bool:
    """True iff 0 < 1 < ... < n holds in the presentation order."""
    if n > fuel:
        raise RangeError(f"window {n} exceeds the fuel cap {fuel}")
    return all(p.less(i, i + 1) for i in range(n))


def find_descending(p: Presentation, fuel: int, cap: int = 10**6) -> Optional[list[int]]:
    """A strictly descending chain starting at the least counterexample
    within the window, of length min(fuel, what the window holds); None when
    the predicate has no counterexample at or below fuel."""
    if fuel > cap:
        raise RangeError(f"fuel {fuel} exceeds the cap {cap}")
    k = p.least_counterexample(fuel)
    if k is None:
        return None
    length = min(fuel, fuel - k + 1)
    return list(range(k, k + length))


@dataclass(frozen=True)
class AuditReport:
    window: int
    counterexamples: int
    descents: int
    equivalent: bool

    def lines(self) -> list[str]:
        return [
            f"window: {self.window}",
            f"counterexamples: {self.counterexamples}",
            f"descents: {self.descents}",
            f"equivalent: {'yes' if self.equivalent else 'no'}",
        ]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def audit(p: Presentation, n: int, fuel: int = 10000) -> AuditReport:
    """Count the predicate's counterexamples and the order's adjacent
    descents inside the window, and record whether the two observations
    agree (prefix looks well-ordered iff no counterexample was seen) --
    computed, never assumed."""
    if n > fuel:
        raise RangeError(f"window {n} exceeds the fuel cap {fuel}")
    counterexamples = sum(1 for i in range(n + 1) if not p.predicate.evaluate(i))
    descents = sum(1 for i in range(n) if p.less(i + 1, i))
    equivalent = (descents == 0) == (counterexamples == 0)
    return AuditReport(n, counterexamples, descents, equivalent)

"""A small language for index-bound expressions with selectable integer division.

Grammar::

    expr   := term (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*
    factor := integer | "n" | "s" | "b" | "e" | "m" | "(" expr ")"
    range  := expr ("<="|"<") "i" ("<="|"<") expr

A ``-`` directly in front of an integer literal in factor position makes a
negative literal; there is no other unary minus.  ``/`` is integer division
in the active :class:`DivMode`.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple, Union

from .errors import DomainError, ExprSyntaxError, IntDivisionError
from .ranges import BoundSpec, Range, make_range

MAX_COUNTEREXAMPLES = 10


class DivMode(enum.Enum):
    FLOOR = "floor"
    TRUNC = "trunc"


def idiv(a: int, d: int, mode: DivMode = DivMode.FLOOR) -> int:
    """Integer quotient of ``a / d``, rounded down (FLOOR) or toward zero (TRUNC)."""
    if d == 0:
        raise IntDivisionError(f"division of {a} by zero")
    q = a // d
    if mode is DivMode.TRUNC and q < 0 and q * d != a:
        q += 1
    return q


# -- AST ---------------------------------------------------------------------

VARIABLES = ("n", "s", "b", "e", "m")
INDEX_VAR = "i"


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


Expr = Union[Num, Var, BinOp]

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


@dataclass(frozen=True)
class RangeExpr:
    """``low low_rel i high_rel high`` with relations ``"<="`` or ``"<"``."""

    low: Expr
    low_rel: str
    high_rel: str
    high: Expr

    def __str__(self) -> str:
        return f"{to_text(self.low)} {self.low_rel} i {self.high_rel} {to_text(self.high)}"


def to_text(expr: Expr) -> str:
    """Pretty-print with the fewest parentheses that keep the tree shape."""
    if isinstance(expr, Num):
        return f"({expr.value})" if expr.value < 0 else str(expr.value)
    if isinstance(expr, Var):
        return expr.name
    p = _PREC[expr.op]
    left = to_text(expr.left)
    if isinstance(expr.left, BinOp) and _PREC[expr.left.op] < p:
        left = f"({left})"
    right = to_text(expr.right)
    if isinstance(expr.right, BinOp) and _PREC[expr.right.op] <= p:
        right = f"({right})"
    return f"{left}{expr.op}{right}"


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(<=|[-+*/()<]))")


@dataclass
class _Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        kind = {1: "int", 2: "name", 3: "op"}[m.lastindex]
        tokens.append(_Token(kind, m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Optional[_Token] = None):
        tok = tok or self.tok
        return ExprSyntaxError(message, self.text, tok.pos)

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_end(self):
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")

    def expr(self) -> Expr:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text in ("*", "/"):
            op = self.advance().text
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        tok = self.tok
        if tok.kind == "int":
            self.advance()
            return Num(int(tok.text))
        if tok.kind == "op" and tok.text == "-" and self.tokens[self.i + 1].kind == "int":
            self.advance()
            return Num(-int(self.advance().text))
        if tok.kind == "name":
            if tok.text == INDEX_VAR:
                raise self.error("index variable i cannot appear inside a bound")
            if tok.text not in VARIABLES:
                raise self.error(f"unknown identifier {tok.text!r}")
            self.advance()
            return Var(tok.text)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            node = self.expr()
            if not (self.tok.kind == "op" and self.tok.text == ")"):
                raise self.error("expected ')'")
            self.advance()
            return node
        if tok.kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {tok.text!r}")

    def relation(self) -> str:
        tok = self.tok
        if tok.kind == "op" and tok.text in ("<", "<="):
            self.advance()
            return tok.text
        raise self.error("expected '<' or '<='")

    def range_expr(self) -> RangeExpr:
        low = self.expr()
        low_rel = self.relation()
        tok = self.tok
        if not (tok.kind == "name" and tok.text == INDEX_VAR):
            raise self.error("index variable must be i")
        self.advance()
        high_rel = self.relation()
        high = self.expr()
        self.expect_end()
        return RangeExpr(low, low_rel, high_rel, high)


def parse_expr(text: str) -> Expr:
    p = _Parser(text)
    node = p.expr()
    p.expect_end()
    return node


def parse_range(text: str) -> RangeExpr:
    return _Parser(text).range_expr()


# -- evaluation --------------------------------------------------------------


@dataclass(frozen=True)
class Bindings:
    """Frame parameters; ``e``, ``s`` and ``m`` are always derived from ``n`` and ``b``."""

    n: int
    b: int = 0

    @property
    def e(self) -> int:
        return self.b + self.n - 1

    @property
    def s(self) -> int:
        return self.n - 1

    @property
    def m(self) -> int:
        return self.b + self.e

    def lookup(self, name: str) -> int:
        return getattr(self, name)


def _as_expr(e) -> Expr:
    return parse_expr(e) if isinstance(e, str) else e


def _as_range(r) -> RangeExpr:
    return parse_range(r) if isinstance(r, str) else r


def eval_expr(expr, env: Bindings, mode: DivMode = DivMode.FLOOR) -> int:
    expr = _as_expr(expr)
    if isinstance(expr, Num):
        return expr.value
    if isinstance(expr, Var):
        return env.lookup(expr.name)
    a = eval_expr(expr.left, env, mode)
    b = eval_expr(expr.right, env, mode)
    if expr.op == "+":
        return a + b
    if expr.op == "-":
        return a - b
    if expr.op == "*":
        return a * b
    return idiv(a, b, mode)


def eval_range(rexpr, env: Bindings, mode: DivMode = DivMode.FLOOR) -> Range:
    rexpr = _as_range(rexpr)
    low = eval_expr(rexpr.low, env, mode)
    high = eval_expr(rexpr.high, env, mode)
    return make_range(BoundSpec(low, rexpr.low_rel == "<="), BoundSpec(high, rexpr.high_rel == "<="))


def index_set(r: Range) -> Tuple[int, int]:
    """Canonical key for the set of indices in ``r``: all empty ranges compare equal."""
    return (0, 0) if r.lo == r.hi else (r.lo, r.hi)


# -- sweeps ------------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    binding: dict
    left: object
    right: object

    def __str__(self) -> str:
        where = ", ".join(f"{k}={v}" for k, v in self.binding.items())
        return f"{where}: {self.left} vs {self.right}"


@dataclass
class EquivalenceReport:
    checked: int = 0
    failures: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.failures == 0

    def record(self, cx: Counterexample) -> None:
        self.failures += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(cx)

    def merge(self, other: "EquivalenceReport") -> "EquivalenceReport":
        merged = EquivalenceReport(self.checked + other.checked, self.failures + other.failures)
        merged.counterexamples = (self.counterexamples + other.counterexamples)[:MAX_COUNTEREXAMPLES]
        return merged

    def to_record(self) -> dict:
        return {
            "holds": self.holds,
            "checked": self.checked,
            "failures": self.failures,
            "counterexamples": [
                {"binding": c.binding, "left": _plain(c.left), "right": _plain(c.right)}
                for c in self.counterexamples
            ],
        }


def _plain(v):
    return v.as_list() if isinstance(v, Range) else v


def _safe(fn):
    try:
        return fn()
    except IntDivisionError as exc:
        return f"error: {exc}"


def check_equiv(a, b, n_domain: Iterable[int], mode: DivMode = DivMode.FLOOR, base: int = 0) -> EquivalenceReport:
    """Compare two expressions (values) or two range expressions (index sets) over ``n_domain``.

    Text arguments containing a relation are parsed as range expressions.
    """
    is_range = isinstance(a, RangeExpr) or (isinstance(a, str) and "<" in a)
    report = EquivalenceReport()
    if is_range:
        ra, rb = _as_range(a), _as_range(b)

        def evaluate(r, env):
            return eval_range(r, env, mode)

    else:
        ra, rb = _as_expr(a), _as_expr(b)

        def evaluate(e, env):
            return eval_expr(e, env, mode)

    for n in n_domain:
        env = Bindings(n, base)
        va = _safe(lambda: evaluate(ra, env))
        vb = _safe(lambda: evaluate(rb, env))
        report.checked += 1
        if is_range and isinstance(va, Range) and isinstance(vb, Range):
            same = index_set(va) == index_set(vb)
        else:
            same = va == vb and not isinstance(va, str)
        if not same:
            report.record(Counterexample({"n": n, "b": base}, va, vb))
    return report


IDENTITIES = {
    "halves": "n/2 + (n+1)/2 = n",
    "connecting": "(n+1)/2 - (n-1)/2 = 1 for n > 0",
    "kway": "sum over r in [0, k) of (n+r)/k = n",
}


def check_identity(which: str, n_domain: Iterable[int], k_domain: Optional[Iterable[int]] = None) -> EquivalenceReport:
    """Sweep one of the built-in floor-division identities (see ``IDENTITIES``)."""
    report = EquivalenceReport()
    if which == "halves":
        for n in n_domain:
            report.checked += 1
            lhs = n // 2 + (n + 1) // 2
            if lhs != n:
                report.record(Counterexample({"n": n}, lhs, n))
    elif which == "connecting":
        for n in n_domain:
            if n <= 0:
                continue
            report.checked += 1
            lhs = (n + 1) // 2 - (n - 1) // 2
            if lhs != 1:
                report.record(Counterexample({"n": n}, lhs, 1))
    elif which == "kway":
        ks = list(k_domain if k_domain is not None else range(1, 65))
        for n in n_domain:
            for k in ks:
                report.checked += 1
                total = sum((n + r) // k for r in range(k))
                if total != n:
                    report.record(Counterexample({"n": n, "k": k}, total, n))
    else:
        raise DomainError(f"unknown identity {which!r}; choose from {sorted(IDENTITIES)}")
    return report

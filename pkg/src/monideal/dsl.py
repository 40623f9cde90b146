"""Text syntax for ideals.

Grammar::

    program := (NAME '=' expr ';')* expr
    expr    := term ('+' term)*            sum of ideals
    term    := atom ('^' atom)*            intersection (binds tighter than '+')
    atom    := ideal | '(' expr ')' | NAME
    ideal   := '(' [box (',' box)*] ')'
    box     := '1' | factor factor*
    factor  := 'x' INDEX ['^' bound]
    bound   := RATIONAL | '>' RATIONAL
    RATIONAL:= INT ['/' INT]

A bare factor means exponent 1 (closed). Variables missing from a box are
unconstrained. ``()`` is the zero ideal and ``(1)`` the unit ideal. Newlines
also separate bindings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import ParseError
from .exponent import AmbientConfig, INF
from .ideal import Box, Ideal, Monomial, ideal_sum, intersect

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<sep>[;\n])
  | (?P<var>x(?P<index>\d+)(?![A-Za-z_0-9]))
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<int>\d+)
  | (?P<op>[()+^,>/=-])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup if m.lastgroup != "index" else "var"
        if m.group("var"):
            kind = "var"
        if kind != "ws":
            tokens.append(Token(kind, m.group(0), pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


@dataclass(frozen=True)
class Factor:
    index: int
    exponent: Fraction
    strict: bool
    pos: int


@dataclass(frozen=True)
class Literal:
    boxes: tuple[tuple[Factor, ...], ...]
    pos: int


@dataclass(frozen=True)
class Name:
    name: str
    pos: int


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Meet:
    left: "Expr"
    right: "Expr"


Expr = Union[Literal, Name, Sum, Meet]


@dataclass(frozen=True)
class Program:
    bindings: tuple[tuple[str, Expr], ...]
    expr: Expr


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k=1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind in ("name", "var", "int"):
            raise ParseError(f"expected {text!r}, found {self.tok.text or 'end of input'!r}", self.tok.pos)
        return self.advance()

    def skip_separators(self):
        while self.tok.kind == "sep":
            self.advance()

    def program(self) -> Program:
        bindings = []
        self.skip_separators()
        while self.tok.kind == "name" and self.peek().text == "=":
            name = self.advance().text
            self.advance()
            bindings.append((name, self.expr()))
            if self.tok.kind != "sep":
                raise ParseError("expected ';' or newline after binding", self.tok.pos)
            self.skip_separators()
        expr = self.expr()
        self.skip_separators()
        if self.tok.kind != "eof":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return Program(tuple(bindings), expr)

    def expr(self) -> Expr:
        node = self.term()
        while self.tok.text == "+":
            self.advance()
            node = Sum(node, self.term())
        return node

    def term(self) -> Expr:
        node = self.atom()
        while self.tok.text == "^":
            self.advance()
            node = Meet(node, self.atom())
        return node

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "name":
            self.advance()
            return Name(t.text, t.pos)
        if t.text == "(":
            nxt = self.peek()
            if nxt.kind in ("var", "int") or nxt.text == ")":
                return self.literal()
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"expected an ideal, found {t.text or 'end of input'!r}", t.pos)

    def literal(self) -> Literal:
        start = self.expect("(").pos
        boxes = []
        if self.tok.text != ")":
            boxes.append(self.box())
            while self.tok.text == ",":
                self.advance()
                boxes.append(self.box())
        self.expect(")")
        return Literal(tuple(boxes), start)

    def box(self) -> tuple[Factor, ...]:
        t = self.tok
        if t.kind == "int":
            if t.text != "1":
                raise ParseError(f"a constant box must be '1', found {t.text!r}", t.pos)
            self.advance()
            return ()
        if t.kind != "var":
            raise ParseError(f"expected a variable, found {t.text or 'end of input'!r}", t.pos)
        factors = []
        seen = set()
        while self.tok.kind == "var":
            f = self.factor()
            if f.index in seen:
                raise ParseError(f"variable x{f.index} repeated in one monomial", f.pos)
            seen.add(f.index)
            factors.append(f)
        return tuple(factors)

    def factor(self) -> Factor:
        t = self.advance()
        index = int(t.text[1:])
        if index < 1:
            raise ParseError("variables are numbered from x1", t.pos)
        if self.tok.text != "^":
            return Factor(index, Fraction(1), False, t.pos)
        self.advance()
        strict = False
        if self.tok.text == ">":
            strict = True
            self.advance()
        return Factor(index, self.rational(), strict, t.pos)

    def rational(self) -> Fraction:
        t = self.tok
        if t.text == "-":
            raise ParseError("exponents must be nonnegative", t.pos)
        if t.kind != "int":
            raise ParseError(f"expected a number, found {t.text or 'end of input'!r}", t.pos)
        self.advance()
        num, den = int(t.text), 1
        if self.tok.text == "/":
            self.advance()
            d = self.tok
            if d.kind != "int":
                raise ParseError("expected a denominator", d.pos)
            self.advance()
            den = int(d.text)
            if den == 0:
                raise ParseError("zero denominator", d.pos)
        return Fraction(num, den)


def parse(text: str) -> Program:
    """Parse DSL text into an expression tree (no ambient configuration needed)."""
    return _Parser(text).program()


def max_index(node) -> int:
    """Largest variable index mentioned anywhere in a parsed program or expression."""
    if isinstance(node, Program):
        return max([max_index(e) for _, e in node.bindings] + [max_index(node.expr)])
    if isinstance(node, Literal):
        return max((f.index for box in node.boxes for f in box), default=0)
    if isinstance(node, (Sum, Meet)):
        return max(max_index(node.left), max_index(node.right))
    return 0


def _box(factors: tuple[Factor, ...], cfg: AmbientConfig) -> Box:
    alpha = [Fraction(0)] * cfg.d
    strict = [False] * cfg.d
    for f in factors:
        if f.index > cfg.d:
            raise ParseError(f"x{f.index} exceeds the dimension {cfg.d}", f.pos)
        if not cfg.dense and f.exponent.denominator != 1:
            raise ParseError(f"non-integer exponent {f.exponent} in integer mode", f.pos)
        alpha[f.index - 1] = f.exponent
        strict[f.index - 1] = f.strict
    return Box(tuple(alpha), tuple(strict))


def evaluate(node, cfg: AmbientConfig, env: Optional[dict] = None) -> Ideal:
    env = dict(env or {})
    if isinstance(node, Program):
        for name, expr in node.bindings:
            env[name] = evaluate(expr, cfg, env)
        return evaluate(node.expr, cfg, env)
    if isinstance(node, Literal):
        return Ideal((_box(b, cfg) for b in node.boxes), cfg)
    if isinstance(node, Name):
        if node.name not in env:
            raise ParseError(f"unbound name {node.name!r}", node.pos)
        return env[node.name]
    if isinstance(node, Sum):
        return ideal_sum(evaluate(node.left, cfg, env), evaluate(node.right, cfg, env))
    if isinstance(node, Meet):
        return intersect(evaluate(node.left, cfg, env), evaluate(node.right, cfg, env))
    raise TypeError(f"not an expression node: {node!r}")


def parse_ideal(text: str, cfg: AmbientConfig, env: Optional[dict] = None) -> Ideal:
    return evaluate(parse(text), cfg, env)


def parse_monomial(text: str, cfg: AmbientConfig) -> Monomial:
    """A single product of closed factors, e.g. ``x1 x2^3/2`` or ``1``."""
    p = _Parser(text)
    factors = p.box()
    if p.tok.kind != "eof":
        raise ParseError(f"unexpected {p.tok.text!r}", p.tok.pos)
    for f in factors:
        if f.strict:
            raise ParseError("a monomial has exact exponents; '>' is not allowed", f.pos)
    box = _box(factors, cfg)
    return Monomial(box.alpha)


def parse_support(text: str) -> frozenset[int]:
    """``{1,3}`` or ``1,3`` or ``x1 x3`` into a set of 1-based indices."""
    items = re.findall(r"\d+", text)
    return frozenset(int(i) for i in items)


__all__ = ["parse", "evaluate", "parse_ideal", "parse_monomial", "tokenize", "max_index", "INF"]

"""Expression language shared by the CLI, the renderers, and the tests.

Grammar (whitespace-insensitive, explicit ``*`` required -- juxtaposition
is never multiplication):

    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := "-" factor | power
    power    := atom ("^" exponent)?
    exponent := "-"? INT
    atom     := NUMBER | NAME | "(" expr ")"
    NUMBER   := INT ("/" INT)?          -- a rational literal
    NAME     := "zeta" | x<i> | y<i> | g<i> | t<i>

``*`` is noncommutative and order-preserving.  Exponents are integers;
negative exponents are accepted only directly on y_i and g_i atoms (the
Hecke algebra has no x-inverses, and t, zeta carry nonnegative powers in
canonical renderings).  Syntax errors report the offset and what was
expected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclotomic, zeta_power
from .group import GroupElem

__all__ = [
    "ParseError",
    "EvalError",
    "parse",
    "eval_hecke",
    "eval_laurent",
    "eval_scalar",
]


class ParseError(ValueError):
    """Syntax error with position information."""

    def __init__(self, message: str, pos: int, expected: str | None = None):
        detail = f"{message} at position {pos}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)
        self.pos = pos
        self.expected = expected


class EvalError(ValueError):
    """An expression uses an atom that is invalid for the target algebra."""


# -- parse trees ---------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    kind: str  # "x", "y", "g", "t", or "zeta"
    index: int  # 0 for zeta


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-", "*"
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z]+\d*)|(?P<op>[-+*^()]))"
)
_NAME = re.compile(r"^(zeta|[xygt]\d+)$")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            where = len(text) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", where)
        pos = match.end()
        if match.lastgroup == "num":
            raw = match.group("num").replace(" ", "")
            if "/" in raw:
                a, b = raw.split("/")
                if int(b) == 0:
                    raise ParseError("zero denominator in literal", match.start("num"))
                value = Fraction(int(a), int(b))
            else:
                value = Fraction(int(raw))
            tokens.append(("num", value, match.start("num")))
        elif match.lastgroup == "name":
            name = match.group("name")
            if not _NAME.match(name):
                raise ParseError(
                    f"unknown name {name!r}",
                    match.start("name"),
                    "zeta, x<i>, y<i>, g<i> or t<i>",
                )
            tokens.append(("name", name, match.start("name")))
        else:
            op = match.group("op")
            tokens.append((op, op, match.start("op")))
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, expected: str):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"unexpected {self._describe(tok)}", tok[2], expected)
        return self.advance()

    @staticmethod
    def _describe(tok):
        if tok[0] == "end":
            return "end of input"
        return f"token {str(tok[1])!r}"

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(
                f"unexpected {self._describe(tok)}", tok[2], "'+', '-', '*', '^' or end"
            )
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        if self.peek()[0] == "-":
            self.advance()
            return Neg(self.factor())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] != "^":
            return base
        self.advance()
        sign = 1
        tok = self.peek()
        if tok[0] == "-":
            sign = -1
            self.advance()
            tok = self.peek()
        if tok[0] != "num" or tok[1].denominator != 1:
            raise ParseError(
                f"unexpected {self._describe(tok)}", tok[2], "an integer exponent"
            )
        self.advance()
        exp = sign * tok[1].numerator
        if exp < 0 and not (isinstance(base, Sym) and base.kind in ("y", "g")):
            what = base.kind if isinstance(base, Sym) else "this expression"
            raise ParseError(
                f"negative exponent on {what}",
                tok[2],
                "negative exponents only on y_i or g_i",
            )
        return Pow(base, exp)

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.advance()
            return Num(tok[1])
        if tok[0] == "name":
            self.advance()
            name = tok[1]
            if name == "zeta":
                return Sym("zeta", 0)
            return Sym(name[0], int(name[1:]))
        if tok[0] == "(":
            self.advance()
            node = self.expr()
            self.expect(")", "')'")
            return node
        raise ParseError(
            f"unexpected {self._describe(tok)}", tok[2], "a number, name or '('"
        )


def parse(text: str):
    """Parse an expression into a tree; raises ParseError with position."""
    return _Parser(text).parse()


# -- evaluation ----------------------------------------------------------


def _eval(node, alg, mode: str):
    if isinstance(node, Num):
        return alg.scalar(node.value)
    if isinstance(node, Sym):
        return _eval_sym(node, alg, mode, 1)
    if isinstance(node, Neg):
        return -_eval(node.arg, alg, mode)
    if isinstance(node, Pow):
        if isinstance(node.base, Sym):
            return _eval_sym(node.base, alg, mode, node.exp)
        value = _eval(node.base, alg, mode)
        if node.exp < 0:
            raise EvalError("negative exponent on a compound expression")
        return value**node.exp
    if isinstance(node, BinOp):
        lhs = _eval(node.lhs, alg, mode)
        rhs = _eval(node.rhs, alg, mode)
        if node.op == "+":
            return lhs + rhs
        if node.op == "-":
            return lhs - rhs
        return lhs * rhs
    raise TypeError(f"not an expression node: {node!r}")


def _eval_sym(sym: Sym, alg, mode: str, exp: int):
    n = alg.n
    if sym.kind == "zeta":
        return alg.scalar(zeta_power(alg.ell, 1)) ** exp
    if sym.kind == "t":
        if not 1 <= sym.index <= n:
            raise EvalError(f"t{sym.index} out of range 1..{n}")
        return alg.scalar(alg.ring.t(sym.index)) ** exp
    if sym.kind == "g":
        if not 1 <= sym.index <= n:
            raise EvalError(f"g{sym.index} out of range 1..{n}")
        g = GroupElem.generator(n, alg.ell, sym.index) ** exp
        zero = (0,) * n
        return alg.monomial(zero, g)
    if sym.kind == "x":
        if mode != "hecke":
            raise EvalError("x-generators are not valid in the Laurent algebra")
        if not 1 <= sym.index <= n:
            raise EvalError(f"x{sym.index} out of range 1..{n}")
        return alg.gen_x(sym.index) ** exp
    if sym.kind == "y":
        if mode != "laurent":
            raise EvalError("y-generators are not valid in the Hecke algebra")
        if not 1 <= sym.index <= n:
            raise EvalError(f"y{sym.index} out of range 1..{n}")
        return alg.gen_y(sym.index, exp)
    raise EvalError(f"unknown symbol kind {sym.kind!r}")


def eval_hecke(expr, alg):
    """Evaluate a parse tree (or source text) in a HeckeAlgebra."""
    if isinstance(expr, str):
        expr = parse(expr)
    return _eval(expr, alg, "hecke")


def eval_laurent(expr, alg):
    """Evaluate a parse tree (or source text) in a LaurentAlgebra."""
    if isinstance(expr, str):
        expr = parse(expr)
    return _eval(expr, alg, "laurent")


def eval_scalar(expr, ell: int) -> Cyclotomic:
    """Evaluate a scalar literal over Q(zeta): numbers, zeta, +, -, *, ^."""
    if isinstance(expr, str):
        expr = parse(expr)

    def go(node):
        if isinstance(node, Num):
            return Cyclotomic.from_rational(ell, node.value)
        if isinstance(node, Sym):
            if node.kind == "zeta":
                return zeta_power(ell, 1)
            raise EvalError(f"{node.kind}{node.index or ''} is not a scalar")
        if isinstance(node, Neg):
            return -go(node.arg)
        if isinstance(node, Pow):
            return go(node.base) ** node.exp
        if isinstance(node, BinOp):
            lhs, rhs = go(node.lhs), go(node.rhs)
            if node.op == "+":
                return lhs + rhs
            if node.op == "-":
                return lhs - rhs
            return lhs * rhs
        raise TypeError(f"not an expression node: {node!r}")

    return go(expr)

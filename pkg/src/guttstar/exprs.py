"""Expression grammar for algebra elements, and the canonical printer.

grammar:
    expr     :=  ['-'] term (('+' | '-') term)*
    term     :=  factor ('*'? factor)*          -- juxtaposition multiplies
    factor   :=  atom ('^' INT)?
    atom     :=  RATIONAL | 'z' | NAME | '(' expr ')'
    RATIONAL :=  INT ('/' INT)?

NAME resolves against the algebra's basis; ``z`` is reserved for the
deformation variable.  Parse errors carry the offending position.  The
printer emits one fully expanded term per (monomial, z-power) pair, ordered
by degree, multi-index and z-exponent, in a form the parser accepts again.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .liealg import LieAlgebra
from .sym import SymElement, sym_mul
from .zpoly import PolyZ


class ExprError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_INT = re.compile(r"\d+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            m = _INT.match(text, pos)
            tokens.append(("int", m.group(), pos))
            pos = m.end()
        elif ch.isalpha() or ch == "_":
            m = _NAME.match(text, pos)
            tokens.append(("name", m.group(), pos))
            pos = m.end()
        elif ch in "+-*/^()":
            tokens.append(("op", ch, pos))
            pos += 1
        else:
            raise ExprError(f"unexpected character {ch!r}", pos)
    return tokens


class _Parser:
    def __init__(self, algebra: LieAlgebra, text: str):
        self.algebra = algebra
        self.tokens = _tokenize(text)
        self.index = 0
        self.end = len(text)
        self.names = {name: i for i, name in enumerate(algebra.basis_names)}
        if "z" in self.names:
            raise ExprError("basis name 'z' collides with the deformation variable", 0)

    def peek(self) -> tuple[str, str, int]:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return ("end", "", self.end)

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        self.index += 1
        return tok

    def at_op(self, *ops: str) -> bool:
        kind, value, _ = self.peek()
        return kind == "op" and value in ops

    def parse(self) -> SymElement:
        value = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ExprError(f"unexpected token {text!r}", pos)
        return value

    def expr(self) -> SymElement:
        negate = False
        if self.at_op("+", "-"):
            negate = self.take()[1] == "-"
        total = self.term()
        if negate:
            total = -total
        while self.at_op("+", "-"):
            op = self.take()[1]
            nxt = self.term()
            total = total - nxt if op == "-" else total + nxt
        return total

    def term(self) -> SymElement:
        total = self.factor()
        while True:
            if self.at_op("*"):
                self.take()
                total = sym_mul(total, self.factor())
            elif self.peek()[0] in ("int", "name") or self.at_op("("):
                total = sym_mul(total, self.factor())
            else:
                return total

    def factor(self) -> SymElement:
        base = self.atom()
        if self.at_op("^"):
            self.take()
            kind, value, pos = self.take()
            if kind != "int":
                raise ExprError("exponent must be a nonnegative integer", pos)
            return base ** int(value)
        return base

    def atom(self) -> SymElement:
        kind, value, pos = self.take()
        if kind == "int":
            numerator = int(value)
            if self.at_op("/"):
                self.take()
                kind2, value2, pos2 = self.take()
                if kind2 != "int":
                    raise ExprError("denominator must be an integer", pos2)
                if int(value2) == 0:
                    raise ExprError("zero denominator", pos2)
                return SymElement.unit(self.algebra, Fraction(numerator, int(value2)))
            return SymElement.unit(self.algebra, numerator)
        if kind == "name":
            if value == "z":
                return SymElement.unit(self.algebra, PolyZ.z())
            idx = self.names.get(value)
            if idx is None:
                raise ExprError(f"unknown basis name {value!r}", pos)
            return SymElement.basis(self.algebra, idx)
        if kind == "op" and value == "(":
            inner = self.expr()
            if not self.at_op(")"):
                raise ExprError("expected ')'", self.peek()[2])
            self.take()
            return inner
        raise ExprError(f"unexpected token {value!r}" if value else "unexpected end", pos)


def parse_element(algebra: LieAlgebra, text: str) -> SymElement:
    return _Parser(algebra, text).parse()


def format_element(x: SymElement) -> str:
    """Canonical rendering; parse_element(format_element(x)) == x."""
    names = x.algebra.basis_names
    atoms: list[tuple[str, bool]] = []
    for alpha, coeff in sorted(x.items(), key=lambda t: (sum(t[0]), t[0])):
        for z_exp, c in sorted(coeff.items()):
            factors = []
            if abs(c) != 1 or (z_exp == 0 and sum(alpha) == 0):
                mag = abs(c)
                factors.append(str(mag) if mag.denominator == 1 else f"({mag})")
            if z_exp == 1:
                factors.append("z")
            elif z_exp > 1:
                factors.append(f"z^{z_exp}")
            for i, a in enumerate(alpha):
                if a == 1:
                    factors.append(names[i])
                elif a > 1:
                    factors.append(f"{names[i]}^{a}")
            atoms.append(("*".join(factors), c < 0))
    if not atoms:
        return "0"
    out = []
    for k, (text, negative) in enumerate(atoms):
        if k == 0:
            out.append(f"-{text}" if negative else text)
        else:
            out.append(f" - {text}" if negative else f" + {text}")
    return "".join(out)

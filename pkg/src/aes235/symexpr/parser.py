"""Recursive-descent parser for the expression grammar.

Grammar (whitespace insignificant)::

    sum     := product (('+' | '-') product)*
    product := unary (('*' | '/') unary)*
    unary   := ('+' | '-') unary | power
    power   := primary ('^' unary)?          # exponent must be an integer
    primary := INTEGER | IDENT | IDENT '(' sum ')' | '(' sum ')'

Identifiers are chart variables or function names.  Ratio literals such as
``3/4`` come out of the division rule.  The reciprocal trigonometric and
hyperbolic names (cot, csc, sec, coth, csch, sech) are accepted and
rewritten to the core atoms at parse time.  ``sqrt`` requires a positive
integer literal argument.
"""

from __future__ import annotations

from typing import Iterator, Mapping, NamedTuple

import sympy as sp

from .core import CORE_FUNCTIONS, Chart, Expr, SymExprError

__all__ = ["parse", "ParseError", "UnknownIdentifierError"]


class ParseError(SymExprError):
    """Syntax error, carrying the 0-based position in the input text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownIdentifierError(ParseError):
    """An identifier that is neither a chart variable nor a function name."""


class _Token(NamedTuple):
    kind: str  # 'int' | 'ident' | 'op' | 'end'
    text: str
    pos: int


_OPS = set("+-*/^()")


def _tokenize(text: str) -> Iterator[_Token]:
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            yield _Token("int", text[i:j], i)
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            yield _Token("ident", text[i:j], i)
            i = j
            continue
        if c in _OPS:
            yield _Token("op", c, i)
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    yield _Token("end", "", n)


def _sugar(name: str, arg: sp.Expr) -> sp.Expr | None:
    if name == "cot":
        return sp.cos(arg) / sp.sin(arg)
    if name == "csc":
        return 1 / sp.sin(arg)
    if name == "sec":
        return 1 / sp.cos(arg)
    if name == "coth":
        return sp.cosh(arg) / sp.sinh(arg)
    if name == "csch":
        return 1 / sp.sinh(arg)
    if name == "sech":
        return 1 / sp.cosh(arg)
    return None


class _Parser:
    def __init__(self, text: str, chart: Chart, opaque: Mapping[str, sp.FunctionClass]):
        self.tokens = list(_tokenize(text))
        self.k = 0
        self.chart = chart
        self.opaque = opaque

    def peek(self) -> _Token:
        return self.tokens[self.k]

    def advance(self) -> _Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != op:
            raise ParseError(f"expected {op!r}", tok.pos)
        return self.advance()

    # grammar rules ------------------------------------------------------

    def sum(self) -> sp.Expr:
        value = self.product()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            rhs = self.product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def product(self) -> sp.Expr:
        value = self.unary()
        while self.peek().kind == "op" and self.peek().text in "*/":
            tok = self.advance()
            rhs = self.unary()
            if tok.text == "*":
                value = value * rhs
            else:
                if rhs.is_zero:
                    raise ParseError("division by zero", tok.pos)
                value = value / rhs
        return value

    def unary(self) -> sp.Expr:
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.advance()
            value = self.unary()
            return -value if tok.text == "-" else value
        return self.power()

    def power(self) -> sp.Expr:
        base = self.primary()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            epos = self.peek().pos
            exponent = self.unary()
            if not exponent.is_Integer:
                raise ParseError("exponent must be an integer", epos)
            if base.is_zero and exponent < 0:
                raise ParseError("division by zero", epos)
            return base ** exponent
        return base

    def primary(self) -> sp.Expr:
        tok = self.advance()
        if tok.kind == "int":
            return sp.Integer(int(tok.text))
        if tok.kind == "op" and tok.text == "(":
            value = self.sum()
            self.expect_op(")")
            return value
        if tok.kind == "ident":
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "(":
                return self.call(tok)
            if tok.text in self.chart._by_name:
                return self.chart.symbol(tok.text)
            raise UnknownIdentifierError(f"unknown identifier {tok.text!r}", tok.pos)
        raise ParseError("expected an expression", tok.pos)

    def call(self, name_tok: _Token) -> sp.Expr:
        name = name_tok.text
        self.expect_op("(")
        apos = self.peek().pos
        arg = self.sum()
        self.expect_op(")")
        if name == "sqrt":
            if not (arg.is_Integer and arg > 0):
                raise ParseError("sqrt expects a positive integer literal", apos)
            return sp.sqrt(arg)
        if name in CORE_FUNCTIONS:
            return CORE_FUNCTIONS[name](arg)
        rewritten = _sugar(name, arg)
        if rewritten is not None:
            return rewritten
        if name in self.opaque:
            return self.opaque[name](arg)
        raise UnknownIdentifierError(f"unknown function {name!r}", name_tok.pos)


def parse(text: str, chart: Chart, opaque: Mapping[str, sp.FunctionClass] | None = None) -> Expr:
    """Parse ``text`` over ``chart`` into an expression tree.

    ``opaque`` optionally whitelists extra function names, mapped to sympy
    function classes; anything else unknown raises
    :class:`UnknownIdentifierError` with its position.
    """
    parser = _Parser(text, chart, opaque or {})
    value = parser.sum()
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected trailing input {tok.text!r}", tok.pos)
    return Expr(value, chart)

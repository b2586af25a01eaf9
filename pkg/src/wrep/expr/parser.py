"""Recursive-descent parser for the expression grammar.

Grammar (EBNF)::

    expr     = term { ("+" | "-") term } ;
    term     = unary { ("*" | "/") unary } ;
    unary    = ("-" | "+") unary | power ;
    power    = atom [ "^" exponent ] ;
    exponent = [ "-" ] INTEGER | "(" [ "-" ] INTEGER ")" ;
    atom     = NUMBER | "z" | "i" | "pi"
             | FUNCTION "(" expr ")"
             | "(" expr ")" ;
    FUNCTION = "exp" | "log" | "sin" | "cos" | "sinh" | "cosh" | "sqrt" ;
    NUMBER   = DIGITS [ "." [ DIGITS ] ] [ EXPONENT ] | "." DIGITS [ EXPONENT ] ;
    EXPONENT = ( "e" | "E" ) [ "+" | "-" ] DIGITS ;
    INTEGER  = DIGITS ;

Whitespace between tokens is ignored.  Multiplication is never implicit, so
``2z`` and ``2 exp(z)`` are syntax errors.  ``a^b^c`` is rejected rather than
given an associativity.
"""

import math
import re

from ..errors import ExprSyntaxError, UnknownIdentifierError
from .nodes import FUNCTIONS, Add, Div, Func, Lit, Mul, Neg, Pow, Sub, Var

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)

_ATOM_START = frozenset({"number", "identifier", "'('"})
_UNARY_START = _ATOM_START | {"'-'", "'+'"}
_AFTER_OPERAND = frozenset({"'+'", "'-'", "'*'", "'/'", "'^'", "')'", "end of input"})


class _Token:
    __slots__ = ("kind", "text", "offset")

    def __init__(self, kind, text, offset):
        self.kind = kind
        self.text = text
        self.offset = offset


def _tokenize(src):
    tokens = []
    pos = 0
    boffset = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {src[pos]!r}", boffset, _UNARY_START)
        text = m.group()
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, text, boffset))
        pos = m.end()
        boffset += len(text.encode("utf-8"))
    tokens.append(_Token("end", "", boffset))
    return tokens


class _Parser:
    def __init__(self, src):
        self.tokens = _tokenize(src)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def at_op(self, sym):
        return self.tok.kind == "op" and self.tok.text == sym

    def advance(self):
        t = self.tok
        self.i += 1
        return t

    def fail(self, expected, what=None):
        t = self.tok
        if what is None:
            what = "unexpected end of input" if t.kind == "end" else f"unexpected {t.text!r}"
        raise ExprSyntaxError(what, t.offset, expected)

    def expect_op(self, sym):
        if not self.at_op(sym):
            self.fail({f"'{sym}'"})
        self.advance()

    def parse(self):
        e = self.expr()
        if self.tok.kind != "end":
            self.fail(_AFTER_OPERAND)
        return e

    def expr(self):
        e = self.term()
        while self.at_op("+") or self.at_op("-"):
            cls = Add if self.advance().text == "+" else Sub
            e = cls(e, self.term())
        return e

    def term(self):
        e = self.unary()
        while self.at_op("*") or self.at_op("/"):
            cls = Mul if self.advance().text == "*" else Div
            e = cls(e, self.unary())
        return e

    def unary(self):
        if self.at_op("-"):
            self.advance()
            return Neg(self.unary())
        if self.at_op("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            e = Pow(base, self.exponent())
            if self.at_op("^"):
                self.fail(_AFTER_OPERAND - {"'^'"}, "chained '^' needs parentheses")
            return e
        return base

    def exponent(self):
        paren = self.at_op("(")
        if paren:
            self.advance()
        sign = 1
        if self.at_op("-"):
            self.advance()
            sign = -1
        t = self.tok
        if t.kind != "num" or not t.text.isdigit():
            self.fail({"integer"}, "exponent must be an integer literal")
        self.advance()
        if paren:
            self.expect_op(")")
        return sign * int(t.text)

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Lit(float(t.text))
        if t.kind == "ident":
            self.advance()
            if t.text == "z":
                return Var()
            if t.text == "i":
                return Lit(1j)
            if t.text == "pi":
                return Lit(math.pi)
            if t.text in FUNCTIONS:
                self.expect_op("(")
                arg = self.expr()
                self.expect_op(")")
                return Func(t.text, arg)
            raise UnknownIdentifierError(t.text, t.offset)
        if self.at_op("("):
            self.advance()
            e = self.expr()
            self.expect_op(")")
            return e
        self.fail(_UNARY_START)


def parse(src):
    """Parse expression text into an AST.

    >>> parse("1 - z^2")
    Sub(Lit(1), Pow(Var(z), 2))

    Raises
    ------
    ExprSyntaxError
        With ``offset`` (bytes) and ``expected`` token set.
    UnknownIdentifierError
        For names other than ``z``, ``i``, ``pi`` and the known functions.
    """
    if not isinstance(src, str):
        raise TypeError("expression source must be str")
    return _Parser(src).parse()

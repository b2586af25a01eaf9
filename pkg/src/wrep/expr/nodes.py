"""Immutable AST for complex-analytic expressions in one variable ``z``."""

from dataclasses import dataclass
import math

FUNCTIONS = ("exp", "log", "sin", "cos", "sinh", "cosh", "sqrt")

# binding strength used by the printer; higher binds tighter
_PREC_ADD = 1
_PREC_MUL = 2
_PREC_NEG = 3
_PREC_POW = 4
_PREC_ATOM = 5


def lift(value):
    """Turn numbers into :class:`Lit`; pass expressions through."""
    if isinstance(value, Expr):
        return value
    if isinstance(value, (int, float, complex)):
        return Lit(value)
    raise TypeError(f"cannot use {type(value).__name__} in an expression")


class Expr:
    """Base class.  Operators build nodes without simplifying."""

    __slots__ = ()

    def __add__(self, other):
        return Add(self, lift(other))

    def __radd__(self, other):
        return Add(lift(other), self)

    def __sub__(self, other):
        return Sub(self, lift(other))

    def __rsub__(self, other):
        return Sub(lift(other), self)

    def __mul__(self, other):
        return Mul(self, lift(other))

    def __rmul__(self, other):
        return Mul(lift(other), self)

    def __truediv__(self, other):
        return Div(self, lift(other))

    def __rtruediv__(self, other):
        return Div(lift(other), self)

    def __pow__(self, n):
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError("exponents must be integers")
        return Pow(self, n)

    def __neg__(self):
        return Neg(self)

    def __str__(self):
        return to_text(self)

    def children(self):
        return ()


@dataclass(frozen=True, eq=True)
class Lit(Expr):
    value: complex

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))

    def __repr__(self):
        v = self.value
        if v.imag == 0:
            return f"Lit({_fmt_real(v.real)})"
        return f"Lit({v!r})"


@dataclass(frozen=True, eq=True)
class Var(Expr):
    def __repr__(self):
        return "Var(z)"


@dataclass(frozen=True, eq=True, repr=False)
class Neg(Expr):
    arg: Expr

    def __repr__(self):
        return f"Neg({self.arg!r})"

    def children(self):
        return (self.arg,)


@dataclass(frozen=True, eq=True, repr=False)
class _Binary(Expr):
    left: Expr
    right: Expr

    def __repr__(self):
        return f"{type(self).__name__}({self.left!r}, {self.right!r})"

    def children(self):
        return (self.left, self.right)


class Add(_Binary):
    symbol = "+"


class Sub(_Binary):
    symbol = "-"


class Mul(_Binary):
    symbol = "*"


class Div(_Binary):
    symbol = "/"


@dataclass(frozen=True, eq=True, repr=False)
class Pow(Expr):
    base: Expr
    exponent: int

    def __repr__(self):
        return f"Pow({self.base!r}, {self.exponent})"

    def __post_init__(self):
        if not isinstance(self.exponent, int) or isinstance(self.exponent, bool):
            raise TypeError("Pow exponent must be an int")

    def children(self):
        return (self.base,)


@dataclass(frozen=True, eq=True, repr=False)
class Func(Expr):
    name: str
    arg: Expr

    def __repr__(self):
        return f"{self.name.capitalize()}({self.arg!r})"

    def __post_init__(self):
        if self.name not in FUNCTIONS:
            raise ValueError(f"unknown function {self.name!r}")

    def children(self):
        return (self.arg,)


Z = Var()
I = Lit(1j)


def _fmt_real(x):
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def _lit_text(v):
    """Return (text, precedence) for a literal."""
    if v.imag == 0:
        x = v.real
        if math.copysign(1.0, x) < 0:
            return "-" + _fmt_real(-x), _PREC_NEG
        return _fmt_real(x), _PREC_ATOM
    if v == 1j:
        return "i", _PREC_ATOM
    if v.real == 0:
        im, _ = _lit_text(complex(v.imag))
        return f"({im}*i)", _PREC_ATOM
    re, _ = _lit_text(complex(v.real))
    im, _ = _lit_text(complex(v.imag))
    return f"({re} + {im}*i)", _PREC_ATOM


def _text(e):
    if isinstance(e, Lit):
        return _lit_text(e.value)
    if isinstance(e, Var):
        return "z", _PREC_ATOM
    if isinstance(e, Func):
        return f"{e.name}({_text(e.arg)[0]})", _PREC_ATOM
    if isinstance(e, Neg):
        s, p = _text(e.arg)
        if p < _PREC_NEG:
            s = f"({s})"
        return "-" + s, _PREC_NEG
    if isinstance(e, Pow):
        s, p = _text(e.base)
        if p < _PREC_ATOM:
            s = f"({s})"
        return f"{s}^{e.exponent}", _PREC_POW
    if isinstance(e, _Binary):
        prec = _PREC_ADD if isinstance(e, (Add, Sub)) else _PREC_MUL
        ls, lp = _text(e.left)
        rs, rp = _text(e.right)
        if lp < prec:
            ls = f"({ls})"
        # parser is left-associative, so equal precedence on the right needs parens
        if rp <= prec:
            rs = f"({rs})"
        sep = f" {e.symbol} " if prec == _PREC_ADD else e.symbol
        return ls + sep + rs, prec
    raise TypeError(f"not an expression node: {e!r}")


def to_text(e):
    """Render ``e`` in the input grammar with minimal parentheses."""
    return _text(e)[0]

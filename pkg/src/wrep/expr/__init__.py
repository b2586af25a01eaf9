"""Complex-analytic expressions in one variable ``z``: parse, print, evaluate, differentiate."""

from .calculus import constant_fold, differentiate, evaluate
from .nodes import FUNCTIONS, Add, Div, Expr, Func, I, Lit, Mul, Neg, Pow, Sub, Var, Z, lift, to_text
from .parser import parse


def as_expr(e):
    """Accept expression text, a number or an existing AST."""
    if isinstance(e, str):
        return parse(e)
    return lift(e)


__all__ = [
    "FUNCTIONS", "Add", "Div", "Expr", "Func", "I", "Lit", "Mul", "Neg", "Pow", "Sub",
    "Var", "Z", "as_expr", "constant_fold", "differentiate", "evaluate", "lift", "parse",
    "to_text",
]

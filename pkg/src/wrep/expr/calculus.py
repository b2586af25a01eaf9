"""Evaluation, symbolic differentiation and constant folding."""

import numpy as np

from ..errors import SingularEvaluationError
from .nodes import Add, Div, Expr, Func, Lit, Mul, Neg, Pow, Sub, Var, lift

_NUMPY_FUNCS = {
    "exp": np.exp,
    "log": np.log,
    "sin": np.sin,
    "cos": np.cos,
    "sinh": np.sinh,
    "cosh": np.cosh,
    "sqrt": np.sqrt,
}


def _ipow(x, n):
    """Integer power by repeated squaring; negative ``n`` divides at the end."""
    m = abs(n)
    result = np.ones_like(x)
    base = x
    while m:
        if m & 1:
            result = result * base
        m >>= 1
        if m:
            base = base * base
    if n < 0:
        result = 1.0 / result
    return result


class _Evaluator:
    def __init__(self, z, strict):
        self.z = z
        self.strict = strict

    def check(self, node, value, *inputs):
        bad = ~np.isfinite(value)
        if not bad.any():
            return value
        for arg in inputs:
            bad &= np.isfinite(arg)
        if bad.any():
            if self.strict:
                zb = np.broadcast_to(self.z, bad.shape)[bad]
                raise SingularEvaluationError(zb.flat[0], node)
            value = np.where(bad, np.nan, value)
        return value

    def __call__(self, e):
        if isinstance(e, Lit):
            return np.full(self.z.shape, e.value, dtype=np.complex128)
        if isinstance(e, Var):
            return self.z
        if isinstance(e, Neg):
            return -self(e.arg)
        if isinstance(e, Pow):
            b = self(e.base)
            return self.check(e, _ipow(b, e.exponent), b)
        if isinstance(e, Func):
            a = self(e.arg)
            return self.check(e, _NUMPY_FUNCS[e.name](a), a)
        a = self(e.left)
        b = self(e.right)
        if isinstance(e, Add):
            v = a + b
        elif isinstance(e, Sub):
            v = a - b
        elif isinstance(e, Mul):
            v = a * b
        elif isinstance(e, Div):
            v = a / b
        else:
            raise TypeError(f"not an expression node: {e!r}")
        return self.check(e, v, a, b)


def evaluate(e, z, on_singular="raise"):
    """Evaluate ``e`` at ``z`` (scalar or array) with principal branches.

    Parameters
    ----------
    e : Expr
    z : complex or array_like of complex
    on_singular : {"raise", "nan"}
        ``"raise"`` throws :class:`SingularEvaluationError` naming the first
        offending ``z`` and subexpression.  ``"nan"`` marks those entries NaN,
        which is what grid samplers use to skip bad points.
    """
    if on_singular not in ("raise", "nan"):
        raise ValueError("on_singular must be 'raise' or 'nan'")
    scalar = np.ndim(z) == 0
    zz = np.asarray(z, dtype=np.complex128)
    with np.errstate(all="ignore"):
        out = _Evaluator(zz, on_singular == "raise")(e)
    if scalar:
        return complex(out)
    return out


def _derive(e):
    if isinstance(e, Lit):
        return Lit(0)
    if isinstance(e, Var):
        return Lit(1)
    if isinstance(e, Neg):
        return Neg(_derive(e.arg))
    if isinstance(e, Add):
        return Add(_derive(e.left), _derive(e.right))
    if isinstance(e, Sub):
        return Sub(_derive(e.left), _derive(e.right))
    if isinstance(e, Mul):
        return Add(Mul(_derive(e.left), e.right), Mul(e.left, _derive(e.right)))
    if isinstance(e, Div):
        num = Sub(Mul(_derive(e.left), e.right), Mul(e.left, _derive(e.right)))
        return Div(num, Pow(e.right, 2))
    if isinstance(e, Pow):
        n = e.exponent
        if n == 0:
            return Lit(0)
        return Mul(Mul(Lit(n), Pow(e.base, n - 1)), _derive(e.base))
    if isinstance(e, Func):
        u = e.arg
        du = _derive(u)
        outer = {
            "exp": lambda: e,
            "log": lambda: Div(Lit(1), u),
            "sin": lambda: Func("cos", u),
            "cos": lambda: Neg(Func("sin", u)),
            "sinh": lambda: Func("cosh", u),
            "cosh": lambda: Func("sinh", u),
            "sqrt": lambda: Div(Lit(1), Mul(Lit(2), e)),
        }[e.name]()
        return Mul(outer, du)
    raise TypeError(f"not an expression node: {e!r}")


def differentiate(e):
    """Return ``de/dz`` as a new, constant-folded expression."""
    return constant_fold(_derive(lift(e)))


def _is(e, value):
    return isinstance(e, Lit) and e.value == value


def _fold_lit(node):
    try:
        return Lit(evaluate(node, 0j))
    except SingularEvaluationError:
        # keep e.g. 1/0 unfolded so evaluation still reports it
        return node


def constant_fold(e):
    """Collapse literal subtrees and drop additive zeros / multiplicative ones.

    Only exact identities are applied (no reassociation), so values are
    unchanged apart from the rounding of the folded literal arithmetic itself.
    """
    e = lift(e)
    if isinstance(e, (Lit, Var)):
        return e
    if isinstance(e, Neg):
        a = constant_fold(e.arg)
        if isinstance(a, Lit):
            return Lit(-a.value)
        if isinstance(a, Neg):
            return a.arg
        return Neg(a)
    if isinstance(e, Func):
        a = constant_fold(e.arg)
        node = Func(e.name, a)
        return _fold_lit(node) if isinstance(a, Lit) else node
    if isinstance(e, Pow):
        b = constant_fold(e.base)
        if e.exponent == 1:
            return b
        if e.exponent == 0:
            return Lit(1)
        node = Pow(b, e.exponent)
        return _fold_lit(node) if isinstance(b, Lit) else node
    a = constant_fold(e.left)
    b = constant_fold(e.right)
    node = type(e)(a, b)
    if isinstance(a, Lit) and isinstance(b, Lit):
        return _fold_lit(node)
    if isinstance(e, Add):
        if _is(a, 0):
            return b
        if _is(b, 0):
            return a
    elif isinstance(e, Sub):
        if _is(b, 0):
            return a
        if _is(a, 0):
            return Neg(b)
    elif isinstance(e, Mul):
        if _is(a, 0) or _is(b, 0):
            return Lit(0)
        if _is(a, 1):
            return b
        if _is(b, 1):
            return a
        if _is(a, -1):
            return Neg(b)
        if _is(b, -1):
            return Neg(a)
    elif isinstance(e, Div):
        if _is(b, 1):
            return a
    return node

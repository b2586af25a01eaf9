"""Exception hierarchy shared by all wrep modules."""


class WrepError(Exception):
    """Base class for every error raised by wrep."""


class ExprSyntaxError(WrepError):
    """Raised when expression text does not match the grammar.

    Attributes
    ----------
    offset : int
        Byte offset into the source where parsing failed.
    expected : frozenset of str
        Token kinds that would have been accepted at ``offset``.
    """

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        exp = ", ".join(sorted(self.expected))
        detail = f" (expected one of: {exp})" if exp else ""
        super().__init__(f"{message} at offset {offset}{detail}")


class UnknownIdentifierError(ExprSyntaxError):
    """An identifier that is neither ``z``, ``i``, ``pi`` nor a known function."""

    def __init__(self, name, offset):
        self.name = name
        super().__init__(f"unknown identifier {name!r}", offset)


class NumericalError(WrepError):
    """Base for failures of numerical evaluation (CLI exit status 3)."""


class SingularEvaluationError(NumericalError):
    """Evaluation hit a pole, a branch point or an overflow.

    Attributes
    ----------
    z : complex
        Parameter value at which evaluation failed.
    subexpr : object
        The offending subexpression (an expression node) when known.
    """

    def __init__(self, z, subexpr=None, reason="singular evaluation"):
        self.z = complex(z)
        self.subexpr = subexpr
        where = f" in {subexpr}" if subexpr is not None else ""
        super().__init__(f"{reason} at z={self.z}{where}")


class PathSingularityError(NumericalError):
    """An integration path passes within the exclusion radius of a singularity."""

    def __init__(self, z, singularity, radius):
        self.z = complex(z)
        self.singularity = complex(singularity)
        self.radius = radius
        super().__init__(
            f"integration path to z={self.z} passes within {radius} "
            f"of singularity {self.singularity}"
        )


class QuadratureError(NumericalError):
    """Adaptive quadrature failed to reach the requested tolerance."""

    def __init__(self, z, error_estimate, tol):
        self.z = complex(z)
        self.error_estimate = float(error_estimate)
        self.tol = tol
        super().__init__(
            f"quadrature did not converge for z={self.z}: "
            f"error estimate {self.error_estimate:.3e} > tol {tol:.1e}"
        )


class DegeneratePointError(NumericalError):
    """The immersion degenerates (x_u and x_v parallel); carries E*G - F**2."""

    def __init__(self, discriminant, z=None):
        self.discriminant = float(discriminant)
        self.z = None if z is None else complex(z)
        at = f" at z={self.z}" if z is not None else ""
        super().__init__(f"degenerate point{at}: EG - F^2 = {self.discriminant:.3e}")


class AllSamplesSkippedError(NumericalError):
    """Every sample of a parameter grid was singular, excluded or degenerate."""


class EmptyMeshError(NumericalError):
    """Triangulation produced no faces."""

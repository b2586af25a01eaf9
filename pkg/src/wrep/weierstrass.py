"""Weierstrass data, the null curve phi, and the surface x = Re(integral of phi).

Derivatives of the surface are never obtained numerically here: the
z-derivative of the integral is phi itself, and phi' comes from symbolic
differentiation, so ``x_u = Re phi``, ``x_v = -Im phi``, ``x_uu = Re phi'``,
``x_vv = -Re phi'`` and ``x_uv = -Im phi'``.
"""

from dataclasses import dataclass, field, replace

import numpy as np

from .cplx import im_vec, re_vec
from .errors import PathSingularityError, SingularEvaluationError
from .expr import Lit, Mul, Add, Sub, Pow, as_expr, differentiate, evaluate
from .quadrature import integrate_segments

DEFAULT_QUAD_TOL = 1e-10


@dataclass(frozen=True)
class SingularityPolicy:
    """How samples near declared singularities are treated.

    ``behavior`` is ``"skip"`` (drop and count the sample) or ``"error"``.
    """

    exclusion_radius: float = 1e-3
    behavior: str = "skip"

    def __post_init__(self):
        if not self.exclusion_radius > 0:
            raise ValueError("exclusion_radius must be positive")
        if self.behavior not in ("skip", "error"):
            raise ValueError("behavior must be 'skip' or 'error'")


@dataclass(frozen=True)
class WeierstrassData:
    """The null vector ``phi`` as expressions, plus its derivative.

    Build with :func:`make_phi` from ``(f, g)`` or :func:`from_phi` when the
    three components are supplied directly (the route for data where ``g``
    has poles but ``f g^2`` is analytic).
    """

    phi: tuple
    dphi: tuple
    f: object = None
    g: object = None
    basepoint: complex = 0j
    policy: SingularityPolicy = field(default_factory=SingularityPolicy)
    singularities: tuple = ()
    note: str = ""

    def __post_init__(self):
        object.__setattr__(self, "basepoint", complex(self.basepoint))
        object.__setattr__(self, "singularities", tuple(complex(s) for s in self.singularities))

    @property
    def mode(self):
        return "phi" if self.f is None else "fg"

    def with_basepoint(self, z0):
        return replace(self, basepoint=complex(z0))


def make_phi(f, g, basepoint=0j, policy=None, singularities=(), note=""):
    """Build ``phi = (f(1 - g^2), i f (1 + g^2), 2 f g)`` from expressions or text.

    >>> d = make_phi("1", "z")
    >>> [str(p) for p in d.phi]
    ['1*(1 - z^2)', 'i*1*(1 + z^2)', '2*1*z']
    """
    f = as_expr(f)
    g = as_expr(g)
    g2 = Pow(g, 2)
    phi = (
        Mul(f, Sub(Lit(1), g2)),
        Mul(Mul(Lit(1j), f), Add(Lit(1), g2)),
        Mul(Mul(Lit(2), f), g),
    )
    return WeierstrassData(
        phi=phi,
        dphi=tuple(differentiate(p) for p in phi),
        f=f,
        g=g,
        basepoint=basepoint,
        policy=policy or SingularityPolicy(),
        singularities=singularities,
        note=note,
    )


def from_phi(phi1, phi2, phi3, basepoint=0j, policy=None, singularities=(), note=""):
    """Direct-phi mode: the caller vouches that ``phi . phi = 0``.

    Nothing is enforced at construction; the verification report's
    ``phi_square_zero`` check is what validates it.
    """
    phi = tuple(as_expr(p) for p in (phi1, phi2, phi3))
    return WeierstrassData(
        phi=phi,
        dphi=tuple(differentiate(p) for p in phi),
        basepoint=basepoint,
        policy=policy or SingularityPolicy(),
        singularities=singularities,
        note=note,
    )


def _near_singularity(d, z):
    z = np.asarray(z, dtype=np.complex128)
    near = np.zeros(z.shape, dtype=bool)
    for s in d.singularities:
        near |= np.abs(z - s) < d.policy.exclusion_radius
    return near


def _eval_triple(d, exprs, z, on_singular):
    scalar = np.ndim(z) == 0
    zz = np.asarray(z, dtype=np.complex128)
    near = _near_singularity(d, zz)
    if on_singular == "raise" and near.any():
        raise SingularEvaluationError(zz[near].flat[0], reason="sample inside exclusion radius")
    out = np.stack([evaluate(e, zz, on_singular) for e in exprs], axis=-1)
    if near.any():
        out[near] = np.nan
    return out.reshape(3) if scalar else out


def phi_at(d, z, on_singular="raise"):
    """Evaluate phi; returns shape ``z.shape + (3,)``."""
    return _eval_triple(d, d.phi, z, on_singular)


def dphi_at(d, z, on_singular="raise"):
    return _eval_triple(d, d.dphi, z, on_singular)


@dataclass(frozen=True)
class IntegrationPath:
    """Polyline from the basepoint to the target.

    ``kind`` is ``"straight"`` (one segment) or ``"axis"`` (horizontal leg
    first, then vertical).
    """

    kind: str
    waypoints: tuple

    def __post_init__(self):
        if self.kind not in ("straight", "axis"):
            raise ValueError("kind must be 'straight' or 'axis'")
        pts = tuple(complex(w) for w in self.waypoints)
        if len(pts) < 2:
            raise ValueError("a path needs at least two waypoints")
        if any(p == q for p, q in zip(pts, pts[1:])):
            raise ValueError("consecutive waypoints must be distinct")
        object.__setattr__(self, "waypoints", pts)

    @classmethod
    def straight(cls, z0, z):
        return cls("straight", (z0, z))

    @classmethod
    def axis_aligned(cls, z0, z):
        z0, z = complex(z0), complex(z)
        corner = complex(z.real, z0.imag)
        pts = [z0]
        for p in (corner, z):
            if p != pts[-1]:
                pts.append(p)
        return cls("axis", tuple(pts))


def _segments(z0, z, kind):
    """Lists of segment start/end arrays for a batch of targets."""
    if kind == "straight":
        return [(np.full(z.shape, z0), z)]
    if kind == "axis":
        corner = z.real + 1j * z0.imag
        return [(np.full(z.shape, z0), corner), (corner, z)]
    raise ValueError(f"unknown path kind {kind!r}")


def _segment_distance(p, q, s):
    d = q - p
    dd = np.abs(d) ** 2
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.where(dd > 0, ((s - p) * np.conj(d)).real / dd, 0.0)
    t = np.clip(t, 0.0, 1.0)
    return np.abs(p + t * d - s)


def integrate_phi(d, z, path="straight", tol=DEFAULT_QUAD_TOL, on_singular="raise"):
    """Integrate phi from the basepoint to ``z``.

    Parameters
    ----------
    d : WeierstrassData
    z : complex or array_like of complex
    path : {"straight", "axis"} or IntegrationPath
        An explicit :class:`IntegrationPath` must run from ``d.basepoint`` to
        a scalar ``z``.
    tol : float
        Absolute quadrature tolerance per component.
    on_singular : {"raise", "nan"}
        With ``"nan"``, targets whose path meets a singularity get NaN rows.

    Returns
    -------
    ndarray of complex, shape ``z.shape + (3,)``
    """
    scalar = np.ndim(z) == 0
    zz = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    shape = zz.shape
    zz = zz.ravel()
    z0 = d.basepoint

    if isinstance(path, IntegrationPath):
        if not scalar:
            raise ValueError("an explicit IntegrationPath needs a scalar target")
        if path.waypoints[0] != z0 or path.waypoints[-1] != zz[0]:
            raise ValueError("path must run from the basepoint to z")
        pts = path.waypoints
        segs = [(np.array([p]), np.array([q])) for p, q in zip(pts, pts[1:])]
    else:
        segs = _segments(z0, zz, path)

    def integrand(w):
        return phi_at(d, w, on_singular="nan")

    total = np.zeros((zz.size, 3), dtype=np.complex128)
    blocked = np.zeros(zz.size, dtype=bool)
    for p, q in segs:
        for s in d.singularities:
            hit = _segment_distance(p, q, s) < d.policy.exclusion_radius
            if hit.any() and on_singular == "raise":
                raise PathSingularityError(zz[hit][0], s, d.policy.exclusion_radius)
            blocked |= hit
        vals, _ = integrate_segments(integrand, p, q, tol=tol, on_fail=on_singular)
        total += vals

    bad = blocked | ~np.isfinite(total).all(axis=1)
    if bad.any():
        if on_singular == "raise":
            raise SingularEvaluationError(zz[bad][0], reason="singular integrand along path")
        total[bad] = np.nan
    total = total.reshape(shape + (3,))
    return total[0] if scalar else total


def surface_point(d, z, path="straight", tol=DEFAULT_QUAD_TOL, on_singular="raise"):
    """``x = Re Phi(z)``."""
    return re_vec(integrate_phi(d, z, path=path, tol=tol, on_singular=on_singular))


def first_derivs(d, z, on_singular="raise"):
    """``(x_u, x_v) = (Re phi, -Im phi)``."""
    p = phi_at(d, z, on_singular)
    return re_vec(p), -im_vec(p)


def second_derivs(d, z, on_singular="raise"):
    """``(x_uu, x_vv, x_uv) = (Re phi', -Re phi', -Im phi')``."""
    dp = dphi_at(d, z, on_singular)
    x_uu = re_vec(dp)
    return x_uu, -x_uu, -im_vec(dp)

"""Normals, first fundamental form and mean curvature of parametrized surfaces.

The mean curvature vector is evaluated from the isothermal-friendly formula

    H = P_n (G x_uu - 2 F x_uv + E x_vv) / (E G - F^2)

with ``P_n`` the projection onto the unit normal.  This carries no factor 1/2,
so on a sphere of radius R it has magnitude 2/R.  The textbook scalar
``(eG - 2fF + gE) / (2(EG - F^2))`` is provided separately as a cross-check;
the ratio between the two is measured by :func:`convention_constant`.
"""

from dataclasses import dataclass

import numpy as np

from .cplx import cross, dot_real, norm_sq
from .errors import DegeneratePointError
from .weierstrass import first_derivs, second_derivs, surface_point

DEGENERACY_REL = 1e-14


def _discriminant(E, F, G):
    return E * G - F * F


def _is_degenerate(E, F, G):
    return _discriminant(E, F, G) < DEGENERACY_REL * (E * G + 1.0)


def unit_normal(x_u, x_v):
    """``cross(x_u, x_v)`` normalized; raises at degenerate points."""
    E, F, G = norm_sq(x_u), dot_real(x_u, x_v), norm_sq(x_v)
    deg = _is_degenerate(E, F, G)
    if np.any(deg):
        raise DegeneratePointError(np.min(_discriminant(E, F, G)))
    c = cross(x_u, x_v)
    return c / np.sqrt(norm_sq(c))[..., None]


def project_normal(v, n):
    """Component of ``v`` along the unit vector ``n``."""
    return dot_real(v, n)[..., None] * np.asarray(n, dtype=float)


@dataclass(frozen=True)
class SurfaceSample:
    """Everything known at one parameter value (or a batch, along leading axes).

    Degenerate entries carry NaN in ``normal``, ``H_vec`` and ``H_scalar``.
    """

    z: object
    x: np.ndarray
    x_u: np.ndarray
    x_v: np.ndarray
    x_uu: np.ndarray
    x_vv: np.ndarray
    x_uv: np.ndarray
    normal: np.ndarray
    E: np.ndarray
    F: np.ndarray
    G: np.ndarray
    H_vec: np.ndarray
    H_scalar: np.ndarray
    degenerate: np.ndarray

    def __getitem__(self, idx):
        vals = {}
        for name in self.__dataclass_fields__:
            v = getattr(self, name)
            vals[name] = v[idx] if isinstance(v, np.ndarray) else v
        return SurfaceSample(**vals)


def build_sample(z, x, x_u, x_v, x_uu, x_vv, x_uv):
    """Assemble a :class:`SurfaceSample` from position and derivatives."""
    x, x_u, x_v, x_uu, x_vv, x_uv = (
        np.asarray(a, dtype=float) for a in (x, x_u, x_v, x_uu, x_vv, x_uv)
    )
    E, F, G = norm_sq(x_u), dot_real(x_u, x_v), norm_sq(x_v)
    deg = _is_degenerate(E, F, G) | ~np.isfinite(E * G)
    c = cross(x_u, x_v)
    with np.errstate(invalid="ignore", divide="ignore"):
        n = c / np.sqrt(norm_sq(c))[..., None]
        n = np.where(deg[..., None], np.nan, n)
        num = G[..., None] * x_uu - 2.0 * F[..., None] * x_uv + E[..., None] * x_vv
        H_vec = project_normal(num, n) / _discriminant(E, F, G)[..., None]
    H_scalar = dot_real(H_vec, n)
    if isinstance(z, np.ndarray) and z.ndim == 0:
        z = complex(z)
    return SurfaceSample(
        z=z, x=x, x_u=x_u, x_v=x_v, x_uu=x_uu, x_vv=x_vv, x_uv=x_uv,
        normal=n, E=E, F=F, G=G, H_vec=H_vec, H_scalar=H_scalar, degenerate=deg,
    )


def _require_regular(s):
    if np.any(s.degenerate):
        disc = _discriminant(s.E, s.F, s.G)
        raise DegeneratePointError(np.min(disc), s.z if np.ndim(s.z) == 0 else None)


def mean_curvature_vector(s):
    """The normal-projected mean curvature vector (magnitude 2/R on a sphere)."""
    _require_regular(s)
    return s.H_vec


def mean_curvature_crosscheck(s):
    """Textbook scalar mean curvature ``(eG - 2fF + gE) / (2(EG - F^2))``.

    The second fundamental form coefficients are taken against
    ``normal = cross(x_u, x_v) / |cross(x_u, x_v)|``.
    """
    _require_regular(s)
    e = dot_real(s.x_uu, s.normal)
    f = dot_real(s.x_uv, s.normal)
    g = dot_real(s.x_vv, s.normal)
    return (e * s.G - 2.0 * f * s.F + g * s.E) / (2.0 * _discriminant(s.E, s.F, s.G))


def fd_derivatives(point, z, h=1e-4):
    """Central differences of a surface map ``point(z) -> (..., 3)``.

    Returns ``(x, x_u, x_v, x_uu, x_vv, x_uv)``; ``u`` and ``v`` are the real
    and imaginary parts of ``z``.  All nine stencil points go through a
    single call to ``point``.
    """
    z = np.asarray(z, dtype=np.complex128)
    offsets = np.array([0, h, -h, 1j * h, -1j * h,
                        h + 1j * h, h - 1j * h, -h + 1j * h, -h - 1j * h])
    pts = point(z[..., None] + offsets)
    x0, xp, xm, yp, ym, pp, pm, mp, mm = (pts[..., k, :] for k in range(9))
    x_u = (xp - xm) / (2 * h)
    x_v = (yp - ym) / (2 * h)
    x_uu = (xp - 2 * x0 + xm) / (h * h)
    x_vv = (yp - 2 * x0 + ym) / (h * h)
    x_uv = (pp - pm - mp + mm) / (4 * h * h)
    return x0, x_u, x_v, x_uu, x_vv, x_uv


def sample_at(d, z, mode="analytic", h=1e-4, path="straight", on_singular="raise"):
    """Sample a Weierstrass surface at ``z`` (scalar or array).

    ``mode="analytic"`` takes every derivative from phi and phi'.
    ``mode="fd"`` differentiates the integrated surface numerically with step ``h``.
    """
    if mode == "analytic":
        x = surface_point(d, z, path=path, on_singular=on_singular)
        x_u, x_v = first_derivs(d, z, on_singular)
        x_uu, x_vv, x_uv = second_derivs(d, z, on_singular)
    elif mode == "fd":
        def point(w):
            return surface_point(d, w, path=path, on_singular=on_singular)

        x, x_u, x_v, x_uu, x_vv, x_uv = fd_derivatives(point, z, h)
    else:
        raise ValueError("mode must be 'analytic' or 'fd'")
    return build_sample(np.asarray(z) if np.ndim(z) else complex(z),
                        x, x_u, x_v, x_uu, x_vv, x_uv)


class Sphere:
    """Round sphere ``R (cos u cos v, sin u cos v, sin v)``; a non-minimal control."""

    def __init__(self, radius=1.0):
        self.radius = float(radius)

    def point(self, z):
        z = np.asarray(z, dtype=np.complex128)
        u, v = z.real, z.imag
        return self.radius * np.stack(
            [np.cos(u) * np.cos(v), np.sin(u) * np.cos(v), np.sin(v)], axis=-1)

    def derivatives(self, z):
        z = np.asarray(z, dtype=np.complex128)
        u, v = z.real, z.imag
        cu, su, cv, sv = np.cos(u), np.sin(u), np.cos(v), np.sin(v)
        R = self.radius
        x = self.point(z)
        x_u = R * np.stack([-su * cv, cu * cv, 0 * u], axis=-1)
        x_v = R * np.stack([-cu * sv, -su * sv, cv], axis=-1)
        x_uu = R * np.stack([-cu * cv, -su * cv, 0 * u], axis=-1)
        x_uv = R * np.stack([su * sv, -cu * sv, 0 * u], axis=-1)
        return x, x_u, x_v, x_uu, -x, x_uv


class WavyGraph:
    """Graph of ``0.3 sin(u) cos(v) + 0.2 u v^2``; generic non-minimal test surface."""

    def point(self, z):
        z = np.asarray(z, dtype=np.complex128)
        u, v = z.real, z.imag
        return np.stack([u, v, 0.3 * np.sin(u) * np.cos(v) + 0.2 * u * v * v], axis=-1)

    def derivatives(self, z):
        z = np.asarray(z, dtype=np.complex128)
        u, v = z.real, z.imag
        o, l = 0 * u, 0 * u + 1
        su, cu, sv, cv = np.sin(u), np.cos(u), np.sin(v), np.cos(v)
        x_u = np.stack([l, o, 0.3 * cu * cv + 0.2 * v * v], axis=-1)
        x_v = np.stack([o, l, -0.3 * su * sv + 0.4 * u * v], axis=-1)
        x_uu = np.stack([o, o, -0.3 * su * cv], axis=-1)
        x_vv = np.stack([o, o, -0.3 * su * cv + 0.4 * u], axis=-1)
        x_uv = np.stack([o, o, -0.3 * cu * sv + 0.4 * v], axis=-1)
        return self.point(z), x_u, x_v, x_uu, x_vv, x_uv


def sample_parametric(surface, z, mode="analytic", h=1e-4):
    """Sample any object exposing ``point(z)`` (and ``derivatives(z)`` for analytic mode)."""
    if mode == "analytic":
        parts = surface.derivatives(z)
    elif mode == "fd":
        parts = fd_derivatives(surface.point, z, h)
    else:
        raise ValueError("mode must be 'analytic' or 'fd'")
    return build_sample(np.asarray(z) if np.ndim(z) else complex(z), *parts)


def convention_constant(radius=1.0, z=0.3 + 0.2j):
    """Measured ratio of the normal-projected H to the textbook scalar on a sphere."""
    s = sample_parametric(Sphere(radius), z)
    return float(s.H_scalar / mean_curvature_crosscheck(s))

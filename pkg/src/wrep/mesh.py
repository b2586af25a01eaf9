"""Parameter-domain grids, triangulation and OBJ / PLY export."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import io
import os

import numpy as np

from .errors import AllSamplesSkippedError, EmptyMeshError, NumericalError, SingularEvaluationError
from .geometry import build_sample, fd_derivatives
from .weierstrass import first_derivs, second_derivs, surface_point


@dataclass(frozen=True)
class ParamDomain:
    """A rectangle ``[u0, u1] x [v0, v1]`` or a disk in the z-plane, with a resolution.

    Rectangles are sampled on a uniform ``nu x nv`` lattice including the
    edges.  Disks use ``nu`` radial levels (the first collapsed to the single
    center point) times ``nv`` angles, so they have ``1 + (nu - 1) nv``
    vertices.  ``excluded`` holds ``(center, radius)`` pairs whose samples are
    skipped.
    """

    shape: str
    bounds: tuple = (-1.0, 1.0, -1.0, 1.0)
    radius: float = 1.0
    center: complex = 0j
    resolution: tuple = (64, 64)
    excluded: tuple = field(default=())

    def __post_init__(self):
        nu, nv = self.resolution
        if nu < 2 or nv < 2:
            raise ValueError("resolution must be at least 2 x 2")
        if self.shape == "rect":
            u0, u1, v0, v1 = self.bounds
            if not (u0 < u1 and v0 < v1):
                raise ValueError("rectangle needs u0 < u1 and v0 < v1")
        elif self.shape == "disk":
            if not self.radius > 0:
                raise ValueError("disk radius must be positive")
            if nv < 3:
                raise ValueError("a disk needs at least 3 angular samples")
        else:
            raise ValueError("shape must be 'rect' or 'disk'")
        object.__setattr__(self, "resolution", (int(nu), int(nv)))
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(
            self, "excluded", tuple((complex(c), float(r)) for c, r in self.excluded))

    @classmethod
    def rectangle(cls, u0, u1, v0, v1, nu=64, nv=64, excluded=()):
        return cls("rect", bounds=(float(u0), float(u1), float(v0), float(v1)),
                   resolution=(nu, nv), excluded=excluded)

    @classmethod
    def disk(cls, radius=1.0, nu=64, nv=64, center=0j, excluded=()):
        return cls("disk", radius=float(radius), center=center,
                   resolution=(nu, nv), excluded=excluded)

    def with_resolution(self, nu, nv):
        return ParamDomain(self.shape, self.bounds, self.radius, self.center,
                           (nu, nv), self.excluded)

    def with_excluded(self, excluded):
        return ParamDomain(self.shape, self.bounds, self.radius, self.center,
                           self.resolution, tuple(self.excluded) + tuple(excluded))

    def points(self):
        """Parameter values in row-major order (u, or angle, varies fastest)."""
        nu, nv = self.resolution
        if self.shape == "rect":
            u0, u1, v0, v1 = self.bounds
            u = np.linspace(u0, u1, nu)
            v = np.linspace(v0, v1, nv)
            return (u[None, :] + 1j * v[:, None]).ravel()
        r = self.radius * np.arange(1, nu) / (nu - 1)
        theta = 2 * np.pi * np.arange(nv) / nv
        ring = self.center + r[:, None] * np.exp(1j * theta)[None, :]
        return np.concatenate([[self.center], ring.ravel()])

    def faces(self):
        """Triangles over grid indices, counterclockwise in the z-plane.

        Returns ``(faces, cell)`` where ``cell[k]`` identifies the grid quad
        (or fan wedge) that face ``k`` came from.
        """
        nu, nv = self.resolution
        if self.shape == "rect":
            idx = np.arange(nu * nv).reshape(nv, nu)
            a, b = idx[:-1, :-1], idx[:-1, 1:]
            c, d = idx[1:, 1:], idx[1:, :-1]
            quads = np.stack([a, b, c, d], axis=-1).reshape(-1, 4)
            faces = np.concatenate(
                [quads[:, [0, 1, 2]], quads[:, [0, 2, 3]]], axis=1).reshape(-1, 3)
            return faces, np.repeat(np.arange(len(quads)), 2)
        j = np.arange(nv)
        jn = (j + 1) % nv
        fan = np.stack([np.zeros(nv, dtype=int), 1 + j, 1 + jn], axis=-1)
        k = np.arange(nu - 2)[:, None]
        a = 1 + k * nv + j
        b = 1 + k * nv + jn
        c = 1 + (k + 1) * nv + jn
        d = 1 + (k + 1) * nv + j
        # rings run outward, so (a, b, c, d) is clockwise in the z-plane
        quads = np.stack([a, b, c, d], axis=-1).reshape(-1, 4)
        tri = np.concatenate([quads[:, [0, 2, 1]], quads[:, [0, 3, 2]]], axis=1).reshape(-1, 3)
        cell = np.concatenate([np.arange(nv), nv + np.repeat(np.arange(len(quads)), 2)])
        return np.concatenate([fan, tri]), cell


@dataclass(frozen=True)
class Grid:
    """Samples of a surface over a :class:`ParamDomain`.

    ``skipped`` is a boolean mask; ``skip_counts`` splits it by reason
    (``excluded``, ``singular``, ``degenerate``).
    """

    domain: ParamDomain
    z: np.ndarray
    samples: object
    skipped: np.ndarray
    skip_counts: dict


def _chunks(n, workers):
    workers = max(1, int(workers))
    bounds = np.linspace(0, n, workers + 1).astype(int)
    return [(lo, hi) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]


def _weierstrass_parts(d, z, mode, h, path):
    if mode == "analytic":
        x = surface_point(d, z, path=path, on_singular="nan")
        x_u, x_v = first_derivs(d, z, "nan")
        x_uu, x_vv, x_uv = second_derivs(d, z, "nan")
        return x, x_u, x_v, x_uu, x_vv, x_uv

    def point(w):
        return surface_point(d, w, path=path, on_singular="nan")

    return fd_derivatives(point, z, h)


def _excluded_mask(z, dom, d):
    mask = np.zeros(z.shape, dtype=bool)
    for c, r in dom.excluded:
        mask |= np.abs(z - c) < r
    if d is not None:
        for s in d.singularities:
            mask |= np.abs(z - s) < d.policy.exclusion_radius
    return mask


def _sample_grid(parts_fn, dom, d=None, workers=1, strict=False):
    z = dom.points()
    excluded = _excluded_mask(z, dom, d)
    if strict and excluded.any():
        raise SingularEvaluationError(z[excluded][0], reason="sample inside exclusion radius")
    live = np.flatnonzero(~excluded)
    parts = [np.full((z.size, 3), np.nan) for _ in range(6)]
    if live.size:
        spans = _chunks(live.size, workers)
        if len(spans) > 1:
            with ThreadPoolExecutor(max_workers=len(spans)) as ex:
                results = list(ex.map(lambda s: parts_fn(z[live[s[0]:s[1]]]), spans))
        else:
            results = [parts_fn(z[live])]
        for k in range(6):
            parts[k][live] = np.concatenate([r[k] for r in results])
    finite = np.all([np.isfinite(p).all(axis=1) for p in parts], axis=0)
    singular = ~excluded & ~finite
    if strict and singular.any():
        raise SingularEvaluationError(z[singular][0])
    samples = build_sample(z, *parts)
    degenerate = ~excluded & ~singular & samples.degenerate
    skipped = excluded | singular | degenerate
    if skipped.all():
        raise AllSamplesSkippedError(f"all {z.size} samples of the domain were skipped")
    counts = {
        "excluded": int(excluded.sum()),
        "singular": int(singular.sum()),
        "degenerate": int(degenerate.sum()),
    }
    return Grid(domain=dom, z=z, samples=samples, skipped=skipped, skip_counts=counts)


def sample_grid(d, dom, mode="analytic", workers=1, path="straight", h=1e-4):
    """Sample a Weierstrass surface over ``dom``.

    Work is split into contiguous index chunks across ``workers`` threads and
    reassembled in grid order; per-point results do not depend on the split.
    Excluded, singular and degenerate samples are marked skipped, or raise
    when the data's policy says ``"error"``.
    """
    strict = d.policy.behavior == "error"
    return _sample_grid(lambda z: _weierstrass_parts(d, z, mode, h, path),
                        dom, d, workers, strict)


def sample_parametric_grid(surface, dom, mode="analytic", h=1e-4):
    """Grid sampling for non-Weierstrass surfaces (controls such as the sphere)."""
    if mode == "analytic":
        fn = surface.derivatives
    else:
        def fn(z):
            return fd_derivatives(surface.point, z, h)
    return _sample_grid(fn, dom)


@dataclass(frozen=True)
class Mesh:
    vertices: np.ndarray
    faces: np.ndarray
    normals: object = None
    skipped: tuple = ()


def triangulate(grid, normals=True):
    """Two triangles per complete grid quad (fan around a disk center).

    Faces touching a skipped sample are dropped; surviving vertices keep
    their row-major order.
    """
    faces, cell = grid.domain.faces()
    touched = np.zeros(cell.max() + 1, dtype=bool)
    np.logical_or.at(touched, cell, grid.skipped[faces].any(axis=1))
    faces = faces[~touched[cell]]
    if faces.size == 0:
        raise EmptyMeshError("no complete quads survive; mesh would be empty")
    alive = np.flatnonzero(~grid.skipped)
    remap = np.full(grid.z.size, -1, dtype=np.int64)
    remap[alive] = np.arange(alive.size)
    return Mesh(
        vertices=grid.samples.x[alive],
        faces=remap[faces],
        normals=grid.samples.normal[alive] if normals else None,
        skipped=tuple(int(i) for i in np.flatnonzero(grid.skipped)),
    )


def _fmt(x):
    return format(float(x), ".17g")


def _check_finite(mesh):
    arrays = [mesh.vertices] + ([mesh.normals] if mesh.normals is not None else [])
    if not all(np.isfinite(a).all() for a in arrays):
        raise NumericalError("mesh contains NaN or Inf; refusing to write it")
    if len(mesh.faces) == 0:
        raise EmptyMeshError("cannot export a mesh without faces")


def obj_text(mesh):
    _check_finite(mesh)
    out = io.StringIO()
    for v in mesh.vertices:
        out.write(f"v {_fmt(v[0])} {_fmt(v[1])} {_fmt(v[2])}\n")
    if mesh.normals is not None:
        for n in mesh.normals:
            out.write(f"vn {_fmt(n[0])} {_fmt(n[1])} {_fmt(n[2])}\n")
        for a, b, c in mesh.faces + 1:
            out.write(f"f {a}//{a} {b}//{b} {c}//{c}\n")
    else:
        for a, b, c in mesh.faces + 1:
            out.write(f"f {a} {b} {c}\n")
    return out.getvalue()


def ply_text(mesh):
    _check_finite(mesh)
    out = io.StringIO()
    out.write("ply\nformat ascii 1.0\n")
    out.write(f"element vertex {len(mesh.vertices)}\n")
    out.write("property double x\nproperty double y\nproperty double z\n")
    if mesh.normals is not None:
        out.write("property double nx\nproperty double ny\nproperty double nz\n")
    out.write(f"element face {len(mesh.faces)}\n")
    out.write("property list uchar int vertex_indices\nend_header\n")
    for k, v in enumerate(mesh.vertices):
        row = [v] if mesh.normals is None else [v, mesh.normals[k]]
        out.write(" ".join(_fmt(c) for r in row for c in r) + "\n")
    for a, b, c in mesh.faces:
        out.write(f"3 {a} {b} {c}\n")
    return out.getvalue()


def _write(text, sink):
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sink.write(text)


def export_obj(mesh, sink):
    """Write Wavefront OBJ (``v``, optional ``vn``, 1-based ``f``) to a path or stream."""
    _write(obj_text(mesh), sink)


def export_ply(mesh, sink):
    """Write ASCII PLY 1.0 with double-precision vertex properties."""
    _write(ply_text(mesh), sink)

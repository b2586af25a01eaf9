"""Sample a surface and check every identity that makes it minimal.

Each check reduces a per-sample residual ``|r| / (1 + scale)`` to its maximum
over the non-skipped samples.  ``scale`` is the natural magnitude of the
quantity (``E`` for the metric identities, ``|phi|^2`` for the null
condition); checks whose tolerance is stated in absolute terms use scale 0.
"""

from dataclasses import dataclass, field
import json

import numpy as np

from .cplx import cvec_square, dot_real, im_vec, norm_sq, re_vec
from .expr import Lit, Mul, Pow, Sub
from .geometry import convention_constant, mean_curvature_crosscheck
from .mesh import sample_grid, sample_parametric_grid
from .weierstrass import from_phi, integrate_phi, phi_at

SCHEMA = "wrep-report/1"

DEFAULT_TOLERANCES = {
    "phi_square_zero": 1e-10,
    "lemma_1": 1e-10,
    "lemma_2": 1e-10,
    "orthogonality": 1e-10,
    "equal_norms": 1e-10,
    "harmonicity": 1e-10,
    "mean_curvature_zero": 1e-8,
    "crosscheck_zero": 1e-8,
    "fd_consistency": 1e-5,
    "path_independence": 1e-9,
}


@dataclass(frozen=True)
class CheckRecord:
    name: str
    max_abs_residual: float
    relative_scale: float
    tolerance: float
    samples_checked: int
    samples_skipped: int
    passed: bool

    def to_dict(self):
        return {
            "name": self.name,
            "max_abs_residual": self.max_abs_residual,
            "relative_scale": self.relative_scale,
            "tolerance": self.tolerance,
            "samples_checked": self.samples_checked,
            "samples_skipped": self.samples_skipped,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple
    convention_constant: float
    skip_counts: dict = field(default_factory=dict)
    surface: str = ""
    domain: dict = field(default_factory=dict)

    @property
    def overall(self):
        return all(c.passed for c in self.checks)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "surface": self.surface,
            "domain": self.domain,
            "checks": [c.to_dict() for c in self.checks],
            "convention_constant": self.convention_constant,
            "skip_counts": dict(self.skip_counts),
            "overall": self.overall,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=False, allow_nan=False)

    def summary_lines(self):
        lines = []
        for c in self.checks:
            tag = "PASS" if c.passed else "FAIL"
            lines.append(f"{tag} {c.name:<20} max={c.max_abs_residual:.3e} "
                         f"tol={c.tolerance:.1e} n={c.samples_checked} "
                         f"skipped={c.samples_skipped}")
        lines.append(f"overall: {'pass' if self.overall else 'fail'}")
        return lines


def _record(name, residual, scale, tol, skipped):
    residual = np.asarray(residual, dtype=float)
    scale = np.broadcast_to(np.asarray(scale, dtype=float), residual.shape)
    normed = np.abs(residual) / (1.0 + scale)
    if normed.size == 0:
        worst, big = 0.0, 0.0
    else:
        # non-finite residuals count as failures, reported as the largest float
        normed = np.where(np.isfinite(normed), normed, np.finfo(float).max)
        worst = float(normed.max())
        big = float(np.nanmax(np.where(np.isfinite(scale), scale, 0.0)))
    return CheckRecord(name, worst, big, float(tol), int(residual.size), int(skipped),
                       bool(worst <= tol))


def _vnorm(v):
    return np.sqrt(norm_sq(v))


def _domain_dict(dom):
    out = {"shape": dom.shape, "resolution": list(dom.resolution)}
    if dom.shape == "rect":
        out["bounds"] = list(dom.bounds)
    else:
        out["radius"] = dom.radius
        out["center"] = [dom.center.real, dom.center.imag]
    return out


def _geometric_checks(sa, sf, live, tol, skipped):
    a = sa[live]
    out = [
        _record("orthogonality", a.F, a.E, tol["orthogonality"], skipped),
        _record("equal_norms", a.E - a.G, a.E, tol["equal_norms"], skipped),
        _record("harmonicity", _vnorm(a.x_uu + a.x_vv), _vnorm(a.x_uu),
                tol["harmonicity"], skipped),
        _record("mean_curvature_zero", _vnorm(a.H_vec), 0.0,
                tol["mean_curvature_zero"], skipped),
        _record("crosscheck_zero", mean_curvature_crosscheck(a), 0.0,
                tol["crosscheck_zero"], skipped),
    ]
    if sf is not None:
        f = sf[live]
        diffs, scales = [], []
        for name in ("x_u", "x_v", "x_uu", "x_vv", "x_uv"):
            ref = getattr(a, name)
            diffs.append(_vnorm(getattr(f, name) - ref))
            scales.append(_vnorm(ref))
        diffs = np.stack(diffs)
        scales = np.stack(scales)
        ratio = diffs / (1.0 + scales)
        pick = np.argmax(ratio, axis=0)
        cols = np.arange(ratio.shape[1])
        out.append(_record("fd_consistency", diffs[pick, cols], scales[pick, cols],
                           tol["fd_consistency"], skipped))
    return out


def _tolerances(overrides):
    tol = dict(DEFAULT_TOLERANCES)
    for k, v in (overrides or {}).items():
        if k not in tol:
            raise KeyError(f"unknown check {k!r}; known: {', '.join(tol)}")
        tol[k] = float(v)
    return tol


def verify(d, dom, tolerances=None, workers=1, h=1e-4, name=""):
    """Evaluate all checks for Weierstrass data ``d`` over ``dom``.

    Raises :class:`AllSamplesSkippedError` when nothing is left to check.
    """
    tol = _tolerances(tolerances)
    ga = sample_grid(d, dom, mode="analytic", workers=workers)
    gf = sample_grid(d, dom, mode="fd", workers=workers, h=h)
    skipped_mask = ga.skipped | gf.skipped
    live = np.flatnonzero(~skipped_mask)
    skipped = int(skipped_mask.sum())
    z = ga.z[live]

    phi = phi_at(d, z)
    re, im = re_vec(phi), im_vec(phi)
    hermitian = norm_sq(re) + norm_sq(im)
    checks = [
        _record("phi_square_zero", np.abs(cvec_square(phi)), hermitian,
                tol["phi_square_zero"], skipped),
        _record("lemma_1", norm_sq(re) - norm_sq(im), norm_sq(re), tol["lemma_1"], skipped),
        _record("lemma_2", dot_real(re, im), norm_sq(re), tol["lemma_2"], skipped),
    ]
    checks += _geometric_checks(ga.samples, gf.samples, live, tol, skipped)

    straight = integrate_phi(d, z, path="straight", on_singular="nan")
    axis = integrate_phi(d, z, path="axis", on_singular="nan")
    gap = np.max(np.abs(straight - axis), axis=-1)
    checks.append(_record("path_independence", gap, 0.0, tol["path_independence"], skipped))

    counts = {k: max(ga.skip_counts[k], gf.skip_counts[k]) for k in ga.skip_counts}
    counts["total"] = skipped
    return VerificationReport(tuple(checks), convention_constant(), counts, name,
                              _domain_dict(dom))


def verify_parametric(surface, dom, tolerances=None, h=1e-4, name=""):
    """Geometric checks only, for surfaces given by ``point``/``derivatives``.

    Used for negative controls such as :class:`wrep.geometry.Sphere`, which
    must fail ``mean_curvature_zero``.
    """
    tol = _tolerances(tolerances)
    ga = sample_parametric_grid(surface, dom, mode="analytic")
    gf = sample_parametric_grid(surface, dom, mode="fd", h=h)
    skipped_mask = ga.skipped | gf.skipped
    live = np.flatnonzero(~skipped_mask)
    checks = _geometric_checks(ga.samples, gf.samples, live, tol, int(skipped_mask.sum()))
    counts = {k: max(ga.skip_counts[k], gf.skip_counts[k]) for k in ga.skip_counts}
    counts["total"] = int(skipped_mask.sum())
    return VerificationReport(tuple(checks), convention_constant(), counts, name,
                              _domain_dict(dom))


def mutate_second_component(d):
    """Replace ``i f (1 + g^2)`` by ``i f (1 - g^2)``: a phi that is no longer null."""
    if d.f is None:
        raise ValueError("mutation needs (f, g) data")
    bad = Mul(Mul(Lit(1j), d.f), Sub(Lit(1), Pow(d.g, 2)))
    return from_phi(d.phi[0], bad, d.phi[2], basepoint=d.basepoint, policy=d.policy,
                    singularities=d.singularities, note="mutated control")

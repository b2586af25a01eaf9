"""Named Weierstrass data with default domains and closed-form checks."""

from dataclasses import dataclass
import math

import numpy as np

from .mesh import ParamDomain
from .weierstrass import from_phi, make_phi


def catenoid_residual(x):
    """``(x1 - 2)^2 + x2^2 - 4 cosh^2(x3 / 2)`` for basepoint 0.

    With ``Phi = (-2 cosh z, 2i sinh z, 2z)`` the integral from 0 equals
    ``Phi(z) - Phi(0)``, which shifts the axis to ``x1 = 2``.
    """
    x = np.asarray(x, dtype=float)
    return (x[..., 0] - 2.0) ** 2 + x[..., 1] ** 2 - 4.0 * np.cosh(x[..., 2] / 2.0) ** 2


def helicoid_residual(x):
    """Distance-like residual of the helicoid ruling through the axis.

    ``x = (2 sinh u sin v, -2 sinh u cos v, -2v)``, so with ``v = -x3/2`` the
    point satisfies ``x1 cos v + x2 sin v = 0``.
    """
    x = np.asarray(x, dtype=float)
    v = -x[..., 2] / 2.0
    return x[..., 0] * np.cos(v) + x[..., 1] * np.sin(v)


def enneper_closed_form(z):
    z = np.asarray(z, dtype=np.complex128)
    Phi = np.stack([z - z**3 / 3, 1j * (z + z**3 / 3), z**2], axis=-1)
    return Phi.real


IMPLICIT_CHECKS = {
    "catenoid_residual": catenoid_residual,
    "helicoid_residual": helicoid_residual,
}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    data: object
    default_domain: ParamDomain
    closed_form: str = ""
    implicit_check: str = ""
    f_text: str = ""
    g_text: str = ""

    def residual(self, x):
        """Implicit-equation residual at surface points, if the entry has one."""
        if not self.implicit_check:
            return None
        return IMPLICIT_CHECKS[self.implicit_check](x)


def catalog_entries(resolution=(64, 64)):
    nu, nv = resolution
    square = ParamDomain.rectangle(-1, 1, -1, 1, nu, nv)
    disk = ParamDomain.disk(1.0, nu, nv)
    band = ParamDomain.rectangle(-1, 1, -math.pi, math.pi, nu, nv)
    return [
        CatalogEntry("plane", make_phi("1", "0"), square,
                     closed_form="Phi = (z, i z, 0)", f_text="1", g_text="0"),
        CatalogEntry("enneper", make_phi("1", "z"), disk,
                     closed_form="Phi = (z - z^3/3, i(z + z^3/3), z^2)",
                     f_text="1", g_text="z"),
        CatalogEntry("catenoid", make_phi("exp(-z)", "exp(z)"), band,
                     closed_form="Phi = (-2 cosh z, 2i sinh z, 2z)",
                     implicit_check="catenoid_residual", f_text="exp(-z)", g_text="exp(z)"),
        CatalogEntry("helicoid", make_phi("i*exp(-z)", "exp(z)"), band,
                     closed_form="Phi = (-2i cosh z, -2 sinh z, 2iz)",
                     implicit_check="helicoid_residual", f_text="i*exp(-z)", g_text="exp(z)"),
        CatalogEntry(
            "pole-demo",
            from_phi("z^2 - 1", "i*(z^2 + 1)", "2*z",
                     note="f=z^2, g=1/z; fg^2=1 analytic"),
            disk,
            closed_form="Phi = (z^3/3 - z, i(z^3/3 + z), z^2)",
            f_text="z^2", g_text="1/z",
        ),
    ]


def get_entry(name, resolution=(64, 64)):
    for entry in catalog_entries(resolution):
        if entry.name == name:
            return entry
    names = ", ".join(e.name for e in catalog_entries())
    raise KeyError(f"no catalog surface named {name!r} (available: {names})")

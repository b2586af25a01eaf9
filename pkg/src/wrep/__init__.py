"""Minimal surfaces from Weierstrass data.

Build ``phi = (f(1 - g^2), i f (1 + g^2), 2 f g)`` from two analytic
expressions, integrate it to ``x = Re Phi``, mesh the result and check
numerically that the mean curvature vanishes.
"""

from .catalog import CatalogEntry, catalog_entries, get_entry
from .cplx import cross, cvec_square, dot_real, im_vec, norm_sq, re_vec
from .errors import (
    AllSamplesSkippedError, DegeneratePointError, EmptyMeshError, ExprSyntaxError,
    NumericalError, PathSingularityError, QuadratureError, SingularEvaluationError,
    UnknownIdentifierError, WrepError,
)
from .expr import constant_fold, differentiate, evaluate, parse, to_text
from .geometry import (
    Sphere, SurfaceSample, build_sample, convention_constant, mean_curvature_crosscheck,
    mean_curvature_vector, project_normal, sample_at, sample_parametric, unit_normal,
)
from .mesh import (
    Mesh, ParamDomain, export_obj, export_ply, sample_grid, triangulate,
)
from .verification import DEFAULT_TOLERANCES, VerificationReport, verify, verify_parametric
from .weierstrass import (
    IntegrationPath, SingularityPolicy, WeierstrassData, dphi_at, first_derivs, from_phi,
    integrate_phi, make_phi, phi_at, second_derivs, surface_point,
)

__version__ = "0.1.0"

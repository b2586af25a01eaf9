import cmath

import numpy as np
import pytest

from helpers import random_points, random_poly
from wrep.catalog import catalog_entries
from wrep.cplx import cvec_square, dot_real, im_vec, norm_sq, re_vec
from wrep.errors import PathSingularityError, SingularEvaluationError
from wrep.expr import Add, Lit, Mul, Pow, Sub, Var, parse
from wrep.geometry import fd_derivatives
from wrep.weierstrass import (
    IntegrationPath, SingularityPolicy, first_derivs, from_phi, integrate_phi, make_phi,
    phi_at, second_derivs, surface_point,
)

ENNEPER = make_phi("1", "z")
PLANE = make_phi("1", "0")
CATENOID = make_phi("exp(-z)", "exp(z)")


def enneper_Phi(z):
    return np.array([z - z**3 / 3, 1j * (z + z**3 / 3), z**2])


def test_phi_asts_follow_the_formula():
    f, g = parse("exp(-z)"), parse("exp(z)")
    d = make_phi(f, g)
    assert d.phi == (
        Mul(f, Sub(Lit(1), Pow(g, 2))),
        Mul(Mul(Lit(1j), f), Add(Lit(1), Pow(g, 2))),
        Mul(Mul(Lit(2), f), g),
    )
    assert d.mode == "fg" and d.basepoint == 0


def test_enneper_phi_values():
    np.testing.assert_allclose(phi_at(ENNEPER, 0), [1, 1j, 0])
    p = phi_at(ENNEPER, 2)
    np.testing.assert_allclose(p, [-3, 5j, 4])
    assert cvec_square(p) == 0


def test_plane_phi():
    np.testing.assert_allclose(phi_at(PLANE, 0.3 - 2j), [1, 1j, 0])


def test_catenoid_phi_at_origin():
    np.testing.assert_allclose(phi_at(CATENOID, 0), [0, 2j, 2])


def test_direct_phi_pole_demo():
    d = from_phi("z^2 - 1", "i*(z^2 + 1)", "2*z")
    p = phi_at(d, 0)
    np.testing.assert_allclose(p, [-1, 1j, 0])
    assert cvec_square(p) == 0
    assert d.mode == "phi"


def test_fg_mode_with_pole_is_singular_at_pole():
    d = make_phi("z^2", "1/z")
    with pytest.raises(SingularEvaluationError):
        phi_at(d, 0)
    # away from the pole it agrees with the cancelled form
    z = 0.4 + 0.3j
    np.testing.assert_allclose(phi_at(d, z), [z**2 - 1, 1j * (z**2 + 1), 2 * z], rtol=1e-14)


def test_integrate_enneper_at_one():
    np.testing.assert_allclose(integrate_phi(ENNEPER, 1), [2 / 3, 4j / 3, 1], atol=1e-14)


def test_integral_at_basepoint_is_zero():
    for d in (ENNEPER, CATENOID.with_basepoint(0.5 + 0.5j)):
        np.testing.assert_array_equal(integrate_phi(d, d.basepoint), [0, 0, 0])
        np.testing.assert_array_equal(surface_point(d, d.basepoint), [0, 0, 0])


def test_enneper_surface_point():
    np.testing.assert_allclose(surface_point(ENNEPER, 1), [2 / 3, 0, 1], atol=1e-14)


def test_plane_surface_point(rng):
    for z in rng.normal(size=5) + 1j * rng.normal(size=5):
        np.testing.assert_allclose(surface_point(PLANE, z), [z.real, -z.imag, 0], atol=1e-14)


def test_catenoid_paths_agree():
    a = integrate_phi(CATENOID, 1, path=IntegrationPath.straight(0, 1))
    b = integrate_phi(CATENOID, 1, path="axis")
    assert np.max(np.abs(a - b)) <= 1e-9
    # closed form Phi(z) - Phi(0) with Phi = (-2 cosh z, 2i sinh z, 2z)
    ref = np.array([-2 * cmath.cosh(1) + 2, 2j * cmath.sinh(1), 2])
    np.testing.assert_allclose(a, ref, atol=1e-12)


def test_explicit_multi_segment_path():
    path = IntegrationPath("straight", (0, 0.5j, 1 + 0.5j, 1 + 1j))
    np.testing.assert_allclose(integrate_phi(ENNEPER, 1 + 1j, path=path),
                               enneper_Phi(1 + 1j), atol=1e-13)


def test_axis_path_collapses_duplicate_corner():
    p = IntegrationPath.axis_aligned(0, 2j)
    assert p.waypoints == (0, 2j)
    with pytest.raises(ValueError):
        IntegrationPath("straight", (0, 0, 1))


def test_path_must_start_at_basepoint():
    with pytest.raises(ValueError):
        integrate_phi(ENNEPER, 1, path=IntegrationPath.straight(0.5, 1))


def test_path_through_declared_singularity():
    d = make_phi("z^2", "1/z", basepoint=1, singularities=[0],
                 policy=SingularityPolicy(exclusion_radius=0.1))
    with pytest.raises(PathSingularityError):
        integrate_phi(d, -1)
    # an L-shaped detour around the pole works and matches the cancelled form
    z = -1 + 1j
    val = integrate_phi(d, z, path=IntegrationPath("axis", (1, 1 + 1j, z)))
    ref = enneper_Phi(z) * [-1, 1, 1] - enneper_Phi(1 + 0j) * [-1, 1, 1]
    np.testing.assert_allclose(val, ref, atol=1e-12)
    vals = integrate_phi(d, np.array([-1, 2]), on_singular="nan")
    assert np.isnan(vals[0]).all() and np.isfinite(vals[1]).all()


def test_first_derivatives_enneper_origin():
    x_u, x_v = first_derivs(ENNEPER, 0)
    np.testing.assert_array_equal(x_u, [1, 0, 0])
    np.testing.assert_array_equal(x_v, [0, -1, 0])


def test_conformality_for_random_polynomial_data(rng):
    for _ in range(20):
        f = random_poly(rng, 3)[0]
        g = random_poly(rng, 3)[0]
        d = make_phi(f, g)
        z = random_points(rng, 10)
        x_u, x_v = first_derivs(d, z)
        E, G = norm_sq(x_u), norm_sq(x_v)
        assert np.all(np.abs(dot_real(x_u, x_v)) <= 1e-10 * (1 + E))
        assert np.all(np.abs(E - G) <= 1e-10 * (1 + E))


def test_second_derivatives_enneper_origin():
    x_uu, x_vv, x_uv = second_derivs(ENNEPER, 0)
    np.testing.assert_array_equal(x_uu, [0, 0, 2])
    np.testing.assert_array_equal(x_vv, [0, 0, -2])
    np.testing.assert_array_equal(x_uv, [0, 0, 0])


def test_harmonicity_is_exact(rng):
    for e in catalog_entries():
        z = random_points(rng, 50)
        x_uu, x_vv, _ = second_derivs(e.data, z)
        assert np.max(np.abs(x_uu + x_vv)) == 0


def test_second_derivatives_against_fd_of_first(rng):
    h = 1e-4
    for e in catalog_entries():
        for z in random_points(rng, 5, 0.9):
            x_uu, x_vv, x_uv = second_derivs(e.data, z)
            up = first_derivs(e.data, z + h)
            dn = first_derivs(e.data, z - h)
            np.testing.assert_allclose(x_uu, (up[0] - dn[0]) / (2 * h), atol=1e-6)
            np.testing.assert_allclose(x_uv, (up[1] - dn[1]) / (2 * h), atol=1e-6)
            vp = first_derivs(e.data, z + 1j * h)
            vm = first_derivs(e.data, z - 1j * h)
            np.testing.assert_allclose(x_vv, (vp[1] - vm[1]) / (2 * h), atol=1e-6)


def test_first_derivatives_against_fd_of_surface():
    for e in catalog_entries():
        u = np.linspace(-0.6, 0.6, 5)
        z = (u[None, :] + 1j * u[:, None]).ravel()
        _, fx_u, fx_v, *_ = fd_derivatives(lambda w: surface_point(e.data, w), z, 1e-4)
        x_u, x_v = first_derivs(e.data, z)
        assert np.max(np.abs(fx_u - x_u)) <= 1e-6
        assert np.max(np.abs(fx_v - x_v)) <= 1e-6


def test_lemma_identities_by_hand():
    # Re/Im split of phi for Enneper at z = 1 + i, computed independently
    z = 1 + 1j
    phi = np.array([1 - z**2, 1j * (1 + z**2), 2 * z])
    a, b = re_vec(phi), im_vec(phi)
    np.testing.assert_allclose(phi_at(ENNEPER, z), phi)
    assert norm_sq(a) - norm_sq(b) == pytest.approx(0, abs=1e-13)
    assert dot_real(a, b) == pytest.approx(0, abs=1e-13)


def test_policy_validation():
    with pytest.raises(ValueError):
        SingularityPolicy(exclusion_radius=0)
    with pytest.raises(ValueError):
        SingularityPolicy(behavior="ignore")


def test_data_is_immutable():
    with pytest.raises(Exception):
        ENNEPER.basepoint = 1


def test_var_is_z():
    assert ENNEPER.g == Var()

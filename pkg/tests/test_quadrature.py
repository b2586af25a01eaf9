import numpy as np
import pytest

from wrep.errors import QuadratureError
from wrep.quadrature import integrate_segments


def vec(f):
    return lambda z: np.stack([f(z)], axis=-1)


def test_polynomial_is_exact():
    v, err = integrate_segments(vec(lambda z: z**4), [0], [1 + 1j])
    assert v[0, 0] == pytest.approx((1 + 1j) ** 5 / 5, abs=1e-15)


def test_exponential_over_long_segment():
    b = 3 + 3j
    v, _ = integrate_segments(vec(np.exp), [0], [b])
    assert abs(v[0, 0] - (np.exp(b) - 1)) <= 1e-10


def test_bisection_resolves_sharp_feature():
    # nearly singular integrand, reference from the antiderivative log(z - p)
    p = 0.5 + 1e-3j
    v, err = integrate_segments(vec(lambda z: 1 / (z - p)), [0], [1], tol=1e-10)
    exact = np.log(1 - p) - np.log(-p)
    assert abs(v[0, 0] - exact) <= 1e-9
    assert err[0] <= 1e-9


def test_zero_length_segment_is_zero():
    v, err = integrate_segments(vec(np.exp), [1j, 0], [1j, 1])
    assert v[0, 0] == 0
    assert err[0] == 0


def test_non_finite_integrand_gives_nan_row():
    with np.errstate(divide="ignore", invalid="ignore"):
        v, err = integrate_segments(vec(lambda z: 1 / z), [-1, 1], [1, 2])
    assert np.isnan(v[0, 0])
    assert v[1, 0] == pytest.approx(np.log(2))


def test_non_convergence_raises_with_estimate():
    f = vec(lambda z: np.sin(1e6 * z))
    with pytest.raises(QuadratureError) as info:
        integrate_segments(f, [0], [1], tol=1e-14, max_depth=3)
    assert info.value.error_estimate > 1e-14


def test_non_convergence_nan_mode():
    f = vec(lambda z: np.sin(1e6 * z))
    v, _ = integrate_segments(f, [0], [1], tol=1e-14, max_depth=3, on_fail="nan")
    assert np.isnan(v[0, 0])


def test_batch_result_independent_of_batch(rng):
    a = np.zeros(50, complex)
    b = rng.normal(size=50) + 1j * rng.normal(size=50)
    f = vec(lambda z: np.exp(z) * np.cos(3 * z))
    full, _ = integrate_segments(f, a, b)
    for idx in ([0], [7, 3], list(range(25, 50))):
        part, _ = integrate_segments(f, a[idx], b[idx])
        assert np.array_equal(part, full[idx])

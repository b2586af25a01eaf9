import numpy as np


def random_poly(rng, degree, lo=-2.0, hi=2.0):
    """Return (text, coefficients low->high) with complex coefficients in [lo, hi]^2."""
    coeffs = rng.uniform(lo, hi, degree + 1) + 1j * rng.uniform(lo, hi, degree + 1)
    text = " + ".join(f"({float(c.real)!r} + {float(c.imag)!r}*i)*z^{k}" for k, c in enumerate(coeffs))
    return text, coeffs


def polyval(coeffs, z):
    return np.polynomial.polynomial.polyval(z, coeffs)


def random_points(rng, n, radius=1.0):
    r = radius * np.sqrt(rng.uniform(0, 1, n))
    t = rng.uniform(0, 2 * np.pi, n)
    return r * np.exp(1j * t)

"""Complex scalars and 3-vectors.

Scalars are plain Python/numpy complex numbers.  Vectors are numpy arrays whose
last axis has length 3, so every function here broadcasts over leading grid
axes.  There is deliberately no conjugating variant of :func:`cvec_square`.
"""

import numpy as np


def as_cvec(v):
    """Coerce to a complex array with trailing axis of length 3."""
    v = np.asarray(v, dtype=np.complex128)
    if v.shape[-1:] != (3,):
        raise ValueError(f"expected trailing axis of length 3, got shape {v.shape}")
    return v


def as_rvec(v):
    v = np.asarray(v, dtype=np.float64)
    if v.shape[-1:] != (3,):
        raise ValueError(f"expected trailing axis of length 3, got shape {v.shape}")
    return v


def cvec_square(v):
    """Return ``v1**2 + v2**2 + v3**2`` without any complex conjugation.

    This is the bilinear square, not the Hermitian norm: ``(i, 0, 0)``
    squares to ``-1``.
    """
    v = as_cvec(v)
    return v[..., 0] * v[..., 0] + v[..., 1] * v[..., 1] + v[..., 2] * v[..., 2]


def re_vec(v):
    return np.ascontiguousarray(as_cvec(v).real)


def im_vec(v):
    return np.ascontiguousarray(as_cvec(v).imag)


def dot_real(a, b):
    a = as_rvec(a)
    b = as_rvec(b)
    return a[..., 0] * b[..., 0] + a[..., 1] * b[..., 1] + a[..., 2] * b[..., 2]


def cross(a, b):
    return np.cross(as_rvec(a), as_rvec(b))


def norm_sq(a):
    return dot_real(a, a)

"""Adaptive Gauss-Legendre quadrature along straight complex segments.

Every segment is integrated independently: 15-point Gauss-Legendre panels,
each panel compared against the sum over its two halves and bisected until
the difference is within that panel's share of the absolute tolerance.  Work
for many segments is batched through numpy, but the result for one segment
depends only on that segment, so batching and chunking never change output.
"""

import numpy as np

from .errors import QuadratureError

ORDER = 15
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(ORDER)
# nodes/weights mapped to [0, 1]
_T = 0.5 * (_NODES + 1.0)
_W = 0.5 * _WEIGHTS
_EPS = np.finfo(float).eps


def _panel(func, a, d, t0, t1, k):
    """GL rule on t in [t0, t1] of func(a + t d) * d; returns (M, k)."""
    if a.size == 0:
        return np.zeros((0, k), dtype=np.complex128)
    w = t1 - t0
    t = t0[:, None] + w[:, None] * _T[None, :]
    z = a[:, None] + d[:, None] * t
    vals = func(z.ravel()).reshape(z.shape + (-1,))
    return np.einsum("mjk,j->mk", vals, _W) * (w * d)[:, None]


def integrate_segments(func, a, b, tol=1e-10, max_depth=48, on_fail="raise"):
    """Integrate ``func`` along the straight segments ``a[n] -> b[n]``.

    Parameters
    ----------
    func : callable
        Maps a 1-d complex array of points to an ``(M, k)`` complex array.
        Non-finite entries mark points where the integrand is singular.
    a, b : array_like of complex, shape (N,)
    tol : float
        Absolute tolerance per component of each segment integral.
    on_fail : {"raise", "nan"}
        What to do with segments still unconverged after ``max_depth``
        bisections: raise :class:`QuadratureError` or return NaN rows.

    Returns
    -------
    values : ndarray, shape (N, k)
        NaN rows where the integrand was non-finite somewhere on the segment.
    error : ndarray, shape (N,)
        Sum of the accepted per-panel error estimates.
    """
    a = np.atleast_1d(np.asarray(a, dtype=np.complex128))
    b = np.atleast_1d(np.asarray(b, dtype=np.complex128))
    a, b = np.broadcast_arrays(a, b)
    n = a.shape[0]
    d = b - a

    k = np.asarray(func(a[:1])).reshape(1, -1).shape[1] if n else 1
    values = np.zeros((n, k), dtype=np.complex128)
    error = np.zeros(n)
    bad = np.zeros(n, dtype=bool)

    tgt = np.flatnonzero(d != 0)
    t0 = np.zeros(tgt.size)
    t1 = np.ones(tgt.size)
    coarse = _panel(func, a[tgt], d[tgt], t0, t1, k)

    done_tgt, done_t0, done_val = [], [], []
    err_left = np.zeros(0)
    for _ in range(max_depth + 1):
        if tgt.size == 0:
            break
        mid = 0.5 * (t0 + t1)
        left = _panel(func, a[tgt], d[tgt], t0, mid, k)
        right = _panel(func, a[tgt], d[tgt], mid, t1, k)
        fine = left + right
        finite = np.isfinite(fine).all(axis=1) & np.isfinite(coarse).all(axis=1)
        bad[tgt[~finite]] = True
        err = np.max(np.abs(fine - coarse), axis=1, initial=0.0)
        floor = 50 * _EPS * np.max(np.abs(fine), axis=1, initial=0.0)
        accept = finite & (err <= np.maximum(tol * (t1 - t0), floor))
        done_tgt.append(tgt[accept])
        done_t0.append(t0[accept])
        done_val.append(fine[accept])
        np.add.at(error, tgt[accept], err[accept])

        split = finite & ~accept & ~bad[tgt]
        err_left = err[split]
        tgt = np.concatenate([tgt[split], tgt[split]])
        t0, t1 = np.concatenate([t0[split], mid[split]]), np.concatenate([mid[split], t1[split]])
        coarse = np.concatenate([left[split], right[split]])
    if tgt.size:
        if on_fail == "raise":
            worst = tgt[0]
            raise QuadratureError(b[worst], error[worst] + err_left[0], tol)
        bad[tgt] = True

    ct = np.concatenate(done_tgt) if done_tgt else np.zeros(0, dtype=int)
    if ct.size:
        c0 = np.concatenate(done_t0)
        cv = np.concatenate(done_val)
        order = np.lexsort((c0, ct))
        ct, cv = ct[order], cv[order]
        starts = np.flatnonzero(np.r_[True, ct[1:] != ct[:-1]])
        for j in range(k):
            values[ct[starts], j] = np.add.reduceat(cv[:, j], starts)
    values[bad] = np.nan
    error[bad] = np.nan
    return values, error

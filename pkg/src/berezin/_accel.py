"""Hot numeric kernel for the rank-2 matrix Monte-Carlo oracle.

The per-sample work — spectral-norm rejection, the Cayley-image power
function and the bounded-domain density — is implemented twice: a numba
nopython kernel and a vectorized numpy fallback.  Set the environment
variable BEREZIN_DISABLE_NUMBA=1 (before import) to force the fallback.

Both backends consume the same pre-drawn uniform samples, so they agree
to floating-point roundoff; statistics are bit-reproducible per backend
for a fixed (seed, chunk-count) pair.
"""

from __future__ import annotations

import math
import os

import numpy as np

_DISABLE = os.environ.get("BEREZIN_DISABLE_NUMBA", "").strip() in {"1", "true", "yes"}

USING_NUMBA = False
if not _DISABLE:
    try:
        from numba import jit

        USING_NUMBA = True
    except ImportError:  # pragma: no cover - numba is an optional speedup
        USING_NUMBA = False


def _mc_chunk_numpy(u: np.ndarray, a1: float, a2: float, nu: float):
    """Accumulate the bounded-domain transform integrand over one chunk.

    u is (N, 4): the entries (u11, u12, u21, u22) of a candidate 2x2
    matrix, uniform in [-1, 1]^4.  Points with spectral norm >= 1 are
    rejected (integrand 0).  Returns (sum, sum of squares, accepted).
    """
    u11, u12, u21, u22 = u[:, 0], u[:, 1], u[:, 2], u[:, 3]
    tr = u11 * u11 + u12 * u12 + u21 * u21 + u22 * u22
    dd = u11 * u22 - u12 * u21
    disc = np.sqrt(np.maximum(tr * tr - 4.0 * dd * dd, 0.0))
    sigma2 = 0.5 * (tr + disc)
    inside = sigma2 < 1.0

    h = 1.0 - tr + dd * dd                      # det(I - u^T u)
    det_imu = (1.0 - u11) * (1.0 - u22) - u12 * u21   # det(I - u)
    # (1,1) entry of (I + u) adj(I - u): numerator of the Cayley image
    m11 = (1.0 + u11) * (1.0 - u22) + u12 * u21

    vals = np.zeros(u.shape[0])
    idx = np.where(inside)[0]
    d1 = m11[idx] / det_imu[idx]                # leading minor of x0
    d2 = h[idx] / (det_imu[idx] * det_imu[idx])  # det of x0
    vals[idx] = np.exp((a1 - a2) * np.log(d1) + a2 * np.log(d2)
                       + (nu - 2.0) * np.log(h[idx]))
    return float(vals.sum()), float((vals * vals).sum()), int(idx.size)


if USING_NUMBA:

    @jit(nopython=True, cache=True)
    def _mc_chunk_numba(u, a1, a2, nu):  # pragma: no cover - exercised via wrapper
        total = 0.0
        total_sq = 0.0
        accepted = 0
        for i in range(u.shape[0]):
            u11 = u[i, 0]
            u12 = u[i, 1]
            u21 = u[i, 2]
            u22 = u[i, 3]
            tr = u11 * u11 + u12 * u12 + u21 * u21 + u22 * u22
            dd = u11 * u22 - u12 * u21
            disc2 = tr * tr - 4.0 * dd * dd
            if disc2 < 0.0:
                disc2 = 0.0
            sigma2 = 0.5 * (tr + math.sqrt(disc2))
            if sigma2 >= 1.0:
                continue
            h = 1.0 - tr + dd * dd
            det_imu = (1.0 - u11) * (1.0 - u22) - u12 * u21
            m11 = (1.0 + u11) * (1.0 - u22) + u12 * u21
            d1 = m11 / det_imu
            d2 = h / (det_imu * det_imu)
            val = math.exp((a1 - a2) * math.log(d1) + a2 * math.log(d2)
                           + (nu - 2.0) * math.log(h))
            total += val
            total_sq += val * val
            accepted += 1
        return total, total_sq, accepted


def mc_chunk(u: np.ndarray, a1: float, a2: float, nu: float):
    """Dispatch one Monte-Carlo chunk to the active backend."""
    if USING_NUMBA:
        return _mc_chunk_numba(np.ascontiguousarray(u),
                               float(a1), float(a2), float(nu))
    return _mc_chunk_numpy(u, float(a1), float(a2), float(nu))

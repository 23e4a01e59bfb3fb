"""Vectorized numpy kernels for batch evaluation of the symplectic
potential.  Same contract as the numba variant."""

import numpy as np

BACKEND_NAME = "numpy"


def potential_batch(U, lam, Y):
    """Batch potential data at points Y.

    U: (d,2) facet normals, lam: (d,) offsets, Y: (n,2) points.
    Returns (vals (n,), grads (n,2), hess (n,3) as [gxx,gxy,gyy], minl (n,)).
    Points with some l <= 0 get nan values; callers filter by minl.
    """
    L = Y @ U.T - lam[None, :]          # (n,d)
    minl = L.min(axis=1)
    safe = np.where(L > 0, L, np.nan)
    logL = np.log(safe)
    vals = 0.5 * np.nansum(safe * logL, axis=1)
    grads = 0.5 * ((logL + 1.0) @ U)
    w = 0.5 / safe                      # (n,d)
    gxx = w @ (U[:, 0] * U[:, 0])
    gxy = w @ (U[:, 0] * U[:, 1])
    gyy = w @ (U[:, 1] * U[:, 1])
    hess = np.stack([gxx, gxy, gyy], axis=1)
    return vals, grads, hess, minl

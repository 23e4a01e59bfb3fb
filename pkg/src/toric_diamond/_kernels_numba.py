"""Numba-compiled kernels for batch evaluation of the symplectic potential.
Same contract as the numpy variant."""

import numpy as np
from numba import njit

BACKEND_NAME = "numba"


@njit(cache=True)
def potential_batch(U, lam, Y):
    n = Y.shape[0]
    d = U.shape[0]
    vals = np.empty(n)
    grads = np.zeros((n, 2))
    hess = np.zeros((n, 3))
    minl = np.empty(n)
    for i in range(n):
        v = 0.0
        gx = 0.0
        gy = 0.0
        hxx = 0.0
        hxy = 0.0
        hyy = 0.0
        ml = np.inf
        bad = False
        for k in range(d):
            l = Y[i, 0] * U[k, 0] + Y[i, 1] * U[k, 1] - lam[k]
            if l < ml:
                ml = l
            if l <= 0.0:
                bad = True
                continue
            lg = np.log(l)
            v += 0.5 * l * lg
            gx += 0.5 * (lg + 1.0) * U[k, 0]
            gy += 0.5 * (lg + 1.0) * U[k, 1]
            w = 0.5 / l
            hxx += w * U[k, 0] * U[k, 0]
            hxy += w * U[k, 0] * U[k, 1]
            hyy += w * U[k, 1] * U[k, 1]
        minl[i] = ml
        if bad:
            vals[i] = np.nan
            grads[i, 0] = np.nan
            grads[i, 1] = np.nan
            hess[i, 0] = np.nan
            hess[i, 1] = np.nan
            hess[i, 2] = np.nan
        else:
            vals[i] = v
            grads[i, 0] = gx
            grads[i, 1] = gy
            hess[i, 0] = hxx
            hess[i, 1] = hxy
            hess[i, 2] = hyy
    return vals, grads, hess, minl

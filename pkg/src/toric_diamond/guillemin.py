"""Floating-point evaluation of the canonical symplectic potential on a
labeled polytope, its Legendre dual, and the Monte-Carlo volume/duality
cross-check.

This module is the numerical counterpart of the exact machinery elsewhere:
64-bit floats throughout, with stated tolerances.  The batch kernels live in
``_kernels_numba`` / ``_kernels_numpy``; the active backend is chosen by the
``TORIC_DIAMOND_BACKEND`` environment variable ("numba" or "numpy", default
numba when importable).
"""

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import (
    BoundaryProximity,
    DegenerateInput,
    InvalidParameter,
    NonConvergence,
)
from .lattice import HalfPlane, dot, half_plane_intersection

EPS_BOUNDARY = 1e-9


def _load_backend():
    choice = os.environ.get("TORIC_DIAMOND_BACKEND", "").strip().lower()
    if choice not in ("", "numba", "numpy"):
        raise InvalidParameter(f"unknown backend {choice!r}", backend=choice)
    if choice in ("", "numba"):
        try:
            from . import _kernels_numba
            return _kernels_numba
        except ImportError:
            if choice == "numba":
                raise
    from . import _kernels_numpy
    return _kernels_numpy

_backend = _load_backend()


def backend_name():
    return _backend.BACKEND_NAME


@dataclass(frozen=True)
class LabeledPolytope:
    """Polytope {x : <x,u_i> >= lambda_i} with rational facet data."""
    facets: tuple
    vertices: tuple = field(compare=False)

    @classmethod
    def from_facets(cls, facets):
        fs = tuple(((int(u[0]), int(u[1])), Fraction(l)) for u, l in facets)
        verts = half_plane_intersection([HalfPlane(u, l) for u, l in fs])
        if not verts:
            raise DegenerateInput("polytope is empty or has empty interior")
        for u, l in fs:
            if sum(1 for v in verts if dot(v, u) == l) < 2:
                raise DegenerateInput("redundant facet", facet=(u, str(l)))
        return cls(fs, tuple(verts))

    def arrays(self):
        U = np.array([[float(u[0]), float(u[1])] for u, _ in self.facets])
        lam = np.array([float(l) for _, l in self.facets])
        return U, lam

    def centroid(self):
        n = len(self.vertices)
        return (float(sum(v[0] for v in self.vertices)) / n,
                float(sum(v[1] for v in self.vertices)) / n)


@dataclass(frozen=True)
class PotentialEval:
    value: float
    gradient: tuple
    hessian: tuple  # ((gxx, gxy), (gxy, gyy))


def _batch(p: LabeledPolytope, Y):
    U, lam = p.arrays()
    return _backend.potential_batch(U, lam, np.asarray(Y, dtype=float))


def eval_G(p: LabeledPolytope, y) -> PotentialEval:
    """G(y) = 1/2 sum_k l_k(y) log l_k(y) with gradient and Hessian."""
    vals, grads, hess, minl = _batch(p, [list(y)])
    if minl[0] <= EPS_BOUNDARY:
        raise BoundaryProximity("point too close to the boundary",
                                min_l=float(minl[0]))
    gxx, gxy, gyy = hess[0]
    return PotentialEval(float(vals[0]),
                         (float(grads[0][0]), float(grads[0][1])),
                         ((float(gxx), float(gxy)), (float(gxy), float(gyy))))


def legendre_inverse(p: LabeledPolytope, x, tol=1e-10, max_iter=200):
    """The unique interior y with grad G(y) = x, by damped Newton from the
    centroid (backtracking keeps the iterate strictly interior)."""
    xt = np.asarray(x, dtype=float)
    y = np.array(p.centroid())
    residual = math.inf
    for _ in range(max_iter):
        vals, grads, hess, minl = _batch(p, y[None, :])
        g = grads[0] - xt
        residual = float(np.hypot(g[0], g[1]))
        if residual < tol:
            return (float(y[0]), float(y[1]))
        gxx, gxy, gyy = hess[0]
        det = gxx * gyy - gxy * gxy
        step = np.array([(-gyy * g[0] + gxy * g[1]) / det,
                         (gxy * g[0] - gxx * g[1]) / det])
        # backtrack on the convex objective G(y) - <x,y>; the Newton step
        # is a descent direction so a sufficient decrease always exists
        phi = float(vals[0]) - float(xt @ y)
        slope = float(g @ step)  # negative
        # near the minimizer the decrease is below float rounding; the
        # epsilon term lets the full (quadratically convergent) step through
        eps = 4e-16 * (abs(phi) + 1.0)
        t = 1.0
        while t > 1e-18:
            cand = y + t * step
            cv, _, _, cml = _batch(p, cand[None, :])
            if cml[0] > EPS_BOUNDARY:
                cphi = float(cv[0]) - float(xt @ cand)
                if cphi <= phi + 1e-4 * t * slope + eps:
                    break
            t *= 0.5
        else:
            raise NonConvergence("line search stalled", residual=residual)
        new_y = y + t * step
        if new_y[0] == y[0] and new_y[1] == y[1]:
            # iterate pinned at float resolution (minimizer extremely close
            # to the boundary); the residual is as small as representable
            if residual < 1e3 * tol:
                return (float(y[0]), float(y[1]))
            raise NonConvergence("stagnated above tolerance", residual=residual)
        y = new_y
    raise NonConvergence("Newton did not reach tolerance", residual=residual)


def _closed_form(p: LabeledPolytope, y):
    # 1/2 (sum lambda_k log l_k(y) + l_inf(y)), l_inf = <y, sum u_k>
    U, lam = p.arrays()
    ys = np.asarray(y)
    L = ys @ U.T - lam
    return 0.5 * (float(lam @ np.log(L)) + float(ys @ U.sum(axis=0)))


def eval_F(p: LabeledPolytope, x) -> float:
    """Legendre dual F(x) = <x,y> - G(y) at y = legendre_inverse(x).

    Also evaluates the closed form 1/2(sum lambda_k log l_k + l_inf) and
    asserts the two agree up to the additive constant fixed at x = 0.
    """
    y0 = legendre_inverse(p, (0.0, 0.0))
    c0 = -eval_G(p, y0).value - _closed_form(p, y0)
    y = legendre_inverse(p, x)
    f = x[0] * y[0] + x[1] * y[1] - eval_G(p, y).value
    cf = _closed_form(p, y)
    if abs((f - cf) - c0) > 1e-8:
        raise NonConvergence("closed form disagrees with Legendre transform",
                             discrepancy=abs((f - cf) - c0))
    return f


def volume_check(p: LabeledPolytope, samples: int, seed: int):
    """Monte-Carlo check of the volume identity.

    Samples points uniformly in the polytope's bounding box, estimates the
    area by the acceptance fraction, and at interior points with a safety
    margin verifies det HessG(y) * det HessF(x(y)) = 1 where HessF is a
    central finite difference of the Legendre inverse.
    """
    if samples < 10**4:
        raise InvalidParameter("samples must be at least 10^4", samples=samples)
    verts = p.vertices
    lo = (min(float(v[0]) for v in verts), min(float(v[1]) for v in verts))
    hi = (max(float(v[0]) for v in verts), max(float(v[1]) for v in verts))
    rng = np.random.Generator(np.random.PCG64(seed))
    pts = rng.random((samples, 2))
    pts[:, 0] = lo[0] + pts[:, 0] * (hi[0] - lo[0])
    pts[:, 1] = lo[1] + pts[:, 1] * (hi[1] - lo[1])
    _, grads, hess, minl = _batch(p, pts)
    inside = minl > 0
    box_area = (hi[0] - lo[0]) * (hi[1] - lo[1])
    mc = float(inside.mean()) * box_area

    from .lattice import canonical_ccw, shoelace_area
    exact = shoelace_area(canonical_ccw(list(verts)))
    rel_err = abs(mc - float(exact)) / float(exact)

    # pointwise duality at a margin subset
    margin = minl > 0.05
    idx = np.nonzero(margin)[0][:20]
    h = 1e-5
    for i in idx:
        y = pts[i]
        x = grads[i]
        gxx, gxy, gyy = hess[i]
        det_g = gxx * gyy - gxy * gxy
        jac = np.empty((2, 2))
        for a in range(2):
            xp = x.copy(); xp[a] += h
            xm = x.copy(); xm[a] -= h
            yp = legendre_inverse(p, xp, tol=1e-12)
            ym = legendre_inverse(p, xm, tol=1e-12)
            jac[0, a] = (yp[0] - ym[0]) / (2 * h)
            jac[1, a] = (yp[1] - ym[1]) / (2 * h)
        det_f = jac[0, 0] * jac[1, 1] - jac[0, 1] * jac[1, 0]
        if abs(det_g * det_f - 1.0) > 1e-6:
            raise NonConvergence("Hessian duality identity violated",
                                 deviation=abs(det_g * det_f - 1.0),
                                 point=(float(y[0]), float(y[1])))
    return {"mc_estimate": mc, "exact": exact, "rel_err": rel_err}

"""Assembly of the full correspondence: isotropy data <-> centrally
symmetric Fano polygon, Einstein volumes, and the weight-matrix families.

Every admissible weight matrix determines, in order, a toric anti-self-dual
Einstein 4-orbifold (through its isotropy data), a special symmetric toric
Fano surface (the polygon), and a smooth toric Sasakian-Einstein 5-manifold
whose diffeomorphism type is a connected sum of copies of S^2 x S^3.
"""

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import reduction, toric
from .errors import (
    DegenerateInput,
    InternalInconsistency,
    InvalidParameter,
    NotConvex,
    NotFano,
    NotSpecialSymmetric,
)
from .lattice import ConvexLatticePolygon, shoelace_area
from .reduction import (
    CohomologyTable,
    IsotropyData,
    WeightMatrix,
    chain_shape_ok,
    extract_isotropy_chain,
)


def isotropy_to_polygon(d: IsotropyData) -> ConvexLatticePolygon:
    """The centrally symmetric polygon with vertex set {v_i} u {-v_i}."""
    if not chain_shape_ok(d):
        raise NotConvex("isotropy data fails the increasing-slope conditions")
    pts = set(d.v) | {(-a, -b) for a, b in d.v}
    try:
        poly = ConvexLatticePolygon.from_vertices(pts)
    except DegenerateInput as exc:
        raise NotConvex(str(exc)) from exc
    vs = set(poly.vertices)
    if vs != pts or any((-a, -b) not in vs for a, b in vs):
        raise NotConvex("isotropy vectors are not in antipodally symmetric convex position")
    return poly


def polygon_to_isotropy(p: ConvexLatticePolygon) -> IsotropyData:
    """Recover isotropy data from a special symmetric Fano polygon: shear so
    no edge is vertical, walk the lower chain."""
    vs = set(p.vertices)
    if any((-a, -b) not in vs for a, b in vs):
        raise NotSpecialSymmetric("vertex set is not antipodally symmetric")
    fan = toric.fan_from_polygon(p)
    if not toric.is_fano(fan):
        raise NotFano("polygon vertices are not in strictly convex position")
    return extract_isotropy_chain(p.vertices)


def sasakian_volume(p: ConvexLatticePolygon):
    """Volume of the Sasakian-Einstein 5-manifold over the surface of the
    polygon: vol_M = d * (pi/3)^3 * area(Sigma_{-k})."""
    fan = toric.fan_from_polygon(p)
    if not toric.is_fano(fan):
        raise NotFano("fan is not Fano")
    verts = toric.sigma_polytope(fan, toric.minus_k(fan))
    vol_sigma = shoelace_area(verts)
    d = toric.fano_index(fan)
    vol_m = d * (math.pi / 3) ** 3 * float(vol_sigma)
    return {"vol_sigma": vol_sigma, "d": d, "vol_M": vol_m}


def normalized_einstein_constant(p: ConvexLatticePolygon) -> float:
    """Einstein constant after rescaling the metric to unit volume.

    With Ric = 4g in dimension 5, scaling g -> c^2 g sends the Einstein
    constant to 4/c^2 and the volume to c^5 vol, so at unit volume
    lambda = 4 * vol_M^(2/5).
    """
    return 4.0 * sasakian_volume(p)["vol_M"] ** 0.4


@dataclass(frozen=True)
class DiamondReport:
    omega: WeightMatrix | None
    isotropy: IsotropyData
    polygon: ConvexLatticePolygon
    fano_index: int
    ord_x: int
    b2_X: int
    b2_S: int
    m: int
    diffeotype: str
    smooth_M: bool
    vol_sigma: Fraction
    vol_M: float
    lambda_normalized: float
    ke_exists: bool
    s_cohomology: CohomologyTable | None


def diamond_from_polygon(p: ConvexLatticePolygon, omega=None, s_cohomology=None):
    fan = toric.fan_from_polygon(p)
    vol = sasakian_volume(p)
    hom = toric.homology_of_M(fan)
    report = DiamondReport(
        omega=omega,
        isotropy=polygon_to_isotropy(p),
        polygon=p,
        fano_index=vol["d"],
        ord_x=toric.orbifold_report(fan).ord_x,
        b2_X=toric.b2_surface(fan),
        b2_S=omega.k if omega is not None else -1,
        m=hom["m"],
        diffeotype=hom["diffeotype"],
        smooth_M=toric.seifert_total_space_smooth(fan),
        vol_sigma=vol["vol_sigma"],
        vol_M=vol["vol_M"],
        lambda_normalized=normalized_einstein_constant(p),
        ke_exists=toric.admits_kahler_einstein(fan),
        s_cohomology=s_cohomology,
    )
    return report


def weights_to_diamond(w: WeightMatrix) -> DiamondReport:
    """Full pipeline from an admissible weight matrix, with the structural
    identities asserted rather than assumed."""
    data = reduction.isotropy_data(w)
    poly = isotropy_to_polygon(data)
    report = diamond_from_polygon(poly, omega=w,
                                  s_cohomology=reduction.s_omega_cohomology(w))
    if report.m != 2 * w.k + 1:
        raise InternalInconsistency("second Betti number mismatch",
                                    m=report.m, k=w.k)
    if not report.ke_exists:
        raise InternalInconsistency("quotient surface fails the symmetry "
                                    "criterion for a Kaehler-Einstein metric")
    if not report.smooth_M:
        raise InternalInconsistency("Seifert total space of an admissible "
                                    "quotient must be smooth")
    return report


def family_galicki_lawson(q: int):
    """The one-parameter family p = (2q-1, 1, 1) of circle reductions."""
    if q < 1:
        raise InvalidParameter("q must be a positive integer", q=q)
    w = WeightMatrix.from_rows([[2 * q - 1, 1, 1]])
    p1, p2, p3 = w.rows[0]
    a = (p2 + p3, p1 + p3, p1 + p2)
    assert a == (2, 2 * q, 2 * q)
    g = math.gcd(math.gcd(a[0], a[1]), a[2])
    assert tuple(x // g for x in a) == (1, q, q)
    return w, weights_to_diamond(w)


def family_general(k: int, count: int, seed: int):
    """Deterministically generate `count` admissible k x (k+2) matrices in
    the form [I | a | b], returned with strictly increasing torsion order."""
    if count < 1:
        raise InvalidParameter("count must be positive", count=count)
    if k == 0:
        if count > 1:
            raise InvalidParameter("only one empty weight matrix exists", k=0)
        return [WeightMatrix.from_rows([])]
    rng = random.Random(seed)
    seen_orders = {}
    attempts = 0
    while len(seen_orders) < 4 * count and attempts < 100000:
        attempts += 1
        rows = []
        for i in range(k):
            row = [int(i == j) for j in range(k)]
            row.append(rng.randint(1, 12))
            row.append(rng.randint(1, 12))
            rows.append(row)
        try:
            w = WeightMatrix.from_rows(rows)
        except ValueError:
            continue
        if not reduction.is_nondegenerate(w) or not reduction.is_admissible(w):
            continue
        order = reduction.g_omega_order(w)
        seen_orders.setdefault(order, w)
    if len(seen_orders) < count:
        raise InternalInconsistency("could not generate enough admissible matrices",
                                    k=k, count=count, found=len(seen_orders))
    return [seen_orders[o] for o in sorted(seen_orders)[:count]]

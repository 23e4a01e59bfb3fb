"""Weight-matrix calculus of the 3-Sasakian quotient: minors, admissibility,
the torsion group order via the matrix-tree theorem, the kernel map Phi, and
the isotropy data of the quotient 4-orbifold."""

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    DegenerateMatrix,
    InternalInconsistency,
    NormalizationImpossible,
    NotAdmissible,
    NotReduced,
    TooLarge,
)
from .lattice import (
    convex_hull,
    cross,
    gcd_all,
    lattice_span_index,
    smith_normal_form,
    span_basis,
)


def max_brute_force_k():
    return int(os.environ.get("TORIC_DIAMOND_MAX_K", "6"))


@dataclass(frozen=True)
class WeightMatrix:
    """Integer k x (k+2) matrix of full rank k defining a T^k subtorus of
    Sp(k+2).  k = 0 (the empty matrix) is allowed."""
    rows: tuple

    def __post_init__(self):
        if self.k > 0 and any(len(r) != self.n for r in self.rows):
            raise ValueError("ragged weight matrix")
        if self.k > 0:
            snf = smith_normal_form([list(r) for r in self.rows])
            if snf.rank != self.k:
                raise ValueError(f"weight matrix must have rank {self.k}")

    @classmethod
    def from_rows(cls, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if rows and len(rows[0]) != len(rows) + 2:
            raise ValueError("weight matrix must be k x (k+2)")
        return cls(rows)

    @property
    def k(self):
        return len(self.rows)

    @property
    def n(self):
        return self.k + 2


def _det(rows):
    # fraction-free Bareiss determinant of a square integer matrix
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            piv = next((r for r in range(i + 1, n) if m[r][i] != 0), None)
            if piv is None:
                return 0
            m[i], m[piv] = m[piv], m[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
        prev = m[i][i]
    return sign * m[-1][-1]


def _minor_kept(w: WeightMatrix, kept):
    return _det([[w.rows[i][j] for j in kept] for i in range(w.k)])


def minors_all(w: WeightMatrix):
    """All maximal minors, keyed by the (0-based, sorted) pair of deleted
    columns."""
    cols = range(w.n)
    out = {}
    for p, q in itertools.combinations(cols, 2):
        kept = [j for j in cols if j not in (p, q)]
        out[(p, q)] = _minor_kept(w, kept)
    return out


def is_nondegenerate(w: WeightMatrix) -> bool:
    return all(v != 0 for v in minors_all(w).values())


def determinantal_divisor(w: WeightMatrix) -> int:
    d = gcd_all(minors_all(w).values())
    if d == 0:
        raise DegenerateMatrix("all maximal minors vanish")
    return d


def is_reduced(w: WeightMatrix) -> bool:
    return determinantal_divisor(w) == 1


def _matches_normal_form(w):
    # [I | a | b] shape
    k = w.k
    return k > 0 and all(w.rows[i][j] == int(i == j) for i in range(k) for j in range(k))


def _normal_form_admissible(w):
    k = w.k
    a = [w.rows[i][k] for i in range(k)]
    b = [w.rows[i][k + 1] for i in range(k)]
    if any(x == 0 for x in a + b):
        return False
    if any(gcd(a[i], b[i]) != 1 for i in range(k)):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            if (a[i], b[i]) in ((a[j], b[j]), (-a[j], -b[j])):
                return False
    return True


def is_admissible(w: WeightMatrix) -> bool:
    """gcd of the maximal minors within every (k+1)-column subset equals the
    determinantal divisor.  Degenerate matrices are never admissible."""
    if not is_nondegenerate(w):
        return False
    if w.k == 0:
        return True
    d = determinantal_divisor(w)
    verdict = True
    for subset in itertools.combinations(range(w.n), w.k + 1):
        g = gcd_all(_minor_kept(w, [c for c in subset if c != t]) for t in subset)
        if g != d:
            verdict = False
            break
    if _matches_normal_form(w):
        shortcut = _normal_form_admissible(w)
        if shortcut != verdict:
            raise InternalInconsistency(
                "normal-form admissibility shortcut disagrees with gcd condition")
    return verdict


# ---------------------------------------------------------------------------
# torsion group order |G_Omega|


def g_omega_order(w: WeightMatrix) -> int:
    """Weighted spanning-tree sum over K_{k+2} with edge weights |Delta_{s,t}|,
    by the matrix-tree theorem (Laplacian cofactor)."""
    if not is_nondegenerate(w):
        raise DegenerateMatrix("weight matrix has a vanishing maximal minor")
    n = w.n
    weights = {e: abs(v) for e, v in minors_all(w).items()}
    lap = [[0] * n for _ in range(n)]
    for (s, t), wt in weights.items():
        lap[s][s] += wt
        lap[t][t] += wt
        lap[s][t] -= wt
        lap[t][s] -= wt
    cof = [row[1:] for row in lap[1:]]
    return _det(cof)


def g_omega_order_bruteforce(w: WeightMatrix) -> int:
    """Same sum by explicit enumeration of all labeled spanning trees of
    K_{k+2} (Pruefer sequences)."""
    if w.k > max_brute_force_k():
        raise TooLarge(f"k={w.k} exceeds brute-force cap {max_brute_force_k()}")
    if not is_nondegenerate(w):
        raise DegenerateMatrix("weight matrix has a vanishing maximal minor")
    n = w.n
    weights = {e: abs(v) for e, v in minors_all(w).items()}
    total = 0
    for seq in itertools.product(range(n), repeat=n - 2):
        total_w = 1
        for s, t in _tree_from_pruefer(seq, n):
            total_w *= weights[(min(s, t), max(s, t))]
        total += total_w
    return total


def _tree_from_pruefer(seq, n):
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return edges


# ---------------------------------------------------------------------------
# the kernel map Phi and isotropy data


def kernel_phi(w: WeightMatrix):
    """2 x (k+2) integer matrix whose rows are a basis of ker(Omega) and
    which is surjective onto Z^2."""
    if w.k == 0:
        return ((1, 0), (0, 1))
    if not is_reduced(w):
        raise NotReduced("kernel map is surjective only for reduced matrices")
    snf = smith_normal_form([list(r) for r in w.rows])
    # kernel basis: last two columns of V
    phi = tuple(tuple(snf.V[i][j] for i in range(w.n)) for j in (w.n - 2, w.n - 1))
    for row in w.rows:
        for ph in phi:
            if sum(a * b for a, b in zip(row, ph)) != 0:
                raise InternalInconsistency("kernel basis does not annihilate Omega")
    check = smith_normal_form([list(r) for r in phi])
    if check.invariant_factors != (1, 1):
        raise InternalInconsistency("kernel basis is not surjective onto Z^2")
    return phi


def _primitive_directions():
    # primitive vectors ordered by |x|+|y|, preferring the canonical sign
    # (x > 0, or x = 0 and y > 0), then lexicographic
    size = 1
    while True:
        cand = set()
        for x in range(-size, size + 1):
            y = size - abs(x)
            for yy in {y, -y}:
                if gcd(x, yy) == 1:
                    cand.add((x, yy))
        yield from sorted(cand, key=lambda v: (v[0] < 0 or (v[0] == 0 and v[1] < 0), v))
        size += 1


def normalize_phi(phi):
    """Apply column sign flips, a left GL(2,Z) basis change, and a column
    sort so all first coordinates are positive with strictly increasing
    slopes."""
    cols = list(zip(*phi))
    if any(c == (0, 0) for c in cols):
        raise NormalizationImpossible("zero column")
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            if cross(cols[i], cols[j]) == 0:
                raise NormalizationImpossible("parallel columns give a slope tie")
    u = None
    count = 0
    for cand in _primitive_directions():
        count += 1
        if count > 10000:
            raise NormalizationImpossible("no usable basis direction found")
        if all(cand[0] * c[0] + cand[1] * c[1] != 0 for c in cols):
            u = cand
            break
    # complete u to a GL(2,Z) matrix [[u1,u2],[s,t]]
    g_, x, y = _egcd(u[0], u[1])
    assert g_ == 1
    g = ((u[0], u[1]), (-y, x))
    new_cols = []
    for c in cols:
        b = g[0][0] * c[0] + g[0][1] * c[1]
        cc = g[1][0] * c[0] + g[1][1] * c[1]
        if b < 0:
            b, cc = -b, -cc
        new_cols.append((b, cc))
    new_cols.sort(key=lambda col: Fraction(col[1], col[0]))
    # fix the residual integer shear: 0 <= c_1 < b_1
    s = -(new_cols[0][1] // new_cols[0][0])
    new_cols = [(b, c + s * b) for b, c in new_cols]
    return tuple(zip(*new_cols))


def _egcd(a, b):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _egcd(b, a % b)
    return (g, y, x - (a // b) * y)


def _hermite_basis(vectors):
    """Hermite-form basis ((a, b), (0, c)) with a, c > 0 and 0 <= b < c of
    the rank-2 sublattice spanned by the given vectors."""
    b1, b2 = span_basis(vectors)
    if b1[0] == 0:
        b1, b2 = b2, b1
    g, p, q = _egcd(b1[0], b2[0])
    r1 = (p * b1[0] + q * b2[0], p * b1[1] + q * b2[1])
    c = abs((b2[0] // g) * b1[1] - (b1[0] // g) * b2[1])
    assert r1[0] == g > 0 and c > 0
    return ((r1[0], r1[1] % c), (0, c))


@dataclass(frozen=True)
class IsotropyData:
    """Edge stabilizer vectors v_0 .. v_{k+2} of the toric anti-self-dual
    Einstein 4-orbifold, satisfying the Calderbank-Singer conditions."""
    v: tuple

    @classmethod
    def from_vectors(cls, vectors):
        return cls(tuple((int(a), int(b)) for a, b in vectors))

    @property
    def k(self):
        return len(self.v) - 3


def chain_shape_ok(d: IsotropyData) -> bool:
    """Conditions a (m_i strictly increasing) and b (edge slopes strictly
    increasing), plus v_0 = -v_{k+2}."""
    v = d.v
    if len(v) < 3:
        return False
    if v[0] != (-v[-1][0], -v[-1][1]):
        return False
    if any(v[i][0] >= v[i + 1][0] for i in range(len(v) - 1)):
        return False
    slopes = [Fraction(v[i + 1][1] - v[i][1], v[i + 1][0] - v[i][0])
              for i in range(len(v) - 1)]
    return all(slopes[i] < slopes[i + 1] for i in range(len(slopes) - 1))


def cs_conditions_check(d: IsotropyData) -> bool:
    """chain_shape_ok plus the requirement that the vectors span all of
    Z^2 (the simply connected case)."""
    return chain_shape_ok(d) and lattice_span_index(d.v) == 1


def extract_isotropy_chain(vertices):
    """Canonical isotropy data from the vertex cycle of a centrally
    symmetric strictly convex polygon: shear so no edge is vertical, then
    take the lower chain from the leftmost vertex."""
    n = len(vertices)
    edges = [(vertices[(i + 1) % n][0] - vertices[i][0],
              vertices[(i + 1) % n][1] - vertices[i][1]) for i in range(n)]
    shear = None
    for u_, w_ in _primitive_directions():
        if w_ <= 0:
            continue
        if all(cross((u_, w_), e) != 0 for e in edges):
            shear = (u_, w_)
            break
    u_, w_ = shear
    g_, x, y = _egcd(u_, w_)
    assert g_ == 1
    s = x % w_
    t = (1 - s * u_) // w_
    mat = ((w_, -u_), (s, t))
    imgs = [(mat[0][0] * v[0] + mat[0][1] * v[1],
             mat[1][0] * v[0] + mat[1][1] * v[1]) for v in vertices]
    j = min(range(n), key=lambda i: imgs[i])
    # walk in the direction of increasing first coordinate
    step = 1 if imgs[(j + 1) % n][0] > imgs[j][0] else -1
    chain = [imgs[(j + step * i) % n] for i in range(n // 2 + 1)]
    data = IsotropyData.from_vectors(chain)
    if not chain_shape_ok(data):
        raise InternalInconsistency("extracted chain fails the slope conditions")
    return data


def isotropy_data(w: WeightMatrix) -> IsotropyData:
    """Isotropy data of the quotient orbifold: partial sums of the
    normalized kernel columns, rebased to the lattice they span, then
    canonically normalized through the associated polygon."""
    if not is_admissible(w):
        raise NotAdmissible("weight matrix is not admissible")
    phi = normalize_phi(kernel_phi(w))
    cols = list(zip(*phi))
    total = (sum(c[0] for c in cols), sum(c[1] for c in cols))
    raw = [(-total[0], -total[1])]
    run = (0, 0)
    for c in cols:
        run = (run[0] + c[0], run[1] + c[1])
        raw.append((2 * run[0] - total[0], 2 * run[1] - total[1]))
    # rebase: express everything in the Hermite basis of the sublattice
    b1, b2 = _hermite_basis(raw)
    det = cross(b1, b2)
    rebased = []
    for v in raw:
        # coordinates of v in the basis (b1, b2), by Cramer
        n1, n2 = cross(v, b2), cross(b1, v)
        assert n1 % det == 0 and n2 % det == 0
        rebased.append((n1 // det, n2 // det))
    pts = set(rebased) | {(-a, -b) for a, b in rebased}
    hull = convex_hull(pts)
    if set(hull) != pts:
        raise InternalInconsistency("rebased isotropy vectors are not in convex position")
    data = extract_isotropy_chain(hull)
    if not cs_conditions_check(data):
        raise InternalInconsistency("rebased isotropy data does not span Z^2")
    return data


# ---------------------------------------------------------------------------
# cohomology of the 3-Sasakian 7-manifold


@dataclass(frozen=True)
class CohomologyTable:
    b2: int
    torsion_order: int
    table: tuple
    pi1_trivial: bool = True


def s_omega_cohomology(w: WeightMatrix) -> CohomologyTable:
    if not is_admissible(w):
        raise NotAdmissible("weight matrix is not admissible")
    k = w.k
    order = g_omega_order(w)
    zk = "0" if k == 0 else ("Z" if k == 1 else f"Z^{k}")
    # only the order of the H^4 torsion group is determined here
    torsion = "0" if order == 1 else f"torsion(order {order})"
    table = ("Z", "0", zk, "0", torsion, zk, "0", "Z")
    return CohomologyTable(b2=k, torsion_order=order, table=table)

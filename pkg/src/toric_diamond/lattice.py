"""Exact rank-2 integer/rational linear algebra and convex geometry.

Vectors are plain ``(x, y)`` tuples of ints or ``Fraction``s; matrices are
tuples of row tuples of ints.  Everything in this module is exact -- no
floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd, lcm

from .errors import DegenerateInput, UnboundedRegion


def cross(a, b):
    """2D cross product a.x*b.y - a.y*b.x."""
    return a[0] * b[1] - a[1] * b[0]


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def vsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def vneg(a):
    return (-a[0], -a[1])


def is_primitive(v):
    return gcd(v[0], v[1]) == 1


# ---------------------------------------------------------------------------
# convex hulls and polygons


def convex_hull(points):
    """Strict convex hull, counterclockwise, lexicographically smallest
    vertex first.  Collinear boundary points are dropped.

    Raises DegenerateInput if fewer than 3 points remain or all points are
    collinear.
    """
    pts = sorted(set((p[0], p[1]) for p in points))
    if len(pts) < 3:
        raise DegenerateInput("need at least 3 distinct points")

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(vsub(out[-1], out[-2]), vsub(p, out[-1])) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("points are collinear")
    return canonical_ccw(hull)


def canonical_ccw(vertices):
    """Rotate a ccw vertex cycle so the lexicographically smallest vertex
    comes first."""
    i = min(range(len(vertices)), key=lambda j: vertices[j])
    return list(vertices[i:]) + list(vertices[:i])


def shoelace_area(vertices):
    """Exact area of a simple ccw polygon."""
    if len(vertices) < 3:
        raise DegenerateInput("polygon needs at least 3 vertices")
    s = 0
    n = len(vertices)
    for i in range(n):
        s += cross(vertices[i], vertices[(i + 1) % n])
    s = Fraction(s, 2)
    return abs(s)


@dataclass(frozen=True)
class UnimodularMap:
    """Row-major 2x2 integer matrix with det = +-1."""
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise ValueError(f"not unimodular: det = {self.det}")

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def apply(self, v):
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def compose(self, other):
        return UnimodularMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self):
        s = self.det
        return UnimodularMap(s * self.d, -s * self.b, -s * self.c, s * self.a)

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))


@dataclass(frozen=True)
class ConvexLatticePolygon:
    """Strictly convex lattice polygon, ccw, lex-smallest vertex first."""
    vertices: tuple

    @classmethod
    def from_vertices(cls, vertices, require_origin_interior=False):
        pts = [(int(v[0]), int(v[1])) for v in vertices]
        hull = convex_hull(pts)
        if len(hull) != len(set(pts)):
            raise DegenerateInput("some input points are not hull vertices")
        poly = cls(tuple(hull))
        if require_origin_interior and not poly.origin_interior():
            from .errors import OriginNotInterior
            raise OriginNotInterior("origin is not strictly interior")
        return poly

    def origin_interior(self):
        vs = self.vertices
        n = len(vs)
        return all(cross(vs[i], vs[(i + 1) % n]) > 0 for i in range(n))

    def transform(self, g: UnimodularMap):
        return ConvexLatticePolygon.from_vertices([g.apply(v) for v in self.vertices])

    def area(self):
        return shoelace_area(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)


# ---------------------------------------------------------------------------
# half-plane intersection

@dataclass(frozen=True)
class HalfPlane:
    """The set {m : <m, normal> >= bound}."""
    normal: tuple
    bound: Fraction

    def __post_init__(self):
        if self.normal == (0, 0):
            raise DegenerateInput("half-plane normal must be nonzero")

    def contains(self, p):
        return dot(p, self.normal) >= self.bound

    def on_boundary(self, p):
        return dot(p, self.normal) == self.bound


def _line_intersection(h1, h2):
    # solve <m,n1> = b1, <m,n2> = b2
    d = cross(h1.normal, h2.normal)
    if d == 0:
        return None
    x = Fraction(h1.bound * h2.normal[1] - h2.bound * h1.normal[1], d)
    y = Fraction(h2.bound * h1.normal[0] - h1.bound * h2.normal[0], d)
    return (x, y)


def _clip(poly, h):
    # Sutherland-Hodgman, exact
    out = []
    n = len(poly)
    for i in range(n):
        cur, nxt = poly[i], poly[(i + 1) % n]
        cin, nin = h.contains(cur), h.contains(nxt)
        if cin:
            out.append(cur)
        if cin != nin:
            # boundary crossing on segment cur->nxt
            num = h.bound - dot(cur, h.normal)
            den = dot(vsub(nxt, cur), h.normal)
            t = Fraction(num, den)
            out.append((cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])))
    # drop consecutive duplicates
    dedup = []
    for p in out:
        if not dedup or p != dedup[-1]:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def half_plane_intersection(planes):
    """Vertices (ccw, exact rationals) of the bounded intersection of the
    given half-planes; [] if the intersection is empty or has empty interior.

    Raises UnboundedRegion when the intersection is nonempty and unbounded.

    Strategy: every vertex of the true region is an intersection of two
    constraint lines, so a box strictly larger than all pairwise line
    intersections (and than each line's closest point to the origin) is a
    safe clipping window; the region is unbounded iff the clipped polygon
    touches the box boundary.
    """
    hs = [p if isinstance(p, HalfPlane) else HalfPlane(tuple(p[0]), Fraction(p[1]))
          for p in planes]
    if not hs:
        raise DegenerateInput("no half-planes given")

    big = Fraction(1)
    for i in range(len(hs)):
        n = hs[i].normal
        # closest point of the boundary line to the origin
        q = dot(n, n)
        big = max(big, abs(Fraction(hs[i].bound * n[0], q)), abs(Fraction(hs[i].bound * n[1], q)))
        for j in range(i + 1, len(hs)):
            p = _line_intersection(hs[i], hs[j])
            if p is not None:
                big = max(big, abs(p[0]), abs(p[1]))
    big += 1

    poly = [(-big, -big), (big, -big), (big, big), (-big, big)]
    for h in hs:
        poly = _clip(poly, h)
        if len(poly) == 0:
            return []

    if any(abs(p[0]) == big or abs(p[1]) == big for p in poly):
        raise UnboundedRegion("intersection is nonempty and unbounded")

    verts = [p for i, p in enumerate(poly) if p != poly[i - 1]]
    if len(verts) < 3 or shoelace_area(canonical_ccw(verts)) == 0:
        return []
    # remove collinear chain points introduced by clipping
    cleaned = []
    m = len(verts)
    for i in range(m):
        a, b, c = verts[i - 1], verts[i], verts[(i + 1) % m]
        if cross(vsub(b, a), vsub(c, b)) != 0:
            cleaned.append(b)
    return canonical_ccw(cleaned)


# ---------------------------------------------------------------------------
# angular order helpers (used by the fan module)

def _quadrant(v):
    x, y = v
    if x > 0 and y >= 0:
        return 0
    if x <= 0 and y > 0:
        return 1
    if x < 0 and y <= 0:
        return 2
    return 3


def _angle_cmp(u, v):
    qu, qv = _quadrant(u), _quadrant(v)
    if qu != qv:
        return -1 if qu < qv else 1
    c = cross(u, v)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


angle_key = cmp_to_key(_angle_cmp)


# ---------------------------------------------------------------------------
# integer matrices: Smith normal form and friends


@dataclass(frozen=True)
class SnfResult:
    """U * A * V = D with U, V unimodular and d1 | d2 | ... on the diagonal."""
    U: tuple
    D: tuple
    V: tuple

    @property
    def invariant_factors(self):
        m, n = len(self.D), (len(self.D[0]) if self.D else 0)
        return tuple(self.D[i][i] for i in range(min(m, n)) if self.D[i][i] != 0)

    @property
    def rank(self):
        return len(self.invariant_factors)


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(A):
    """Smith normal form of an integer matrix (list of rows).

    Returns SnfResult(U, D, V) with U*A*V = D, U and V unimodular, and the
    diagonal satisfying the divisibility chain d1 | d2 | ...
    """
    M = [list(map(int, row)) for row in A]
    m = len(M)
    n = len(M[0]) if m else 0
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):
        for c in range(n):
            M[dst][c] += k * M[src][c]
        for c in range(m):
            U[dst][c] += k * U[src][c]

    def add_col(dst, src, k):
        for r in M:
            r[dst] += k * r[src]
        for r in V:
            r[dst] += k * r[src]

    def negate_row(i):
        for c in range(n):
            M[i][c] = -M[i][c]
        for c in range(m):
            U[i][c] = -U[i][c]

    t = 0
    while t < min(m, n):
        # find pivot: smallest nonzero |entry| in the remaining block
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if M[i][j] != 0 and (piv is None or abs(M[i][j]) < abs(M[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        # clear row and column t
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if M[i][t] != 0:
                    add_row(i, t, -(M[i][t] // M[t][t]))
                    if M[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if M[t][j] != 0:
                    add_col(j, t, -(M[t][j] // M[t][t]))
                    if M[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
        # enforce divisibility: pivot must divide the rest of the block
        stuck = False
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if M[i][j] % M[t][t] != 0:
                    add_row(t, i, 1)
                    stuck = True
                    break
            if stuck:
                break
        if stuck:
            continue
        if M[t][t] < 0:
            negate_row(t)
        t += 1

    return SnfResult(tuple(map(tuple, U)), tuple(map(tuple, M)), tuple(map(tuple, V)))


def mat_mul(A, B):
    rows, inner, cols = len(A), len(B), len(B[0])
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(rows)]


def unimodular_inverse(A):
    """Exact inverse of a square unimodular integer matrix."""
    n = len(A)
    M = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    out = [[M[i][n + j] for j in range(n)] for i in range(n)]
    assert all(x.denominator == 1 for row in out for x in row)
    return [[int(x) for x in row] for row in out]


def lattice_span_index(vectors):
    """Index in Z^2 of the sublattice spanned by the vectors; 0 if rank < 2."""
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return 0
    snf = smith_normal_form(vecs)
    if snf.rank < 2:
        return 0
    d = 1
    for f in snf.invariant_factors:
        d *= f
    return d


def span_basis(vectors):
    """Basis (two integer row vectors) of the rank-2 lattice spanned by the
    given vectors."""
    snf = smith_normal_form([tuple(v) for v in vectors])
    if snf.rank != 2:
        raise DegenerateInput("vectors do not span a rank-2 lattice")
    vinv = unimodular_inverse([list(r) for r in snf.V])
    d1, d2 = snf.D[0][0], snf.D[1][1]
    return ((d1 * vinv[0][0], d1 * vinv[0][1]), (d2 * vinv[1][0], d2 * vinv[1][1]))


def solve_2x2(a, b, rhs):
    """Exact rational solution x of [a; b] x = rhs for row vectors a, b."""
    det = cross(a, b)
    if det == 0:
        raise DegenerateInput("singular 2x2 system")
    x = Fraction(rhs[0] * b[1] - rhs[1] * a[1], det)
    y = Fraction(rhs[1] * a[0] - rhs[0] * b[0], det)
    return (x, y)


def lcm_all(values):
    out = 1
    for v in values:
        out = lcm(out, v)
    return out


def gcd_all(values):
    out = 0
    for v in values:
        out = gcd(out, v)
    return out

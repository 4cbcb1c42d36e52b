"""Convex bodies, families of translates/homothets, intersection graphs.

A member body is s*C + t: the base scaled about the origin, then translated.
All coordinates are exact rationals; disks admit radical (sqrt) query points
for containment because some disk constructions need them.
"""

from fractions import Fraction
import math
import statistics

from .errors import (
    DegenerateInput,
    DisksNotClosedUnderAffine,
    MixedKinds,
    SingularMap,
)
from .geom import ConvexPolygon, Interval, Point, frac, intersection_chain, polygons_intersect
from .radicals import RadPoint, dist2


class PolygonBody:
    kind = "polygon"

    def __init__(self, polygon: ConvexPolygon, reference_point: Point = None):
        self.polygon = polygon
        if reference_point is None:
            c = polygon.is_centrally_symmetric()
            if c is not None:
                reference_point = c
            else:
                # lowest-then-leftmost vertex; for a triangle with a
                # horizontal lower side this is the lower-left vertex
                reference_point = min(polygon.vertices, key=lambda p: (p.y, p.x))
        if not polygon.contains(reference_point):
            raise DegenerateInput("reference point outside body")
        self.reference_point = reference_point

    def scale_translate(self, s, t: Point):
        s = frac(s)
        poly = self.polygon.scale(s).translate(t) if s != 1 else self.polygon.translate(t)
        return PolygonBody(poly, self.reference_point * s + t)

    def contains(self, p) -> bool:
        if isinstance(p, RadPoint):
            if p.is_rational():
                p = Point(p.x.as_fraction(), p.y.as_fraction())
            else:
                return all(
                    ((n.x * p.x + n.y * p.y) - c).sign() <= 0
                    for n, c in self.polygon.halfplanes()
                )
        return self.polygon.contains(p)

    def intersects(self, other) -> bool:
        if not isinstance(other, PolygonBody):
            raise MixedKinds("polygon vs %s" % other.kind)
        return polygons_intersect(self.polygon, other.polygon)

    def bbox(self):
        return self.polygon.bounding_box()

    def measure(self) -> Fraction:
        return self.polygon.area()

    def top(self) -> Fraction:
        return max(p.y for p in self.polygon.vertices)

    def common_point(self, other) -> Point:
        pts = intersection_chain(self.polygon, other.polygon)
        if not pts:
            raise DegenerateInput("bodies are disjoint")
        return pts[0]


class DiskBody:
    kind = "disk"

    def __init__(self, center: Point, radius):
        radius = frac(radius)
        if radius <= 0:
            raise DegenerateInput("radius must be positive")
        self.center = center
        self.radius = radius
        self.reference_point = center

    def scale_translate(self, s, t: Point):
        s = frac(s)
        return DiskBody(self.center * s + t, self.radius * s)

    def contains(self, p) -> bool:
        if isinstance(p, RadPoint):
            d = dist2(p, RadPoint.of(self.center))
            return (d - self.radius * self.radius).sign() <= 0
        d = p - self.center
        return d.norm2() <= self.radius * self.radius

    def intersects(self, other) -> bool:
        if not isinstance(other, DiskBody):
            raise MixedKinds("disk vs %s" % other.kind)
        d = self.center - other.center
        rr = self.radius + other.radius
        return d.norm2() <= rr * rr

    def bbox(self):
        c, r = self.center, self.radius
        return Interval(c.x - r, c.x + r), Interval(c.y - r, c.y + r)

    def measure(self):
        # pi * r**2 is irrational; exposed as a float for reporting only
        import math

        return math.pi * float(self.radius) ** 2

    def top(self) -> Fraction:
        return self.center.y + self.radius

    def common_point(self, other) -> Point:
        if not self.intersects(other):
            raise DegenerateInput("bodies are disjoint")
        v = other.center - self.center
        if v == Point(0, 0):
            return self.center
        # the point of [c1, c2] at distance min(r1, |c1c2|) from c1 lies in both
        n2 = v.norm2()
        rr = self.radius * self.radius
        if n2 <= rr:
            return other.center
        # walk from the boundary of self toward other: midpoint of the
        # overlap interval along the center line, computed with the exact
        # fraction r1/(r1+r2) which lies in both disks when they intersect
        return self.center + v * (self.radius / (self.radius + other.radius))


class BoxBody:
    kind = "box"

    def __init__(self, mins, sides):
        self.mins = tuple(frac(v) for v in mins)
        self.sides = tuple(frac(v) for v in sides)
        if len(self.mins) != len(self.sides) or len(self.mins) < 2:
            raise DegenerateInput("box needs matching dim >= 2")
        if any(s <= 0 for s in self.sides):
            raise DegenerateInput("box sides must be positive")
        self.dim = len(self.mins)
        self.reference_point = self.mins

    def scale_translate(self, s, t):
        s = frac(s)
        t = tuple(frac(v) for v in t)
        return BoxBody(
            tuple(m * s + tv for m, tv in zip(self.mins, t)),
            tuple(side * s for side in self.sides),
        )

    def contains(self, p) -> bool:
        return all(m <= frac(v) <= m + s for v, m, s in zip(p, self.mins, self.sides))

    def intersects(self, other) -> bool:
        if not isinstance(other, BoxBody):
            raise MixedKinds("box vs %s" % other.kind)
        return all(
            m1 <= m2 + s2 and m2 <= m1 + s1
            for m1, s1, m2, s2 in zip(self.mins, self.sides, other.mins, other.sides)
        )

    def bbox(self):
        return tuple(Interval(m, m + s) for m, s in zip(self.mins, self.sides))

    def measure(self) -> Fraction:
        out = Fraction(1)
        for s in self.sides:
            out *= s
        return out

    def top(self) -> Fraction:
        return self.mins[-1] + self.sides[-1]

    def common_point(self, other):
        if not self.intersects(other):
            raise DegenerateInput("bodies are disjoint")
        return tuple(
            max(m1, m2)
            for m1, m2 in zip(self.mins, other.mins)
        )


class Member:
    """One family member: a translation vector and a positive scale."""

    __slots__ = ("t", "s")

    def __init__(self, t, s=1):
        self.t = t
        self.s = frac(s)
        if self.s <= 0:
            raise DegenerateInput("scale must be positive")

    def __repr__(self):
        return "Member(%r, %s)" % (self.t, self.s)


class Family:
    """A base convex body plus translate/homothet members."""

    def __init__(self, base, members, kind="translates"):
        if kind not in ("translates", "homothets"):
            raise DegenerateInput("unknown family kind %r" % kind)
        if not members:
            raise DegenerateInput("family must be nonempty")
        if kind == "translates" and any(m.s != 1 for m in members):
            raise DegenerateInput("translate families require scale 1")
        self.base = base
        self.members = list(members)
        self.kind = kind
        self._realized = [None] * len(members)

    def __len__(self):
        return len(self.members)

    def dim(self):
        return self.base.dim if self.base.kind == "box" else 2

    def realize(self, i):
        body = self._realized[i]
        if body is None:
            m = self.members[i]
            body = self.base.scale_translate(m.s, m.t)
            self._realized[i] = body
        return body

    def bodies(self):
        return [self.realize(i) for i in range(len(self))]

    def intersects(self, i, j) -> bool:
        return self.realize(i).intersects(self.realize(j))


def float_bboxes(f: Family):
    """Per-member float bounding boxes (lo..., hi...) with a safe pad.

    For pruning only: the pad dominates any float conversion error, so a
    pair of exactly overlapping boxes always reports as possibly
    overlapping.
    """
    n = len(f)
    base = f.base
    out = []
    if base.kind == "disk":
        bx, by, br = float(base.center.x), float(base.center.y), float(base.radius)
        for m in f.members:
            s = float(m.s)
            cx, cy, r = bx * s + float(m.t.x), by * s + float(m.t.y), br * s
            out.append((cx - r, cy - r, cx + r, cy + r))
    elif base.kind == "polygon":
        ix, iy = base.polygon.bounding_box()
        xlo, xhi, ylo, yhi = float(ix.lo), float(ix.hi), float(iy.lo), float(iy.hi)
        for m in f.members:
            s = float(m.s)
            tx, ty = float(m.t.x), float(m.t.y)
            out.append((xlo * s + tx, ylo * s + ty, xhi * s + tx, yhi * s + ty))
    else:
        for m in f.members:
            s = float(m.s)
            lo = [float(mn) * s + float(tv) for mn, tv in zip(base.mins, m.t)]
            hi = [l + float(sd) * s for l, sd in zip(lo, base.sides)]
            out.append(tuple(lo) + tuple(hi))
    scale = 1.0
    for b in out:
        for v in b:
            if abs(v) > scale:
                scale = abs(v)
    pad = 1e-9 * scale + 1e-12
    return out, pad


def pair_checker(f: Family):
    """Exact pairwise-intersection test with a rigorous float prescreen.

    The prescreen only answers when the float computation is far from the
    decision boundary; near cases fall through to exact arithmetic.
    """
    n = len(f)
    if f.base.kind == "disk":
        base = f.base
        bx, by, br = float(base.center.x), float(base.center.y), float(base.radius)
        cx = [0.0] * n
        cy = [0.0] * n
        rr = [0.0] * n
        scale = 1.0
        for i, m in enumerate(f.members):
            s = float(m.s)
            cx[i] = bx * s + float(m.t.x)
            cy[i] = by * s + float(m.t.y)
            rr[i] = br * s
            scale = max(scale, abs(cx[i]), abs(cy[i]), rr[i])
        tol = 1e-9 * scale * scale

        def check(i, j):
            dx = cx[i] - cx[j]
            dy = cy[i] - cy[j]
            d2 = dx * dx + dy * dy
            s = rr[i] + rr[j]
            gap = d2 - s * s
            if gap > tol:
                return False
            if gap < -tol:
                return True
            return f.intersects(i, j)

        return check
    if f.base.kind == "polygon" and f.kind == "translates":
        # translates meet iff their translation difference lies in C - C
        from .geom import minkowski_sum, reflect

        diff = minkowski_sum(f.base.polygon, reflect(f.base.polygon))
        edges = []
        for (nrm, c) in diff.halfplanes():
            edges.append((nrm.x, nrm.y, c, float(nrm.x), float(nrm.y), float(c)))
        ts = f.members
        txf = [float(m.t.x) for m in ts]
        tyf = [float(m.t.y) for m in ts]
        scale = max(1.0, max(abs(v) for v in txf + tyf))
        for e in edges:
            scale = max(scale, abs(e[3]), abs(e[4]), abs(e[5]))
        tol = 1e-9 * scale * scale

        def check(i, j):
            dxf = txf[i] - txf[j]
            dyf = tyf[i] - tyf[j]
            exact_needed = False
            for (nx, ny, c, nxf, nyf, cf) in edges:
                v = nxf * dxf + nyf * dyf - cf
                if v > tol:
                    return False
                if v > -tol:
                    exact_needed = True
            if not exact_needed:
                return True
            dx = ts[i].t.x - ts[j].t.x
            dy = ts[i].t.y - ts[j].t.y
            return all(nx * dx + ny * dy <= c for (nx, ny, c, _, _, _) in edges)

        return check
    return f.intersects


def intersection_graph(f: Family):
    """Adjacency sets over member indices; edge iff the closed bodies meet.

    Uses a uniform grid keyed on bounding boxes so bounded-density inputs
    cost O(n + edges) expected; candidate pairs are verified exactly (the
    grid and the float prescreen only prune or defer)."""
    n = len(f)
    adj = [set() for _ in range(n)]
    if n <= 1:
        return adj
    fboxes, pad = float_bboxes(f)
    dim = len(fboxes[0]) // 2
    diam = [max(b[dim + k] - b[k] for k in range(dim)) for b in fboxes]
    cell = statistics.median(diam) or 1.0
    check = pair_checker(f)
    grid = {}
    for i, b in enumerate(fboxes):
        ranges = [
            range(int(math.floor((b[k] - pad) / cell)), int(math.floor((b[dim + k] + pad) / cell)) + 1)
            for k in range(dim)
        ]
        if dim == 2:
            for gx in ranges[0]:
                for gy in ranges[1]:
                    grid.setdefault((gx, gy), []).append(i)
        else:
            import itertools

            for key in itertools.product(*ranges):
                grid.setdefault(key, []).append(i)
    seen = set()
    for bucket in grid.values():
        for a in range(len(bucket)):
            for b in range(a + 1, len(bucket)):
                i, j = bucket[a], bucket[b]
                if i > j:
                    i, j = j, i
                if (i, j) in seen:
                    continue
                seen.add((i, j))
                bi, bj = fboxes[i], fboxes[j]
                if all(bi[k] <= bj[dim + k] + pad and bj[k] <= bi[dim + k] + pad for k in range(dim)):
                    if check(i, j):
                        adj[i].add(j)
                        adj[j].add(i)
    return adj


def intersection_graph_bruteforce(f: Family):
    n = len(f)
    adj = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if f.intersects(i, j):
                adj[i].add(j)
                adj[j].add(i)
    return adj


def graphs_equal(a, b) -> bool:
    return len(a) == len(b) and all(x == y for x, y in zip(a, b))


class AffineMap:
    """x -> M x + v with a nonsingular rational 2x2 matrix M."""

    def __init__(self, a, b, c, d, tx=0, ty=0):
        self.a, self.b, self.c, self.d = frac(a), frac(b), frac(c), frac(d)
        self.t = Point(tx, ty)
        if self.a * self.d - self.b * self.c == 0:
            raise SingularMap("determinant is zero")

    def apply_vector(self, p: Point) -> Point:
        return Point(self.a * p.x + self.b * p.y, self.c * p.x + self.d * p.y)

    def apply_point(self, p: Point) -> Point:
        return self.apply_vector(p) + self.t

    def is_similarity(self):
        """Rational similarities have M = [[a, -b], [b, a]] (or a reflection)
        and a rational operator norm."""
        from .radicals import sqrt_exact

        if self.b == -self.c and self.a == self.d:
            pass
        elif self.b == self.c and self.a == -self.d:
            pass
        else:
            return None
        return sqrt_exact(self.a * self.a + self.b * self.b)


def normalize_affine(f: Family, m: AffineMap) -> Family:
    """Transformed family; the intersection graph is unchanged."""
    if f.base.kind == "polygon":
        base = PolygonBody(
            f.base.polygon.linear_map(m.a, m.b, m.c, m.d),
            m.apply_vector(f.base.reference_point),
        )
        members = [Member(m.apply_point(mem.t), mem.s) for mem in f.members]
        return Family(base, members, f.kind)
    if f.base.kind == "disk":
        scale = m.is_similarity()
        if scale is None:
            raise DisksNotClosedUnderAffine(
                "disks only admit similarity maps with rational scale"
            )
        base = DiskBody(m.apply_vector(f.base.center), f.base.radius * scale)
        members = [Member(m.apply_point(mem.t), mem.s) for mem in f.members]
        return Family(base, members, f.kind)
    raise SingularMap("affine maps are supported for polygon and disk families")

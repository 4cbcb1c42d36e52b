"""Verified covering patterns for cluster piercing.

A pattern certifies region <= union of (cover_body + offset_j) exactly:
polygon regions by clipping until the residue is empty, disk regions by the
circle-arrangement criterion, boxes by cell decomposition.  The offsets
double as pierce-point offsets relative to a cluster seed's reference point,
because a translate with reference a contains the point q iff a lies in
-(C - ref) + q.
"""

from fractions import Fraction
import itertools

from .bodies import BoxBody, DiskBody, PolygonBody
from .circles import Conic, CoverageCheck
from .errors import NotCentrallySymmetric, VerificationFailed
from .geom import (
    ConvexPolygon,
    Point,
    chain_area,
    clip_chain,
    frac,
    minkowski_sum,
    reflect,
    region_minus_polygons,
)
from .radicals import RadPoint, Radical
from .sandwich import inscribed_hexagon, sandwich_parallelograms

DOWN = Point(0, -1)


class CoverPattern:
    """An exactly verified claim: region <= union of cover_body translates."""

    def __init__(self, region_kind, base_kind, offsets, halfplane=None, data=None):
        self.region_kind = region_kind  # "diff" or "diff_half"
        self.base_kind = base_kind
        self.offsets = list(offsets)
        self.halfplane = halfplane
        self.data = data or {}
        self.verified = True

    @property
    def size(self):
        return len(self.offsets)

    def __repr__(self):
        return "CoverPattern(%s/%s, %d offsets)" % (
            self.base_kind,
            self.region_kind,
            self.size,
        )


_pattern_cache = {}


def _cached(key, build):
    got = _pattern_cache.get(key)
    if got is None:
        got = build()
        _pattern_cache[key] = got
    return got


def _poly_key(poly: ConvexPolygon):
    return tuple((p.x, p.y) for p in poly.vertices)


# ---------------------------------------------------------------------------
# polygon patterns


def _verify_polygon_pattern(region_chain, cover: ConvexPolygon, offsets):
    translates = [cover.translate(o) for o in offsets]
    pieces = region_minus_polygons(region_chain, translates)
    if pieces:
        raise VerificationFailed("cover residue is nonempty")


def seven_cover(s: ConvexPolygon) -> CoverPattern:
    """Cover 2S by at most seven translates of the centrally symmetric S.

    One translate sits at the center, six at the vertices of an affinely
    regular hexagon (the side midpoints of a hexagon inscribed in 2S).
    Parallelograms take the 4-translate fast path.
    """

    def build():
        center = s.is_centrally_symmetric()
        if center is None:
            raise NotCentrallySymmetric("seven_cover needs a centrally symmetric body")
        s0 = s.translate(-center)
        region = s0.scale(2)
        if s0.is_parallelogram():
            # the four quadrant translates are centered on the vertices
            offsets = list(s0.vertices)
            _verify_polygon_pattern(list(region.vertices), s0, offsets)
            return CoverPattern("diff", "polygon", offsets,
                                data={"body": s0, "region": list(region.vertices)})
        hexagon = inscribed_hexagon(region, s0.vertices[0])
        hv = hexagon.vertices
        offsets = [Point(0, 0)] + [(hv[i] + hv[(i + 1) % 6]) / 2 for i in range(6)]
        _verify_polygon_pattern(list(region.vertices), s0, offsets)
        return CoverPattern("diff", "polygon", offsets,
                            data={"body": s0, "region": list(region.vertices)})

    return _cached(("seven", _poly_key(s)), build)


def halfplane_four_cover(s: ConvexPolygon, direction: Point = DOWN) -> CoverPattern:
    """Cover (2S) cut to the halfplane {d.x >= 0} by at most four translates.

    The hexagon chord is aligned with the halfplane boundary, leaving the
    center translate plus the three side midpoints on the kept side.
    Parallelograms with an edge pair parallel to the boundary need two.
    """

    def build():
        center = s.is_centrally_symmetric()
        if center is None:
            raise NotCentrallySymmetric("halfplane cover needs a centrally symmetric body")
        d = direction
        s0 = s.translate(-center)
        region2 = s0.scale(2)
        region_chain = clip_chain(list(region2.vertices), -d, Fraction(0))
        if s0.is_parallelogram():
            kept = [o for o in s0.vertices if o.dot(d) > 0]
            if len(kept) == 2:
                try:
                    _verify_polygon_pattern(region_chain, s0, kept)
                    return CoverPattern(
                        "diff_half", "polygon", kept, halfplane=d,
                        data={"body": s0, "region": region_chain},
                    )
                except VerificationFailed:
                    pass
        hexagon = inscribed_hexagon(region2, -d.perp())
        hv = hexagon.vertices
        mids = [(hv[i] + hv[(i + 1) % 6]) / 2 for i in range(6)]
        offsets = [Point(0, 0)] + [m for m in mids if m.dot(d) > 0]
        if len(offsets) != 4:
            raise VerificationFailed("expected three kept side midpoints")
        _verify_polygon_pattern(region_chain, s0, offsets)
        return CoverPattern("diff_half", "polygon", offsets, halfplane=d,
                            data={"body": s0, "region": region_chain})

    return _cached(("half", _poly_key(s), (direction.x, direction.y)), build)


def _search_cover(region_chain, cover: ConvexPolygon, candidates, max_count):
    """Greedy exact set-cover by area over a candidate offset grid."""
    chosen = []
    pieces = [list(region_chain)]
    total = sum(chain_area(p) for p in pieces)
    while pieces and len(chosen) < max_count:
        best = None
        for q in candidates:
            if q in chosen:
                continue
            poly = cover.translate(q)
            rest = []
            for piece in pieces:
                rest.extend(region_minus_polygons_piece(piece, poly))
            area = sum(chain_area(p) for p in rest)
            if best is None or area < best[0]:
                best = (area, q, rest)
        if best is None or best[0] >= total:
            break
        total, q, pieces = best
        chosen.append(q)
    if pieces:
        raise VerificationFailed("cover search failed within %d translates" % max_count)
    return chosen


def region_minus_polygons_piece(piece, poly):
    from .geom import subtract_chain

    return subtract_chain(piece, poly)


_TRAPEZOID_OFFSETS = [
    Point(0, 0),
    Point(1, 0),
    Point(Fraction(1, 2), Fraction(-1, 2)),
    Point(Fraction(1, 2), 0),
    Point(1, Fraction(-1, 2)),
]

_UPPER_TRAPEZOID_OFFSETS = [
    Point(0, 1),
    Point(Fraction(1, 2), Fraction(1, 2)),
    Point(1, Fraction(1, 2)),
    Point(Fraction(1, 2), 1),
    Point(Fraction(-1, 2), 1),
]


def _unit_triangle():
    return ConvexPolygon([Point(0, 0), Point(1, 0), Point(0, 1)])


def _triangle_normalizer(t: ConvexPolygon):
    """Affine map data sending the triangle to (0,0),(1,0),(0,1).

    The reference (lowest-then-leftmost) vertex goes to the origin.
    """
    v = t.vertices
    if len(v) != 3:
        raise VerificationFailed("not a triangle")
    i0 = min(range(3), key=lambda i: (v[i].y, v[i].x))
    v0, v1, v2 = v[i0], v[(i0 + 1) % 3], v[(i0 + 2) % 3]
    return v0, v1 - v0, v2 - v0  # origin, image of (1,0), image of (0,1)


def _grid_candidates(step=Fraction(1, 2), span=2):
    out = []
    k = int(span / step)
    for i in range(-k, k + 1):
        for j in range(-k, k + 1):
            out.append(Point(step * i, step * j))
    return out


def triangle_trapezoid_cover(t: ConvexPolygon) -> CoverPattern:
    """Cover the lower half of T-T by at most five translates of -T.

    Found on the canonical triangle by a rational grid search with exact
    verification, then mapped back through the normalizing map; the returned
    offsets are vectors in the original coordinates.
    """

    def build():
        canon = _cached(("trap-canon",), _build_canonical_trapezoid)
        v0, e1, e2 = _triangle_normalizer(t)
        # map offsets back: q_orig = L(q) with L the inverse normalizer
        offsets = [e1 * q.x + e2 * q.y for q in canon.offsets]
        cover = reflect(t.translate(-v0))
        diff = minkowski_sum(t, reflect(t))
        # the kept side in original coordinates: L^{-T} maps the normal
        region_chain = _clip_lower_imageside(diff, e1, e2)
        _verify_polygon_pattern(region_chain, cover, offsets)
        return CoverPattern("diff_half", "polygon", offsets, halfplane=None,
                            data={"body": cover, "region": region_chain})

    return _cached(("trap", _poly_key(t)), build)


def _clip_lower_imageside(diff: ConvexPolygon, e1: Point, e2: Point):
    # halfplane y <= 0 in normalized coords means cross(e1, p) <= 0 in
    # original coords (p = a e1 + b e2, b = cross(e1, p)/det, det > 0)
    n = Point(-e1.y, e1.x)  # cross(e1, p) = n.p
    return clip_chain(list(diff.vertices), n, Fraction(0))


def _build_canonical_trapezoid() -> CoverPattern:
    t0 = _unit_triangle()
    cover = reflect(t0)
    trap = [Point(-1, 0), Point(0, -1), Point(1, -1), Point(1, 0)]
    candidates = _TRAPEZOID_OFFSETS + _grid_candidates()
    offsets = _search_cover(trap, cover, candidates, 5)
    return CoverPattern("diff_half", "polygon", offsets, data={"body": cover})


def _build_canonical_triangle_diff() -> CoverPattern:
    t0 = _unit_triangle()
    cover = reflect(t0)
    diff = minkowski_sum(t0, reflect(t0))
    candidates = _TRAPEZOID_OFFSETS + _UPPER_TRAPEZOID_OFFSETS + _grid_candidates()
    offsets = _search_cover(list(diff.vertices), cover, candidates, 12)
    return CoverPattern("diff", "polygon", offsets, data={"body": cover})


# ---------------------------------------------------------------------------
# disk patterns


def _sqrt3(v) -> Radical:
    return Radical.sqrt(3) * frac(v)


def disk_seven_offsets(r):
    """{0} plus sqrt(3)*r times the sixth roots of unity."""
    r = frac(r)
    out = [RadPoint(0, 0)]
    coords = [
        (_sqrt3(r), Radical.of(0)),
        (_sqrt3(r / 2), Radical.of(3 * r / 2)),
        (_sqrt3(-r / 2), Radical.of(3 * r / 2)),
        (_sqrt3(-r), Radical.of(0)),
        (_sqrt3(-r / 2), Radical.of(-3 * r / 2)),
        (_sqrt3(r / 2), Radical.of(-3 * r / 2)),
    ]
    out.extend(RadPoint(x, y) for x, y in coords)
    return out


def disk_half_offsets(r):
    """{0, (0, -sqrt3 r), (+-3r/2, -sqrt3 r/2)}: the lower half of the 7-cover."""
    r = frac(r)
    return [
        RadPoint(0, 0),
        RadPoint(Radical.of(0), _sqrt3(-r)),
        RadPoint(Radical.of(3 * r / 2), _sqrt3(-r / 2)),
        RadPoint(Radical.of(-3 * r / 2), _sqrt3(-r / 2)),
    ]


def _verify_disk_seven(r):
    # substitute x = sqrt(3) X: weights (3, 1), all centers rational
    r = frac(r)
    region = Conic(3, 1, Point(0, 0), 4 * r * r)
    covers = [Conic(3, 1, Point(0, 0), r * r)]
    for cx, cy in [(r, 0), (r / 2, 3 * r / 2), (-r / 2, 3 * r / 2), (-r, 0),
                   (-r / 2, -3 * r / 2), (r / 2, -3 * r / 2)]:
        covers.append(Conic(3, 1, Point(cx, cy), r * r))
    if not CoverageCheck(region, covers).verify():
        raise VerificationFailed("seven-disk cover did not verify")


def _verify_disk_half(r):
    # substitute y = sqrt(3) Y: weights (1, 3)
    r = frac(r)
    region = Conic(1, 3, Point(0, 0), 4 * r * r)
    covers = [
        Conic(1, 3, Point(0, 0), r * r),
        Conic(1, 3, Point(0, -r), r * r),
        Conic(1, 3, Point(3 * r / 2, -r / 2), r * r),
        Conic(1, 3, Point(-3 * r / 2, -r / 2), r * r),
    ]
    if not CoverageCheck(region, covers, halfplane=(Point(0, 1), 0)).verify():
        raise VerificationFailed("half-disk cover did not verify")


def disk_seven_cover(r) -> CoverPattern:
    def build():
        _verify_disk_seven(r)
        return CoverPattern("diff", "disk", disk_seven_offsets(r), data={"radius": frac(r)})

    return _cached(("disk7", frac(r)), build)


def disk_half_cover(r) -> CoverPattern:
    """Four disks covering the lower half of the doubled disk; the seed rule
    is 'topmost', so the halfplane direction is fixed downward."""

    def build():
        _verify_disk_half(r)
        return CoverPattern(
            "diff_half", "disk", disk_half_offsets(r), halfplane=DOWN, data={"radius": frac(r)}
        )

    return _cached(("diskhalf", frac(r)), build)


# ---------------------------------------------------------------------------
# box patterns


def box_cover(sides, half: bool) -> CoverPattern:
    """Cover [-s, s]^d (last axis cut to [-s_d, 0] when half) by unit boxes.

    Offsets are the centers of the 2^d (or 2^{d-1}) quadrant boxes; the
    cover is exact by construction and checked by cell decomposition.
    """
    sides = tuple(frac(s) for s in sides)
    d = len(sides)

    def build():
        last = [(-sides[-1] / 2,)] if half else [(-sides[-1] / 2,), (sides[-1] / 2,)]
        rest = itertools.product(*[(-s / 2, s / 2) for s in sides[:-1]])
        offsets = [tuple(r) + l for r in rest for l in last]
        _verify_box_pattern(sides, offsets, half)
        return CoverPattern(
            "diff_half" if half else "diff",
            "box",
            offsets,
            halfplane="down" if half else None,
            data={"sides": sides},
        )

    return _cached(("box", sides, half), build)


def _verify_box_pattern(sides, offsets, half):
    d = len(sides)
    region = [(-s, s) for s in sides]
    if half:
        region[-1] = (-sides[-1], Fraction(0))
    cuts = []
    for k in range(d):
        vals = {region[k][0], region[k][1]}
        for o in offsets:
            vals.add(o[k] - sides[k] / 2)
            vals.add(o[k] + sides[k] / 2)
        cuts.append(sorted(v for v in vals if region[k][0] <= v <= region[k][1]))
    for cell in itertools.product(*[zip(c, c[1:]) for c in cuts]):
        mid = [(a + b) / 2 for a, b in cell]
        ok = any(
            all(abs(m - o[k]) <= sides[k] / 2 for k, m in enumerate(mid))
            for o in offsets
        )
        if not ok:
            raise VerificationFailed("box cover misses a cell")


# ---------------------------------------------------------------------------
# dispatch by base body


def homothet_cover(body) -> CoverPattern:
    """Pattern covering C-C by translates of -(C - ref); drives Theorem-4 greedy.

    Sizes: parallelogram 4, triangle <= 12, disk 7, centrally symmetric <= 7,
    general polygon <= 16 via the sandwich grid.
    """
    if isinstance(body, BoxBody):
        return box_cover(body.sides, half=False)
    if isinstance(body, DiskBody):
        return disk_seven_cover(body.radius)
    poly = body.polygon
    if poly.is_centrally_symmetric() is not None:
        pat = seven_cover(poly)
        assert pat.size <= 7
        return pat
    if len(poly.vertices) == 3:
        def build():
            canon = _cached(("diff12-canon",), _build_canonical_triangle_diff)
            v0, e1, e2 = _triangle_normalizer(poly)
            offsets = [e1 * q.x + e2 * q.y for q in canon.offsets]
            cover = reflect(poly.translate(-v0))
            diff = minkowski_sum(poly, reflect(poly))
            _verify_polygon_pattern(list(diff.vertices), cover, offsets)
            return CoverPattern("diff", "polygon", offsets,
                                data={"body": cover, "region": list(diff.vertices)})

        pat = _cached(("diff12", _poly_key(poly)), build)
        assert pat.size <= 12
        return pat
    return _general_polygon_cover(poly)


def _general_polygon_cover(poly: ConvexPolygon) -> CoverPattern:
    """C-C fits in 2Q, which a grid of at most 16 P-translates covers."""

    def build():
        import math

        pair = sandwich_parallelograms(poly)
        ref = PolygonBody(poly).reference_point
        cover = reflect(poly.translate(-ref))
        # unit-step grid of P-translates covering 2*(Q - q_center) in P's basis
        u, v = pair.p.u, pair.p.v
        l1, l2 = pair.lambdas
        n1, n2 = math.ceil(2 * l1), math.ceil(2 * l2)

        def centers(lam, n):
            # n unit cells cover [-lam, lam]; clamp the last one to the edge
            return [min(-lam + Fraction(1, 2) + i, lam - Fraction(1, 2)) for i in range(n)]

        cells = [u * a + v * b for a in centers(l1, n1) for b in centers(l2, n2)]
        # -(P - ref) is P's shape centered at ref - p_center
        pc = pair.p.center
        offsets = [g + pc - ref for g in cells]
        diff = minkowski_sum(poly, reflect(poly))
        _verify_polygon_pattern(list(diff.vertices), cover, offsets)
        assert len(offsets) <= 16
        return CoverPattern("diff", "polygon", offsets,
                            data={"body": cover, "region": list(diff.vertices)})

    return _cached(("gen16", _poly_key(poly)), build)


def translate_cluster_cover(body) -> CoverPattern:
    """Pattern for the topmost-seed greedy on translate families.

    Sizes: parallelogram 2, triangle 5, disk 4, centrally symmetric 4,
    box 2^(d-1).
    """
    if isinstance(body, BoxBody):
        return box_cover(body.sides, half=True)
    if isinstance(body, DiskBody):
        return disk_half_cover(body.radius)
    poly = body.polygon
    if poly.is_centrally_symmetric() is not None:
        pat = halfplane_four_cover(poly, DOWN)
        assert pat.size <= 4
        return pat
    if len(poly.vertices) == 3:
        pat = triangle_trapezoid_cover(poly)
        assert pat.size <= 5
        return pat
    raise VerificationFailed("no halfplane pattern for this base")


def kappa_upper_bound(d: int, centrally_symmetric: bool, theta_t=None):
    """Static covering-number bound for kappa(C-C, C) in dimension d.

    min{(2d)^d, 2^d/(d+1) * 3^(d+1) * theta_T} in general, and additionally
    min{5^d, 3^d * theta_T} for centrally symmetric bodies; theta_T-dependent
    terms participate only when a value is supplied.
    """
    if d < 2:
        raise ValueError("dimension must be >= 2")
    terms = [Fraction((2 * d) ** d)]
    if theta_t is not None:
        theta_t = frac(theta_t)
        terms.append(Fraction(2 ** d, d + 1) * 3 ** (d + 1) * theta_t)
    if centrally_symmetric:
        terms.append(Fraction(5 ** d))
        if theta_t is not None:
            terms.append(Fraction(3 ** d) * theta_t)
    best = min(terms)
    return int(best) if best.denominator == 1 else best

"""Piercing algorithms for families of translates, each returning a certificate.

greedy_pierce: topmost-seed decomposition with a halfplane cover pattern per
cluster (squares 2, triangles 5, disks 4, centrally symmetric 4, boxes
2^(d-1)); the final cluster can be replaced by the exact oracle optimum.

grid_pierce: the sandwich-pair decomposition into lines and residue classes
with factor gamma = ceil(l_line) * ceil(l_class + 1).

hexagon_pierce: two points for pairwise-intersecting hexagon translates via
the three-strip construction, factor-3 grid decomposition otherwise.

lattice_pierce / lattice_witness: pigeonhole transversals and packings from
covering/packing lattices, with exact union areas for the counting bounds.
"""

from fractions import Fraction
import math
import random

from .bodies import (
    BoxBody,
    DiskBody,
    Family,
    PolygonBody,
    float_bboxes,
    intersection_graph,
    pair_checker,
)
from .certificates import PierceCertificate
from .covers import translate_cluster_cover
from .errors import (
    CoverageNotVerified,
    NotHexagonBase,
    PackingNotVerified,
    UnsupportedBase,
    VerificationFailed,
)
from .geom import (
    ConvexPolygon,
    Point,
    clip_chain,
    frac,
    region_minus_polygons,
)
from .radicals import RadPoint
from .sandwich import (
    SandwichPair,
    hexagon_sandwich,
    hexagon_sandwich_special,
    sandwich_parallelograms,
)

ORACLE_BUDGET = 12


def _top_key(f: Family):
    """Exact sort key: decreasing top coordinate, then translation lex, index.

    Tops come straight from the member fields: top(s*C + t) is s*top(C)
    shifted by the last translation coordinate.
    """
    base_top = f.base.top()
    if f.base.kind == "box":
        def key(i):
            m = f.members[i]
            return (-(base_top * m.s + m.t[-1]), m.t, i)
    else:
        def key(i):
            m = f.members[i]
            return (-(base_top * m.s + m.t.y), m.t.x, m.t.y, i)
    return key


def _sorted_two_phase(n, fkey, exact_key):
    """Sort indices by an exact key using a float prepass.

    float(Fraction) is monotone, so any inversion the float sort leaves
    behind sits inside a run of equal float keys; those runs are re-sorted
    with the exact key.
    """
    order = sorted(range(n), key=lambda i: fkey[i])
    out = []
    i = 0
    while i < n:
        j = i
        while j + 1 < n and fkey[order[j + 1]] == fkey[order[i]]:
            j += 1
        if j > i:
            out.extend(sorted(order[i:j + 1], key=exact_key))
        else:
            out.append(order[i])
        i = j + 1
    return out


def _topmost_order(f: Family):
    base_top = float(f.base.top())
    if f.base.kind == "box":
        fkey = [-(base_top * float(m.s) + float(m.t[-1])) for m in f.members]
    else:
        fkey = [-(base_top * float(m.s) + float(m.t.y)) for m in f.members]
    return _sorted_two_phase(len(f), fkey, _top_key(f))


def _neighbors(f: Family):
    """Candidate-neighbor lists from a uniform grid over float bounding boxes.

    Purely a pruning structure: boxes are padded so no exactly-overlapping
    pair is ever missed, and callers re-check candidates exactly.
    """
    fboxes, pad = float_bboxes(f)
    dim = len(fboxes[0]) // 2
    import statistics

    diam = [max(b[dim + k] - b[k] for k in range(dim)) for b in fboxes]
    cell = statistics.median(diam) or 1.0
    grid = {}
    spans = []
    for i, b in enumerate(fboxes):
        rng = []
        for k in range(dim):
            lo = math.floor((b[k] - pad) / cell)
            hi = math.floor((b[dim + k] + pad) / cell)
            rng.append((lo, hi))
        spans.append(rng)
        if dim == 2:
            for cx in range(rng[0][0], rng[0][1] + 1):
                for cy in range(rng[1][0], rng[1][1] + 1):
                    grid.setdefault((cx, cy), []).append(i)
        else:
            import itertools

            for key in itertools.product(*[range(lo, hi + 1) for lo, hi in rng]):
                grid.setdefault(key, []).append(i)

    def query(i):
        out = set()
        rng = spans[i]
        if dim == 2:
            for cx in range(rng[0][0], rng[0][1] + 1):
                for cy in range(rng[1][0], rng[1][1] + 1):
                    out.update(grid.get((cx, cy), ()))
        else:
            import itertools

            for key in itertools.product(*[range(lo, hi + 1) for lo, hi in rng]):
                out.update(grid.get(key, ()))
        out.discard(i)
        return out

    if dim == 2:
        def bbox_may_overlap(i, j):
            bi, bj = fboxes[i], fboxes[j]
            return (
                bi[0] <= bj[2] + pad
                and bj[0] <= bi[2] + pad
                and bi[1] <= bj[3] + pad
                and bj[1] <= bi[3] + pad
            )
    else:
        def bbox_may_overlap(i, j):
            bi, bj = fboxes[i], fboxes[j]
            return all(
                bi[k] <= bj[dim + k] + pad and bj[k] <= bi[dim + k] + pad
                for k in range(dim)
            )

    return query, bbox_may_overlap


def _anchor(body):
    """The pattern anchor: center for symmetric bodies, the lowest-leftmost
    vertex otherwise (the same vertex the triangle pattern is built on)."""
    if isinstance(body, DiskBody):
        return body.center
    if isinstance(body, BoxBody):
        return tuple(m + s / 2 for m, s in zip(body.mins, body.sides))
    c = body.polygon.is_centrally_symmetric()
    if c is not None:
        return c
    return min(body.polygon.vertices, key=lambda p: (p.y, p.x))


def _anchor_fn(f: Family):
    """Per-member anchor from the base anchor: all anchor choices commute
    with positive scaling and translation."""
    base_anchor = _anchor(f.base)
    if f.base.kind == "box":
        def fn(i):
            m = f.members[i]
            return tuple(a * m.s + tv for a, tv in zip(base_anchor, m.t))
    else:
        def fn(i):
            m = f.members[i]
            return base_anchor * m.s + m.t
    return fn


def _add_offset(anchor, offset):
    if isinstance(offset, RadPoint):
        # anchor is a rational point: shift the rational term directly
        from .radicals import Radical

        def shift(r, d):
            terms = dict(r.terms)
            c = terms.get(1, 0) + d
            if c:
                terms[1] = c
            else:
                terms.pop(1, None)
            return Radical(terms)

        return RadPoint(shift(offset.x, anchor.x), shift(offset.y, anchor.y))
    if isinstance(anchor, tuple):
        return tuple(a + o for a, o in zip(anchor, offset))
    return anchor + offset


def _triangle_normalizer_map(poly: ConvexPolygon):
    from .bodies import AffineMap

    v = poly.vertices
    i0 = min(range(3), key=lambda i: (v[i].y, v[i].x))
    e1 = v[(i0 + 1) % 3] - v[i0]
    e2 = v[(i0 + 2) % 3] - v[i0]
    det = e1.cross(e2)
    # inverse of [e1 e2] as columns
    fwd = AffineMap(e2.y / det, -e2.x / det, -e1.y / det, e1.x / det)
    back = AffineMap(e1.x, e2.x, e1.y, e2.y)
    return fwd, back


def greedy_pierce(f: Family, refine: bool = True, oracle_budget: int = ORACLE_BUDGET,
                  verify: bool = True, sample: int = None) -> PierceCertificate:
    """Greedy decomposition for translates of a supported base body.

    Repeatedly takes the topmost remaining member as a cluster seed, absorbs
    everything it intersects, and pierces the cluster through the halfplane
    cover pattern anchored at the seed.  The seeds are a pairwise-disjoint
    witness.  With refine, the last cluster (within the oracle budget) is
    re-pierced optimally, which realizes the improved additive constants.
    """
    if f.kind != "translates":
        raise UnsupportedBase("greedy_pierce needs a translate family")
    base = f.base
    if isinstance(base, PolygonBody):
        poly = base.polygon
        if poly.is_centrally_symmetric() is None and len(poly.vertices) != 3:
            raise UnsupportedBase("polygon base is neither centrally symmetric nor a triangle")
        if len(poly.vertices) == 3:
            from .bodies import normalize_affine

            fwd, back = _triangle_normalizer_map(poly)
            fn = normalize_affine(f, fwd)
            cert = _greedy_run(fn, refine, oracle_budget)
            cert.points = [back.apply_point(p) for p in cert.points]
            cert.method = "greedy"
            if verify:
                cert.verify(f, sample=sample)
            return cert
    cert = _greedy_run(f, refine, oracle_budget)
    if verify:
        cert.verify(f, sample=sample)
    return cert


def _greedy_run(f: Family, refine: bool, oracle_budget: int) -> PierceCertificate:
    pattern = translate_cluster_cover(f.base)
    n = len(f)
    order = _topmost_order(f)
    query, bbox_may_overlap = _neighbors(f)
    check = pair_checker(f)
    anchor_of = _anchor_fn(f)
    alive = [True] * n
    clusters = []
    cluster_points = []
    for i in order:
        if not alive[i]:
            continue
        alive[i] = False
        members = [i]
        for j in sorted(query(i)):
            if alive[j] and bbox_may_overlap(i, j) and check(i, j):
                alive[j] = False
                members.append(j)
        anchor = anchor_of(i)
        pts = [_add_offset(anchor, o) for o in pattern.offsets]
        clusters.append((i, members))
        cluster_points.append(pts)
    if refine and clusters and len(clusters[-1][1]) <= oracle_budget:
        from .oracle import exact_tau

        last = clusters[-1][1]
        sub = Family(f.base, [f.members[j] for j in last], f.kind)
        tau, pts = exact_tau(sub)
        if tau < len(cluster_points[-1]):
            cluster_points[-1] = pts
    points = dedupe_points(cluster_points)
    witness = [c[0] for c in clusters]
    return PierceCertificate("greedy", pattern.size, points, clusters, witness)


def point_key(p):
    """Hashable canonical key; equal keys imply equal points."""
    if isinstance(p, RadPoint):
        return ("r",) + p.key()
    if isinstance(p, tuple):
        return ("b",) + p
    return ("p", p.x, p.y)


def dedupe_points(point_lists):
    seen = set()
    out = []
    for pts in point_lists:
        for p in pts:
            k = point_key(p)
            if k not in seen:
                seen.add(k)
                out.append(p)
    return out


def grid_pierce(f: Family, pair: SandwichPair = None, verify: bool = True) -> PierceCertificate:
    """Line-and-class decomposition from a sandwich pair (factor gamma)."""
    if f.kind != "translates":
        raise UnsupportedBase("grid_pierce needs a translate family")
    if isinstance(f.base, BoxBody):
        return _grid_pierce_box(f, verify)
    if not isinstance(f.base, PolygonBody):
        raise UnsupportedBase("grid_pierce needs a polygon or box base")
    if pair is None:
        pair = sandwich_parallelograms(f.base.polygon)
    u, v = pair.p.u, pair.p.v
    det = u.cross(v)
    la = pair.line_axis
    e_line = pair.lambdas[la]
    e_class = pair.lambdas[1 - la]
    pc = pair.p.center

    def coords(p):
        a = p.cross(v) / det
        b = u.cross(p) / det
        return (a, b) if la == 1 else (b, a)

    n = len(f)
    alpha = [None] * n
    beta = [None] * n
    for i in range(n):
        ca, cb = coords(pc + f.members[i].t)
        alpha[i] = ca
        beta[i] = cb

    b_off = _line_offset(alpha)
    lines = {}
    for i in range(n):
        j = math.floor(alpha[i] + Fraction(1, 2) - b_off)
        if not (alpha[i] - Fraction(1, 2) < j + b_off < alpha[i] + Fraction(1, 2)):
            raise VerificationFailed("line tangent to a P-translate")
        lines.setdefault(j, []).append(i)

    m_class = math.ceil(e_class + 1)
    k_line = math.ceil(e_line)
    points = []
    clusters = []
    class_seeds = {}
    for j, idxs in sorted(lines.items()):
        idxs.sort(key=lambda i: (beta[i], alpha[i], i))
        alive = set(idxs)
        for i in idxs:
            if i not in alive:
                continue
            alive.discard(i)
            members = [i]
            for k in list(alive):
                if f.intersects(i, k):
                    alive.discard(k)
                    members.append(k)
            c_seed = beta[i] - Fraction(1, 2)
            # each member's P-translate contains the point at its own level
            used = set()
            for m in members:
                c_m = beta[m] - Fraction(1, 2)
                k = max(1, math.ceil(c_m - c_seed))
                if k > k_line or not c_m <= c_seed + k <= c_m + 1:
                    raise VerificationFailed("member escapes its cluster levels")
                used.add(k)
            for k in sorted(used):
                a_coord = j + b_off
                b_coord = c_seed + k
                if la == 1:
                    p = u * a_coord + v * b_coord
                else:
                    p = u * b_coord + v * a_coord
                points.append(p)
            clusters.append((i, sorted(members)))
            class_seeds.setdefault(j % m_class, []).append(i)
    witness = _extend_witness(f, class_seeds)
    points = dedupe_points([points])
    cert = PierceCertificate("grid", pair.gamma, points, clusters, witness,
                             info={"gamma": pair.gamma})
    if verify:
        cert.verify(f)
    return cert


def _extend_witness(f: Family, class_seeds):
    """Largest per-class seed set, greedily extended by other disjoint seeds."""
    witness = list(max(class_seeds.values(), key=lambda s: (len(s), -min(s))))
    others = sorted(i for seeds in class_seeds.values() for i in seeds if i not in witness)
    for i in others:
        if all(not f.intersects(i, j) for j in witness):
            witness.append(i)
    return witness


def _line_offset(alphas):
    """A rational offset no line x = j + b is tangent to any unit interval."""
    fracs = sorted({(a + Fraction(1, 2)) % 1 for a in alphas})
    if not fracs:
        return Fraction(0)
    best_gap, best_mid = None, None
    for i, lo in enumerate(fracs):
        hi = fracs[i + 1] if i + 1 < len(fracs) else fracs[0] + 1
        gap = hi - lo
        if best_gap is None or gap > best_gap:
            best_gap = gap
            best_mid = (lo + hi) / 2 % 1
    return best_mid


def _grid_pierce_box(f: Family, verify: bool) -> PierceCertificate:
    base = f.base
    d = base.dim
    n = len(f)
    norm = [tuple(m / s for m, s in zip(f.realize(i).mins, base.sides)) for i in range(n)]
    offs = []
    for k in range(d - 1):
        offs.append(_line_offset([norm[i][k] + Fraction(1, 2) for i in range(n)]))
    lines = {}
    for i in range(n):
        key = tuple(
            math.floor(norm[i][k] + 1 - offs[k]) for k in range(d - 1)
        )
        lines.setdefault(key, []).append(i)
    points = []
    clusters = []
    class_seeds = {}
    for key, idxs in sorted(lines.items()):
        idxs.sort(key=lambda i: (norm[i][-1], norm[i][:-1], i))
        alive = set(idxs)
        for i in idxs:
            if i not in alive:
                continue
            alive.discard(i)
            members = [i]
            for k in list(alive):
                if f.intersects(i, k):
                    alive.discard(k)
                    members.append(k)
            coord = tuple(key[k] + offs[k] for k in range(d - 1)) + (norm[i][-1] + 1,)
            points.append(tuple(c * s for c, s in zip(coord, base.sides)))
            clusters.append((i, sorted(members)))
            class_seeds.setdefault(tuple(k % 2 for k in key), []).append(i)
    witness = _extend_witness(f, class_seeds)
    factor = 2 ** (d - 1)
    cert = PierceCertificate("grid", factor, points, clusters, witness)
    if verify:
        cert.verify(f)
    return cert


def _hexagon_strips(poly: ConvexPolygon):
    center = poly.is_centrally_symmetric()
    v = [p - center for p in poly.vertices]
    normals = []
    for k in range(3):
        e = v[(k + 1) % 6] - v[k]
        n = e.perp()
        normals.append(n)
    widths = [max(p.dot(n) for p in v) for n in normals]
    return center, v, normals, widths


def hexagon_pierce(f: Family, verify: bool = True) -> PierceCertificate:
    """Theorem-6 piercing for translates of a centrally symmetric hexagon.

    Pairwise-intersecting families take two points: the centers of the two
    hexagon translates inscribed in pairs of shifted strips.  Otherwise the
    factor-3 sandwich pair drives the grid decomposition.
    """
    if f.kind != "translates" or not isinstance(f.base, PolygonBody):
        raise NotHexagonBase("hexagon_pierce needs hexagon translates")
    poly = f.base.polygon
    if len(poly.vertices) != 6 or poly.is_centrally_symmetric() is None:
        raise NotHexagonBase("base is not a centrally symmetric hexagon")
    n = len(f)
    adj = intersection_graph(f)
    complete = all(len(adj[i]) == n - 1 for i in range(n))
    if not complete:
        pair = hexagon_sandwich_special(poly)
        cert = grid_pierce(f, pair, verify=verify)
        cert.method = "hexagon-grid"
        return cert

    center, v, normals, widths = _hexagon_strips(poly)
    centers = [center + f.members[i].t for i in range(n)]
    mids = []
    for k in range(3):
        vals = [c.dot(normals[k]) for c in centers]
        lo, hi = min(vals), max(vals)
        if hi - lo > 2 * widths[k]:
            raise VerificationFailed("strip bound violated for intersecting family")
        mids.append((lo + hi) / 2)

    def solve(k1, k2):
        n1, n2 = normals[k1], normals[k2]
        det = n1.cross(n2)
        x = (mids[k1] * n2.y - mids[k2] * n1.y) / det
        y = (mids[k2] * n1.x - mids[k1] * n2.x) / det
        return Point(x, y)

    # the center of H_ab sits where the slab midlines a and b cross; a member
    # contains that point iff the member's center lies in the hexagon
    # translate there.  Very flat hexagons can defeat one pairing, so all
    # three are tried and checked exactly; the oracle is a last resort.
    poly0 = poly.translate(-center)
    t12, t13, t23 = solve(0, 1), solve(0, 2), solve(1, 2)
    points = None
    for ta, tb in ((t12, t13), (t12, t23), (t13, t23)):
        ha = poly0.translate(ta)
        hb = poly0.translate(tb)
        if all(ha.contains(c) or hb.contains(c) for c in centers):
            points = [ta, tb]
            break
    if points is None:
        from .oracle import exact_tau

        tau, pts = exact_tau(f, limit=max(64, n))
        if tau > 2:
            raise VerificationFailed("no two-point transversal found")
        points = pts
    top = _topmost_order(f)[0]
    cert = PierceCertificate(
        "hexagon", 2, points, [(top, list(range(n)))], [top]
    )
    if verify:
        cert.verify(f)
    return cert


# ---------------------------------------------------------------------------
# lattice constructions (Lemmas 5 and 6)


class LatticeSpec:
    """A planar lattice with a verified covering or packing role."""

    def __init__(self, b1: Point, b2: Point, role: str):
        if b1.cross(b2) == 0:
            raise VerificationFailed("lattice basis is singular")
        if role not in ("covering", "packing"):
            raise VerificationFailed("unknown lattice role")
        self.b1 = b1
        self.b2 = b2
        self.role = role
        self.cell_area = abs(b1.cross(b2))

    def coords(self, p: Point):
        det = self.b1.cross(self.b2)
        return (p.cross(self.b2) / det, self.b1.cross(p) / det)

    def point(self, i, j, offset=None):
        p = self.b1 * i + self.b2 * j
        return p if offset is None else p + offset

    def points_in_bbox(self, ix, iy, offset):
        """Lattice points (+offset) inside the given x/y intervals."""
        corners = [
            Point(ix.lo, iy.lo) - offset,
            Point(ix.hi, iy.lo) - offset,
            Point(ix.hi, iy.hi) - offset,
            Point(ix.lo, iy.hi) - offset,
        ]
        cs = [self.coords(c) for c in corners]
        i_lo = math.floor(min(c[0] for c in cs)) - 1
        i_hi = math.ceil(max(c[0] for c in cs)) + 1
        j_lo = math.floor(min(c[1] for c in cs)) - 1
        j_hi = math.ceil(max(c[1] for c in cs)) + 1
        out = []
        for i in range(i_lo, i_hi + 1):
            for j in range(j_lo, j_hi + 1):
                p = self.point(i, j, offset)
                if ix.lo <= p.x <= ix.hi and iy.lo <= p.y <= iy.hi:
                    out.append(p)
        return out


def _centered_tiling_basis(poly: ConvexPolygon):
    """Tiling lattice basis of a centrally symmetric hexagon or parallelogram."""
    v = poly.vertices
    if len(v) == 6:
        return v[0] + v[1], v[1] + v[2]
    if len(v) == 4:
        return v[1] - v[0], v[3] - v[0]
    raise VerificationFailed("tiling basis needs a hexagon or parallelogram")


def covering_lattice(s0: ConvexPolygon, cell_poly: ConvexPolygon) -> LatticeSpec:
    """Tiling lattice of cell_poly, verified to cover the plane with s0."""
    b1, b2 = _centered_tiling_basis(cell_poly)
    spec = LatticeSpec(b1, b2, "covering")
    cell = [Point(0, 0), b1, b1 + b2, b2]
    if b1.cross(b2) < 0:
        cell.reverse()
    bx, by = s0.bounding_box()
    from .geom import Interval

    cx = Interval(min(p.x for p in cell), max(p.x for p in cell))
    cy = Interval(min(p.y for p in cell), max(p.y for p in cell))
    window_x = Interval(cx.lo - bx.hi, cx.hi - bx.lo)
    window_y = Interval(cy.lo - by.hi, cy.hi - by.lo)
    translates = []
    for lam in spec.points_in_bbox(window_x, window_y, Point(0, 0)):
        translates.append(s0.translate(lam))
    if region_minus_polygons(cell, translates):
        raise CoverageNotVerified("lattice translates do not cover the cell")
    return spec


def packing_lattice(s0: ConvexPolygon, cell_poly: ConvexPolygon, eps=Fraction(1, 64)) -> LatticeSpec:
    """Tiling lattice of 2*cell_poly scaled by (1+eps): 2*s0 packs strictly."""
    eps = frac(eps)
    b1, b2 = _centered_tiling_basis(cell_poly)
    scale = 2 * (1 + eps)
    spec = LatticeSpec(b1 * scale, b2 * scale, "packing")
    big = s0.scale(4)  # 2S - 2S = 4S for centered symmetric S
    bx, by = big.bounding_box()
    from .geom import Interval

    for lam in spec.points_in_bbox(Interval(bx.lo, bx.hi), Interval(by.lo, by.hi), Point(0, 0)):
        if lam == Point(0, 0):
            continue
        if big.contains(lam):
            raise PackingNotVerified("2S translates touch at lattice distance")
    return spec


def union_area_exact(f: Family, limit: int = 15) -> Fraction:
    """Exact area of the union by inclusion-exclusion over convex intersections."""
    from .errors import TooLarge

    n = len(f)
    if n > limit:
        raise TooLarge("union area limited to %d members" % limit)
    if f.base.kind != "polygon":
        raise TooLarge("exact union area needs polygon members")
    chains = [list(f.realize(i).polygon.vertices) for i in range(n)]
    polys = [f.realize(i).polygon for i in range(n)]
    total = Fraction(0)

    def rec(start, chain, sign, area):
        nonlocal total
        total += sign * area
        for i in range(start, n):
            nxt = list(chain)
            for nrm, c in polys[i].halfplanes():
                nxt = clip_chain(nxt, nrm, c)
                if not nxt:
                    break
            if not nxt:
                continue
            from .geom import chain_area

            a = chain_area(nxt)
            if a == 0:
                continue
            rec(i + 1, nxt, -sign, a)

    for i in range(n):
        from .geom import chain_area

        rec(i + 1, chains[i], 1, chain_area(chains[i]))
    return total


def _default_sandwich(f: Family):
    if not isinstance(f.base, PolygonBody):
        raise UnsupportedBase("lattice methods need a centrally symmetric polygon base")
    poly = f.base.polygon
    if poly.is_centrally_symmetric() is None:
        raise UnsupportedBase("lattice methods need a centrally symmetric base")
    return hexagon_sandwich(poly)


def _offset_candidates(spec: LatticeSpec, subdivisions, seed):
    rng = random.Random(seed)
    for m in subdivisions:
        for uu in range(m):
            for vv in range(m):
                yield spec.b1 * Fraction(2 * uu + 1, 2 * m) + spec.b2 * Fraction(2 * vv + 1, 2 * m)
        for _ in range(m):
            yield spec.b1 * Fraction(rng.randrange(4 * m), 4 * m) + spec.b2 * Fraction(
                rng.randrange(4 * m), 4 * m
            )


def _union_bbox(f: Family):
    from .geom import Interval

    boxes = [f.realize(i).bbox() for i in range(len(f))]
    return (
        Interval(min(b[0].lo for b in boxes), max(b[0].hi for b in boxes)),
        Interval(min(b[1].lo for b in boxes), max(b[1].hi for b in boxes)),
    )


def lattice_pierce(f: Family, lattice: LatticeSpec = None, seed: int = 0,
                   subdivisions=(4, 8, 16, 32), verify: bool = True) -> PierceCertificate:
    """Pigeonhole transversal: lattice points inside the union pierce everything.

    Any offset yields a valid piercing set once the covering lattice is
    verified; the offset search only minimizes the count toward the
    floor(area/cell) bound.  The witness comes from the packing construction
    so the certificate is self-contained.
    """
    sw = _default_sandwich(f)
    center = sw.center
    s0 = f.base.polygon.translate(-center)
    h_in0 = sw.h_in.translate(-center)
    if lattice is None:
        lattice = covering_lattice(s0, h_in0)
    elif lattice.role != "covering":
        raise CoverageNotVerified("lattice_pierce needs a covering lattice")
    from .errors import TooLarge

    area_upper = None
    try:
        area = union_area_exact(f)
        target = math.floor(area / lattice.cell_area)
    except TooLarge:
        # the weaker honest bound: the union is at most the sum of areas
        area = None
        area_upper = sum(f.realize(i).measure() for i in range(len(f)))
        target = math.floor(area_upper / lattice.cell_area)
    ix, iy = _union_bbox(f)
    bodies = f.bodies()
    best_pts = None
    for off in _offset_candidates(lattice, subdivisions, seed):
        pts = [
            p
            for p in lattice.points_in_bbox(ix, iy, off + center)
            if any(b.contains(p) for b in bodies)
        ]
        if best_pts is None or len(pts) < len(best_pts):
            best_pts = pts
        if target is not None and best_pts is not None and len(best_pts) <= target:
            break
    wit, wspec = lattice_witness(f, seed=seed, subdivisions=subdivisions, sandwich=sw)
    factor = math.ceil(wspec.cell_area / lattice.cell_area)
    cert = PierceCertificate(
        "lattice",
        factor,
        best_pts,
        [],
        wit,
        info={
            "count": len(best_pts),
            "cover_cell_area": lattice.cell_area,
            "packing_cell_area": wspec.cell_area,
            "union_area": area,
            "union_area_upper": area_upper,
        },
    )
    if verify:
        cert.verify(f)
    return cert


def lattice_witness(f: Family, lattice: LatticeSpec = None, eps=Fraction(1, 64),
                    seed: int = 0, subdivisions=(4, 8, 16, 32), sandwich=None):
    """Pairwise-disjoint members holding distinct lattice points (Lemma-6 dual).

    Returns (member indices, lattice spec).  With the default packing lattice
    of 2*H_out*(1+eps), members containing distinct lattice points are
    disjoint; an exact recheck drops any touching pair (none in practice).
    """
    sw = sandwich or _default_sandwich(f)
    center = sw.center
    s0 = f.base.polygon.translate(-center)
    h_out0 = sw.h_out.translate(-center)
    if lattice is None:
        lattice = packing_lattice(s0, h_out0, eps)
    elif lattice.role != "packing":
        raise PackingNotVerified("lattice_witness needs a packing lattice")
    try:
        area = union_area_exact(f)
        target = math.ceil(area / lattice.cell_area)
    except Exception:
        target = None
    ix, iy = _union_bbox(f)
    bodies = f.bodies()
    best = []
    for off in _offset_candidates(lattice, subdivisions, seed):
        chosen = {}
        for p in lattice.points_in_bbox(ix, iy, off + center):
            for i, b in enumerate(bodies):
                if i not in chosen.values() and b.contains(p):
                    chosen[(p.x, p.y)] = i
                    break
        if len(chosen) > len(best):
            best = list(chosen.values())
        if target is not None and len(best) >= target:
            break
    # exact disjointness recheck with greedy removal
    kept = []
    for i in best:
        if all(not f.intersects(i, j) for j in kept):
            kept.append(i)
    # extending with any further disjoint members only strengthens the witness
    for i in range(len(f)):
        if i not in kept and all(not f.intersects(i, j) for j in kept):
            kept.append(i)
    return kept, lattice

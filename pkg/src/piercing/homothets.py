"""Greedy smallest-first piercing for homothet families.

The seed of each cluster is the smallest remaining homothet; every member
intersecting it contains a translate of the seed, so the difference-body
cover pattern scaled by the seed's scale and anchored at the seed pierces
the whole cluster.  Factors: square 4, triangle <= 12, disk 7, centrally
symmetric <= 7, box 2^d, general polygon <= 16.
"""

from .bodies import BoxBody, DiskBody, Family, PolygonBody
from .certificates import PierceCertificate
from .covers import homothet_cover
from .errors import DegenerateInput, UnsupportedBase
from .bodies import pair_checker
from .translates import ORACLE_BUDGET, _add_offset, _anchor_fn, _neighbors, dedupe_points


def _seed_key(f: Family):
    """Exact key: smallest scale first; equal scales fall back to topmost."""
    base_top = f.base.top()
    if f.base.kind == "box":
        def key(i):
            m = f.members[i]
            return (m.s, -(base_top * m.s + m.t[-1]), m.t, i)
    else:
        def key(i):
            m = f.members[i]
            return (m.s, -(base_top * m.s + m.t.y), m.t.x, m.t.y, i)
    return key


def _smallest_order(f: Family):
    from .translates import _sorted_two_phase

    base_top = float(f.base.top())
    if f.base.kind == "box":
        fkey = [(float(m.s), -(base_top * float(m.s) + float(m.t[-1]))) for m in f.members]
    else:
        fkey = [(float(m.s), -(base_top * float(m.s) + float(m.t.y))) for m in f.members]
    return _sorted_two_phase(len(f), fkey, _seed_key(f))


def _scale_offset(offset, s):
    if isinstance(offset, tuple):
        return tuple(o * s for o in offset)
    return offset * s


def greedy_pierce_homothets(f: Family, refine: bool = True,
                            oracle_budget: int = ORACLE_BUDGET,
                            verify: bool = True, sample: int = None) -> PierceCertificate:
    if isinstance(f.base, PolygonBody):
        pattern = homothet_cover(f.base)
    elif isinstance(f.base, (DiskBody, BoxBody)):
        pattern = homothet_cover(f.base)
    else:
        raise UnsupportedBase("unsupported base body")
    n = len(f)
    order = _smallest_order(f)
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
        s = f.members[i].s
        pts = [_add_offset(anchor, _scale_offset(o, s)) for o in pattern.offsets]
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
    cert = PierceCertificate("greedy-homothets", pattern.size, points, clusters, witness)
    if verify:
        cert.verify(f, sample=sample)
    return cert


def containment_witness(f: Family, i: int, j: int):
    """The translate of member i's scale inside member j through a common point.

    For members with s_i <= s_j that intersect, p + (s_i/s_j) * (B_j - p) is a
    translate of the seed-sized homothet contained in B_j and meeting B_i at
    p; this is the containment step of the smallest-first argument.
    """
    si, sj = f.members[i].s, f.members[j].s
    if si > sj:
        raise DegenerateInput("member i must not be larger")
    bi, bj = f.realize(i), f.realize(j)
    p = bi.common_point(bj)
    lam = si / sj
    if isinstance(bj, DiskBody):
        from .geom import Point

        center = p + (bj.center - p) * lam
        return DiskBody(center, bj.radius * lam)
    if isinstance(bj, BoxBody):
        mins = tuple(pv + (m - pv) * lam for pv, m in zip(p, bj.mins))
        return BoxBody(mins, tuple(s * lam for s in bj.sides))
    from .geom import ConvexPolygon

    verts = [p + (v - p) * lam for v in bj.polygon.vertices]
    return PolygonBody(ConvexPolygon(verts, _trusted=True))


def body_contains_body(outer, inner) -> bool:
    """Exact containment check between realized bodies of the same kind."""
    if isinstance(outer, DiskBody):
        d2 = (inner.center - outer.center).norm2()
        dr = outer.radius - inner.radius
        return dr >= 0 and d2 <= dr * dr
    if isinstance(outer, BoxBody):
        return all(
            mo <= mi and mi + si <= mo + so
            for mo, so, mi, si in zip(outer.mins, outer.sides, inner.mins, inner.sides)
        )
    return outer.polygon.contains_polygon(inner.polygon)

"""JSON schemas for instances and certificates.

Rationals travel as "p/q" strings or plain integers; floats are rejected so
files stay exact.  Certificates embed the instance, which makes them
re-verifiable from the file alone.
"""

from fractions import Fraction
import json

from .bodies import BoxBody, DiskBody, Family, Member, PolygonBody
from .certificates import PierceCertificate
from .errors import ParseError
from .geom import ConvexPolygon, Point
from .radicals import RadPoint, Radical


def _num(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError("exact rational expected, got %r" % (x,))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError("bad rational %r" % x) from e
    raise ParseError("exact rational expected, got %r" % (x,))


def _num_out(q: Fraction):
    q = Fraction(q)
    return int(q) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def _point(obj) -> Point:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise ParseError("point must be a pair")
    return Point(_num(obj[0]), _num(obj[1]))


def _point_out(p: Point):
    return [_num_out(p.x), _num_out(p.y)]


def body_to_json(body):
    if isinstance(body, PolygonBody):
        return {
            "type": "polygon",
            "vertices": [_point_out(v) for v in body.polygon.vertices],
            "reference_point": _point_out(body.reference_point),
        }
    if isinstance(body, DiskBody):
        return {
            "type": "disk",
            "center": _point_out(body.center),
            "radius": _num_out(body.radius),
        }
    if isinstance(body, BoxBody):
        return {
            "type": "box",
            "dim": body.dim,
            "min_corner": [_num_out(v) for v in body.mins],
            "side_lengths": [_num_out(v) for v in body.sides],
        }
    raise ParseError("unknown body")


def body_from_json(obj):
    try:
        kind = obj["type"]
    except (TypeError, KeyError) as e:
        raise ParseError("body needs a type") from e
    if kind == "polygon":
        verts = [_point(v) for v in obj.get("vertices", [])]
        if len(verts) < 3:
            raise ParseError("polygon needs at least 3 vertices")
        ref = obj.get("reference_point")
        return PolygonBody(ConvexPolygon(verts), _point(ref) if ref else None)
    if kind == "disk":
        return DiskBody(_point(obj["center"]), _num(obj["radius"]))
    if kind == "box":
        sides = [_num(v) for v in obj["side_lengths"]]
        dim = int(obj.get("dim", len(sides)))
        if dim != len(sides):
            raise ParseError("box dim mismatch")
        mins = obj.get("min_corner")
        mins = [_num(v) for v in mins] if mins else [0] * dim
        return BoxBody(mins, sides)
    raise ParseError("unknown body type %r" % kind)


def family_to_json(f: Family) -> dict:
    return {
        "base": body_to_json(f.base),
        "kind": f.kind,
        "members": [
            {
                "t": [_num_out(v) for v in (m.t if isinstance(m.t, tuple) else (m.t.x, m.t.y))],
                "s": _num_out(m.s),
            }
            for m in f.members
        ],
    }


def family_from_json(obj) -> Family:
    try:
        base = body_from_json(obj["base"])
        kind = obj.get("kind", "translates")
        members = []
        for m in obj["members"]:
            t = m["t"]
            if base.kind == "box":
                tv = tuple(_num(v) for v in t)
            else:
                tv = _point(t)
            members.append(Member(tv, _num(m.get("s", 1))))
    except ParseError:
        raise
    except Exception as e:
        raise ParseError("bad instance: %s" % e) from e
    from .errors import DegenerateInput

    try:
        return Family(base, members, kind)
    except DegenerateInput as e:
        raise ParseError(str(e)) from e


def _radical_out(r: Radical):
    return [[m, _num_out(c)] for m, c in sorted(r.terms.items())]


def _radical_in(obj) -> Radical:
    out = Radical()
    for m, c in obj:
        out = out + Radical.sqrt(int(m)) * _num(c)
    return out


def point_to_json(p):
    if isinstance(p, Point):
        return {"kind": "rational", "xy": _point_out(p)}
    if isinstance(p, RadPoint):
        if p.is_rational():
            return {"kind": "rational", "xy": [_num_out(p.x.as_fraction()), _num_out(p.y.as_fraction())]}
        return {"kind": "radical", "x": _radical_out(p.x), "y": _radical_out(p.y)}
    return {"kind": "rational", "xy": [_num_out(v) for v in p]}  # box tuple


def point_from_json(obj, box_dim=None):
    kind = obj.get("kind", "rational")
    if kind == "radical":
        return RadPoint(_radical_in(obj["x"]), _radical_in(obj["y"]))
    xy = obj["xy"]
    if box_dim is not None:
        return tuple(_num(v) for v in xy)
    return Point(_num(xy[0]), _num(xy[1]))


def certificate_to_json(cert: PierceCertificate, f: Family) -> dict:
    info = {}
    for k, v in cert.info.items():
        info[k] = _num_out(v) if isinstance(v, Fraction) else v
    return {
        "instance": family_to_json(f),
        "method": cert.method,
        "factor": cert.factor,
        "points": [point_to_json(p) for p in cert.points],
        "clusters": [[s, list(m)] for s, m in cert.clusters],
        "witness": list(cert.witness),
        "info": info,
    }


def certificate_from_json(obj):
    f = family_from_json(obj["instance"])
    box_dim = f.base.dim if f.base.kind == "box" else None
    try:
        points = [point_from_json(p, box_dim) for p in obj["points"]]
        clusters = [(int(s), [int(i) for i in m]) for s, m in obj.get("clusters", [])]
        witness = [int(i) for i in obj["witness"]]
        cert = PierceCertificate(
            obj.get("method", "unknown"), int(obj["factor"]), points, clusters, witness
        )
    except ParseError:
        raise
    except Exception as e:
        raise ParseError("bad certificate: %s" % e) from e
    return cert, f


def pattern_to_json(pat) -> dict:
    """Serialize a CoverPattern so the CLI can re-verify it standalone."""
    doc = {
        "type": "cover_pattern",
        "base_kind": pat.base_kind,
        "region_kind": pat.region_kind,
        "offsets": [point_to_json(p) for p in pat.offsets],
    }
    if pat.base_kind == "polygon":
        doc["region"] = [_point_out(p) for p in pat.data["region"]]
        doc["cover"] = [_point_out(p) for p in pat.data["body"].vertices]
    elif pat.base_kind == "disk":
        doc["radius"] = _num_out(pat.data["radius"])
    else:
        doc["sides"] = [_num_out(s) for s in pat.data["sides"]]
    return doc


def verify_pattern_json(doc) -> bool:
    """Exact re-verification of a serialized cover pattern."""
    from .covers import (
        _verify_box_pattern,
        _verify_disk_half,
        _verify_disk_seven,
        disk_half_offsets,
        disk_seven_offsets,
    )
    from .errors import VerificationFailed
    from .geom import ConvexPolygon, covers_region

    kind = doc.get("base_kind")
    if kind == "polygon":
        region = [_point(p) for p in doc["region"]]
        cover = ConvexPolygon([_point(p) for p in doc["cover"]])
        offsets = [point_from_json(p) for p in doc["offsets"]]
        if not covers_region(region, [cover.translate(o) for o in offsets]):
            raise VerificationFailed("pattern residue is nonempty")
        return True
    if kind == "disk":
        r = _num(doc["radius"])
        offsets = [point_from_json(p) for p in doc["offsets"]]
        offsets = [RadPoint.of(p) if isinstance(p, Point) else p for p in offsets]
        if doc["region_kind"] == "diff":
            canonical = disk_seven_offsets(r)
            _verify_disk_seven(r)
        else:
            canonical = disk_half_offsets(r)
            _verify_disk_half(r)
        got = {p.key() for p in offsets}
        want = {RadPoint.of(p).key() for p in canonical}
        if got != want:
            raise VerificationFailed("disk offsets differ from the verified pattern")
        return True
    if kind == "box":
        sides = tuple(_num(v) for v in doc["sides"])
        offsets = [tuple(_num(v) for v in p["xy"]) for p in doc["offsets"]]
        _verify_box_pattern(sides, offsets, doc["region_kind"] == "diff_half")
        return True
    raise ParseError("unknown pattern kind %r" % kind)


def dump(obj, path=None):
    text = json.dumps(obj, indent=2)
    if path is None:
        return text
    with open(path, "w") as fh:
        fh.write(text + "\n")
    return None


def load(path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError("invalid JSON: %s" % e) from e

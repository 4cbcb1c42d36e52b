"""Certified piercing of translates and homothets of convex bodies."""

from .geom import ConvexPolygon, Interval, Point, convex_hull, minkowski_sum, reflect
from .bodies import (
    AffineMap,
    BoxBody,
    DiskBody,
    Family,
    Member,
    PolygonBody,
    intersection_graph,
    normalize_affine,
)
from .radicals import Radical, RadPoint, refine_sign

__all__ = [
    "AffineMap",
    "BoxBody",
    "ConvexPolygon",
    "DiskBody",
    "Family",
    "Interval",
    "Member",
    "Point",
    "PolygonBody",
    "RadPoint",
    "Radical",
    "convex_hull",
    "intersection_graph",
    "minkowski_sum",
    "normalize_affine",
    "reflect",
    "refine_sign",
]

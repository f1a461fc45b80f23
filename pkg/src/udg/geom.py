"""Exact geometric predicates on points and segments.

All predicates work on orientation signs and coordinate comparisons in
Q[sqrt(d)]; intersection points are never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

from .exactfield import QuadExt


class Point(NamedTuple):
    x: QuadExt
    y: QuadExt


Segment = Tuple[Point, Point]


def point(x, y, d: int = 0) -> Point:
    """Build a point from rationals (or (a, b) pairs meaning a + b*sqrt(d))."""

    def coord(v):
        if isinstance(v, QuadExt):
            return v
        if isinstance(v, tuple):
            return QuadExt(Fraction(v[0]), Fraction(v[1]), d)
        return QuadExt(Fraction(v))

    return Point(coord(x), coord(y))


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the signed area of the triangle (p, q, r); +1 means ccw."""
    return ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)).sign()


def sq_dist(p: Point, q: Point) -> QuadExt:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


class SegmentRelation(Enum):
    DISJOINT = "disjoint"
    SHARED_ENDPOINT = "shared_endpoint"
    PROPER_CROSS = "proper_cross"
    TOUCH = "touch"
    OVERLAP = "overlap"


def _within_closed(p: Point, a: Point, b: Point) -> bool:
    # p assumed collinear with a, b; is it inside the closed segment?
    if a.x != b.x:
        lo, hi = (a.x, b.x) if a.x < b.x else (b.x, a.x)
        return lo <= p.x <= hi
    lo, hi = (a.y, b.y) if a.y < b.y else (b.y, a.y)
    return lo <= p.y <= hi


def segment_relation(e: Segment, f: Segment) -> SegmentRelation:
    """Classify how two non-degenerate segments meet.

    proper_cross: open interiors share exactly one point.
    shared_endpoint: intersection is exactly a common endpoint.
    touch: an endpoint of one lies in the other's interior.
    overlap: collinear with a common sub-segment of positive length.
    """
    p1, p2 = e
    q1, q2 = f
    if p1 == p2 or q1 == q2:
        raise ValueError("degenerate segment")

    o1 = orient(q1, q2, p1)
    o2 = orient(q1, q2, p2)
    o3 = orient(p1, p2, q1)
    o4 = orient(p1, p2, q2)

    if o1 == 0 and o2 == 0 and o3 == 0 and o4 == 0:
        # Collinear: compare 1-d intervals along the dominant axis.
        axis = 0 if p1.x != p2.x else 1
        ep = sorted([p1[axis], p2[axis]])
        fq = sorted([q1[axis], q2[axis]])
        lo = max(ep[0], fq[0])
        hi = min(ep[1], fq[1])
        if lo > hi:
            return SegmentRelation.DISJOINT
        if lo < hi:
            return SegmentRelation.OVERLAP
        return SegmentRelation.SHARED_ENDPOINT

    if p1 == q1 or p1 == q2 or p2 == q1 or p2 == q2:
        return SegmentRelation.SHARED_ENDPOINT

    if o1 * o2 < 0 and o3 * o4 < 0:
        return SegmentRelation.PROPER_CROSS

    if o1 == 0 and _within_closed(p1, q1, q2):
        return SegmentRelation.TOUCH
    if o2 == 0 and _within_closed(p2, q1, q2):
        return SegmentRelation.TOUCH
    if o3 == 0 and _within_closed(q1, p1, p2):
        return SegmentRelation.TOUCH
    if o4 == 0 and _within_closed(q2, p1, p2):
        return SegmentRelation.TOUCH
    return SegmentRelation.DISJOINT


@dataclass(frozen=True)
class DirectionClass:
    """Canonical representative of an undirected segment direction.

    Parallel segments map to equal values: non-vertical directions are
    keyed by their exact slope, vertical ones by the flag alone.
    """

    vertical: bool
    slope: Optional[QuadExt]

    @property
    def horizontal(self) -> bool:
        return not self.vertical and self.slope.sign() == 0

    @property
    def slope_sign(self) -> Optional[int]:
        return None if self.vertical else self.slope.sign()

    def __str__(self):
        return "vertical" if self.vertical else f"slope={self.slope}"


def direction_class(p: Point, q: Point) -> DirectionClass:
    if p == q:
        raise ValueError("direction of a degenerate segment")
    dx = q.x - p.x
    if dx.sign() == 0:
        return DirectionClass(vertical=True, slope=None)
    return DirectionClass(vertical=False, slope=(q.y - p.y) / dx)


def _ray_rank(sx: int, sy: int) -> int:
    # octant rank of a direction by ccw angle from the positive x axis
    if sy == 0:
        return 0 if sx > 0 else 4
    if sy > 0:
        return 1 if sx > 0 else (2 if sx == 0 else 3)
    return 5 if sx < 0 else (6 if sx == 0 else 7)


def angular_cmp(center: Point, p: Point, q: Point) -> int:
    """Order directions center->p, center->q by ccw angle from +x axis.

    Returns -1/0/+1; 0 means p and q lie on the same ray from center.
    """
    dxp = p.x - center.x
    dyp = p.y - center.y
    dxq = q.x - center.x
    dyq = q.y - center.y
    if (dxp.sign() == 0 and dyp.sign() == 0) or (dxq.sign() == 0 and dyq.sign() == 0):
        raise ValueError("angular_cmp needs points distinct from the center")
    rp = _ray_rank(dxp.sign(), dyp.sign())
    rq = _ray_rank(dxq.sign(), dyq.sign())
    if rp != rq:
        return -1 if rp < rq else 1
    cross = (dxp * dyq - dyp * dxq).sign()
    # within one octant range, p precedes q iff q is ccw of p
    return -cross

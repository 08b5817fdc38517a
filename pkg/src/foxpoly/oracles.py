"""Slow reference implementations used to cross-check the fast paths.

Nothing in here shares code with the module it checks.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import atan2
from typing import List, Optional, Sequence, Tuple


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _in_triangle(p, a, b, c) -> bool:
    d1, d2, d3 = _orient(a, b, p), _orient(b, c, p), _orient(c, a, p)
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (has_neg and has_pos)


def _on_segment(p, a, b) -> bool:
    return (_orient(a, b, p) == 0
            and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def extreme_points(points: Sequence[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """Vertices of the planar hull by the Caratheodory test, then angular sort.

    A point is not a vertex iff it lies in a closed triangle or on a segment
    spanned by other points.  Output is counterclockwise from the
    lexicographic minimum.
    """
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 1:
        return pts
    keep = []
    for p in pts:
        others = [q for q in pts if q != p]
        covered = any(_on_segment(p, a, b) for a, b in combinations(others, 2))
        if not covered:
            covered = any(_in_triangle(p, a, b, c) for a, b, c in combinations(others, 3)
                          if _orient(a, b, c) != 0)
        if not covered:
            keep.append(p)
    if len(keep) <= 2:
        return keep
    cx = Fraction(sum(p[0] for p in keep), len(keep))
    cy = Fraction(sum(p[1] for p in keep), len(keep))
    keep.sort(key=lambda p: atan2(float(p[1] - cy), float(p[0] - cx)))
    start = keep.index(min(keep))
    return keep[start:] + keep[:start]


def extreme_points_1d(points: Sequence[Tuple[int]]) -> List[Tuple[int]]:
    vals = sorted({p[0] for p in points})
    return [(vals[0],)] if vals[0] == vals[-1] else [(vals[0],), (vals[-1],)]


def pairwise_sum_vertices(p_vertices, q_vertices):
    """Vertex list of P + Q as the extreme points of all pairwise sums."""
    sums = [tuple(a + b for a, b in zip(u, v)) for u in p_vertices for v in q_vertices]
    if len(sums[0]) == 1:
        return extreme_points_1d(sums)
    return extreme_points(sums)


def proper_power_bruteforce(letters: Sequence[int]) -> Optional[Tuple[Tuple[int, ...], int]]:
    """Try every divisor of the length as a period, smallest first."""
    n = len(letters)
    for d in range(1, n):
        if n % d == 0 and tuple(letters[:d]) * (n // d) == tuple(letters):
            return tuple(letters[:d]), n // d
    return None


def _egcd(a: int, b: int):
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, s, t = _egcd(b, a % b)
    return g, t, s - (a // b) * t


def smith_projection(ex: int, ey: int):
    """Free-part projection of Z^2 / <(ex, ey)> via a unimodular row reduction."""
    if ex == 0 and ey == 0:
        return ((1, 0), (0, 1))
    g, s, t = _egcd(ex, ey)
    assert s * ex + t * ey == g
    # V = [[s, t], [-ey/g, ex/g]] has det 1 and sends (ex, ey) to (g, 0).
    return ((-ey // g, ex // g),)


def newton_width(signed_points, covector) -> int:
    """max - min of a covector over a signed multiset, ignoring signs."""
    vals = [sum(c * x for c, x in zip(covector, pt)) for _, pt in signed_points]
    return max(vals) - min(vals)

"""Exact integral polytopes in Z^1 and Z^2 and their Grothendieck group.

Polytopes are stored by their vertices: in rank 2 counterclockwise from the
lexicographically smallest vertex, in rank 1 as ``(lo,), (hi,)``.  All
arithmetic is on Python ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import RankMismatchError

Point = Tuple[int, ...]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _add(p, q):
    return tuple(a + b for a, b in zip(p, q))


def _sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


@dataclass(frozen=True)
class IntegralPolytope:
    vertices: Tuple[Point, ...]

    @property
    def rank(self) -> int:
        return len(self.vertices[0])

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    @property
    def dimension(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def lexmin(self) -> Point:
        return self.vertices[0]

    def max(self, covector) -> int:
        return max(_dot(covector, v) for v in self.vertices)

    def min(self, covector) -> int:
        return min(_dot(covector, v) for v in self.vertices)

    def width(self, covector) -> int:
        return self.max(covector) - self.min(covector)

    def translate(self, t: Point) -> "IntegralPolytope":
        return IntegralPolytope(tuple(_add(v, t) for v in self.vertices)) if any(t) else self

    def linear_map(self, matrix: Sequence[Sequence[int]]) -> "IntegralPolytope":
        """Image under the integer matrix ``matrix`` (rows act on columns)."""
        return hull(tuple(_dot(row, v) for row in matrix) for v in self.vertices)

    def edges(self) -> List[Point]:
        """Edge vectors in counterclockwise order (rank 2 only)."""
        vs = self.vertices
        if len(vs) == 1:
            return []
        return [_sub(vs[(i + 1) % len(vs)], vs[i]) for i in range(len(vs))]

    def __add__(self, other: "IntegralPolytope") -> "IntegralPolytope":
        return minkowski_sum(self, other)

    def to_json(self):
        return [list(v) for v in self.vertices]


def _dot(covector, point) -> int:
    if hasattr(covector, "induced"):
        covector = covector.induced
    return sum(c * p for c, p in zip(covector, point))


def point(*coords: int) -> IntegralPolytope:
    return IntegralPolytope((tuple(coords),))


def origin(rank: int) -> IntegralPolytope:
    return IntegralPolytope(((0,) * rank,))


def hull(points: Iterable[Sequence[int]]) -> IntegralPolytope:
    """Convex hull of a nonempty finite multiset of lattice points."""
    pts = sorted({tuple(p) for p in points})
    if not pts:
        raise ValueError("hull of an empty point set")
    rank = len(pts[0])
    if any(len(p) != rank for p in pts):
        raise RankMismatchError("points of mixed rank")
    if rank == 1:
        lo, hi = pts[0], pts[-1]
        return IntegralPolytope((lo,) if lo == hi else (lo, hi))
    if rank != 2:
        raise RankMismatchError(f"only rank 1 and 2 are supported, got {rank}")
    if len(pts) == 1:
        return IntegralPolytope((pts[0],))

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    return IntegralPolytope(tuple(lower[:-1] + upper[:-1]))


def _half(v) -> int:
    # 0 for angles in (-pi/2, pi/2], 1 for (pi/2, 3pi/2]
    return 0 if v[0] > 0 or (v[0] == 0 and v[1] > 0) else 1


def _angle_cmp(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _walk(start: Point, edges: Iterable[Point]) -> IntegralPolytope:
    pts = [start]
    for e in sorted(edges, key=cmp_to_key(_angle_cmp)):
        pts.append(_add(pts[-1], e))
    return hull(pts)


def minkowski_sum(p: IntegralPolytope, q: IntegralPolytope) -> IntegralPolytope:
    """P + Q by merging edge sequences sorted by angle."""
    if p.rank != q.rank:
        raise RankMismatchError(f"cannot add polytopes of rank {p.rank} and {q.rank}")
    if p.rank == 1:
        return hull([_add(p.vertices[0], q.vertices[0]), _add(p.vertices[-1], q.vertices[-1])])
    return _walk(_add(p.lexmin(), q.lexmin()), p.edges() + q.edges())


def _edge_profile(p: IntegralPolytope) -> Dict[Point, int]:
    """Map primitive edge direction -> lattice length."""
    profile: Dict[Point, int] = {}
    for e in p.edges():
        g = gcd(e[0], e[1])
        d = (e[0] // g, e[1] // g)
        profile[d] = profile.get(d, 0) + g
    return profile


@dataclass(frozen=True, eq=False)
class VirtualPolytope:
    """The formal difference ``positive - negative``."""

    positive: IntegralPolytope
    negative: IntegralPolytope

    def __post_init__(self):
        if self.positive.rank != self.negative.rank:
            raise RankMismatchError("positive and negative parts differ in rank")

    @classmethod
    def single(cls, p: IntegralPolytope) -> "VirtualPolytope":
        return cls(p, origin(p.rank))

    @property
    def rank(self) -> int:
        return self.positive.rank

    def __add__(self, other: "VirtualPolytope") -> "VirtualPolytope":
        return VirtualPolytope(self.positive + other.positive, self.negative + other.negative)

    def __neg__(self) -> "VirtualPolytope":
        return VirtualPolytope(self.negative, self.positive)

    def __sub__(self, other: "VirtualPolytope") -> "VirtualPolytope":
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, VirtualPolytope):
            return NotImplemented
        return virtual_equal(self, other)

    __hash__ = None

    def translate(self, t: Point) -> "VirtualPolytope":
        return VirtualPolytope(self.positive.translate(t), self.negative)

    def linear_map(self, matrix) -> "VirtualPolytope":
        return VirtualPolytope(self.positive.linear_map(matrix), self.negative.linear_map(matrix))

    def __repr__(self):
        return f"VirtualPolytope({list(self.positive.vertices)} - {list(self.negative.vertices)})"


def virtual_equal(a: VirtualPolytope, b: VirtualPolytope) -> bool:
    """``P - Q == P' - Q'`` iff ``P + Q' == P' + Q``."""
    if a.rank != b.rank:
        raise RankMismatchError("virtual polytopes of different rank")
    return a.positive + b.negative == b.positive + a.negative


class TranslationClass:
    """A virtual polytope modulo lattice translations.

    Both parts are stored with their lexicographically smallest vertex at the
    origin.  Because the lexicographic minimum is additive under Minkowski
    sum, two classes agree iff the normalized cross sums agree exactly.
    """

    __slots__ = ("representative",)

    def __init__(self, v: VirtualPolytope):
        pos, neg = v.positive, v.negative
        pos = pos.translate(tuple(-c for c in pos.lexmin()))
        neg = neg.translate(tuple(-c for c in neg.lexmin()))
        self.representative = VirtualPolytope(pos, neg)

    @property
    def positive(self) -> IntegralPolytope:
        return self.representative.positive

    @property
    def negative(self) -> IntegralPolytope:
        return self.representative.negative

    @property
    def rank(self) -> int:
        return self.representative.rank

    def __eq__(self, other):
        if not isinstance(other, TranslationClass):
            return NotImplemented
        return class_equal(self, other)

    __hash__ = None

    def __add__(self, other: "TranslationClass") -> "TranslationClass":
        return TranslationClass(self.representative + other.representative)

    def __neg__(self) -> "TranslationClass":
        return TranslationClass(-self.representative)

    def linear_map(self, matrix) -> "TranslationClass":
        return TranslationClass(self.representative.linear_map(matrix))

    def __repr__(self):
        return f"TranslationClass({list(self.positive.vertices)} - {list(self.negative.vertices)})"


def class_equal(a: TranslationClass, b: TranslationClass) -> bool:
    return virtual_equal(a.representative, b.representative)


def resolve_single(a) -> Optional[IntegralPolytope]:
    """Find ``C`` with ``C + negative == positive``, or None if none exists.

    In the plane a polygon is fixed up to translation by its edge vectors,
    and the edges of a Minkowski sum are the union of the summands' edges.
    So ``C`` exists iff, in every edge direction, the negative part's edge
    is no longer than the positive part's; ``C`` then consists of the
    differences.  Accepts a :class:`VirtualPolytope` or a
    :class:`TranslationClass`.
    """
    v = a.representative if isinstance(a, TranslationClass) else a
    pos, neg = v.positive, v.negative
    if pos.rank == 1:
        lo = pos.vertices[0][0] - neg.vertices[0][0]
        hi = pos.vertices[-1][0] - neg.vertices[-1][0]
        if hi < lo:
            return None
        candidate = hull([(lo,), (hi,)])
    else:
        pp, pn = _edge_profile(pos), _edge_profile(neg)
        edges = []
        for d in set(pp) | set(pn):
            diff = pp.get(d, 0) - pn.get(d, 0)
            if diff < 0:
                return None
            if diff:
                edges.append((d[0] * diff, d[1] * diff))
        candidate = _walk(_sub(pos.lexmin(), neg.lexmin()), edges)
    if candidate + neg != pos:
        return None
    return candidate


def thickness(a, phi) -> int:
    """Width of ``a`` along ``phi``, extended additively to virtual polytopes."""
    if isinstance(a, TranslationClass):
        a = a.representative
    if isinstance(a, IntegralPolytope):
        return a.width(phi)
    return a.positive.width(phi) - a.negative.width(phi)


# -- faces and normal fans ---------------------------------------------------

@dataclass(frozen=True)
class Cone:
    """An open cone of covectors.

    ``kind`` is ``"ray"`` (positive multiples of ``rays[0]``), ``"sector"``
    (strictly between ``rays[0]`` and ``rays[1]`` counterclockwise, angle at
    most pi) or ``"all"`` (every nonzero covector).
    """

    kind: str
    rays: Tuple[Point, ...] = ()

    def contains(self, phi: Sequence[int]) -> bool:
        phi = tuple(phi)
        if not any(phi):
            return False
        if self.kind == "all":
            return True
        if self.kind == "ray":
            r = self.rays[0]
            if len(r) == 1:
                return phi[0] * r[0] > 0
            return r[0] * phi[1] - r[1] * phi[0] == 0 and _dot(r, phi) > 0
        s, e = self.rays
        left_of_s = s[0] * phi[1] - s[1] * phi[0] > 0
        if s == (-e[0], -e[1]):
            return left_of_s
        return left_of_s and phi[0] * e[1] - phi[1] * e[0] > 0

    def sample(self) -> Point:
        """A primitive integral covector inside the cone."""
        if self.kind == "all":
            return (1, 0)
        if self.kind == "ray":
            return self.rays[0]
        s, e = self.rays
        v = (-s[1], s[0]) if s == (-e[0], -e[1]) else (s[0] + e[0], s[1] + e[1])
        g = gcd(*v)
        return (v[0] // g, v[1] // g)

    def to_json(self):
        return {"kind": self.kind, "rays": [list(r) for r in self.rays]}


@dataclass(frozen=True)
class FaceDual:
    face: IntegralPolytope
    duals: Tuple[Cone, ...]


def _primitive(v):
    g = gcd(*v)
    return tuple(c // g for c in v)


def face(p: IntegralPolytope, phi) -> IntegralPolytope:
    """The face of ``p`` on which ``phi`` is minimal."""
    m = p.min(phi)
    return hull(v for v in p.vertices if _dot(phi, v) == m)


def faces_and_duals(p: IntegralPolytope) -> List[FaceDual]:
    """Every face of ``p`` with the connected components of its dual."""
    vs = p.vertices
    if p.rank == 1:
        if len(vs) == 1:
            return [FaceDual(p, (Cone("ray", ((1,),)), Cone("ray", ((-1,),))))]
        return [FaceDual(IntegralPolytope((vs[0],)), (Cone("ray", ((1,),)),)),
                FaceDual(IntegralPolytope((vs[1],)), (Cone("ray", ((-1,),)),))]
    if len(vs) == 1:
        return [FaceDual(p, (Cone("all"),))]
    if len(vs) == 2:
        d = _primitive(_sub(vs[1], vs[0]))
        right, left = (d[1], -d[0]), (-d[1], d[0])
        return [FaceDual(IntegralPolytope((vs[0],)), (Cone("sector", (right, left)),)),
                FaceDual(IntegralPolytope((vs[1],)), (Cone("sector", (left, right)),)),
                FaceDual(p, (Cone("ray", (left,)), Cone("ray", (right,))))]
    n = len(vs)
    inward = []
    for i, e in enumerate(p.edges()):
        inward.append(_primitive((-e[1], e[0])))
    out = []
    for i in range(n):
        out.append(FaceDual(IntegralPolytope((vs[i],)),
                            (Cone("sector", (inward[i - 1], inward[i])),)))
    for i in range(n):
        out.append(FaceDual(hull([vs[i], vs[(i + 1) % n]]), (Cone("ray", (inward[i],)),)))
    return out

"""The marked polytope of a two-generator one-relator presentation.

Pipeline: cyclically reduce the relator, classify the presentation, take
the Fox derivative with respect to a generator ``z`` occurring in the
relator, project its terms to the free part ``H`` of the abelianization and
subtract the segment ``[0, w]`` spanned by the image of the other generator.

The support of the Fox derivative is taken to be the *set* of term images,
with no cancellation between terms landing on the same lattice point.  The
terms represent mutually distinct group elements, so over a skew field each
lattice level carries a nonzero coefficient even when the integer signs
would cancel in Z[H].
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .abelian import (AbelianizationData, Character, LatticePoint, abelian_image,
                      analyze_abelianization, make_character)
from .errors import ClassificationError, TorsionError
from .foxcalc import fox_term_list
from .polytope import (IntegralPolytope, TranslationClass, VirtualPolytope, hull,
                       resolve_single, thickness)
from .words import (Generator, NielsenMove, Presentation, Word, apply_nielsen,
                    cyclic_permute, cyclic_reduce, invert, is_primitive, is_proper_power)


class Kind(str, enum.Enum):
    NICE = "nice"
    SIMPLE = "simple"
    FREE_RANK2 = "free_rank2"
    FREE_RANK1 = "free_rank1"
    TORSION = "torsion"
    OTHER_B1_1 = "other_b1_1"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    torsion_free: bool
    relator: Word                      # cyclically reduced core
    conjugator: Word                   # input == conjugator * relator * conjugator^-1
    proper_power: Optional[Tuple[Word, int]]
    abelianization: AbelianizationData

    @property
    def was_reduced(self) -> bool:
        return bool(self.conjugator)


@lru_cache(maxsize=4096)
def classify(p: Presentation) -> Classification:
    core, conj = cyclic_reduce(p.relator)
    ab = analyze_abelianization(p.with_relator(core))
    power = is_proper_power(core) if core else None
    torsion_free = power is None
    if not core:
        kind = Kind.FREE_RANK2
    elif ab.b1 == 2:
        kind = Kind.NICE
    else:
        gx, gy = ab.generator_images
        if sorted((abs(gx[0]), abs(gy[0]))) == [0, 1]:
            kind = Kind.SIMPLE
        elif is_primitive(core):
            kind = Kind.FREE_RANK1
        elif power is not None:
            kind = Kind.TORSION
        else:
            kind = Kind.OTHER_B1_1
    return Classification(kind, torsion_free, core, conj, power, ab)


@dataclass(frozen=True)
class TermImage:
    sign: int
    point: LatticePoint
    position: int
    word: Word


@dataclass(frozen=True, eq=False)
class PolytopeInvariant:
    class_PT: TranslationClass
    single: Optional[IntegralPolytope]
    witness_generator: Generator
    term_images: Tuple[TermImage, ...]
    derivative_hull: IntegralPolytope
    subtrahend: IntegralPolytope
    classification: Classification

    @property
    def cancelled_support(self) -> Dict[LatticePoint, int]:
        """Term images summed with signs, as they would be in Z[H]."""
        acc: Dict[LatticePoint, int] = {}
        for t in self.term_images:
            acc[t.point] = acc.get(t.point, 0) + t.sign
        return {pt: c for pt, c in sorted(acc.items()) if c}


def choose_witness(c: Classification) -> Generator:
    """The generator with fewer (but nonzero) occurrences; ties go to x."""
    counts = {g: c.relator.count(g) for g in Generator}
    present = [g for g in Generator if counts[g]]
    return min(present, key=lambda g: (counts[g], g))


def term_images(r: Word, z: int, ab: AbelianizationData) -> Tuple[TermImage, ...]:
    return tuple(TermImage(t.sign, abelian_image(t.word, ab), t.position, t.word)
                 for t in fox_term_list(r, z))


def _require_polytope_kind(c: Classification):
    if c.kind not in (Kind.NICE, Kind.SIMPLE):
        raise ClassificationError(
            f"presentation is {c.kind.value}; the polytope is defined only for "
            f"nice or simple presentations", c.kind)


def compute_polytope(p: Presentation, witness: Optional[int] = None) -> PolytopeInvariant:
    c = classify(p)
    _require_polytope_kind(c)
    ab = c.abelianization
    z = Generator(witness) if witness is not None else choose_witness(c)
    if not c.relator.count(z):
        raise ValueError(f"generator {p.names[z - 1]} does not occur in the relator")
    images = term_images(c.relator, z, ab)
    deriv = hull(t.point for t in images)
    other = ab.generator_images[z.other - 1]
    sub = hull([(0,) * ab.b1, other])
    cls = TranslationClass(VirtualPolytope(deriv, sub))
    return PolytopeInvariant(cls, resolve_single(cls), z, images, deriv, sub, c)


@dataclass(frozen=True)
class MarkingReport:
    verdicts: Dict[Tuple[int, int], bool]
    reason: str

    @property
    def marked(self) -> List[Tuple[int, int]]:
        return [k for k, v in self.verdicts.items() if v]

    @property
    def summary(self) -> dict:
        return {"total": len(self.verdicts), "marked": len(self.marked), "rule": self.reason}


def _unique_max(images: Sequence[TermImage], phi: Character) -> bool:
    values = [phi(t.point) for t in images]
    top = max(values)
    return values.count(top) == 1


def is_marked(c: Classification, phi: Character) -> bool:
    """Marking rule: some generator's Fox terms have a unique phi-maximum.

    Groups with torsion have empty BNS invariant and are never marked.
    """
    if not c.torsion_free:
        return False
    for z in Generator:
        if c.relator.count(z):
            if _unique_max(term_images(c.relator, z, c.abelianization), phi):
                return True
    return False


def markings(p: Presentation, chars: Iterable[Character]) -> MarkingReport:
    c = classify(p)
    if c.kind in (Kind.FREE_RANK2, Kind.OTHER_B1_1):
        raise ClassificationError(
            f"markings are not available for {c.kind.value} presentations", c.kind)
    if not c.torsion_free:
        return MarkingReport({phi.values: False for phi in chars}, "torsion")
    return MarkingReport({phi.values: is_marked(c, phi) for phi in chars}, "unique-maximal-term")


@dataclass(frozen=True)
class SplittingReport:
    character: Character
    primitive: Character
    thickness: int
    complexity: int


def splitting_complexity(p: Presentation, phi: Character) -> SplittingReport:
    """Minimal rank of an associated group over splittings inducing phi.

    Equals the thickness of the polytope along the primitive character
    plus one, for torsion-free groups other than F_2.
    """
    c = classify(p)
    if c.kind is Kind.FREE_RANK2:
        raise ClassificationError("the free group of rank 2 is excluded", c.kind)
    if not c.torsion_free:
        root, k = c.proper_power
        raise TorsionError(f"relator is a proper power (exponent {k}); "
                           f"the group has torsion")
    inv = compute_polytope(p)
    prim = phi.primitive()
    th = thickness(inv.class_PT, prim)
    return SplittingReport(phi, prim, th, th + 1)


# -- invariance under automorphisms --------------------------------------------

def _matmul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
                 for i in range(2))


def pushforward_matrix(moves: Sequence[NielsenMove]):
    """Abelianized matrix of the composite automorphism (first move applied first)."""
    ident = ((1, 0), (0, 1))
    return reduce(lambda acc, m: _matmul(m.abelian_matrix(), acc), moves, ident)


def invariance_suite(p: Presentation, moves: Sequence[NielsenMove] = (),
                     cyclic_shifts: Sequence[int] = ()) -> bool:
    """Check the polytope class against transformed relators.

    Each prefix of ``moves`` is applied to the relator; the recomputed class
    must equal the pushforward of the original class under the induced map
    on H.  Cyclic rotations and the inverse relator must give the same class.
    """
    c = classify(p)
    if c.kind is not Kind.NICE:
        raise ClassificationError("invariance suite requires a nice presentation", c.kind)
    base = compute_polytope(p).class_PT
    r = c.relator
    word = r
    applied: List[NielsenMove] = []
    for m in moves:
        word = apply_nielsen(m, word)
        applied.append(m)
        image = compute_polytope(p.with_relator(word)).class_PT
        if image != base.linear_map(pushforward_matrix(applied)):
            return False
    for k in cyclic_shifts:
        if compute_polytope(p.with_relator(cyclic_permute(r, k))).class_PT != base:
            return False
    return compute_polytope(p.with_relator(invert(r))).class_PT == base


def two_formula_agree(p: Presentation) -> bool:
    """Whether the x- and y-derivative formulas give the same class."""
    c = classify(p)
    if not (c.relator.count(1) and c.relator.count(2)):
        return True
    return compute_polytope(p, 1).class_PT == compute_polytope(p, 2).class_PT


def default_characters(p: Presentation, bound: int = 5) -> List[Character]:
    """Primitive integral characters with entries bounded by ``bound``."""
    from math import gcd
    ab = classify(p).abelianization
    out = []
    for vx in range(-bound, bound + 1):
        for vy in range(-bound, bound + 1):
            if (vx, vy) == (0, 0) or gcd(vx, vy) != 1:
                continue
            ex, ey = ab.exponent_sums
            if vx * ex + vy * ey == 0:
                out.append(make_character(p, vx, vy, ab))
    return out

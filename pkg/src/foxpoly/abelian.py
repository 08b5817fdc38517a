"""Abelianization of <x, y | r>: exponent sums, b1, free-part coordinates."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Tuple

from .errors import CharacterError
from .words import Presentation, Word

LatticePoint = Tuple[int, ...]


@dataclass(frozen=True)
class AbelianizationData:
    """Projection of Z^2 = H_1(F) onto the free part H of H_1(G).

    ``projection`` has one row per coordinate of H; a word with exponent
    vector ``(wx, wy)`` maps to ``projection @ (wx, wy)``.
    """

    exponent_sums: Tuple[int, int]
    b1: int
    projection: Tuple[Tuple[int, int], ...]
    torsion_order: int

    def project(self, vec: Tuple[int, int]) -> LatticePoint:
        return tuple(a * vec[0] + b * vec[1] for a, b in self.projection)

    @property
    def generator_images(self) -> Tuple[LatticePoint, LatticePoint]:
        return self.project((1, 0)), self.project((0, 1))


def analyze_abelianization(p: Presentation) -> AbelianizationData:
    ex, ey = p.relator.exponent_sums()
    if ex == 0 and ey == 0:
        return AbelianizationData((0, 0), 2, ((1, 0), (0, 1)), 1)
    g = gcd(ex, ey)
    row = (ey // g, -ex // g)
    if row[0] < 0 or (row[0] == 0 and row[1] < 0):
        row = (-row[0], -row[1])
    return AbelianizationData((ex, ey), 1, (row,), g)


def abelian_image(w: Word, a: AbelianizationData) -> LatticePoint:
    return a.project(w.exponent_sums())


@dataclass(frozen=True)
class Character:
    """An integral character phi: G -> Z given by its values on x and y."""

    values: Tuple[int, int]
    induced: Tuple[int, ...]

    @property
    def divisor(self) -> int:
        """gcd of the values; phi is onto Z exactly when this is 1."""
        return gcd(*self.values)

    def primitive(self) -> "Character":
        d = self.divisor
        return Character(tuple(v // d for v in self.values),
                         tuple(c // d for c in self.induced))

    def __call__(self, point: LatticePoint) -> int:
        return sum(c * v for c, v in zip(self.induced, point))


def make_character(p: Presentation, vx: int, vy: int,
                   ab: AbelianizationData = None) -> Character:
    if vx == 0 and vy == 0:
        raise CharacterError("the zero map is not a character")
    ab = ab or analyze_abelianization(p)
    ex, ey = ab.exponent_sums
    if vx * ex + vy * ey != 0:
        raise CharacterError(
            f"({vx},{vy}) does not factor through the abelianization: "
            f"it sends the relator to {vx * ex + vy * ey}, not 0")
    if ab.b1 == 2:
        return Character((vx, vy), (vx, vy))
    # phi = k * row-covector on H; recover k from a nonzero entry.
    (a, b), = ab.projection
    k = vx // a if a else vy // b
    return Character((vx, vy), (k,))

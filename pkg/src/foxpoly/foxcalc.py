"""Fox derivatives in the integral group ring of F(x, y).

Two independent routes are provided: :func:`fox_derivative` follows the
defining recursion letter by letter, while :func:`fox_term_list` scans the
word once and records one signed prefix per occurrence of the generator.
The term list is what the polytope pipeline consumes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Tuple, Union

from .words import IDENTITY, NielsenMove, Word, apply_substitution, invert


class FreeRingElement:
    """A finite Z-linear combination of reduced words, zero terms dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[Word, int], Iterable[Tuple[Word, int]]] = ()):
        acc: Dict[Word, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            acc[w] = acc.get(w, 0) + c
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def word(cls, w: Word, coeff: int = 1) -> "FreeRingElement":
        return cls({w: coeff})

    @classmethod
    def one(cls) -> "FreeRingElement":
        return cls({IDENTITY: 1})

    @property
    def terms(self) -> Dict[Word, int]:
        return dict(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = FreeRingElement({IDENTITY: other})
        if not isinstance(other, FreeRingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    @staticmethod
    def _coerce(other) -> "FreeRingElement":
        if isinstance(other, FreeRingElement):
            return other
        if isinstance(other, Word):
            return FreeRingElement({other: 1})
        if isinstance(other, int):
            return FreeRingElement({IDENTITY: other})
        raise TypeError(f"cannot coerce {type(other).__name__} into the free group ring")

    def __add__(self, other):
        other = self._coerce(other)
        return FreeRingElement(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return FreeRingElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return FreeRingElement(
            (u * v, a * b)
            for u, a in self._terms.items()
            for v, b in other._terms.items())

    def __rmul__(self, other):
        return self._coerce(other) * self

    def map_words(self, fn) -> "FreeRingElement":
        """Extend a map on words Z-linearly."""
        return FreeRingElement((fn(w), c) for w, c in self._terms.items())

    def render(self, names=("x", "y")) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self:
            mono = w.render(names) or "1"
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign} {mag}{mono}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"FreeRingElement({self.render()})"


def fox_derivative(w: Word, z: int) -> FreeRingElement:
    """Fox derivative of ``w`` with respect to generator ``z``.

    Straight from the rules d(1) = 0, dz = 1, d(other) = 0 and
    d(uv) = du + u dv, peeling one letter at a time; the derivative of
    z^-1 comes out of 0 = d(z z^-1) = 1 + z d(z^-1).
    """
    z = int(z)
    if not w:
        return FreeRingElement()
    head, tail = w[:1], w[1:]
    letter = head.letters[0]
    if letter == z:
        d_head = FreeRingElement.one()
    elif letter == -z:
        d_head = FreeRingElement.word(head, -1)
    else:
        d_head = FreeRingElement()
    return d_head + head * fox_derivative(tail, z)


@dataclass(frozen=True)
class FoxTerm:
    sign: int
    word: Word
    position: int  # index of the occurrence in the relator


@dataclass(frozen=True)
class FoxTermList:
    generator: int
    terms: Tuple[FoxTerm, ...]

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def collapse(self) -> FreeRingElement:
        return FreeRingElement((t.word, t.sign) for t in self.terms)


def fox_term_list(r: Word, z: int) -> FoxTermList:
    """One signed term per occurrence of ``z`` or ``z^-1`` in ``r``.

    An occurrence ``r = p z s`` contributes ``+p``; an occurrence
    ``r = p z^-1 s`` contributes ``-p z^-1``.
    """
    z = int(z)
    terms = []
    prefix: list = []
    for pos, letter in enumerate(r.letters):
        if letter == z:
            terms.append(FoxTerm(1, Word(tuple(prefix)), pos))
        prefix.append(letter)
        if letter == -z:
            terms.append(FoxTerm(-1, Word(tuple(prefix)), pos))
    return FoxTermList(z, tuple(terms))


def fundamental_formula_check(w: Word) -> bool:
    """Whether dw/dx (x - 1) + dw/dy (y - 1) == w - 1 in Z[F]."""
    lhs = FreeRingElement()
    for gen in (1, 2):
        lhs = lhs + fox_derivative(w, gen) * (Word((gen,)) - FreeRingElement.one())
    return lhs == FreeRingElement.word(w) - 1


def chain_rule_check(m: NielsenMove, r: Word, z: int) -> bool:
    """Whether d f(r)/dz == f(dr/dx) df(x)/dz + f(dr/dy) df(y)/dz."""
    images = m.images()
    f = lambda w: apply_substitution(images, w)
    lhs = fox_derivative(f(r), z)
    rhs = FreeRingElement()
    for gen, image in zip((1, 2), images):
        rhs = rhs + fox_derivative(r, gen).map_words(f) * fox_derivative(image, z)
    return lhs == rhs


def product_rule_check(u: Word, v: Word, z: int) -> bool:
    return fox_derivative(u * v, z) == fox_derivative(u, z) + u * fox_derivative(v, z)


def inverse_rule_check(w: Word, z: int) -> bool:
    wi = invert(w)
    return fox_derivative(wi, z) == -(wi * fox_derivative(w, z))

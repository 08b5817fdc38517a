"""Words in the free group on two generators.

Letters are stored as signed integers: ``1``/``-1`` for x and its inverse,
``2``/``-2`` for y and its inverse.  Text I/O uses a lowercase letter for a
generator and the uppercase letter for its inverse.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

from .errors import NotCyclicallyReducedError, WordParseError


class Generator(enum.IntEnum):
    X = 1
    Y = 2

    @property
    def other(self) -> "Generator":
        return Generator.Y if self is Generator.X else Generator.X


X = Generator.X
Y = Generator.Y

DEFAULT_NAMES = ("x", "y")


def _free_reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    stack = []
    for letter in letters:
        if letter not in (1, -1, 2, -2):
            raise ValueError(f"invalid letter {letter!r}")
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True, order=True)
class Word:
    """A freely reduced word; reduction happens on construction."""

    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _free_reduce(self.letters))

    @classmethod
    def _reduced(cls, letters: Tuple[int, ...]) -> "Word":
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def letter(cls, gen: int, exponent: int = 1) -> "Word":
        return cls((int(gen) * exponent,))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice) and index.step in (None, 1):
            return Word._reduced(self.letters[index])
        if isinstance(index, slice):
            return Word(self.letters[index])
        return self.letters[index]

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        a, b = self.letters, other.letters
        k = 0
        while k < len(a) and k < len(b) and a[-1 - k] == -b[k]:
            k += 1
        return Word._reduced(a[:len(a) - k] + b[k:])

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return invert(self) ** (-n)
        return Word(self.letters * n)

    def __invert__(self) -> "Word":
        return invert(self)

    def exponent_sums(self) -> Tuple[int, int]:
        ex = sum(1 if l == 1 else -1 for l in self.letters if abs(l) == 1)
        ey = sum(1 if l == 2 else -1 for l in self.letters if abs(l) == 2)
        return ex, ey

    def count(self, gen: int) -> int:
        """Number of occurrences of ``gen`` or its inverse."""
        return sum(1 for l in self.letters if abs(l) == int(gen))

    def is_cyclically_reduced(self) -> bool:
        return len(self.letters) < 2 or self.letters[0] != -self.letters[-1]

    def render(self, names: Sequence[str] = DEFAULT_NAMES) -> str:
        out = []
        for l in self.letters:
            ch = names[abs(l) - 1]
            out.append(ch if l > 0 else ch.upper())
        return "".join(out)

    def __str__(self):
        return self.render() or "1"


IDENTITY = Word()


def parse_word(text: str, names: Sequence[str] = DEFAULT_NAMES) -> Word:
    """Parse ``text`` into a freely reduced word.

    >>> parse_word("aBab", names="ab").letters
    (1, -2, 1, 2)
    >>> parse_word("xX")
    Word(letters=())
    """
    lookup = {}
    for i, name in enumerate(names):
        lookup[name.lower()] = i + 1
        lookup[name.upper()] = -(i + 1)
    letters = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        try:
            letters.append(lookup[ch])
        except KeyError:
            raise WordParseError(
                f"unknown letter {ch!r} at position {pos}; "
                f"expected one of {''.join(sorted(lookup))}",
                char=ch, position=pos) from None
    return Word(tuple(letters))


def invert(w: Word) -> Word:
    return Word._reduced(tuple(-l for l in reversed(w.letters)))


def cyclic_reduce(w: Word) -> Tuple[Word, Word]:
    """Return ``(core, conjugator)`` with ``w == conjugator * core * conjugator**-1``.

    >>> core, c = cyclic_reduce(parse_word("xyX"))
    >>> str(core), str(c)
    ('y', 'x')
    """
    letters = w.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == -letters[j]:
        i += 1
        j -= 1
    return Word(letters[i:j + 1]), Word(letters[:i])


def cyclic_permute(w: Word, k: int) -> Word:
    """Rotate ``w`` left by ``k`` letters."""
    if not w.is_cyclically_reduced():
        raise NotCyclicallyReducedError(f"{w} is not cyclically reduced")
    if not w:
        return w
    k %= len(w)
    return Word(w.letters[k:] + w.letters[:k])


def is_proper_power(w: Word) -> Optional[Tuple[Word, int]]:
    """Maximal decomposition ``w = root**k`` with ``k >= 2``, or None.

    Uses the fact that the primitive period of a string ``s`` is the first
    index where ``s`` occurs in ``s + s`` after position 0.
    """
    if not w:
        raise NotCyclicallyReducedError("the empty word is not a proper power candidate")
    if not w.is_cyclically_reduced():
        raise NotCyclicallyReducedError(f"{w} is not cyclically reduced")
    text = w.render(("a", "b"))
    n = len(text)
    period = (text + text).find(text, 1)
    if period == n:
        return None
    return Word(w.letters[:period]), n // period


class NielsenMove(enum.Enum):
    """The elementary Nielsen automorphisms of F(x, y)."""

    SWAP = "swap"                      # x <-> y
    INVERT_X = "invert_x"              # x -> x^-1
    RIGHT_MULTIPLY = "right_multiply"  # x -> x y

    def images(self) -> Tuple[Word, Word]:
        """Images of x and y."""
        if self is NielsenMove.SWAP:
            return Word((2,)), Word((1,))
        if self is NielsenMove.INVERT_X:
            return Word((-1,)), Word((2,))
        return Word((1, 2)), Word((2,))

    def abelian_matrix(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        """Induced map on Z^2 in row form; columns are the images of x, y."""
        fx, fy = (im.exponent_sums() for im in self.images())
        return ((fx[0], fy[0]), (fx[1], fy[1]))


def apply_substitution(images: Tuple[Word, Word], w: Word) -> Word:
    fx, fy = images
    table = {1: fx.letters, -1: invert(fx).letters,
             2: fy.letters, -2: invert(fy).letters}
    out = []
    for l in w.letters:
        out.extend(table[l])
    return Word(tuple(out))


def apply_nielsen(m: NielsenMove, w: Word) -> Word:
    return apply_substitution(m.images(), w)


# Rank-2 Whitehead automorphisms of the second kind: one generator is
# multiplied on the left, right or both sides by the other generator.
def _whitehead_moves():
    moves = []
    for a in (1, -1, 2, -2):
        target = 2 if abs(a) == 1 else 1
        t, aw, ai = Word((target,)), Word((a,)), Word((-a,))
        for image in (t * aw, ai * t, ai * t * aw):
            if target == 1:
                moves.append((image, Word((2,))))
            else:
                moves.append((Word((1,)), image))
    return moves


_WHITEHEAD = _whitehead_moves()


def is_primitive(w: Word) -> bool:
    """Whether ``w`` is conjugate to a member of a basis of F(x, y).

    Whitehead's algorithm: a primitive cyclic word of length > 1 can always
    be shortened by one of the moves above.
    """
    core, _ = cyclic_reduce(w)
    while True:
        if len(core) <= 1:
            return len(core) == 1
        for images in _WHITEHEAD:
            shorter, _ = cyclic_reduce(apply_substitution(images, core))
            if len(shorter) < len(core):
                core = shorter
                break
        else:
            return False


@dataclass(frozen=True)
class Presentation:
    """A two-generator one-relator presentation ``<g1, g2 | relator>``."""

    relator: Word
    names: Tuple[str, str] = DEFAULT_NAMES
    cyclically_reduced: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "cyclically_reduced", self.relator.is_cyclically_reduced())

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        """Parse ``"a,b|word"``; uppercase letters denote inverses."""
        if "|" not in text:
            raise WordParseError("presentation must have the form 'g1,g2|word'",
                                 char="", position=len(text))
        head, word = text.split("|", 1)
        names = tuple(n.strip() for n in head.split(","))
        if (len(names) != 2 or any(len(n) != 1 or not n.isalpha() or not n.islower()
                                   for n in names) or names[0] == names[1]):
            raise WordParseError(
                f"generators must be two distinct lowercase letters, got {head!r}",
                char=head, position=0)
        try:
            relator = parse_word(word, names)
        except WordParseError as exc:
            offset = len(head) + 1
            raise WordParseError(
                f"unknown letter {exc.char!r} at position {exc.position + offset}; "
                f"generators are {names[0]},{names[1]}",
                char=exc.char, position=exc.position + offset) from None
        return cls(relator, names)

    def render(self) -> str:
        return f"{self.names[0]},{self.names[1]}|{self.relator.render(self.names)}"

    def with_relator(self, relator: Word) -> "Presentation":
        return Presentation(relator, self.names)

"""Automorphisms of the rooted binary tree generated by a, b, c, d.

Elements are stored as reduced words over the four involutive generators.
Reduction rewrites modulo the relations x^2 = 1 and bc = cb = d (with its
cyclic renamings), so a reduced word alternates between "a" and a single
letter of {b, c, d}.  The word problem is decided by recursion on subtree
restrictions, which contracts word length.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .omega import LETTER_SYMBOL, OmegaSequence, passive_letter

GENERATORS = "abcd"
BCD = "bcd"

_MERGE = {frozenset("bc"): "d", frozenset("cd"): "b", frozenset("bd"): "c"}


class OmegaMismatchError(ValueError):
    """Raised when combining elements defined over different sequences."""


class UnsupportedOmegaError(ValueError):
    """Raised where distinct letters must be distinct automorphisms, which
    needs a repetition-free sequence."""


def reduce_word(word: str) -> str:
    """Rewrite a word to the alternating normal form.

    Equal adjacent letters cancel and an adjacent pair from {b, c, d}
    merges into the third letter; the result is the unique normal form
    with no such pair left.
    """
    stack: list[str] = []
    for letter in word:
        if letter not in GENERATORS:
            raise ValueError(f"invalid generator {letter!r}")
        while True:
            if not stack:
                stack.append(letter)
                break
            top = stack[-1]
            if top == letter:
                stack.pop()
                break
            if top in BCD and letter in BCD:
                stack.pop()
                letter = _MERGE[frozenset((top, letter))]
                continue
            stack.append(letter)
            break
    return "".join(stack)


@dataclass(frozen=True)
class Ray:
    """A boundary ray of the tree carrying finitely many 1s.

    Stored as the digit prefix up to and including the last 1; the empty
    string is the all-zero ray.
    """

    digits: str = ""

    def __post_init__(self) -> None:
        if self.digits and (set(self.digits) - {"0", "1"} or self.digits.endswith("0")):
            raise ValueError(f"not a canonical ray: {self.digits!r}")

    @classmethod
    def from_digits(cls, digits: str) -> "Ray":
        """Build a ray from any finite 0/1 prefix, dropping trailing zeros."""
        return cls(digits.rstrip("0"))

    def text(self) -> str:
        return self.digits if self.digits else "0inf"

    @classmethod
    def parse(cls, text: str) -> "Ray":
        return cls("") if text == "0inf" else cls(text)


ZERO_RAY = Ray("")


@dataclass(frozen=True)
class GroupElement:
    """A group element over a fixed sequence, stored as a reduced word."""

    omega: OmegaSequence
    word: str = ""

    def __post_init__(self) -> None:
        if self.word != reduce_word(self.word):
            raise ValueError(f"word {self.word!r} is not reduced; use from_word")

    @classmethod
    def from_word(cls, omega: OmegaSequence, word: str) -> "GroupElement":
        return cls(omega, reduce_word(word))

    @classmethod
    def identity(cls, omega: OmegaSequence) -> "GroupElement":
        return cls(omega, "")

    @property
    def length(self) -> int:
        return len(self.word)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.omega != other.omega:
            raise OmegaMismatchError(f"{self.omega} vs {other.omega}")
        return GroupElement.from_word(self.omega, self.word + other.word)

    def inverse(self) -> "GroupElement":
        # generators are involutions, so the inverse is the reversed word
        return GroupElement(self.omega, self.word[::-1])


def _apply_letter(letter: str, omega: OmegaSequence, digits: str) -> str:
    if letter == "a":
        if not digits:
            return "1"
        if digits[0] == "1":
            return ("0" + digits[1:]).rstrip("0")
        return "1" + digits[1:]
    # b, c, d fix the all-ones prefix and then act below the first 0:
    # they flip the next digit unless the sequence symbol at that depth
    # matches the letter's own symbol.
    m = 0
    while m < len(digits) and digits[m] == "1":
        m += 1
    if omega.at(m + 1) == LETTER_SYMBOL[letter]:
        return digits
    if m >= len(digits):
        return digits + "01"
    i = m + 1
    flipped = "1" if digits[i] == "0" else "0"
    return (digits[:i] + flipped + digits[i + 1:]).rstrip("0")


def apply(g: GroupElement, ray: Ray) -> Ray:
    """Image of a ray, letters applied right to left."""
    digits = ray.digits
    for letter in reversed(g.word):
        digits = _apply_letter(letter, g.omega, digits)
    return Ray(digits)


def stabilizes_level1(g: GroupElement) -> bool:
    """Whether g fixes both first-level subtrees setwise."""
    return g.word.count("a") % 2 == 0


def decompose(g: GroupElement) -> tuple[bool, GroupElement, GroupElement]:
    """Split g into a level-1 swap flag and the two subtree restrictions.

    g acts by first applying the restrictions inside the left and right
    subtrees and then swapping the subtrees iff the flag is set.  Both
    restrictions live over the shifted sequence and their reduced words
    are at most (length(g) + 1) / 2 long.
    """
    omega = g.omega
    shifted = omega.shift()
    swap = False
    sections: list[list[str]] = [[], []]
    for letter in g.word:
        if letter == "a":
            swap = not swap
            sections.reverse()
        else:
            if passive_letter(omega, letter) == "a":
                sections[0].append("a")
            sections[1].append(letter)
    return (
        swap,
        GroupElement.from_word(shifted, "".join(sections[0])),
        GroupElement.from_word(shifted, "".join(sections[1])),
    )


def restriction(g: GroupElement, vertex: str) -> GroupElement:
    """Restriction of g to the subtree rooted at a finite 0/1 address."""
    current = g
    for bit in vertex:
        if bit not in "01":
            raise ValueError(f"invalid tree vertex {vertex!r}")
        _, g0, g1 = decompose(current)
        current = g0 if bit == "0" else g1
    return current


@lru_cache(maxsize=None)
def _is_trivial(omega: OmegaSequence, word: str) -> bool:
    if len(word) <= 1:
        return not word
    if word.count("a") % 2:
        return False
    _, g0, g1 = decompose(GroupElement(omega, word))
    return _is_trivial(g0.omega, g0.word) and _is_trivial(g1.omega, g1.word)


def is_trivial(g: GroupElement) -> bool:
    """Decide the word problem.

    A reduced word of length >= 2 either moves the first level (odd
    number of a's) or splits into two strictly shorter restrictions, so
    the recursion terminates.  Results are memoised per (sequence, word).
    """
    return _is_trivial(g.omega, g.word)


def equal(g: GroupElement, h: GroupElement) -> bool:
    if g.omega != h.omega:
        raise OmegaMismatchError(f"{g.omega} vs {h.omega}")
    return is_trivial(g * h.inverse())


@lru_cache(maxsize=None)
def _canonical_key(omega: OmegaSequence, word: str):
    if _is_trivial(omega, word):
        return "1"
    if len(word) == 1 and word in BCD:
        return word
    if len(word) > 1:
        for letter in BCD:
            if _is_trivial(omega, reduce_word(word + letter)):
                return letter
    swap, g0, g1 = decompose(GroupElement(omega, word))
    return swap, _canonical_key(g0.omega, g0.word), _canonical_key(g1.omega, g1.word)


def canonical_key(g: GroupElement):
    """A finite token equal across exactly the words of one automorphism.

    The trivial element is the leaf "1" and anything equal to a letter
    b, c, d is that letter's leaf; every other element yields the triple
    (swap flag, key of left restriction, key of right restriction).  The
    leaf tests are semantic, so the token depends on the automorphism and
    not on the particular reduced word.  Distinctness of the three leaf
    letters requires a repetition-free sequence.
    """
    if not g.omega.is_repetition_free():
        raise UnsupportedOmegaError(
            f"sequence {g.omega} repeats a symbol; letters may coincide as automorphisms"
        )
    return _canonical_key(g.omega, g.word)


def _extensions(word: str) -> str:
    if not word:
        return GENERATORS
    return BCD if word[-1] == "a" else "a"


class ElementBall:
    """Distinct group elements of length at most max_len.

    Each element is represented by a shortest reduced word, found by
    breadth-first enumeration of alternating words with deduplication by
    canonical key.  Contains the identity and is closed under inverses.
    """

    def __init__(self, omega: OmegaSequence, max_len: int,
                 elements: tuple[GroupElement, ...], by_key: dict):
        self.omega = omega
        self.max_len = max_len
        self.elements = elements
        self.by_key = by_key

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def find(self, g: GroupElement) -> GroupElement | None:
        """The ball representative equal to g, or None if outside the ball."""
        return self.by_key.get(canonical_key(g))


@lru_cache(maxsize=None)
def enumerate_ball(omega: OmegaSequence, max_len: int) -> ElementBall:
    if not omega.is_repetition_free():
        raise UnsupportedOmegaError(
            f"ball enumeration needs a repetition-free sequence, got {omega}"
        )
    by_key: dict = {}
    elements: list[GroupElement] = []
    words = [""]
    for length in range(max_len + 1):
        if length:
            words = [w + s for w in words for s in _extensions(w)]
        for word in words:
            g = GroupElement(omega, word)
            key = _canonical_key(omega, word)
            if key not in by_key:
                by_key[key] = g
                elements.append(g)
    return ElementBall(omega, max_len, tuple(elements), by_key)


def element_order(g: GroupElement, cap: int = 64) -> int | None:
    """Order of g, or None if it exceeds the cap."""
    power = g
    for k in range(1, cap + 1):
        if is_trivial(power):
            return k
        power = power * g
    return None

"""Free-group words in reduced form and finite permutations.

Group elements live in one of two universes: reduced words over signed
generators (the free group F_k) or permutations of {0, ..., n-1}.  Words use
a compact letter syntax for I/O: lowercase ``a``..``j`` are generators 1..10,
uppercase letters are their inverses, and ``"e"`` is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

MAX_RANK = 10

_LETTERS = "abcdefghij"


class WordParseError(ValueError):
    """Raised for malformed word syntax; carries the offending offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class FreeWord:
    """A reduced word: tuple of signed generator indices, +i/-i with i in 1..k."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        for pos, letter in enumerate(self.letters):
            if letter == 0 or abs(letter) > MAX_RANK:
                raise ValueError(f"letter {letter} out of range at position {pos}")
            if pos > 0 and self.letters[pos - 1] == -letter:
                raise ValueError(f"word not reduced at position {pos}")

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if not isinstance(other, FreeWord):
            return NotImplemented
        return _concat(self, other)

    def __invert__(self) -> "FreeWord":
        return FreeWord(tuple(-l for l in reversed(self.letters)))

    def __pow__(self, n: int) -> "FreeWord":
        if n < 0:
            return (~self) ** (-n)
        result = IDENTITY_WORD
        for _ in range(n):
            result = result * self
        return result

    def sort_key(self) -> tuple:
        return (len(self.letters), tuple(letter_index(l) for l in self.letters))

    def __str__(self) -> str:
        return word_str(self)

    def __repr__(self) -> str:
        return f"FreeWord({word_str(self)!r})"


IDENTITY_WORD = FreeWord(())


def letter_index(letter: int) -> int:
    """Canonical position of a signed letter: a < A < b < B < ... ."""
    return (abs(letter) - 1) * 2 + (0 if letter > 0 else 1)


def letter_from_index(index: int) -> int:
    gen, neg = divmod(index, 2)
    return -(gen + 1) if neg else gen + 1


def alphabet(rank: int) -> list[int]:
    """All signed letters of F_rank in canonical order."""
    return [letter_from_index(i) for i in range(2 * rank)]


def reduce_word(letters: Iterable[int], rank: int | None = None) -> FreeWord:
    """Cancel adjacent inverse pairs until the word is reduced."""
    limit = rank if rank is not None else MAX_RANK
    stack: list[int] = []
    for pos, letter in enumerate(letters):
        if letter == 0 or abs(letter) > limit:
            raise ValueError(f"letter {letter} out of range at position {pos}")
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return FreeWord(tuple(stack))


def _concat(x: FreeWord, y: FreeWord) -> FreeWord:
    left = list(x.letters)
    for letter in y.letters:
        if left and left[-1] == -letter:
            left.pop()
        else:
            left.append(letter)
    return FreeWord(tuple(left))


def parse_word(text: str, rank: int = MAX_RANK) -> FreeWord:
    """Parse letter syntax: 'ab' -> a*b, 'A' -> a^-1, 'e' -> identity."""
    if text == "":
        raise WordParseError("empty word (use 'e' for the identity)", 0)
    if text == "e":
        return IDENTITY_WORD
    letters = []
    for pos, ch in enumerate(text):
        low = ch.lower()
        if low == "e":
            raise WordParseError("'e' is only valid as a whole word", pos)
        idx = _LETTERS.find(low)
        if idx < 0 or idx >= rank:
            raise WordParseError(f"invalid letter {ch!r} for rank {rank}", pos)
        letters.append(idx + 1 if ch.islower() else -(idx + 1))
    return reduce_word(letters, rank)


def word_str(w: FreeWord) -> str:
    if w.is_identity:
        return "e"
    chars = []
    for letter in w.letters:
        ch = _LETTERS[abs(letter) - 1]
        chars.append(ch if letter > 0 else ch.upper())
    return "".join(chars)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0, ..., n-1} given by its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection of 0..{len(self.images)-1}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # composition convention: (x*y)(p) = x(y(p))
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[other.images[p]] for p in range(self.degree)))

    def __invert__(self) -> "Permutation":
        inv = [0] * self.degree
        for src, dst in enumerate(self.images):
            inv[dst] = src
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(i == p for p, i in enumerate(self.images))

    def order(self) -> int:
        power = self
        k = 1
        while not power.is_identity:
            power = power * self
            k += 1
        return k

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def identity_permutation(degree: int) -> Permutation:
    return Permutation(tuple(range(degree)))


GroupElement = Union[FreeWord, Permutation]


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    """Group product in a common universe; words concatenate and reduce."""
    if isinstance(x, FreeWord) and isinstance(y, FreeWord):
        return x * y
    if isinstance(x, Permutation) and isinstance(y, Permutation):
        return x * y
    raise ValueError(f"universe mismatch: {type(x).__name__} * {type(y).__name__}")


def invert(x: GroupElement) -> GroupElement:
    return ~x


def identity_like(x: GroupElement) -> GroupElement:
    return IDENTITY_WORD if isinstance(x, FreeWord) else identity_permutation(x.degree)


def evaluate_word(assignment: Mapping[int, Permutation], w: FreeWord) -> Permutation:
    """Image of w under the homomorphism sending generator i to assignment[i].

    The word g1 g2 ... acts as g1.(g2.(...)), consistent with the (x*y)(p) =
    x(y(p)) composition convention.
    """
    if not assignment:
        raise ValueError("empty generator assignment")
    degrees = {perm.degree for perm in assignment.values()}
    if len(degrees) != 1:
        raise ValueError(f"assignment mixes degrees {sorted(degrees)}")
    result = identity_permutation(degrees.pop())
    for letter in w.letters:
        gen = assignment.get(abs(letter))
        if gen is None:
            raise ValueError(f"generator {abs(letter)} unassigned")
        result = result * (gen if letter > 0 else ~gen)
    return result


def word_sorted(words: Iterable[FreeWord]) -> list[FreeWord]:
    """Length-then-lexicographic order (letters ordered a < A < b < B < ...)."""
    return sorted(words, key=FreeWord.sort_key)


def permutation_closure(generators: Sequence[Permutation], limit: int = 100_000) -> list[Permutation]:
    """All elements of the group generated by the given permutations.

    Returned sorted by image tuple, identity included.  Raises if the group
    grows past `limit`.
    """
    if not generators:
        raise ValueError("need at least one generator")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise ValueError("generators of mixed degree")
    seen = {identity_permutation(degree)}
    frontier = list(seen)
    while frontier:
        next_frontier = []
        for elem in frontier:
            for gen in generators:
                for product in (gen * elem, (~gen) * elem):
                    if product not in seen:
                        seen.add(product)
                        next_frontier.append(product)
                        if len(seen) > limit:
                            raise ValueError(f"group exceeds {limit} elements")
        frontier = next_frontier
    return sorted(seen, key=lambda p: p.images)

"""Combinatorics of the Weyl group W = Sym{0,...,d} of type A_d.

Permutations are stored in one-line notation and compose as
(a * b)(x) = a(b(x)). The simple reflections are s_i = (i-1, i) for
1 <= i <= d, and ubar = s_d ... s_1 is the (d+1)-cycle with ubar(0) = d and
ubar(j) = j - 1 for j >= 1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from config import settings
from algebra.errors import PreconditionError, ResourceBoundError, SizeMismatchError


@dataclass(frozen=True, order=True)
class Permutation:
    """An element of W, images[i] = w(i)."""
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise PreconditionError(f"not a permutation of 0..{len(self.images) - 1}: {self.images}")

    @property
    def d(self) -> int:
        return len(self.images) - 1

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, image in enumerate(self.images):
            inv[image] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images))

    def has_ascent(self, i: int) -> bool:
        """True iff l(w s_i) > l(w), i.e. w(i-1) < w(i)."""
        return self.images[i - 1] < self.images[i]


@dataclass(frozen=True)
class ReducedWord:
    """Letters i_1 ... i_k with w = s_{i_1} * ... * s_{i_k}."""
    d: int
    letters: tuple[int, ...]

    def evaluate(self) -> Permutation:
        result = identity(self.d)
        for letter in self.letters:
            result = result * simple_reflection(self.d, letter)
        return result

    def __len__(self) -> int:
        return len(self.letters)


def compose(a: Permutation, b: Permutation) -> Permutation:
    if a.d != b.d:
        raise SizeMismatchError(f"cannot compose permutations of rank {a.d} and {b.d}")
    return Permutation(tuple(a.images[x] for x in b.images))


def identity(d: int) -> Permutation:
    return Permutation(tuple(range(d + 1)))


def simple_reflection(d: int, i: int) -> Permutation:
    if not 1 <= i <= d:
        raise PreconditionError(f"s_{i} is not a simple reflection for d={d}")
    images = list(range(d + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def longest_element(d: int) -> Permutation:
    return Permutation(tuple(range(d, -1, -1)))


def parse_permutation(text: str) -> Permutation:
    """Parse the space-separated one-line form, e.g. "2 0 1"."""
    try:
        return Permutation(tuple(int(token) for token in text.split()))
    except ValueError as e:
        raise PreconditionError(f"invalid permutation {text!r}: {e}") from e


def length(w: Permutation) -> int:
    images = w.images
    return sum(
        1
        for i in range(len(images))
        for j in range(i + 1, len(images))
        if images[i] > images[j]
    )


@lru_cache(maxsize=None)
def _ubar(d: int) -> Permutation:
    return Permutation((d,) + tuple(range(d)))


def ubar(d: int, power: int = 1) -> Permutation:
    """Return ubar^power; negative powers allowed."""
    if d < 1:
        raise PreconditionError("d must be at least 1")
    return _ubar_power(d, power % (d + 1))


@lru_cache(maxsize=None)
def _ubar_power(d: int, power: int) -> Permutation:
    result = identity(d)
    for _ in range(power):
        result = result * _ubar(d)
    return result


def mu(w: Permutation) -> int:
    """The exponent i with ubar^{-i} w fixing d."""
    return w.d - w(w.d)


def ubar_split(w: Permutation) -> tuple[Permutation, int]:
    """Write w = w' * ubar^j with w'(d) = d and 0 <= j <= d."""
    d = w.d
    for j in range(d + 1):
        head = w * ubar(d, -j)
        if head(d) == d:
            return head, j
    raise PreconditionError(f"no ubar decomposition for {w}")


def reduced_word(w: Permutation) -> ReducedWord:
    """Canonical reduced word, built by repeatedly stripping the smallest right descent."""
    letters: list[int] = []
    current = w
    while not current.is_identity():
        i = next(i for i in range(1, w.d + 1) if not current.has_ascent(i))
        letters.append(i)
        current = current * simple_reflection(w.d, i)
    return ReducedWord(w.d, tuple(reversed(letters)))


def reduced_words(w: Permutation) -> list[ReducedWord]:
    """All reduced words of w in lexicographic order."""
    return [ReducedWord(w.d, letters) for letters in sorted(_reduced_words(w))]


def _reduced_words(w: Permutation) -> set[tuple[int, ...]]:
    if w.is_identity():
        return {()}
    words: set[tuple[int, ...]] = set()
    for i in range(1, w.d + 1):
        if not w.has_ascent(i):
            for prefix in _reduced_words(w * simple_reflection(w.d, i)):
                words.add(prefix + (i,))
    return words


def enumerate_w(d: int) -> list[Permutation]:
    """All (d+1)! elements in lexicographic order of images."""
    return list(iter_w(d))


def iter_w(d: int) -> Iterator[Permutation]:
    if d < 1:
        raise PreconditionError("d must be at least 1")
    if d > settings.MAX_WEYL_RANK:
        raise ResourceBoundError(f"d={d} exceeds MAX_WEYL_RANK={settings.MAX_WEYL_RANK}")
    for images in itertools.permutations(range(d + 1)):
        yield Permutation(images)


def ascent_set(d: int) -> list[Permutation]:
    """W^{s_d} = {w | l(w s_d) > l(w)}."""
    return [w for w in iter_w(d) if w.has_ascent(d)]

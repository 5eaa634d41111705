"""Braid words over n strands: data model, text format, elementary operations.

A word is a sequence of letters, each a generator index i (1 <= i <= n-1)
with a sign. The text format is a whitespace-separated list of nonzero
integers: "1 -2 1 3" means the first generator, the inverse of the second,
the first again, the third. The empty string is the empty word.
"""

from __future__ import annotations

import dataclasses
from typing import NamedTuple

from .errors import MalformedWordError


class Letter(NamedTuple):
    index: int  # generator subscript, 1 <= index <= n-1
    sign: int   # +1 or -1

    def inverse(self) -> Letter:
        return Letter(self.index, -self.sign)


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[Letter, ...]

    def __post_init__(self):
        if self.strand_count < 1:
            raise MalformedWordError(f"strand count must be >= 1, got {self.strand_count}")
        for k, letter in enumerate(self.letters):
            if letter.sign not in (1, -1):
                raise MalformedWordError(f"letter {k}: sign must be +1 or -1, got {letter.sign}")
            if not 1 <= letter.index <= self.strand_count - 1:
                raise MalformedWordError(
                    f"letter {k}: generator index {letter.index} out of range for "
                    f"{self.strand_count} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)


def parse_word(text: str, strand_count: int) -> BraidWord:
    """Parse whitespace-separated signed generator indices; blank text is the empty word."""
    letters = []
    for token in text.split():
        try:
            value = int(token)
        except ValueError:
            raise MalformedWordError(f"token {token!r} is not an integer") from None
        if value == 0:
            raise MalformedWordError(f"token {token!r}: generator index must be nonzero")
        index, sign = (value, 1) if value > 0 else (-value, -1)
        if index > strand_count - 1:
            raise MalformedWordError(
                f"token {token!r}: index {index} exceeds {strand_count - 1} "
                f"(strand count {strand_count})"
            )
        letters.append(Letter(index, sign))
    return BraidWord(strand_count, tuple(letters))


def format_word(word: BraidWord) -> str:
    """Inverse of parse_word; single spaces, empty word formats to the empty string."""
    return " ".join(str(letter.index * letter.sign) for letter in word.letters)


def inverse(word: BraidWord) -> BraidWord:
    """Group inverse: letters reversed, signs flipped."""
    return BraidWord(word.strand_count, tuple(l.inverse() for l in reversed(word.letters)))


def concat(first: BraidWord, second: BraidWord) -> BraidWord:
    if first.strand_count != second.strand_count:
        raise MalformedWordError(
            f"cannot concatenate words over {first.strand_count} and {second.strand_count} strands"
        )
    return BraidWord(first.strand_count, first.letters + second.letters)


def permutation_of_word(word: BraidWord) -> tuple[int, ...]:
    """Puncture permutation induced by the word, as the tuple (image of 1, ..., image of n).

    Each letter contributes the transposition (i, i+1) regardless of its sign;
    transpositions compose left to right.
    """
    image = list(range(1, word.strand_count + 1))
    for letter in word.letters:
        i = letter.index
        for p, v in enumerate(image):
            if v == i:
                image[p] = i + 1
            elif v == i + 1:
                image[p] = i
    return tuple(image)

"""Exact 2x2 integer matrices and the word embedding built on them.

``FREE_ONE`` and ``FREE_TWO`` generate a free monoid, and a letter with
1-based declaration index i is embedded as ``FREE_ONE * FREE_TWO**i``.  The
code words ``one two^i`` form a prefix code, so the embedding of words is
injective: two words agree exactly when their matrices do.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainViolation
from ..words import Alphabet, Word


@dataclass(frozen=True, slots=True)
class Matrix2:
    a: int
    b: int
    c: int
    d: int

    def __mul__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @staticmethod
    def identity() -> "Matrix2":
        return Matrix2(1, 0, 0, 1)


FREE_ONE = Matrix2(1, 1, 0, 1)
FREE_TWO = Matrix2(1, 0, 1, 1)


def embed_letter(index: int) -> Matrix2:
    """Embedding of the letter with 1-based declaration index ``index``."""
    if index < 1:
        raise DomainViolation("letter index must be 1-based")
    m = FREE_ONE
    for _ in range(index):
        m = m * FREE_TWO
    return m


def embed_word(word: Word, alphabet: Alphabet) -> Matrix2:
    """Product of letter embeddings, indices taken from declaration order."""
    position = {letter: i + 1 for i, letter in enumerate(alphabet)}
    m = Matrix2.identity()
    for letter in word:
        if letter not in position:
            raise DomainViolation(f"letter {letter.token!r} not in {alphabet.aid!r}")
        m = m * embed_letter(position[letter])
    return m

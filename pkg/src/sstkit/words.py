"""Alphabets, words, morphisms and register substitutions.

Letters are identified by their token *and* the alphabet that declared them,
so an input letter ``a`` never unifies with an output letter that happens to
share the same spelling.  Words are immutable sequences of letters and may
freely mix letters of several alphabets (register update right-hand sides do
exactly that).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain
from typing import Iterable, Iterator, Mapping

from .errors import DomainViolation, ValidationError


@dataclass(frozen=True, slots=True)
class Letter:
    token: str
    alphabet_id: str

    def __repr__(self) -> str:
        return f"Letter({self.token!r}@{self.alphabet_id})"


@dataclass(frozen=True, slots=True)
class Word:
    """An immutable word; the empty word is ``Word(())``."""

    letters: tuple[Letter, ...] = ()

    @staticmethod
    def of(letters: Iterable[Letter]) -> "Word":
        return Word(tuple(letters))

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def tokens(self) -> tuple[str, ...]:
        return tuple(l.token for l in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __repr__(self) -> str:
        return f"Word({self.display()!r})"

    def display(self) -> str:
        # "~" denotes the empty word everywhere in this package
        return " ".join(self.tokens()) if self.letters else "~"


EPSILON = Word(())


@dataclass(frozen=True)
class Alphabet:
    """A named, ordered collection of letters.

    ``Alphabet.make`` mints fresh letters owned by the alphabet; the plain
    constructor wraps existing letters (used for alphabet unions and for
    instances whose output alphabet is shared with a machine).  Declaration
    order is significant: it fixes iteration order for deterministic search
    and printing.
    """

    aid: str
    letters: tuple[Letter, ...]
    _set: frozenset[Letter] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(set(self.letters)) != len(self.letters):
            raise ValidationError(f"alphabet {self.aid!r} repeats a letter")
        object.__setattr__(self, "_set", frozenset(self.letters))

    @staticmethod
    def make(aid: str, tokens: Iterable[str]) -> "Alphabet":
        toks = list(tokens)
        if len(set(toks)) != len(toks):
            raise ValidationError(f"alphabet {aid!r} repeats a token")
        for t in toks:
            if not t or any(c.isspace() for c in t):
                raise ValidationError(f"alphabet {aid!r}: bad token {t!r}")
        return Alphabet(aid, tuple(Letter(t, aid) for t in toks))

    def __contains__(self, letter: Letter) -> bool:
        return letter in self._set

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def lookup(self, token: str) -> Letter:
        hits = [l for l in self.letters if l.token == token]
        if not hits:
            raise DomainViolation(f"no letter {token!r} in alphabet {self.aid!r}")
        if len(hits) > 1:
            raise DomainViolation(f"token {token!r} is ambiguous in alphabet {self.aid!r}")
        return hits[0]

    def word(self, tokens: Iterable[str]) -> Word:
        return Word(tuple(self.lookup(t) for t in tokens))


def union_alphabet(aid: str, *parts: Alphabet) -> Alphabet:
    """Union keeping each letter's identity; duplicates collapse."""
    seen: dict[Letter, None] = {}
    for part in parts:
        for letter in part:
            seen.setdefault(letter)
    return Alphabet(aid, tuple(seen))


def erase_letters(word: Word, drop: Alphabet) -> Word:
    """Drop every letter of ``drop`` from ``word``, keeping the rest."""
    return Word(tuple(l for l in word if l not in drop))


class Morphism:
    """A monoid morphism ``source* -> target*`` given letter-wise."""

    __slots__ = ("source", "target", "_images", "_hash")

    def __init__(self, source: Alphabet, target: Alphabet, images: Mapping[Letter, Word]):
        missing = [l for l in source if l not in images]
        if missing:
            raise ValidationError(
                f"morphism from {source.aid!r} lacks an image for {missing[0].token!r}"
            )
        extra = [l for l in images if l not in source]
        if extra:
            raise ValidationError(
                f"morphism from {source.aid!r} maps foreign letter {extra[0].token!r}"
            )
        for l, w in images.items():
            for out in w:
                if out not in target:
                    raise DomainViolation(
                        f"image of {l.token!r} uses {out.token!r}, "
                        f"not a letter of {target.aid!r}"
                    )
        self.source = source
        self.target = target
        self._images = {l: images[l] for l in source}
        self._hash: int | None = None

    @staticmethod
    def identity(alphabet: Alphabet) -> "Morphism":
        return Morphism(alphabet, alphabet, {l: Word((l,)) for l in alphabet})

    def image(self, letter: Letter) -> Word:
        try:
            return self._images[letter]
        except KeyError:
            raise DomainViolation(
                f"letter {letter.token!r} is not in the domain alphabet {self.source.aid!r}"
            ) from None

    def image_table(self) -> dict[Letter, tuple[Letter, ...]]:
        # raw-tuple view for hot loops
        return {l: w.letters for l, w in self._images.items()}

    def __call__(self, word: Word) -> Word:
        return Word(tuple(chain.from_iterable(self.image(l).letters for l in word)))

    def compose(self, inner: "Morphism") -> "Morphism":
        """``self . inner``: apply ``inner`` first, then ``self``."""
        if inner.target != self.source:
            raise DomainViolation(
                f"cannot compose: inner targets {inner.target.aid!r}, "
                f"outer expects {self.source.aid!r}"
            )
        return Morphism(inner.source, self.target, {l: self(inner.image(l)) for l in inner.source})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self._images == other._images
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.source.aid, self.target.aid, tuple(self._images.items())))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{l.token}->{w.display()}" for l, w in self._images.items())
        return f"Morphism({self.source.aid}->{self.target.aid}: {body})"


class Substitution:
    """A register substitution: every register maps to a word that may mix
    output letters and registers.

    Application leaves letters outside the register alphabet untouched.
    ``compose`` follows the run convention: ``s1.compose(s2)`` maps ``X`` to
    ``s1(s2(X))``, so folding a run left to right accumulates the effect of
    reading its letters in order.
    """

    __slots__ = ("variables", "_images", "_items", "_hash")

    def __init__(self, variables: Alphabet, images: Mapping[Letter, Word]):
        missing = [v for v in variables if v not in images]
        if missing:
            raise ValidationError(
                f"substitution lacks an image for register {missing[0].token!r}"
            )
        extra = [v for v in images if v not in variables]
        if extra:
            raise ValidationError(
                f"substitution maps {extra[0].token!r}, not a register of {variables.aid!r}"
            )
        self.variables = variables
        self._images = {v: images[v] for v in variables}
        self._items = tuple(self._images[v] for v in variables)
        self._hash: int | None = None

    @staticmethod
    def identity(variables: Alphabet) -> "Substitution":
        return Substitution(variables, {v: Word((v,)) for v in variables})

    @staticmethod
    def erasing(variables: Alphabet) -> "Substitution":
        return Substitution(variables, {v: EPSILON for v in variables})

    def image(self, variable: Letter) -> Word:
        try:
            return self._images[variable]
        except KeyError:
            raise DomainViolation(
                f"{variable.token!r} is not a register of {self.variables.aid!r}"
            ) from None

    def __call__(self, word: Word) -> Word:
        out: list[Letter] = []
        images = self._images
        var_set = self.variables._set
        for letter in word:
            if letter in var_set:
                out.extend(images[letter].letters)
            elif letter.alphabet_id == self.variables.aid:
                raise DomainViolation(
                    f"unknown register {letter.token!r} in applied word"
                )
            else:
                out.append(letter)
        return Word(tuple(out))

    def compose(self, then: "Substitution") -> "Substitution":
        if then.variables != self.variables:
            raise DomainViolation("cannot compose substitutions over different registers")
        return Substitution(self.variables, {v: self(then.image(v)) for v in self.variables})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Substitution):
            return NotImplemented
        return self.variables == other.variables and self._items == other._items

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables.aid, self._items))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(
            f"{v.token} := {self._images[v].display()}" for v in self.variables
        )
        return f"Substitution({body})"

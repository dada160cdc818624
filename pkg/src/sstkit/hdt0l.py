"""HDT0L sequence systems and bounded validity search.

An instance carries two families of inner endomorphisms over an alphabet A,
a final morphism pair into an output alphabet B, and one axiom per side.  A
label sequence derives a pair of output words by applying inner morphisms
right to left (the last label acts first, directly on the axioms) and the
final morphisms on top.  The instance is valid when every sequence derives
an equal pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Mapping

from .errors import DomainViolation, ValidationError
from .verdict import Verdict
from .words import Alphabet, Letter, Morphism, Word


@dataclass(frozen=True)
class Hdt0lInstance:
    alphabet_a: Alphabet
    alphabet_b: Alphabet
    labels: tuple[str, ...]
    inner: Mapping[str, tuple[Morphism, Morphism]]
    final: tuple[Morphism, Morphism]
    axioms: tuple[Word, Word]

    def validate(self) -> None:
        if len(set(self.labels)) != len(self.labels):
            raise ValidationError("duplicate label")
        if set(self.labels) != set(self.inner):
            raise ValidationError("label list and inner-pair table disagree")
        for label in self.labels:
            for m in self.inner[label]:
                if m.source != self.alphabet_a or m.target != self.alphabet_a:
                    raise ValidationError(
                        f"inner pair {label!r} is not an endomorphism pair of A"
                    )
        for m in self.final:
            if m.source != self.alphabet_a or m.target != self.alphabet_b:
                raise ValidationError("final pair must map A into B")
        for axiom in self.axioms:
            for letter in axiom:
                if letter not in self.alphabet_a:
                    raise ValidationError(
                        f"axiom letter {letter.token!r} is not in A"
                    )

    def check_labels(self, sequence: Iterable[str]) -> tuple[str, ...]:
        seq = tuple(sequence)
        for label in seq:
            if label not in self.inner:
                raise DomainViolation(f"unknown label {label!r}")
        return seq


def derive(instance: Hdt0lInstance, sequence: Iterable[str]) -> tuple[Word, Word]:
    """Derived word pair for a label sequence.

    The last label of the sequence is applied first (innermost), then the
    rest right to left, then the final morphisms.
    """
    seq = instance.check_labels(sequence)
    first, second = instance.axioms
    for label in reversed(seq):
        h, g = instance.inner[label]
        first, second = h(first), g(second)
    return instance.final[0](first), instance.final[1](second)


def _tables(instance: Hdt0lInstance):
    inner = {
        label: (pair[0].image_table(), pair[1].image_table())
        for label, pair in instance.inner.items()
    }
    fin = (instance.final[0].image_table(), instance.final[1].image_table())
    return inner, fin


def _apply(table: dict[Letter, tuple[Letter, ...]], word: tuple[Letter, ...]):
    return tuple(chain.from_iterable(table[l] for l in word))


def bounded_validity(instance: Hdt0lInstance, max_len: int = 8) -> Verdict:
    """Exhaust all label sequences of length at most ``max_len``.

    Returns Counterexample with the shortest violating sequence (ties broken
    lexicographically by label declaration order) or ResourceLimit when the
    bound is exhausted; a bounded search never certifies validity, so it
    never returns Holds.

    Sequences whose intermediate word pair has been seen before derive the
    same pairs under every extension, so they are pruned; the pruning keeps
    the earliest sequence in search order and therefore never loses the
    minimal counterexample.
    """
    if max_len < 0:
        raise ValidationError("max_len must be >= 0")
    instance.validate()
    inner, fin = _tables(instance)

    def mismatch(pair) -> tuple[Word, Word] | None:
        first = _apply(fin[0], pair[0])
        second = _apply(fin[1], pair[1])
        if first != second:
            return Word(first), Word(second)
        return None

    root = (instance.axioms[0].letters, instance.axioms[1].letters)
    if (diff := mismatch(root)) is not None:
        return Verdict.counterexample(labels=(), outputs=diff, budget_used=0)
    seen = {root}
    level: list[tuple[tuple[str, ...], tuple, tuple]] = [((), *root)]
    for depth in range(1, max_len + 1):
        nxt: list[tuple[tuple[str, ...], tuple, tuple]] = []
        # label-major order keeps each level lexicographically sorted, since
        # sequences grow at the outermost (leftmost) position
        for label in instance.labels:
            h_tab, g_tab = inner[label]
            for seq, first, second in level:
                child = (_apply(h_tab, first), _apply(g_tab, second))
                if child in seen:
                    continue
                seen.add(child)
                child_seq = (label,) + seq
                if (diff := mismatch(child)) is not None:
                    return Verdict.counterexample(
                        labels=child_seq, outputs=diff, budget_used=depth
                    )
                nxt.append((child_seq, *child))
        if not nxt:
            break
        level = nxt
    return Verdict.resource_limit(f"valid up to {max_len}", budget_used=max_len)

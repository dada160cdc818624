"""Nondeterministic finite automata over letter alphabets.

Just enough machinery for domain-language reasoning: acceptance, product
intersection, and equivalence via on-the-fly subset construction with a
shortest distinguishing word as witness.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product as iter_product
from typing import Iterator

from .errors import ValidationError
from .verdict import Verdict
from .words import Alphabet, Letter, Word


@dataclass(frozen=True)
class Nfa:
    alphabet: Alphabet
    states: tuple[str, ...]
    initials: frozenset[str]
    finals: frozenset[str]
    transitions: frozenset[tuple[str, Letter, str]]

    def __post_init__(self) -> None:
        known = set(self.states)
        if not self.initials <= known:
            raise ValidationError("nfa: initial state not declared")
        if not self.finals <= known:
            raise ValidationError("nfa: final state not declared")
        for src, letter, dst in self.transitions:
            if src not in known or dst not in known:
                raise ValidationError(f"nfa: transition touches unknown state {src!r}/{dst!r}")
            if letter not in self.alphabet:
                raise ValidationError(f"nfa: transition letter {letter.token!r} not declared")

    def _step(self, subset: frozenset[str], letter: Letter) -> frozenset[str]:
        return frozenset(
            dst for (src, lab, dst) in self.transitions if lab == letter and src in subset
        )

    def accepts(self, word: Word) -> bool:
        current = self.initials
        for letter in word:
            current = self._step(current, letter)
            if not current:
                return False
        return bool(current & self.finals)

    def language_upto(self, max_len: int) -> Iterator[Word]:
        """All accepted words of length at most ``max_len``, shortest first."""
        queue: deque[tuple[tuple[Letter, ...], frozenset[str]]] = deque([((), self.initials)])
        while queue:
            prefix, subset = queue.popleft()
            if subset & self.finals:
                yield Word(prefix)
            if len(prefix) == max_len:
                continue
            for letter in self.alphabet:
                nxt = self._step(subset, letter)
                if nxt:
                    queue.append((prefix + (letter,), nxt))


def nfa_intersection(a: Nfa, b: Nfa) -> Nfa:
    """Classic product automaton; accepts exactly L(a) & L(b)."""
    if a.alphabet != b.alphabet:
        raise ValidationError("intersection requires a common alphabet")
    states = tuple(f"{p}&{q}" for p, q in iter_product(a.states, b.states))
    transitions = frozenset(
        (f"{p}&{q}", letter, f"{p2}&{q2}")
        for (p, letter, p2) in a.transitions
        for (q, lab2, q2) in b.transitions
        if lab2 == letter
    )
    return Nfa(
        alphabet=a.alphabet,
        states=states,
        initials=frozenset(f"{p}&{q}" for p in a.initials for q in b.initials),
        finals=frozenset(f"{p}&{q}" for p in a.finals for q in b.finals),
        transitions=transitions,
    )


def nfa_equivalent(a: Nfa, b: Nfa) -> Verdict:
    """Decide L(a) = L(b).

    Breadth-first search over pairs of determinized subsets, letters tried in
    declaration order, so a Counterexample carries a shortest distinguishing
    word (lexicographically least by declaration order among the shortest).
    """
    if a.alphabet != b.alphabet:
        raise ValidationError("equivalence requires a common alphabet")
    start = (a.initials, b.initials)
    seen: set[tuple[frozenset[str], frozenset[str]]] = {start}
    queue: deque[tuple[tuple[Letter, ...], frozenset[str], frozenset[str]]] = deque(
        [((), a.initials, b.initials)]
    )
    while queue:
        prefix, sa, sb = queue.popleft()
        if bool(sa & a.finals) != bool(sb & b.finals):
            return Verdict.counterexample(
                word=Word(prefix),
                note="accepted by exactly one of the two automata",
            )
        for letter in a.alphabet:
            na, nb = a._step(sa, letter), b._step(sb, letter)
            key = (na, nb)
            if key not in seen:
                seen.add(key)
                queue.append((prefix + (letter,), na, nb))
    return Verdict.holds()

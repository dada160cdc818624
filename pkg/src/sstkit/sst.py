"""Copyful streaming string transducers with one or two output tracks.

A machine reads an input word left to right, updating a finite set of
registers through substitutions attached to its transitions.  Registers may
be duplicated freely (copyful).  On acceptance the output combination of the
final state is flushed: registers evaluated, any register still unassigned
contributing nothing.

Machines with ``output_arity == 2`` produce a pair of words per accepting
run; they arise as synchronized products of two single-track machines and
are the input of the diagonal check.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Mapping, NamedTuple

from .errors import DomainViolation, ValidationError
from .nfa import Nfa
from .words import Alphabet, Letter, Substitution, Word, erase_letters, union_alphabet


class Transition(NamedTuple):
    src: str
    letter: Letter
    dst: str


@dataclass(frozen=True)
class Run:
    """A consecutive sequence of transitions; empty runs are allowed."""

    transitions: tuple[Transition, ...]

    def __post_init__(self) -> None:
        for a, b in zip(self.transitions, self.transitions[1:]):
            if a.dst != b.src:
                raise ValidationError(
                    f"run breaks between {a.dst!r} and {b.src!r}"
                )

    def __len__(self) -> int:
        return len(self.transitions)

    @property
    def word(self) -> Word:
        return Word(tuple(t.letter for t in self.transitions))

    def states(self, start: str | None = None) -> tuple[str, ...]:
        if self.transitions:
            return (self.transitions[0].src,) + tuple(t.dst for t in self.transitions)
        if start is None:
            raise ValidationError("empty run needs an explicit state")
        return (start,)


@dataclass(eq=False)
class Sst:
    input_alphabet: Alphabet
    output_alphabet: Alphabet
    states: tuple[str, ...]
    initial: str
    finals: frozenset[str]
    variables: Alphabet
    transitions: tuple[Transition, ...]
    update: dict[Transition, Substitution]
    output: dict[str, tuple[Word, ...]]
    output_arity: int = 1
    _from: dict[tuple[str, Letter], list[Transition]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        index: dict[tuple[str, Letter], list[Transition]] = defaultdict(list)
        for t in self.transitions:
            index[(t.src, t.letter)].append(t)
        self._from = dict(index)

    # -- structural checks -------------------------------------------------

    def validate(self) -> None:
        known = set(self.states)
        if len(known) != len(self.states):
            raise ValidationError("duplicate state name")
        if self.initial not in known:
            raise ValidationError(f"initial state {self.initial!r} not declared")
        if not self.finals <= known:
            raise ValidationError("final state not declared")
        if self.output_arity not in (1, 2):
            raise ValidationError(f"output arity must be 1 or 2, got {self.output_arity}")
        if len(set(self.transitions)) != len(self.transitions):
            raise ValidationError("duplicate transition")
        var_set = set(self.variables)
        if var_set & set(self.input_alphabet) or var_set & set(self.output_alphabet):
            raise ValidationError("registers must be disjoint from input and output letters")
        allowed = var_set | set(self.output_alphabet)
        for t in self.transitions:
            if t.src not in known or t.dst not in known:
                raise ValidationError(f"transition {t} touches an unknown state")
            if t.letter not in self.input_alphabet:
                raise ValidationError(f"transition letter {t.letter.token!r} not declared")
        if set(self.update) != set(self.transitions):
            missing = set(self.transitions) - set(self.update)
            if missing:
                t = next(iter(missing))
                raise ValidationError(f"no register update for transition {t}")
            raise ValidationError("update table mentions an unknown transition")
        for t, sub in self.update.items():
            if sub.variables != self.variables:
                raise ValidationError(f"update of {t} is over the wrong register set")
            for v in self.variables:
                for letter in sub.image(v):
                    if letter not in allowed:
                        raise ValidationError(
                            f"update of {t}: image of {v.token!r} uses foreign "
                            f"letter {letter.token!r}"
                        )
        for q, combination in self.output.items():
            if q not in self.finals:
                raise ValidationError(f"output attached to non-final state {q!r}")
            if len(combination) != self.output_arity:
                raise ValidationError(
                    f"output of {q!r} has {len(combination)} track(s), "
                    f"expected {self.output_arity}"
                )
            for w in combination:
                for letter in w:
                    if letter not in var_set:
                        raise ValidationError(
                            f"output of {q!r} uses {letter.token!r}, not a register"
                        )

    def is_deterministic(self) -> bool:
        return all(len(ts) <= 1 for ts in self._from.values())

    def transitions_from(self, state: str, letter: Letter) -> tuple[Transition, ...]:
        return tuple(self._from.get((state, letter), ()))

    # -- canonical structural identity --------------------------------------

    def _key(self):
        return (
            frozenset(self.input_alphabet),
            frozenset(self.output_alphabet),
            frozenset(self.states),
            self.initial,
            self.finals,
            frozenset(self.variables),
            frozenset(self.transitions),
            frozenset((t, s) for t, s in self.update.items()),
            frozenset((q, c) for q, c in self.output.items()),
            self.output_arity,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Sst):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())


# -- run semantics ----------------------------------------------------------


def run_substitution(machine: Sst, run: Run) -> Substitution:
    """Fold the updates of a run, left to right; the empty run is identity."""
    acc = Substitution.identity(machine.variables)
    for t in run.transitions:
        if t not in machine.update:
            raise DomainViolation(f"run uses {t}, not a transition of this machine")
        acc = acc.compose(machine.update[t])
    return acc


def accepting_runs(machine: Sst, word: Word) -> Iterator[Run]:
    """All runs on ``word`` from the initial state to a state with output."""

    def walk(state: str, rest: tuple[Letter, ...], acc: tuple[Transition, ...]):
        if not rest:
            if state in machine.output:
                yield Run(acc)
            return
        for t in machine.transitions_from(state, rest[0]):
            yield from walk(t.dst, rest[1:], acc + (t,))

    yield from walk(machine.initial, word.letters, ())


def _flush(machine: Sst, sub: Substitution, state: str) -> tuple[Word, ...]:
    return tuple(
        erase_letters(sub(track), machine.variables) for track in machine.output[state]
    )


def output_of_run(machine: Sst, run: Run) -> tuple[Word, ...]:
    """Output combination produced by one accepting run."""
    end = run.transitions[-1].dst if run.transitions else machine.initial
    if end not in machine.output:
        raise DomainViolation(f"run ends in {end!r}, which has no output")
    return _flush(machine, run_substitution(machine, run), end)


def evaluate(machine: Sst, word: Word):
    """The set of output combinations over all accepting runs on ``word``.

    Returns a frozenset of ``Word`` for single-track machines and of
    ``(Word, Word)`` pairs for two-track machines.  Runs that reach the same
    state with identical register contents are merged on the fly; the result
    equals literal run-by-run enumeration.
    """
    for letter in word:
        if letter not in machine.input_alphabet:
            raise DomainViolation(f"letter {letter.token!r} is not an input letter")
    current: dict[str, set[Substitution]] = {
        machine.initial: {Substitution.identity(machine.variables)}
    }
    for letter in word:
        nxt: dict[str, set[Substitution]] = defaultdict(set)
        for state, subs in current.items():
            for t in machine.transitions_from(state, letter):
                rho = machine.update[t]
                for sub in subs:
                    nxt[t.dst].add(sub.compose(rho))
        current = nxt
        if not current:
            break
    results = set()
    for state, subs in current.items():
        if state in machine.output:
            for sub in subs:
                combo = _flush(machine, sub, state)
                results.add(combo[0] if machine.output_arity == 1 else combo)
    return frozenset(results)


# -- copyless test ----------------------------------------------------------


def copyless_violation(machine: Sst) -> tuple[Transition, Letter] | None:
    """First transition whose update mentions some register twice, if any."""
    for t in machine.transitions:
        sub = machine.update[t]
        seen: set[Letter] = set()
        for v in machine.variables:
            for letter in sub.image(v):
                if letter in machine.variables._set:
                    if letter in seen:
                        return t, letter
                    seen.add(letter)
    return None


def is_copyless(machine: Sst) -> bool:
    return copyless_violation(machine) is None


# -- domain -----------------------------------------------------------------


def domain_automaton(machine: Sst) -> Nfa:
    """NFA accepting exactly the words on which the machine produces output."""
    return Nfa(
        alphabet=machine.input_alphabet,
        states=machine.states,
        initials=frozenset({machine.initial}),
        finals=frozenset(q for q in machine.finals if q in machine.output),
        transitions=frozenset(machine.transitions),
    )


# -- synchronized product ----------------------------------------------------


def _tag(letter: Letter, side: int) -> Letter:
    return Letter(letter.token, f"{letter.alphabet_id}#{side}")


def _tag_word(word: Word, variables: Alphabet, side: int) -> Word:
    return Word(
        tuple(_tag(l, side) if l in variables else l for l in word)
    )


def product(left: Sst, right: Sst) -> Sst:
    """Synchronized product running both machines on the same input.

    States are pairs, transitions pair same-letter transitions, and the two
    register sets are kept apart by tagging each register with its side, so
    reports can still show original register names.  The result is a
    two-track machine: track one behaves like ``left``, track two like
    ``right``, and its domain is the intersection of the two domains.
    """
    if left.output_arity != 1 or right.output_arity != 1:
        raise ValidationError("product expects single-track machines")
    if left.input_alphabet != right.input_alphabet:
        raise ValidationError("product requires a common input alphabet")

    def pair(q: str, p: str) -> str:
        return f"{q},{p}"

    states = tuple(pair(q, p) for q in left.states for p in right.states)
    if len(set(states)) != len(states):
        raise ValidationError("state names collide when paired; rename states")

    out_alpha = (
        left.output_alphabet
        if left.output_alphabet == right.output_alphabet
        else union_alphabet(
            f"{left.output_alphabet.aid}|{right.output_alphabet.aid}",
            left.output_alphabet,
            right.output_alphabet,
        )
    )
    variables = Alphabet(
        f"{left.variables.aid}#1|{right.variables.aid}#2",
        tuple(_tag(v, 1) for v in left.variables)
        + tuple(_tag(v, 2) for v in right.variables),
    )

    transitions: list[Transition] = []
    update: dict[Transition, Substitution] = {}
    for t1 in left.transitions:
        for t2 in right.transitions:
            if t1.letter != t2.letter:
                continue
            t = Transition(pair(t1.src, t2.src), t1.letter, pair(t1.dst, t2.dst))
            transitions.append(t)
            images: dict[Letter, Word] = {}
            for v in left.variables:
                images[_tag(v, 1)] = _tag_word(left.update[t1].image(v), left.variables, 1)
            for v in right.variables:
                images[_tag(v, 2)] = _tag_word(right.update[t2].image(v), right.variables, 2)
            update[t] = Substitution(variables, images)

    output: dict[str, tuple[Word, ...]] = {}
    for q in left.output:
        for p in right.output:
            output[pair(q, p)] = (
                _tag_word(left.output[q][0], left.variables, 1),
                _tag_word(right.output[p][0], right.variables, 2),
            )

    result = Sst(
        input_alphabet=left.input_alphabet,
        output_alphabet=out_alpha,
        states=states,
        initial=pair(left.initial, right.initial),
        finals=frozenset(
            pair(q, p) for q in left.finals for p in right.finals
        ),
        variables=variables,
        transitions=tuple(transitions),
        update=update,
        output=output,
        output_arity=2,
    )
    result.validate()
    return result

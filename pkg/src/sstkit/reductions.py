"""Reductions between transducer comparisons and sequence-system validity.

One direction turns a two-track machine into an HDT0L instance whose label
alphabet is the machine's transitions plus its output states: a sequence
that spells an accepting run (transitions in run order, the run's final
state last) derives exactly the run's two output tracks, and every other
sequence derives an equal pair.  Deciding validity of the instance therefore
decides whether the machine is diagonal.

The other direction turns an HDT0L instance into two single-track machines,
one per side, that read ``0 i1 ... ik`` and output the word the sequence
``i1 ... ik`` derives on their side.

On top of these sit the three pipelines: diagonal, functionality (via the
self-product) and equivalence (domain check plus diagonal of the product).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalSoundnessError, ValidationError
from .hdt0l import Hdt0lInstance, bounded_validity
from .nfa import nfa_equivalent
from .sst import (
    Run,
    Sst,
    Transition,
    domain_automaton,
    output_of_run,
    product,
)
from .verdict import EngineConfig, Verdict
from .words import Alphabet, Letter, Morphism, Substitution, Word


@dataclass
class ReductionTrace:
    """Maps instance labels back to the machine parts they encode."""

    machine: Sst
    origins: dict[str, tuple[str, object]] = field(default_factory=dict)
    direction: str = "machine-to-sequences"

    def origin(self, label: str) -> tuple[str, object] | None:
        return self.origins.get(label)


def _fresh(used: set[str], candidate: str) -> str:
    while candidate in used:
        candidate += "'"
    used.add(candidate)
    return candidate


def bisst_to_hdt0l(machine: Sst) -> tuple[Hdt0lInstance, ReductionTrace]:
    """Encode a two-track machine as an HDT0L instance.

    The instance alphabet holds one letter per (register or output letter or
    start/seed marker, state) pair plus a bare seed letter; its labels are
    one per output state and one per transition.  Reading a label sequence
    that spells an accepting run backwards rebuilds the run's register flow,
    so the derived pair equals the run's output pair; sequences that spell
    no run wipe everything to the empty pair.
    """
    machine.validate()
    if machine.output_arity != 2:
        raise ValidationError("the sequence encoding expects a two-track machine")

    used_tokens: set[str] = set()
    seed = Letter(_fresh(used_tokens, "#"), "A")
    var_at: dict[tuple[Letter, str], Letter] = {}
    out_at: dict[tuple[Letter, str], Letter] = {}
    dollar_at: dict[str, Letter] = {}
    hash_at: dict[str, Letter] = {}
    letters: list[Letter] = [seed]
    for q in machine.states:
        for v in machine.variables:
            var_at[(v, q)] = l = Letter(_fresh(used_tokens, f"{v.token}@{q}"), "A")
            letters.append(l)
        for g in machine.output_alphabet:
            out_at[(g, q)] = l = Letter(_fresh(used_tokens, f"{g.token}@{q}"), "A")
            letters.append(l)
        dollar_at[q] = l = Letter(_fresh(used_tokens, f"$@{q}"), "A")
        letters.append(l)
        hash_at[q] = l = Letter(_fresh(used_tokens, f"#@{q}"), "A")
        letters.append(l)
    alphabet_a = Alphabet("A", tuple(letters))
    epsilon_images = {l: Word(()) for l in alphabet_a}

    def subscribed(word: Word, q: str) -> tuple[Letter, ...]:
        return tuple(
            var_at[(l, q)] if l in machine.variables else out_at[(l, q)] for l in word
        )

    trace = ReductionTrace(machine=machine)
    labels: list[str] = []
    inner: dict[str, tuple[Morphism, Morphism]] = {}
    used_labels: set[str] = set()

    for q in machine.states:
        if q not in machine.output:
            continue
        label = _fresh(used_labels, f"f:{q}")
        sides = []
        for track in machine.output[q]:
            images = dict(epsilon_images)
            images[seed] = Word((dollar_at[q],) + subscribed(track, q))
            sides.append(Morphism(alphabet_a, alphabet_a, images))
        labels.append(label)
        inner[label] = (sides[0], sides[1])
        trace.origins[label] = ("final", q)

    for t in machine.transitions:
        label = _fresh(used_labels, f"t:{t.src}:{t.letter.token}:{t.dst}")
        images = dict(epsilon_images)
        for v in machine.variables:
            images[var_at[(v, t.dst)]] = Word(
                subscribed(machine.update[t].image(v), t.src)
            )
        for g in machine.output_alphabet:
            images[out_at[(g, t.dst)]] = Word((out_at[(g, t.src)],))
        images[dollar_at[t.dst]] = Word((dollar_at[t.src],))
        m = Morphism(alphabet_a, alphabet_a, images)
        labels.append(label)
        inner[label] = (m, m)
        trace.origins[label] = ("transition", t)

    final_images = {l: Word(()) for l in alphabet_a}
    for g in machine.output_alphabet:
        final_images[out_at[(g, machine.initial)]] = Word((g,))
    final = Morphism(alphabet_a, machine.output_alphabet, final_images)

    instance = Hdt0lInstance(
        alphabet_a=alphabet_a,
        alphabet_b=machine.output_alphabet,
        labels=tuple(labels),
        inner=inner,
        final=(final, final),
        axioms=(Word((seed,)), Word((seed,))),
    )
    instance.validate()
    return instance, trace


def replay_sequence(trace: ReductionTrace, sequence: tuple[str, ...]) -> Run | None:
    """The accepting run a label sequence spells, or None if it spells none.

    A sequence spells a run when its last label is an output state, every
    other label is a transition, the transitions chain from the initial
    state, and they end in that output state (an empty chain requires the
    output state to be the initial state).
    """
    if not sequence:
        return None
    last = trace.origin(sequence[-1])
    if last is None or last[0] != "final":
        return None
    end_state = last[1]
    transitions: list[Transition] = []
    for label in sequence[:-1]:
        origin = trace.origin(label)
        if origin is None or origin[0] != "transition":
            return None
        transitions.append(origin[1])
    machine = trace.machine
    if transitions:
        if transitions[0].src != machine.initial:
            return None
        for a, b in zip(transitions, transitions[1:]):
            if a.dst != b.src:
                return None
        if transitions[-1].dst != end_state:
            return None
    elif end_state != machine.initial:
        return None
    return Run(tuple(transitions))


def hdt0l_to_sst_pair(instance: Hdt0lInstance) -> tuple[Sst, Sst]:
    """Build the two machines whose outputs replay the instance's two sides.

    Each machine has a start state and a loop state.  The start letter ``0``
    flushes the final morphism into the registers (one register per instance
    letter); each loop letter rewrites the registers by the matching inner
    morphism, read as a register word; the loop state outputs the axiom read
    as a register word.  Machine one follows the first side, machine two the
    second.
    """
    instance.validate()
    if any(label == "0" for label in instance.labels):
        raise ValidationError("label '0' collides with the start letter")
    input_alphabet = Alphabet.make("in", ("0",) + instance.labels)
    variables = Alphabet.make("var", tuple(f"X_{a.token}" for a in instance.alphabet_a))
    var_of = dict(zip(instance.alphabet_a, variables))

    def as_registers(word: Word) -> Word:
        return Word(tuple(var_of[l] for l in word))

    def build(side: int, start: str, loop: str) -> Sst:
        start_letter = input_alphabet.lookup("0")
        t0 = Transition(start, start_letter, loop)
        transitions = [t0]
        update = {
            t0: Substitution(
                variables,
                {var_of[a]: instance.final[side](Word((a,))) for a in instance.alphabet_a},
            )
        }
        for label in instance.labels:
            t = Transition(loop, input_alphabet.lookup(label), loop)
            transitions.append(t)
            update[t] = Substitution(
                variables,
                {
                    var_of[a]: as_registers(instance.inner[label][side](Word((a,))))
                    for a in instance.alphabet_a
                },
            )
        machine = Sst(
            input_alphabet=input_alphabet,
            output_alphabet=instance.alphabet_b,
            states=(start, loop),
            initial=start,
            finals=frozenset({loop}),
            variables=variables,
            transitions=tuple(transitions),
            update=update,
            output={loop: (as_registers(instance.axioms[side]),)},
            output_arity=1,
        )
        machine.validate()
        return machine

    return build(0, "q0", "q1"), build(1, "p0", "p1")


# -- decision pipelines -------------------------------------------------------


def _run_engine(instance: Hdt0lInstance, config: EngineConfig) -> Verdict:
    if config.engine == "bounded":
        verdict = bounded_validity(instance, config.max_len)
        if verdict.is_resource_limit:
            return Verdict.resource_limit(
                f"{verdict.note}; sequences of length k cover runs of length k-1",
                budget_used=verdict.budget_used,
            )
        return verdict
    from .algebra.engine import decide_hdt0l

    return decide_hdt0l(instance, max_steps=config.max_steps)


def check_diagonal(machine: Sst, config: EngineConfig = EngineConfig()) -> Verdict:
    """Does every accepting run produce two equal tracks?

    Counterexamples are replayed on the machine before being reported: the
    label sequence must spell an accepting run and that run's outputs must
    reproduce the derived pair, otherwise the engine itself is broken and we
    refuse to report rather than hand out a bogus witness.
    """
    machine.validate()
    if machine.output_arity != 2:
        raise ValidationError("diagonal check expects a two-track machine")
    instance, trace = bisst_to_hdt0l(machine)
    verdict = _run_engine(instance, config)
    if not verdict.is_counterexample:
        return verdict
    run = replay_sequence(trace, verdict.labels or ())
    if run is None:
        raise InternalSoundnessError(
            f"engine returned sequence {verdict.labels!r}, which spells no "
            "accepting run yet derives unequal words"
        )
    outputs = output_of_run(machine, run)
    if verdict.outputs is not None and outputs != verdict.outputs:
        raise InternalSoundnessError(
            f"sequence {verdict.labels!r} derives {verdict.outputs!r} but its "
            f"run outputs {outputs!r}"
        )
    if outputs[0] == outputs[1]:
        raise InternalSoundnessError(
            f"witness run on {run.word.display()!r} produces equal tracks"
        )
    return Verdict.counterexample(
        word=run.word,
        labels=verdict.labels,
        outputs=(outputs[0], outputs[1]),
        note="the two tracks disagree on this input",
        budget_used=verdict.budget_used,
    )


def check_functional(machine: Sst, config: EngineConfig = EngineConfig()) -> Verdict:
    """Does the machine produce at most one output per input word?"""
    machine.validate()
    if machine.output_arity != 1:
        raise ValidationError("functionality check expects a single-track machine")
    verdict = check_diagonal(product(machine, machine), config)
    if verdict.is_counterexample:
        return Verdict.counterexample(
            word=verdict.word,
            labels=verdict.labels,
            outputs=verdict.outputs,
            note="two accepting runs disagree on this input",
            budget_used=verdict.budget_used,
        )
    return verdict


def check_equivalent(
    left: Sst, right: Sst, config: EngineConfig = EngineConfig()
) -> Verdict:
    """Do two deterministic machines define the same function?

    First compares the two domain languages exactly; when those coincide,
    checks the diagonal of the synchronized product.  Nondeterministic input
    is rejected: with nondeterminism, same-domain plus diagonal product no
    longer characterizes equivalence.
    """
    left.validate()
    right.validate()
    if left.output_arity != 1 or right.output_arity != 1:
        raise ValidationError("equivalence check expects single-track machines")
    if not (left.is_deterministic() and right.is_deterministic()):
        raise ValidationError(
            "equivalence check requires deterministic machines; "
            "check functionality separately for nondeterministic ones"
        )
    if left.input_alphabet != right.input_alphabet:
        raise ValidationError("machines must share their input alphabet")
    if left == right:
        return Verdict.holds(note="the machines are identical")

    domains = nfa_equivalent(domain_automaton(left), domain_automaton(right))
    if domains.is_counterexample:
        in_left = domain_automaton(left).accepts(domains.word)
        side = "left" if in_left else "right"
        return Verdict.counterexample(
            word=domains.word,
            note=f"word is in the domain of the {side} machine only",
        )

    verdict = check_diagonal(product(left, right), config)
    if verdict.is_counterexample:
        return Verdict.counterexample(
            word=verdict.word,
            labels=verdict.labels,
            outputs=verdict.outputs,
            note="the machines disagree on this input",
            budget_used=verdict.budget_used,
        )
    if verdict.is_holds:
        return Verdict.holds(
            note="domains coincide and outputs agree on the shared domain",
            budget_used=verdict.budget_used,
        )
    return verdict

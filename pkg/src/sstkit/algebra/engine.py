"""Complete validity engine: matrix embedding plus an ascending ideal chain.

Each side of an instance gets one symbolic 2x2 matrix per instance letter
(eight polynomial variables per letter in total).  The entry-wise difference
of the two symbolic axiom matrices vanishes at the base point (variables
sent to the embedded final images) exactly when the empty sequence derives
an equal pair; substituting the inner morphisms' symbolic matrices into a
difference polynomial produces the difference polynomial of the extended
sequence.  The engine grows the ideal generated by these differences
breadth-first and stops when it stabilizes.

Why stabilization certifies validity (one step): suppose every image
``phi_i(q)`` of every tracked generator ``q`` lies in the ideal J spanned by
the tracked generators.  ``phi_i`` is a ring homomorphism, so it maps a
combination ``sum f*q`` of generators to ``sum phi_i(f)*phi_i(q)``, again a
member of J; hence ``phi_i(J) <= J`` for every label, and by induction the
difference polynomial of every sequence lies in J.  Evaluation at the base
point is also a homomorphism, so if every tracked generator vanishes there,
every member of J does, and all derived pairs agree.  Termination of the
chain itself is Hilbert's basis theorem; the step cap turns the unknown
stabilization time into an honest ResourceLimit.

Inert letters.  Call a letter inert on a side when, for every label, its
inner image keeps the letter's final image unchanged and itself uses only
inert letters.  The symbolic matrix of an inert letter is replaced by the
constant embedded matrix of its final image, which shrinks the ring and
keeps chain generators at low degree.  This preserves the argument above:
work modulo the replacement ideal S generated by (inert variable - its
constant).  S vanishes at the base point by construction, and every
``phi_i`` maps S into the ideal it generates: modulo S the image of an
inert variable is the embedded final image of the letter's inner image
word, which the defining condition makes equal to the letter's own
constant.  So "candidate reduces to zero modulo tracked generators" in the
smaller ring means membership in (tracked) + S in the full ring, both parts
vanish at the base point, and the induction goes through unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainViolation, InternalSoundnessError, ValidationError
from ..hdt0l import Hdt0lInstance, derive
from ..verdict import Verdict
from ..words import Letter, Word
from .groebner import WorkExhausted, WorkMeter, buchberger, reduce_poly
from .matrix2 import embed_word
from .multipoly import MultiPoly

PolyMatrix = tuple[MultiPoly, MultiPoly, MultiPoly, MultiPoly]

_ENTRIES = ((0, 0), (0, 1), (1, 0), (1, 1))

# S-polynomial reductions allowed per basis extension. Exhausting it leaves an
# incomplete basis, which can only delay stabilization detection (more steps,
# possibly a ResourceLimit), never produce a wrong verdict.
_EXTENSION_BUDGET = 2500

# Total term operations allowed per decide call. Instances whose bases blow
# up burn through this and get an honest ResourceLimit in bounded time
# instead of grinding on a basis that keeps growing.
_WORK_BUDGET = 600_000


def _mat_mul(x: PolyMatrix, y: PolyMatrix) -> PolyMatrix:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


@dataclass(frozen=True)
class TrackedPoly:
    """A difference polynomial together with the sequence it came from."""

    poly: MultiPoly
    origin: tuple[str, ...]


class PolyRing:
    """Polynomial variables and homomorphisms attached to one instance.

    Variable layout: one block of four entry variables per (side, letter),
    sides first, letters in declaration order, entries row-major.
    """

    def __init__(self, instance: Hdt0lInstance):
        instance.validate()
        self.instance = instance
        self.letters = tuple(instance.alphabet_a)
        self._letter_pos = {l: i for i, l in enumerate(self.letters)}
        self.num_vars = 8 * len(self.letters)
        self._images: dict[str, dict[int, MultiPoly]] = {}
        self._pow_caches: dict[str, dict[tuple[int, int], MultiPoly]] = {}
        self._base: dict[int, int] | None = None
        self.inert = (self._inert_letters(0), self._inert_letters(1))

    def _inert_letters(self, side: int) -> frozenset[Letter]:
        """Greatest set of letters whose coordinates stay constant.

        A letter qualifies when every inner image has the same final image
        as the letter itself and consists of qualifying letters only; such
        coordinates never change along the chain and are replaced by their
        embedded constants (see the module docstring for why this is sound).
        """
        final = self.instance.final[side]
        images = {
            a: [self.instance.inner[label][side](Word((a,))) for label in self.instance.labels]
            for a in self.letters
        }
        inert = {
            a
            for a in self.letters
            if all(final(u) == final(Word((a,))) for u in images[a])
        }
        changed = True
        while changed:
            changed = False
            for a in tuple(inert):
                if any(letter not in inert for u in images[a] for letter in u):
                    inert.discard(a)
                    changed = True
        return frozenset(inert)

    # -- variable bookkeeping ------------------------------------------------

    def var_index(self, side: int, letter: Letter, row: int, col: int) -> int:
        pos = self._letter_pos.get(letter)
        if pos is None:
            raise DomainViolation(f"letter {letter.token!r} has no variables")
        return ((side * len(self.letters)) + pos) * 4 + row * 2 + col

    def var_decode(self, index: int) -> tuple[int, Letter, int, int]:
        block, entry = divmod(index, 4)
        side, pos = divmod(block, len(self.letters))
        return side, self.letters[pos], entry // 2, entry % 2

    # -- symbolic matrices ------------------------------------------------------

    def letter_matrix(self, side: int, letter: Letter) -> PolyMatrix:
        if letter in self.inert[side]:
            mat = embed_word(
                self.instance.final[side](Word((letter,))), self.instance.alphabet_b
            )
            return tuple(MultiPoly.const(v) for v in mat.entries())  # type: ignore[return-value]
        return tuple(
            MultiPoly.variable(self.var_index(side, letter, r, c)) for r, c in _ENTRIES
        )  # type: ignore[return-value]

    def poly_matrix(self, word: Word, side: int) -> PolyMatrix:
        acc: PolyMatrix = (
            MultiPoly.const(1),
            MultiPoly.zero(),
            MultiPoly.zero(),
            MultiPoly.const(1),
        )
        for letter in word:
            acc = _mat_mul(acc, self.letter_matrix(side, letter))
        return acc

    def base_difference(self) -> list[MultiPoly]:
        """Entries of the symbolic axiom difference (the chain's level zero)."""
        first = self.poly_matrix(self.instance.axioms[0], 0)
        second = self.poly_matrix(self.instance.axioms[1], 1)
        return [f - s for f, s in zip(first, second)]

    # -- the homomorphisms -----------------------------------------------------------

    def phi(self, poly: MultiPoly, label: str) -> MultiPoly:
        """Substitute each variable by the matching inner-image entry."""
        if label not in self.instance.inner:
            raise DomainViolation(f"unknown label {label!r}")
        images = self._images.setdefault(label, {})
        cache = self._pow_caches.setdefault(label, {})

        def image(index: int) -> MultiPoly:
            p = images.get(index)
            if p is None:
                side, letter, _, _ = self.var_decode(index)
                image_word = self.instance.inner[label][side](Word((letter,)))
                mat = self.poly_matrix(image_word, side)
                for (r, c), entry in zip(_ENTRIES, mat):
                    images[self.var_index(side, letter, r, c)] = entry
                p = images[index]
            return p

        return poly.substitute(image, cache)

    def difference_for_sequence(self, sequence: tuple[str, ...]) -> list[MultiPoly]:
        """Difference polynomials of one sequence (innermost label applied first)."""
        polys = self.base_difference()
        for label in reversed(sequence):
            polys = [self.phi(p, label) for p in polys]
        return polys

    # -- the base point -----------------------------------------------------------------

    def base_values(self) -> dict[int, int]:
        """Variables sent to the embedded entries of the final images."""
        if self._base is None:
            values: dict[int, int] = {}
            for side in (0, 1):
                final = self.instance.final[side]
                for letter in self.letters:
                    mat = embed_word(final(Word((letter,))), self.instance.alphabet_b)
                    for (r, c), value in zip(_ENTRIES, mat.entries()):
                        values[self.var_index(side, letter, r, c)] = value
            self._base = values
        return self._base


def decide_hdt0l(instance: Hdt0lInstance, max_steps: int = 25) -> Verdict:
    """Decide validity via the stabilizing ideal chain.

    Holds when the chain stabilizes with every tracked polynomial vanishing
    at the base point; Counterexample (with the shortest violating sequence,
    re-derived and double-checked) as soon as a tracked polynomial does not
    vanish; ResourceLimit when the chain is still growing at the step cap.
    """
    if max_steps < 1:
        raise ValidationError("max_steps must be >= 1")
    ring = PolyRing(instance)
    base = ring.base_values()
    tracked: list[TrackedPoly] = []
    basis: list[MultiPoly] = []
    pruned = 0
    meter = WorkMeter(_WORK_BUDGET)

    def confirmed_counterexample(origin: tuple[str, ...], steps: int) -> Verdict:
        first, second = derive(instance, origin)
        if first == second:
            raise InternalSoundnessError(
                f"sequence {origin!r} has a non-vanishing polynomial but derives "
                "equal words"
            )
        return Verdict.counterexample(
            labels=origin, outputs=(first, second), budget_used=steps
        )

    def admit(
        candidates: list[tuple[MultiPoly, tuple[str, ...]]], steps: int
    ) -> list[TrackedPoly] | Verdict:
        """Track the candidates not already in the ideal; evaluate as we go."""
        nonlocal pruned
        accepted: list[TrackedPoly] = []
        accepted_prim: list[MultiPoly] = []
        for poly, origin in candidates:
            prim = poly.primitive()
            if prim.is_zero or reduce_poly(prim, basis + accepted_prim, meter).is_zero:
                # discarded without tracking; the ideal forces its base value
                # to zero, which we spot-check rather than assume
                pruned += 1
                if pruned % 8 == 1 and poly.evaluate(base) != 0:
                    raise InternalSoundnessError(
                        f"polynomial of {origin!r} is in the ideal but does not "
                        "vanish at the base point"
                    )
                continue
            tracked.append(TrackedPoly(poly, origin))
            accepted.append(tracked[-1])
            accepted_prim.append(prim)
            if poly.evaluate(base) != 0:
                return confirmed_counterexample(origin, steps)
        return accepted

    step = 0
    try:
        outcome = admit([(p, ()) for p in ring.base_difference()], 0)
        if isinstance(outcome, Verdict):
            return outcome
        frontier = outcome
        if not frontier:
            return Verdict.holds(
                note="axiom difference is trivially zero", budget_used=0
            )
        basis = buchberger(
            [tp.poly.primitive() for tp in frontier],
            max_reductions=_EXTENSION_BUDGET,
            meter=meter,
        )

        for step in range(1, max_steps + 1):
            candidates = [
                (ring.phi(tp.poly, label), (label,) + tp.origin)
                for label in instance.labels
                for tp in frontier
            ]
            outcome = admit(candidates, step)
            if isinstance(outcome, Verdict):
                return outcome
            if not outcome:
                return Verdict.holds(
                    note=f"ideal chain stabilized after {step} extension steps",
                    budget_used=step,
                )
            frontier = outcome
            basis = buchberger(
                basis + [tp.poly.primitive() for tp in frontier],
                max_reductions=_EXTENSION_BUDGET,
                meter=meter,
            )
    except WorkExhausted:
        return Verdict.resource_limit(
            f"work budget exhausted during step {step}", budget_used=step
        )

    return Verdict.resource_limit(
        f"ideal chain still growing at step {max_steps}", budget_used=max_steps
    )

"""Buchberger's algorithm over the integers with content normalization.

Arithmetic stays in Z throughout: reduction steps cross-multiply by the
gcd-reduced leading coefficients and strip content periodically, which
computes normal forms up to a positive rational factor.  That is enough for
the two questions the engine asks: is a polynomial in the ideal (normal
form zero), and has the basis stopped growing.

``buchberger`` takes an optional reduction budget.  A budget cut returns
the basis computed so far, interreduced: reducing to zero against it still
certifies ideal membership, only the converse detection weakens, so callers
that treat "did not reduce to zero" as "keep going" stay sound.

A ``WorkMeter`` can be passed through ``reduce_poly`` and ``buchberger`` to
put a deterministic ceiling on total term arithmetic; when the ceiling is
hit, ``WorkExhausted`` propagates to the caller, which decides what the
partial computation is worth.  Metering only interrupts, it never alters
what is computed before the interrupt.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd

from .multipoly import (
    Mono,
    MultiPoly,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


class WorkExhausted(Exception):
    """A WorkMeter ran out; the computation in flight is abandoned."""


@dataclass
class WorkMeter:
    """Counts term operations; raises once the budget is exceeded."""

    budget: int
    spent: int = 0

    def spend(self, amount: int) -> None:
        self.spent += amount
        if self.spent > self.budget:
            raise WorkExhausted(f"work budget of {self.budget} exhausted")


def _num_vars(polys: list[MultiPoly]) -> int:
    top = -1
    for p in polys:
        for m in p.terms:
            if m and m[-1][0] > top:
                top = m[-1][0]
    return top + 1


def _key_fn(num_vars: int):
    """Monomial -> tuple key, larger key = greater in grevlex."""
    memo: dict[Mono, tuple] = {}

    def key(m: Mono) -> tuple:
        k = memo.get(m)
        if k is None:
            dense = [0] * num_vars
            deg = 0
            for v, e in m:
                dense[v] = e
                deg += e
            dense.reverse()
            k = (deg, *[-e for e in dense])
            memo[m] = k
        return k

    return key


def _strip_content(work: dict[Mono, int]) -> None:
    g = 0
    for c in work.values():
        g = gcd(g, c)
        if g == 1:
            return
    if g > 1:
        for m in work:
            work[m] //= g


def reduce_poly(
    poly: MultiPoly, reducers: list[MultiPoly], meter: WorkMeter | None = None
) -> MultiPoly:
    """Full normal form of ``poly`` modulo ``reducers`` (content-normalized).

    Every monomial, not only the leading one, is reduced until none is
    divisible by a reducer's leading monomial.  The zero test of the result
    is exact: the returned polynomial is zero iff ``poly`` lies in the ideal
    generated by the reducers over the rationals.
    """
    if poly.is_zero or not reducers:
        return poly.primitive()
    heads = [
        (g.leading_monomial(), g.leading_coeff(), g) for g in reducers if not g.is_zero
    ]
    if not heads:
        return poly.primitive()
    key = _key_fn(max(_num_vars([poly]), _num_vars(reducers)))

    def neg(m: Mono) -> tuple:
        return tuple(-x for x in key(m))

    work = dict(poly.terms)
    heap = [(neg(m), m) for m in work]
    heapq.heapify(heap)
    queued = set(work)
    done: set[Mono] = set()
    steps = 0
    while heap:
        _, target = heapq.heappop(heap)
        queued.discard(target)
        if target in done or target not in work:
            continue
        for head, head_c, g in heads:
            if mono_divides(head, target):
                if meter is not None:
                    meter.spend(len(g.terms))
                coeff = work[target]
                d = gcd(coeff, head_c)
                mult_work = head_c // d
                mult_g = coeff // d
                if mult_work < 0:
                    mult_work, mult_g = -mult_work, -mult_g
                if mult_work != 1:
                    if meter is not None:
                        meter.spend(len(work))
                    for m in work:
                        work[m] *= mult_work
                shift = mono_div(target, head)
                for m, c in g.terms.items():
                    mm = mono_mul(m, shift)
                    c2 = work.get(mm, 0) - c * mult_g
                    if c2:
                        work[mm] = c2
                        if mm not in queued and mm not in done:
                            heapq.heappush(heap, (neg(mm), mm))
                            queued.add(mm)
                    else:
                        work.pop(mm, None)
                steps += 1
                if steps % 32 == 0:
                    _strip_content(work)
                break
        else:
            done.add(target)
    return MultiPoly(work).primitive()


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """The classic S-polynomial, content-normalized."""
    mf, mg = f.leading_monomial(), g.leading_monomial()
    m = mono_lcm(mf, mg)
    cf, cg = f.leading_coeff(), g.leading_coeff()
    d = gcd(cf, cg)
    left = f.mul_term(mono_div(m, mf), cg // d)
    right = g.mul_term(mono_div(m, mg), cf // d)
    return (left - right).primitive()


def buchberger(
    generators: list[MultiPoly],
    max_reductions: int | None = None,
    meter: WorkMeter | None = None,
) -> list[MultiPoly]:
    """A reduced Groebner basis of the ideal of ``generators``.

    Pairs are handled smallest lcm first, skipping those the coprimality
    criterion or the chain criterion (a third member whose leading monomial
    divides the pair's lcm, both of its pairs already handled) discards.
    Deterministic for a fixed input order.  With ``max_reductions`` set the
    loop stops early after that many S-polynomial reductions and returns the
    (interreduced, possibly incomplete) basis so far; an exhausted ``meter``
    abandons the computation instead (WorkExhausted).
    """
    basis: list[MultiPoly] = []
    for p in generators:
        q = p.primitive()
        if not q.is_zero and all(q != b for b in basis):
            basis.append(q)
    if not basis:
        return []
    key = _key_fn(_num_vars(basis))
    lead = [p.leading_monomial() for p in basis]

    heap: list[tuple[tuple, int, int]] = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            heapq.heappush(heap, (key(mono_lcm(lead[i], lead[j])), i, j))
    handled: set[tuple[int, int]] = set()
    reductions = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        handled.add((i, j))
        lcm_ij = mono_lcm(lead[i], lead[j])
        if mono_mul(lead[i], lead[j]) == lcm_ij:
            continue  # coprime leading monomials: S-polynomial reduces to zero
        if any(
            k != i
            and k != j
            and mono_divides(lead[k], lcm_ij)
            and (min(i, k), max(i, k)) in handled
            and (min(j, k), max(j, k)) in handled
            for k in range(len(basis))
        ):
            continue
        if max_reductions is not None and reductions >= max_reductions:
            break
        reductions += 1
        remainder = reduce_poly(s_polynomial(basis[i], basis[j]), basis, meter)
        if not remainder.is_zero:
            basis.append(remainder)
            lead.append(remainder.leading_monomial())
            k = len(basis) - 1
            for i2 in range(k):
                heapq.heappush(heap, (key(mono_lcm(lead[i2], lead[k])), i2, k))
    return _interreduce(basis, meter)


def _interreduce(basis: list[MultiPoly], meter: WorkMeter | None = None) -> list[MultiPoly]:
    # drop members whose leading monomial another member's divides
    kept: list[MultiPoly] = []
    for i, p in enumerate(basis):
        mp = p.leading_monomial()
        redundant = False
        for j, q in enumerate(basis):
            if i == j:
                continue
            mq = q.leading_monomial()
            if mono_divides(mq, mp) and (mq != mp or j < i):
                redundant = True
                break
        if not redundant:
            kept.append(p)
    reduced: list[MultiPoly] = []
    for i, p in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        nf = reduce_poly(p, others, meter) if others else p.primitive()
        if not nf.is_zero:
            reduced.append(nf)
    key = _key_fn(_num_vars(reduced))
    reduced.sort(key=lambda p: key(p.leading_monomial()))
    return reduced


@dataclass(frozen=True)
class IdealBasis:
    """Generators together with a reduced Groebner basis of their ideal."""

    generators: tuple[MultiPoly, ...]
    basis: tuple[MultiPoly, ...]

    @staticmethod
    def of(generators: list[MultiPoly]) -> "IdealBasis":
        return IdealBasis(tuple(generators), tuple(buchberger(generators)))

    def contains(self, poly: MultiPoly) -> bool:
        return reduce_poly(poly, list(self.basis)).is_zero

    def extended(self, new_generators: list[MultiPoly]) -> "IdealBasis":
        """Basis for the ideal enlarged by ``new_generators``."""
        return IdealBasis(
            self.generators + tuple(new_generators),
            tuple(buchberger(list(self.basis) + new_generators)),
        )

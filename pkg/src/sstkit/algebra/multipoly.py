"""Sparse multivariate polynomials over the integers.

Monomials are tuples of (variable index, exponent) pairs sorted by index
with all exponents positive; coefficients are arbitrary-precision ints.
The monomial order is graded reverse lexicographic with lower variable
indices taking precedence, which keeps degrees of Groebner intermediates
low.  Polynomials are immutable by convention: every operation returns a
fresh one.
"""

from __future__ import annotations

from math import gcd
from typing import Callable, Iterable, Mapping

Mono = tuple[tuple[int, int], ...]
MONO_ONE: Mono = ()


def mono_deg(m: Mono) -> int:
    return sum(e for _, e in m)


def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    out: list[tuple[int, int]] = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_divides(a: Mono, b: Mono) -> bool:
    """Does monomial ``a`` divide ``b``?"""
    exps = dict(b)
    return all(exps.get(v, 0) >= e for v, e in a)


def mono_div(b: Mono, a: Mono) -> Mono:
    """``b / a``; caller guarantees divisibility."""
    exps = dict(b)
    for v, e in a:
        exps[v] -= e
    return tuple((v, e) for v, e in sorted(exps.items()) if e > 0)


def mono_lcm(a: Mono, b: Mono) -> Mono:
    exps = dict(a)
    for v, e in b:
        exps[v] = max(exps.get(v, 0), e)
    return tuple(sorted(exps.items()))


def grevlex_cmp(a: Mono, b: Mono) -> int:
    """Positive when a > b, negative when a < b, zero when equal."""
    da, db = mono_deg(a), mono_deg(b)
    if da != db:
        return 1 if da > db else -1
    # equal degree: walk variables from the least-significant (highest index)
    # end; at the first difference, the monomial with the *smaller* exponent
    # on that variable is the greater one
    ia, ib = len(a) - 1, len(b) - 1
    while ia >= 0 or ib >= 0:
        va = a[ia][0] if ia >= 0 else -1
        vb = b[ib][0] if ib >= 0 else -1
        if va != vb:
            return 1 if vb > va else -1
        ea, eb = a[ia][1], b[ib][1]
        if ea != eb:
            return 1 if ea < eb else -1
        ia -= 1
        ib -= 1
    return 0


class MultiPoly:
    __slots__ = ("terms", "_lead")

    def __init__(self, terms: dict[Mono, int]):
        self.terms = terms
        self._lead: Mono | None = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero() -> "MultiPoly":
        return MultiPoly({})

    @staticmethod
    def const(c: int) -> "MultiPoly":
        return MultiPoly({MONO_ONE: c} if c else {})

    @staticmethod
    def variable(index: int) -> "MultiPoly":
        return MultiPoly({((index, 1),): 1})

    @staticmethod
    def from_terms(pairs: Iterable[tuple[Mono, int]]) -> "MultiPoly":
        terms: dict[Mono, int] = {}
        for m, c in pairs:
            c2 = terms.get(m, 0) + c
            if c2:
                terms[m] = c2
            else:
                terms.pop(m, None)
        return MultiPoly(terms)

    # -- queries ---------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def leading_monomial(self) -> Mono:
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            best = None
            for m in self.terms:
                if best is None or grevlex_cmp(m, best) > 0:
                    best = m
            self._lead = best
        return self._lead

    def leading_coeff(self) -> int:
        return self.terms[self.leading_monomial()]

    def degree(self) -> int:
        return max((mono_deg(m) for m in self.terms), default=-1)

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            c2 = terms.get(m, 0) + c
            if c2:
                terms[m] = c2
            else:
                del terms[m]
        return MultiPoly(terms)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            c2 = terms.get(m, 0) - c
            if c2:
                terms[m] = c2
            else:
                del terms[m]
        return MultiPoly(terms)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({m: -c for m, c in self.terms.items()})

    def scale(self, factor: int) -> "MultiPoly":
        if factor == 0:
            return MultiPoly({})
        return MultiPoly({m: c * factor for m, c in self.terms.items()})

    def mul_term(self, mono: Mono, coeff: int) -> "MultiPoly":
        if coeff == 0:
            return MultiPoly({})
        return MultiPoly({mono_mul(m, mono): c * coeff for m, c in self.terms.items()})

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        if len(self.terms) > len(other.terms):
            self, other = other, self
        acc: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = acc.get(m, 0) + c1 * c2
                if c:
                    acc[m] = c
                else:
                    del acc[m]
        return MultiPoly(acc)

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def primitive(self) -> "MultiPoly":
        """Divide out the content and make the leading coefficient positive."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading_coeff() < 0:
            c = -c
        if c == 1:
            return self
        return MultiPoly({m: coeff // c for m, coeff in self.terms.items()})

    # -- evaluation and substitution ----------------------------------------------

    def evaluate(self, values: Mapping[int, int]) -> int:
        total = 0
        for m, c in self.terms.items():
            prod = c
            for v, e in m:
                prod *= values[v] ** e
            total += prod
        return total

    def substitute(
        self,
        image: Callable[[int], "MultiPoly"],
        power_cache: dict[tuple[int, int], "MultiPoly"] | None = None,
    ) -> "MultiPoly":
        """Ring homomorphism sending each variable to ``image(var)``."""
        cache = power_cache if power_cache is not None else {}
        acc = MultiPoly.zero()
        for m, c in self.terms.items():
            prod = MultiPoly.const(c)
            for v, e in m:
                key = (v, e)
                p = cache.get(key)
                if p is None:
                    p = image(v) ** e
                    cache[key] = p
                prod = prod * p
            acc = acc + prod
        return acc

    # -- misc ----------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "MultiPoly(0)"
        parts = []
        for m in sorted(self.terms, key=lambda m: (-mono_deg(m), m)):
            c = self.terms[m]
            mono = "*".join(f"x{v}^{e}" if e > 1 else f"x{v}" for v, e in m) or "1"
            parts.append(f"{c:+d}*{mono}")
        return f"MultiPoly({' '.join(parts)})"

import itertools
import random

from hypothesis import given, settings, strategies as st

from sstkit.algebra import (
    FREE_ONE,
    FREE_TWO,
    IdealBasis,
    Matrix2,
    MultiPoly,
    buchberger,
    embed_letter,
    embed_word,
    grevlex_cmp,
    reduce_poly,
    s_polynomial,
)
from sstkit.algebra.multipoly import mono_div, mono_divides, mono_lcm, mono_mul
from sstkit.words import Alphabet, Word

X = MultiPoly.variable(0)
Y = MultiPoly.variable(1)
Z = MultiPoly.variable(2)


def const(c):
    return MultiPoly.const(c)


# -- 2x2 embedding ------------------------------------------------------------


def test_embedding_of_first_letter():
    assert embed_letter(1) == FREE_ONE * FREE_TWO
    assert embed_letter(1).entries() == (2, 1, 1, 1)


def test_embed_word_is_multiplicative():
    b = Alphabet.make("B", ["e", "f", "g"])
    rng = random.Random(8)
    letters = list(b)
    for _ in range(50):
        u = Word(tuple(rng.choice(letters) for _ in range(rng.randint(0, 4))))
        v = Word(tuple(rng.choice(letters) for _ in range(rng.randint(0, 4))))
        assert embed_word(u + v, b) == embed_word(u, b) * embed_word(v, b)
    assert embed_word(Word(()), b) == Matrix2.identity()


def test_embedding_is_injective_on_short_words():
    b = Alphabet.make("B", ["e", "f", "g"])
    seen = {}
    for length in range(7):
        for combo in itertools.product(list(b), repeat=length):
            word = Word(combo)
            image = embed_word(word, b)
            assert image not in seen, (word, seen[image])
            seen[image] = word


def test_embedded_matrices_have_determinant_one():
    b = Alphabet.make("B", ["e", "f"])
    for length in range(5):
        for combo in itertools.product(list(b), repeat=length):
            a, bb, c, d = embed_word(Word(combo), b).entries()
            assert a * d - bb * c == 1


# -- monomials and order -------------------------------------------------------


def test_mono_arithmetic():
    x2 = ((0, 2),)
    xy = ((0, 1), (1, 1))
    assert mono_mul(x2, xy) == ((0, 3), (1, 1))
    assert mono_divides(xy, mono_mul(x2, xy))
    assert not mono_divides(xy, x2)
    assert mono_div(mono_mul(x2, xy), xy) == x2
    assert mono_lcm(x2, xy) == ((0, 2), (1, 1))


def test_grevlex_degree_dominates():
    x2 = ((0, 2),)
    xyz = ((0, 1), (1, 1), (2, 1))
    assert grevlex_cmp(xyz, x2) > 0
    assert grevlex_cmp(x2, xyz) < 0
    assert grevlex_cmp(x2, x2) == 0


def test_grevlex_tie_break():
    # same degree: compare exponents from the last variable backwards,
    # the smaller exponent there wins
    x2 = ((0, 2),)
    xy = ((0, 1), (1, 1))
    y2 = ((1, 2),)
    assert grevlex_cmp(x2, xy) > 0
    assert grevlex_cmp(xy, y2) > 0
    assert grevlex_cmp(x2, y2) > 0


def test_grevlex_is_a_total_order_on_samples():
    rng = random.Random(17)

    def random_mono():
        return tuple(
            (v, rng.randint(1, 3)) for v in range(3) if rng.random() < 0.6
        )

    monos = [random_mono() for _ in range(60)]
    for a in monos:
        for b in monos:
            c = grevlex_cmp(a, b)
            assert (c == 0) == (a == b)
            assert c == -grevlex_cmp(b, a)
            if c > 0 and a != b:
                # multiplying both sides preserves the order
                m = random_mono()
                assert grevlex_cmp(mono_mul(a, m), mono_mul(b, m)) > 0


# -- polynomial ring laws --------------------------------------------------------


@given(st.integers(0, 4000))
def test_ring_laws_and_evaluation(seed):
    rng = random.Random(seed)

    def random_poly():
        terms = {}
        for _ in range(rng.randint(0, 4)):
            mono = tuple(
                (v, rng.randint(1, 2)) for v in range(3) if rng.random() < 0.5
            )
            terms[mono] = terms.get(mono, 0) + rng.randint(-3, 3)
        return MultiPoly.from_terms(terms.items())

    p, q, r = random_poly(), random_poly(), random_poly()
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert p - p == MultiPoly.zero()
    point = {v: rng.randint(-3, 3) for v in range(3)}
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
    assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)


@given(st.integers(0, 2000))
@settings(deadline=None)
def test_substitute_commutes_with_evaluation(seed):
    rng = random.Random(seed)

    def random_poly(nvars):
        terms = {}
        for _ in range(rng.randint(0, 3)):
            mono = tuple(
                (v, rng.randint(1, 2)) for v in range(nvars) if rng.random() < 0.5
            )
            terms[mono] = terms.get(mono, 0) + rng.randint(-2, 2)
        return MultiPoly.from_terms(terms.items())

    p = random_poly(2)
    images = {0: random_poly(2), 1: random_poly(2)}
    point = {0: rng.randint(-2, 2), 1: rng.randint(-2, 2)}
    via_sub = p.substitute(lambda v: images[v]).evaluate(point)
    via_point = p.evaluate({v: images[v].evaluate(point) for v in (0, 1)})
    assert via_sub == via_point


def test_primitive_strips_content_and_sign():
    p = (X * Y).scale(-6) + (Y * Y).scale(-9)
    prim = p.primitive()
    assert prim == (X * Y).scale(2) + (Y * Y).scale(3)
    assert prim.content() == 1
    assert prim.leading_coeff() > 0


# -- division and ideal membership ----------------------------------------------


def test_monomial_ideal_membership():
    basis = IdealBasis.of([X * X, Y * Y])
    assert basis.contains(X * X * Y)
    assert basis.contains(X * X * Y + X * Y * Y)
    assert not basis.contains(X * Y)
    assert not basis.contains(X + Y)
    assert not basis.contains(const(1))


def test_membership_in_univariate_ideal():
    basis = IdealBasis.of([X - const(1)])
    assert basis.contains(X * X - const(1))
    assert basis.contains(X * X * X - X)
    assert not basis.contains(X * X + const(1))


def test_normal_form_is_fully_reduced():
    rng = random.Random(55)

    def random_poly():
        terms = {}
        for _ in range(rng.randint(1, 4)):
            mono = tuple(
                (v, rng.randint(1, 3)) for v in range(3) if rng.random() < 0.6
            )
            terms[mono] = rng.randint(-4, 4)
        return MultiPoly.from_terms(terms.items())

    for _ in range(60):
        reducers = [p for p in (random_poly() for _ in range(3)) if not p.is_zero]
        if not reducers:
            continue
        rem = reduce_poly(random_poly(), reducers)
        for mono in rem.terms:
            for g in reducers:
                assert not mono_divides(g.leading_monomial(), mono)


def random_generators(rng, nvars=3, count=3, max_terms=3):
    gens = []
    for _ in range(count):
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            mono = tuple(
                (v, rng.randint(1, 2)) for v in range(nvars) if rng.random() < 0.5
            )
            if mono == ():
                continue  # keep the ideal proper: no constant terms
            terms[mono] = rng.randint(-3, 3)
        p = MultiPoly.from_terms(terms.items())
        if not p.is_zero:
            gens.append(p)
    return gens


def random_combination(rng, gens, nvars=3):
    acc = MultiPoly.zero()
    for g in gens:
        terms = {}
        for _ in range(rng.randint(0, 2)):
            mono = tuple(
                (v, rng.randint(1, 2)) for v in range(nvars) if rng.random() < 0.4
            )
            terms[mono] = terms.get(mono, 0) + rng.randint(-2, 2)
        acc = acc + g * MultiPoly.from_terms(terms.items())
    return acc


def test_combinations_of_generators_are_members():
    rng = random.Random(2718)
    for _ in range(100):
        gens = random_generators(rng)
        if not gens:
            continue
        basis = IdealBasis.of(gens)
        combo = random_combination(rng, gens)
        assert basis.contains(combo)
        # gens have no constant term, so the ideal sits inside <x0,x1,x2>
        # and a combination shifted by a nonzero constant can never belong
        assert not basis.contains(combo + const(rng.choice([1, -1, 7])))


def test_buchberger_fixpoint():
    # the computed basis passes its own S-polynomial criterion
    rng = random.Random(1618)
    for _ in range(100):
        gens = random_generators(rng)
        if not gens:
            continue
        basis = buchberger(gens)
        for f, g in itertools.combinations(basis, 2):
            assert reduce_poly(s_polynomial(f, g), basis).is_zero
        for g in gens:
            assert reduce_poly(g, basis).is_zero


def test_budgeted_buchberger_never_claims_false_membership():
    rng = random.Random(31337)
    for _ in range(40):
        gens = random_generators(rng)
        if not gens:
            continue
        combo = random_combination(rng, gens)
        outside = combo + const(1)
        for budget in (0, 1, 3, None):
            partial = buchberger(gens, max_reductions=budget)
            assert not reduce_poly(outside, partial).is_zero
            if budget is None:
                assert reduce_poly(combo, partial).is_zero


def test_extended_basis_keeps_old_members():
    basis = IdealBasis.of([X * X - Y])
    grown = basis.extended([Y * Y - Z])
    assert grown.contains(X * X - Y)
    assert grown.contains(Y * Y - Z)
    assert grown.contains((X * X - Y) * X + (Y * Y - Z) * Y)
    assert not grown.contains(X)
    # the original is untouched
    assert not basis.contains(Y * Y - Z)

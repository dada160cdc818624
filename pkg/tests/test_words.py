import random

import pytest
from hypothesis import given, strategies as st

from sstkit import (
    Alphabet,
    DomainViolation,
    Letter,
    Morphism,
    Substitution,
    ValidationError,
    Word,
    union_alphabet,
)
from sstkit.words import EPSILON, erase_letters


def test_alphabet_make_and_lookup():
    ab = Alphabet.make("in", ["0", "1"])
    assert len(ab) == 2
    assert ab.lookup("0") == Letter("0", "in")
    assert Letter("0", "in") in ab
    assert Letter("0", "other") not in ab
    with pytest.raises(DomainViolation):
        ab.lookup("2")


def test_alphabet_rejects_bad_tokens():
    with pytest.raises(ValidationError):
        Alphabet.make("x", ["a", "a"])
    with pytest.raises(ValidationError):
        Alphabet.make("x", ["a b"])
    with pytest.raises(ValidationError):
        Alphabet.make("x", [""])


def test_word_basics():
    ab = Alphabet.make("in", ["0", "1"])
    w = ab.word(["0", "1", "0"])
    assert len(w) == 3
    assert w.tokens() == ("0", "1", "0")
    assert w.display() == "0 1 0"
    assert EPSILON.display() == "~"
    assert (w + EPSILON) == w
    assert list(w) == [ab.lookup("0"), ab.lookup("1"), ab.lookup("0")]


def test_union_alphabet_preserves_identity():
    a = Alphabet.make("in", ["0"])
    b = Alphabet.make("out", ["0", "e"])
    u = union_alphabet("both", a, b)
    assert len(u) == 3  # same token from different alphabets stays distinct
    assert a.lookup("0") in u and b.lookup("0") in u


def test_erase_letters():
    a = Alphabet.make("one", ["x"])
    b = Alphabet.make("two", ["y"])
    w = Word((a.lookup("x"), b.lookup("y"), a.lookup("x")))
    assert erase_letters(w, a) == Word((b.lookup("y"),))


def test_morphism_requires_total_images():
    ab = Alphabet.make("A", ["a", "b"])
    with pytest.raises(ValidationError):
        Morphism(ab, ab, {ab.lookup("a"): Word((ab.lookup("b"),))})


def test_morphism_application_and_identity():
    ab = Alphabet.make("A", ["a", "b"])
    double = Morphism(
        ab,
        ab,
        {
            ab.lookup("a"): ab.word(["a", "a"]),
            ab.lookup("b"): ab.word(["b"]),
        },
    )
    assert double(ab.word(["a", "b", "a"])) == ab.word(["a", "a", "b", "a", "a"])
    ident = Morphism.identity(ab)
    assert ident(ab.word(["b", "a"])) == ab.word(["b", "a"])
    assert double.compose(ident) == double
    assert ident.compose(double) == double


@given(st.integers(0, 5000))
def test_morphism_compose_is_function_composition(seed):
    rng = random.Random(seed)
    ab = Alphabet.make("A", ["a", "b", "c"])

    def rand_word(max_len):
        return Word(tuple(rng.choice(list(ab)) for _ in range(rng.randint(0, max_len))))

    f = Morphism(ab, ab, {x: rand_word(2) for x in ab})
    g = Morphism(ab, ab, {x: rand_word(2) for x in ab})
    h = Morphism(ab, ab, {x: rand_word(2) for x in ab})
    w = rand_word(4)
    assert f.compose(g)(w) == f(g(w))
    assert f.compose(g).compose(h) == f.compose(g.compose(h))


def test_substitution_fixes_foreign_letters():
    variables = Alphabet.make("var", ["X"])
    out = Alphabet.make("out", ["e"])
    sub = Substitution(variables, {variables.lookup("X"): Word((out.lookup("e"),))})
    mixed = Word((out.lookup("e"), variables.lookup("X")))
    assert sub(mixed) == Word((out.lookup("e"), out.lookup("e")))


def test_substitution_rejects_unknown_register():
    variables = Alphabet.make("var", ["X"])
    sub = Substitution.identity(variables)
    stranger = Letter("Y", "var")
    with pytest.raises(DomainViolation):
        sub(Word((stranger,)))


def test_substitution_erasing():
    variables = Alphabet.make("var", ["X", "Y"])
    sub = Substitution.erasing(variables)
    assert sub(variables.word(["X", "Y"])) == EPSILON


@given(st.integers(0, 5000))
def test_substitution_compose_law(seed):
    rng = random.Random(seed)
    variables = Alphabet.make("var", ["X", "Y"])
    out = Alphabet.make("out", ["e", "f"])
    pool = list(variables) + list(out)

    def rand_sub():
        return Substitution(
            variables,
            {
                v: Word(tuple(rng.choice(pool) for _ in range(rng.randint(0, 2))))
                for v in variables
            },
        )

    s1, s2 = rand_sub(), rand_sub()
    w = Word(tuple(rng.choice(pool) for _ in range(rng.randint(0, 4))))
    assert s1.compose(s2)(w) == s1(s2(w))

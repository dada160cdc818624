import random

import pytest

from sstkit import (
    Alphabet,
    ParseError,
    ValidationError,
    parse_hdt0l,
    parse_input_word,
    parse_sst,
    print_hdt0l,
    print_sst,
    product,
)

from .conftest import read_fixture
from .gen import random_hdt0l, random_sst


def test_fixture_files_round_trip():
    for name in ("t1.sst", "t2.sst"):
        machine = parse_sst(read_fixture(name))
        assert parse_sst(print_sst(machine)) == machine
        assert print_sst(parse_sst(print_sst(machine))) == print_sst(machine)
    inst = parse_hdt0l(read_fixture("example.hdt0l"))
    assert parse_hdt0l(print_hdt0l(inst)) == inst
    assert print_hdt0l(parse_hdt0l(print_hdt0l(inst))) == print_hdt0l(inst)


def test_random_machines_round_trip():
    rng = random.Random(11)
    for trial in range(120):
        machine = random_sst(
            rng,
            deterministic=trial % 2 == 0,
            arity=2 if trial % 3 == 0 else 1,
        )
        if machine.output_arity == 2 and not machine.output:
            continue  # no out: lines, so the file reads back single-track
        assert parse_sst(print_sst(machine)) == machine


def test_random_instances_round_trip():
    rng = random.Random(12)
    for trial in range(120):
        inst = random_hdt0l(rng, mirrored=trial % 5 == 0)
        assert parse_hdt0l(print_hdt0l(inst)) == inst


def test_label_order_survives_the_round_trip():
    rng = random.Random(13)
    for _ in range(20):
        inst = random_hdt0l(rng, n_labels=3)
        assert parse_hdt0l(print_hdt0l(inst)).labels == inst.labels


def test_product_machines_print_with_primed_registers(t1, t2):
    both = product(t1, t2)
    text = print_sst(both)
    assert "X_a'" in text  # the two sides reuse register names
    reparsed = parse_sst(text)
    assert print_sst(reparsed) == text  # printing is idempotent from here on
    zero_one = parse_input_word("0 1", reparsed.input_alphabet)
    from sstkit import evaluate

    got = evaluate(reparsed, zero_one)
    assert {(a.display(), b.display()) for a, b in got} == {("e f", "e f")}


def test_parse_error_carries_position():
    bad = "sst\ninput: 0\noutput: e\nstates: q\ninitial: q\nfinal: q\nvars: X\nbogus: 1\n"
    with pytest.raises(ParseError) as err:
        parse_sst(bad)
    assert err.value.line == 8
    assert err.value.column == 1
    assert "8" in str(err.value)


def test_parse_rejects_reserved_tokens():
    bad = "sst\ninput: 0 |\noutput: e\nstates: q\ninitial: q\nfinal: q\nvars: X\nout: q = X\n"
    with pytest.raises(ParseError):
        parse_sst(bad)


def test_parse_rejects_incomplete_update():
    bad = (
        "sst\ninput: 0\noutput: e\nstates: q r\ninitial: q\nfinal: r\nvars: X Y\n"
        "trans: q 0 r { X := e }\nout: r = X\n"
    )
    with pytest.raises(ParseError) as err:
        parse_sst(bad)
    assert "Y" in str(err.value)


def test_parse_rejects_mixed_arity():
    bad = (
        "sst\ninput: 0\noutput: e\nstates: q r\ninitial: q\nfinal: q r\nvars: X\n"
        "trans: q 0 r { X := e }\nout: q = X | X\nout: r = X\n"
    )
    with pytest.raises(ParseError):
        parse_sst(bad)


def test_parse_rejects_unknown_rhs_token():
    bad = (
        "sst\ninput: 0\noutput: e\nstates: q r\ninitial: q\nfinal: r\nvars: X\n"
        "trans: q 0 r { X := Z }\nout: r = X\n"
    )
    with pytest.raises(ParseError) as err:
        parse_sst(bad)
    assert "Z" in str(err.value)


def test_parse_propagates_machine_validation():
    bad = (
        "sst\ninput: 0\noutput: e\nstates: q\ninitial: q\nfinal: q\nvars: X\n"
        "trans: q 0 ghost { X := e }\nout: q = X\n"
    )
    with pytest.raises((ParseError, ValidationError)):
        parse_sst(bad)


def test_parse_hdt0l_requires_labelled_pairs():
    bad = (
        "hdt0l\nA: a\nB: x\nv: a\nw: a\n"
        "pair one h: a -> a g: a -> a\n"
        "final: h: a -> x g: a -> x\n"
    )
    with pytest.raises(ParseError):
        parse_hdt0l(bad)


def test_parse_input_word_forms(t1):
    ab = t1.input_alphabet
    for text in ("0 1 1 1", "0,1,1,1", "0111", " 0  1,1 1 "):
        assert parse_input_word(text, ab).tokens() == ("0", "1", "1", "1")
    assert parse_input_word("~", ab).tokens() == ()
    assert parse_input_word("", ab).tokens() == ()
    with pytest.raises(ParseError):
        parse_input_word("012", ab)


def test_parse_input_word_needs_tokens_for_wide_letters():
    wide = Alphabet.make("in", ["ab", "c"])
    assert parse_input_word("ab c ab", wide).tokens() == ("ab", "c", "ab")
    with pytest.raises(ParseError):
        parse_input_word("abc", wide)


def test_comments_and_blank_lines_are_ignored(t1):
    text = print_sst(t1)
    noisy = "# heading\n\n" + text.replace("\n", "\n# note\n\n", 1)
    assert parse_sst(noisy) == t1

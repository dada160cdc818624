import random

import pytest

from sstkit import ValidationError, VerdictKind, bounded_validity, decide_hdt0l, derive
from sstkit.algebra import PolyRing, embed_word
from sstkit.algebra.engine import _ENTRIES

from .gen import random_hdt0l
from .test_hdt0l import make_instance

EXAMPLE = dict(
    a_tokens="abcd",
    b_tokens="ef",
    axioms=("c", "cd"),
)
H1 = {"a": "a", "b": "b", "c": "acb", "d": ""}
G1 = {"a": "a", "b": "b", "c": "ca", "d": "db"}
FIN_H = {"a": "e", "b": "f", "c": "", "d": ""}


def example_variant(g1=G1, fin_g=FIN_H):
    return make_instance(
        **EXAMPLE,
        labels={"1": (H1, g1)},
        final=(FIN_H, fin_g),
    )


def test_example_instance_holds(example_instance):
    verdict = decide_hdt0l(example_instance)
    assert verdict.kind is VerdictKind.HOLDS
    assert "stabilized" in verdict.note
    assert verdict.budget_used <= 25


def test_inert_letters_on_example(example_instance):
    ring = PolyRing(example_instance)
    assert {l.token for l in ring.inert[0]} == {"a", "b", "d"}
    assert {l.token for l in ring.inert[1]} == {"a", "b"}


def test_identity_instance_is_trivially_valid():
    inst = make_instance(
        "ab",
        "xy",
        axioms=("ab", "ab"),
        labels={"1": ({"a": "a", "b": "b"}, {"a": "a", "b": "b"})},
        final=({"a": "x", "b": "y"}, {"a": "x", "b": "y"}),
    )
    verdict = decide_hdt0l(inst)
    assert verdict.kind is VerdictKind.HOLDS
    assert verdict.budget_used == 0
    assert "trivially zero" in verdict.note


def test_counterexample_at_the_axioms():
    # the final pair already disagrees on the axioms themselves
    inst = example_variant(fin_g={"a": "e", "b": "f", "c": "", "d": "f"})
    verdict = decide_hdt0l(inst)
    assert verdict.kind is VerdictKind.COUNTEREXAMPLE
    assert verdict.labels == ()
    assert verdict.outputs[0].tokens() == ()
    assert verdict.outputs[1].tokens() == ("f",)
    assert bounded_validity(inst, 4).labels == ()


def test_counterexample_after_one_step():
    inst = example_variant(g1={"a": "a", "b": "b", "c": "ca", "d": "dbb"})
    verdict = decide_hdt0l(inst)
    assert verdict.kind is VerdictKind.COUNTEREXAMPLE
    assert verdict.labels == ("1",)
    assert verdict.outputs[0].tokens() == ("e", "f")
    assert verdict.outputs[1].tokens() == ("e", "f", "f")
    bounded = bounded_validity(inst, 4)
    assert bounded.labels == verdict.labels
    assert bounded.outputs == verdict.outputs


def test_swapped_growth_direction_still_holds():
    # moving d's growth to the other side of b preserves validity: the
    # relative order of e-letters and f-letters never changes
    inst = example_variant(g1={"a": "a", "b": "b", "c": "ca", "d": "bd"})
    verdict = decide_hdt0l(inst)
    assert verdict.kind is VerdictKind.HOLDS


def test_difference_polynomials_track_derivations():
    rng = random.Random(90210)
    for trial in range(12):
        inst = random_hdt0l(rng, n_a=2, n_b=2, image_len=1, mirrored=trial % 3 == 0)
        ring = PolyRing(inst)
        base = ring.base_values()
        for _ in range(8):
            seq = tuple(rng.choice(inst.labels) for _ in range(rng.randint(0, 3)))
            polys = ring.difference_for_sequence(seq)
            first, second = derive(inst, seq)
            want = [
                a - b
                for a, b in zip(
                    embed_word(first, inst.alphabet_b).entries(),
                    embed_word(second, inst.alphabet_b).entries(),
                )
            ]
            assert [p.evaluate(base) for p in polys] == want
            assert len(polys) == len(_ENTRIES)


def test_engine_agrees_with_bounded_search():
    rng = random.Random(60606)
    compared = 0
    for trial in range(25):
        inst = random_hdt0l(rng, n_a=2, n_b=2, n_labels=2, image_len=2)
        ideal = decide_hdt0l(inst, max_steps=12)
        bounded = bounded_validity(inst, max_len=5)
        if ideal.kind is VerdictKind.RESOURCE_LIMIT:
            continue
        if ideal.kind is VerdictKind.HOLDS:
            assert bounded.kind is VerdictKind.RESOURCE_LIMIT
        elif len(ideal.labels) <= 5:
            assert bounded.kind is VerdictKind.COUNTEREXAMPLE
            assert bounded.labels == ideal.labels
            assert bounded.outputs == ideal.outputs
        else:
            assert bounded.kind is VerdictKind.RESOURCE_LIMIT
        compared += 1
    assert compared >= 15


def test_mirrored_instances_never_yield_counterexamples():
    rng = random.Random(404)
    for _ in range(10):
        inst = random_hdt0l(rng, n_a=2, n_b=2, image_len=1, mirrored=True)
        verdict = decide_hdt0l(inst, max_steps=4)
        assert verdict.kind is not VerdictKind.COUNTEREXAMPLE


def test_resource_limit_reports_the_step(example_instance):
    verdict = decide_hdt0l(example_instance, max_steps=1)
    assert verdict.kind is VerdictKind.RESOURCE_LIMIT
    assert "still growing at step 1" in verdict.note
    assert verdict.budget_used == 1


def test_work_budget_interrupts_honestly(example_instance, monkeypatch):
    import sstkit.algebra.engine as eng

    monkeypatch.setattr(eng, "_WORK_BUDGET", 1000)
    verdict = decide_hdt0l(example_instance)
    assert verdict.kind is VerdictKind.RESOURCE_LIMIT
    assert "work budget exhausted" in verdict.note


def test_step_cap_must_be_positive(example_instance):
    with pytest.raises(ValidationError):
        decide_hdt0l(example_instance, max_steps=0)

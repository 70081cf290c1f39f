import random

import pytest

from abaplus import Family, Rule, SemanticsId, build_framework
from abaplus.axioms import (
    Status,
    check_conflict_preservation,
    check_contraposition,
    check_defence_forms,
    check_empty_preferences,
    check_fundamental_lemma,
    check_maximal_elements,
    check_principle_one,
    check_weak_contraposition,
    maximal_elements,
)
from abaplus.generate import random_contrapositive, random_weakly_contrapositive

from conftest import load, random_frameworks

NMR_EXAMPLES = ["strict_mon_violation", "asm_cut_violation", "strict_cut_violation"]


def test_contraposition_examples(no_contra, contra):
    bad = check_contraposition(no_contra)
    assert bad.status is Status.VIOLATED
    assert {(w["attacked"], w["missing"]) for w in bad.witnesses} == {("beta", "alpha"), ("beta", "gamma")}
    assert check_contraposition(contra).holds


def test_weak_contraposition_examples(no_contra, contra):
    # alpha < beta sits in the support of c_beta, so the weak form applies too
    report = check_weak_contraposition(no_contra)
    assert not report.holds
    assert report.witnesses[0]["candidates"] == ["alpha"]
    assert check_weak_contraposition(contra).holds


@pytest.mark.parametrize("name", NMR_EXAMPLES)
def test_weak_contraposition_nmr_examples(name):
    assert check_weak_contraposition(load(name)).holds


def test_weak_holds_without_preferences():
    for fw in random_frameworks(31, 40):
        assert check_weak_contraposition(fw.without_preferences()).holds


def test_contraposition_implies_weak():
    rng = random.Random(32)
    for _ in range(40):
        assert check_weak_contraposition(random_contrapositive(rng)).holds


def test_principle_one_witness(no_contra):
    report = check_principle_one(no_contra, SemanticsId(Family.PREFERRED))
    assert not report.holds
    (w,) = report.witnesses
    assert (w["preferred"], w["dispreferred"]) == ({"beta", "gamma"}, {"alpha", "beta"})
    assert (w["better"], w["worse"]) == ("gamma", "alpha")
    assert check_principle_one(no_contra, SemanticsId(Family.STABLE)).holds


def test_maximal_elements(reverse):
    assert maximal_elements(reverse) == {"alpha"}
    for family in Family:
        assert check_maximal_elements(reverse, SemanticsId(family)).holds


def test_maximal_elements_not_applicable(no_contra):
    report = check_maximal_elements(no_contra, SemanticsId(Family.STABLE))
    assert report.status is Status.NOT_APPLICABLE and "total" in report.reason
    fw = build_framework([Rule("c_a", ["b"]), Rule("c_b", ["a"])], {"a", "b"}, {"a": "c_a", "b": "c_b"},
                         [("a", "b"), ("b", "a")])
    report = check_maximal_elements(fw, SemanticsId(Family.STABLE))
    assert report.status is Status.NOT_APPLICABLE and "conflict-free" in report.reason


def test_empty_preferences_examples(reverse):
    for family in Family:
        assert check_empty_preferences(reverse, family).holds


def test_conflict_preservation_examples(reverse, no_contra):
    for family in Family:
        assert check_conflict_preservation(reverse, SemanticsId(family)).holds
        assert check_conflict_preservation(no_contra, SemanticsId(family)).holds


def test_fundamental_lemma_under_contraposition():
    rng = random.Random(33)
    for _ in range(60):
        fw = random_contrapositive(rng)
        assert check_fundamental_lemma(fw).holds
        assert check_defence_forms(fw).holds


def test_defence_forms_can_diverge():
    # {b} reverse-attacks {x, y} as a whole but neither member on its own
    fw = build_framework(
        [Rule("c_b", ["x", "y"])], {"b", "x", "y"}, {"b": "c_b", "x": "c_x", "y": "c_y"},
        strict_edges=[("x", "b")],
    )
    (w,) = check_defence_forms(fw).witnesses
    assert w == {"extension": {"x", "y"}, "set_form": False, "pointwise": True}


def test_report_dict(no_contra):
    d = check_contraposition(no_contra).to_dict()
    assert d["status"] == "violated" and d["witnesses"][0]["support"] == ["alpha", "gamma"]


def test_closures_generate_satisfying_frameworks():
    rng = random.Random(34)
    for _ in range(30):
        assert check_contraposition(random_contrapositive(rng)).holds
        assert check_weak_contraposition(random_weakly_contrapositive(rng)).holds


import pytest

from abaplus import (
    Family,
    SemanticsId,
    TooLarge,
    def_operator,
    defends,
    extensions,
    grounded_via_lfp,
    is_admissible,
    is_conflict_free,
)
from abaplus.oracle import Oracle
from abaplus.semantics import ALL_SEMANTICS, all_extensions, defends_pointwise

from conftest import load, random_frameworks


def fs(*xs):
    return frozenset(xs)


def members(fw, family, pref=True):
    return extensions(fw, SemanticsId(Family(family), pref)).members()


FAMILIES = [f.value for f in Family]


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("pref", [False, True])
def test_basic(basic, family, pref):
    assert members(basic, family, pref) == {fs("beta")}


@pytest.mark.parametrize("family", FAMILIES)
def test_reverse(reverse, family):
    assert members(reverse, family) == {fs("alpha")}
    assert members(reverse, family, False) == {fs("beta")}


def test_no_contraposition(no_contra):
    assert members(no_contra, "complete") == set()
    assert members(no_contra, "grounded") == set()
    assert members(no_contra, "stable") == set()
    assert members(no_contra, "preferred") == {fs("alpha", "beta"), fs("beta", "gamma")}
    assert members(no_contra, "ideal") == {fs("beta")}


@pytest.mark.parametrize("family", FAMILIES)
def test_contraposition(contra, family):
    assert members(contra, family) == {fs("beta", "gamma")}


def test_extension_conclusions(basic, reverse):
    (e,) = extensions(basic, SemanticsId(Family.STABLE))
    assert e.conclusions == {"beta", "c_alpha"}
    (e,) = extensions(reverse, SemanticsId(Family.STABLE))
    assert e.conclusions == {"alpha"}


def test_predicates(reverse, no_contra):
    assert is_conflict_free(reverse, {"alpha"})
    assert not is_conflict_free(reverse, {"alpha", "beta"})
    assert is_conflict_free(reverse, {"alpha", "beta"}, False) is False
    assert is_admissible(reverse, {"alpha"})
    assert not is_admissible(reverse, {"beta"})
    assert is_admissible(reverse, {"beta"}, False)
    assert defends(reverse, {"alpha"}, {"alpha"})
    assert def_operator(reverse, {"alpha"}) == {"alpha"}
    assert def_operator(reverse, set()) == {"alpha"}
    # both R preferred extensions are admissible
    assert is_admissible(no_contra, {"beta", "gamma"})
    assert is_admissible(no_contra, {"alpha", "beta"})


def test_lfp(no_contra, contra, reverse):
    assert grounded_via_lfp(contra).members == {"beta", "gamma"}
    assert grounded_via_lfp(reverse).members == {"alpha"}
    # the least fixed point is not even conflict-free without contraposition
    assert grounded_via_lfp(no_contra).members == {"alpha", "beta", "gamma"}


def test_ideal_note():
    for fw in random_frameworks(21, 200):
        res = extensions(fw, SemanticsId(Family.IDEAL))
        assert bool(res.notes) == (len(res) != 1)


def test_bound(monkeypatch):
    fw = load("strict_mon_violation")
    with pytest.raises(TooLarge):
        extensions(fw, SemanticsId(Family.STABLE), bound=5)
    monkeypatch.setenv("ABAP_MAX_A", "3")
    with pytest.raises(TooLarge):
        extensions(fw, SemanticsId(Family.STABLE))


def test_semantics_id():
    assert str(SemanticsId.parse("<-complete")) == "<-complete"
    assert str(SemanticsId(Family.STABLE, False)) == "stable"
    assert len(ALL_SEMANTICS) == 10


def test_sorted_output():
    for fw in random_frameworks(22, 40):
        for res in all_extensions(fw).values():
            keys = [tuple(sorted(e.members)) for e in res]
            assert keys == sorted(keys)


def test_oracle_agreement():
    for fw in random_frameworks(23, 80, max_assumptions=5):
        oracle = Oracle(fw)
        for sem, res in all_extensions(fw).items():
            assert res.members() == oracle.extensions(sem.family.value, sem.preference_aware), str(sem)


def test_plain_set_and_pointwise_defence_agree():
    for fw in random_frameworks(24, 60):
        for e in all_extensions(fw, [SemanticsId(Family.COMPLETE, False)])[SemanticsId(Family.COMPLETE, False)]:
            assert defends(fw, e.members, e.members, False) == defends_pointwise(fw, e.members, False)

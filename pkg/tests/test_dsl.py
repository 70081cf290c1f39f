import pytest

from abaplus import (
    ContraryOfNonAssumption,
    DslSyntaxError,
    EmptyAssumptionSet,
    MissingContrary,
    NotFlat,
    Rule,
    parse,
    render,
)
from abaplus.framework import InconsistentStrictPreference

from conftest import FRAMEWORKS, random_frameworks


def test_parse_basic(basic):
    assert basic.assumptions == {"alpha", "beta"}
    assert basic.rules == {Rule("c_alpha", ["beta"])}


def test_facts_and_comments():
    fw = parse("# c\nassumption a . # trailing\ncontrary a : c_a .\nrule x <- .\n")
    assert Rule("x") in fw.rules and Rule("x").is_fact


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("assumption a\ncontrary a : b .", 2, 1),
        ("assumption a .\ncontrary a b .", 2, 12),
        ("assumption a .\n  frobnicate a .", 2, 3),
        ("assumption a .\nprefer a > a .", 2, 10),
        ("assumption a ! .", 1, 14),
        ("assumption a .\nrule x -> a .", 2, 8),
    ],
)
def test_syntax_errors(text, line, column):
    with pytest.raises(DslSyntaxError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"{line}:{column}:")


def test_conflicting_contrary():
    with pytest.raises(DslSyntaxError) as info:
        parse("assumption a .\ncontrary a : x .\ncontrary a : y .")
    assert info.value.line == 3


def test_duplicates_warn():
    with pytest.warns(UserWarning, match="duplicate"):
        fw = parse("assumption a, a .\ncontrary a : x .\ncontrary a : x .\nrule x <- a .\nrule x <- a .")
    assert fw.assumptions == {"a"} and len(fw.rules) == 1


@pytest.mark.parametrize(
    "text, err, line",
    [
        ("", EmptyAssumptionSet, 1),
        ("# nothing\n", EmptyAssumptionSet, 1),
        ("assumption a, b .\ncontrary a : x .", MissingContrary, 1),
        ("assumption a .\ncontrary a : x .\nrule a <- x .", NotFlat, 3),
        ("assumption a .\ncontrary a : x .\ncontrary b : y .", ContraryOfNonAssumption, 3),
        ("assumption a, b .\ncontrary a : x .\ncontrary b : y .\nprefer a < b .\nprefer b <= a .",
         InconsistentStrictPreference, 4),
    ],
)
def test_framework_errors_keep_type(text, err, line):
    with pytest.raises(err) as info:
        parse(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"{line}:")


def test_render_round_trip_files():
    for path in sorted(FRAMEWORKS.glob("*.aba")):
        fw = parse(path.read_text())
        assert parse(render(fw)) == fw, path.name


def test_render_round_trip_random():
    for fw in random_frameworks(41, 100):
        assert parse(render(fw)) == fw


def test_render_preferences(reverse):
    assert "prefer beta < alpha ." in render(reverse)
    fw = parse("assumption a, b .\ncontrary a : x .\ncontrary b : y .\nprefer a <= b .\nprefer b <= a .")
    text = render(fw)
    assert "prefer a <= b ." in text and "prefer b <= a ." in text and "<-" not in text

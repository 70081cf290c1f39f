import pathlib
import random

import pytest

from abaplus import parse
from abaplus.generate import random_framework

FRAMEWORKS = pathlib.Path(__file__).resolve().parent.parent / "frameworks"


def load(name):
    return parse((FRAMEWORKS / f"{name}.aba").read_text())


def random_frameworks(seed, count, **kw):
    rng = random.Random(seed)
    return [random_framework(rng, **kw) for _ in range(count)]


@pytest.fixture
def basic():
    return load("basic")


@pytest.fixture
def reverse():
    return load("reverse_attack")


@pytest.fixture
def no_contra():
    return load("no_contraposition")


@pytest.fixture
def contra():
    return load("contraposition")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

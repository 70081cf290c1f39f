"""Random small frameworks for property tests and the ``oracle`` command."""
from __future__ import annotations

import random

from .axioms import check_contraposition, check_weak_contraposition
from .framework import Framework, Rule, build_framework


def random_framework(
    rng: random.Random,
    max_assumptions: int = 6,
    max_rules: int = 10,
    intermediates: int = 2,
    pref_density: float = 0.3,
    shared_contraries: bool = True,
) -> Framework:
    n = rng.randint(1, max_assumptions)
    assumptions = [f"a{i}" for i in range(n)]
    mids = [f"x{i}" for i in range(rng.randint(0, intermediates))]
    contrary = {}
    for a in assumptions:
        r = rng.random()
        if shared_contraries and r < 0.05:
            contrary[a] = rng.choice(assumptions)
        elif shared_contraries and r < 0.2:
            contrary[a] = rng.choice(mids + [f"c_{b}" for b in assumptions])
        else:
            contrary[a] = f"c_{a}"
    heads = sorted(set(contrary.values()) - set(assumptions) - set(mids)) + mids
    pool = assumptions + mids
    rules = set()
    for _ in range(rng.randint(0, max_rules) if heads else 0):
        k = rng.choice([0, 1, 1, 2, 2, 2, 3]) if rng.random() > 0.05 else 0
        body = rng.sample(pool, min(k, len(pool)))
        if not body and rng.random() < 0.7:
            body = rng.sample(assumptions, 1)
        rules.add(Rule(rng.choice(heads), body))
    leq = [(a, b) for a in assumptions for b in assumptions if a != b and rng.random() < pref_density]
    return build_framework(rules, assumptions, contrary, leq)


def _with_rules(fw, extra) -> Framework:
    return Framework(fw.rules | set(extra), fw.assumptions, fw.contrary, fw.preference)


def close_contraposition(fw, max_rounds: int = 20):
    """Add contrapositive rules until the axiom holds; None if that is impossible."""
    for _ in range(max_rounds):
        report = check_contraposition(fw)
        if report.holds:
            return fw
        extra = []
        for w in report.witnesses:
            head = fw.contrary[w["missing"]]
            if head in fw.assumptions:
                return None
            extra.append(Rule(head, (w["support"] - {w["missing"]}) | {w["attacked"]}))
        fw = _with_rules(fw, extra)
    return fw if check_contraposition(fw).holds else None


def close_weak_contraposition(fw, max_rounds: int = 20):
    for _ in range(max_rounds):
        report = check_weak_contraposition(fw)
        if report.holds:
            return fw
        extra = []
        for w in report.witnesses:
            pick = w["candidates"][0]
            head = fw.contrary[pick]
            if head in fw.assumptions:
                return None
            extra.append(Rule(head, (w["support"] - {pick}) | {w["attacked"]}))
        fw = _with_rules(fw, extra)
    return fw if check_weak_contraposition(fw).holds else None


def random_contrapositive(rng, **kw):
    while True:
        fw = close_contraposition(random_framework(rng, shared_contraries=False, **kw))
        if fw is not None:
            return fw


def random_weakly_contrapositive(rng, **kw):
    while True:
        fw = close_weak_contraposition(random_framework(rng, shared_contraries=False, **kw))
        if fw is not None:
            return fw

"""Framework data model: rules, assumptions, contraries and the preference preorder.

A framework is built once through :func:`build_framework` and is immutable
afterwards.  Everything downstream (deduction, attacks, semantics) reads the
compiled index attached to it, so construction also materialises the bitmask
tables used by the attack kernel.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


class FrameworkError(ValueError):
    """Base class for invalid framework input."""

    def __init__(self, message, *, sentence=None):
        super().__init__(message)
        self.sentence = sentence


class NotFlat(FrameworkError):
    pass


class MissingContrary(FrameworkError):
    pass


class UnknownAssumptionInPreference(FrameworkError):
    pass


class EmptyAssumptionSet(FrameworkError):
    pass


class ContraryOfNonAssumption(FrameworkError):
    pass


class InconsistentStrictPreference(FrameworkError):
    def __init__(self, message, *, sentence=None, edge=None):
        super().__init__(message, sentence=sentence)
        self.edge = edge


@dataclass(frozen=True, order=True)
class Rule:
    head: str
    body: frozenset = frozenset()

    def __init__(self, head: str, body: Iterable[str] = ()):
        if not head:
            raise FrameworkError("rule head must be a non-empty identifier")
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "body", frozenset(body))

    @property
    def is_fact(self) -> bool:
        return not self.body

    def __str__(self):
        body = ", ".join(sorted(self.body)) if self.body else "T"
        return f"{self.head} <- {body}"


def _close(carrier: frozenset, edges: Iterable[tuple[str, str]]) -> frozenset:
    """Reflexive-transitive closure of ``edges`` over ``carrier``."""
    succ = {a: {a} for a in carrier}
    for a, b in edges:
        succ[a].add(b)
    # Warshall over the adjacency sets
    for k in carrier:
        reach_k = succ[k]
        for i in carrier:
            if k in succ[i]:
                succ[i] |= reach_k
    return frozenset((a, b) for a, bs in succ.items() for b in bs)


@dataclass(frozen=True)
class Preorder:
    """Reflexive and transitive relation over a set of assumptions.

    ``leq`` always holds the closed relation; the strict part is derived.
    """

    carrier: frozenset
    leq: frozenset = field(default=frozenset())

    @classmethod
    def from_edges(cls, carrier: Iterable[str], edges: Iterable[tuple[str, str]] = ()) -> "Preorder":
        carrier = frozenset(carrier)
        return cls(carrier, _close(carrier, edges))

    def closed(self) -> "Preorder":
        return Preorder(self.carrier, _close(self.carrier, self.leq))

    def le(self, a: str, b: str) -> bool:
        return (a, b) in self.leq

    def lt(self, a: str, b: str) -> bool:
        return (a, b) in self.leq and (b, a) not in self.leq

    def strict_pairs(self) -> list[tuple[str, str]]:
        return sorted((a, b) for a, b in self.leq if (b, a) not in self.leq)

    def restrict(self, carrier: Iterable[str]) -> "Preorder":
        carrier = frozenset(carrier)
        return Preorder(carrier, frozenset((a, b) for a, b in self.leq if a in carrier and b in carrier))

    def is_empty(self) -> bool:
        """True when the relation is reflexive-only (no strict pairs)."""
        return not self.strict_pairs()


def lt(pre: Preorder, a: str, b: str) -> bool:
    return pre.lt(a, b)


def is_total(pre: Preorder, over: Iterable[str]) -> bool:
    over = list(over)
    return all(pre.le(a, b) or pre.le(b, a) for i, a in enumerate(over) for b in over[i + 1:])


@dataclass(frozen=True, eq=False)
class Framework:
    """A flat framework with a preference preorder over its assumptions."""

    rules: frozenset
    assumptions: frozenset
    contrary: Mapping[str, str]
    preference: Preorder

    def __post_init__(self):
        # compiled once; the instance is shared read-only afterwards
        from .deduction import DeductionIndex

        object.__setattr__(self, "_index", DeductionIndex(self))

    def __eq__(self, other):
        if not isinstance(other, Framework):
            return NotImplemented
        return (
            self.rules == other.rules
            and self.assumptions == other.assumptions
            and dict(self.contrary) == dict(other.contrary)
            and self.preference.leq == other.preference.leq
        )

    def __hash__(self):
        return hash((self.rules, self.assumptions, frozenset(self.contrary.items()), self.preference.leq))

    @property
    def index(self):
        return self._index

    @property
    def language(self) -> frozenset:
        sentences = set(self.assumptions) | set(self.contrary.values())
        for r in self.rules:
            sentences.add(r.head)
            sentences |= r.body
        return frozenset(sentences)

    @property
    def ordered_assumptions(self) -> tuple:
        return self._index.order

    def with_preference(self, preference: Preorder) -> "Framework":
        return Framework(self.rules, self.assumptions, self.contrary, preference)

    def without_preferences(self) -> "Framework":
        return self.with_preference(Preorder.from_edges(self.assumptions))

    def __repr__(self):
        return (
            f"Framework(assumptions={sorted(self.assumptions)}, rules={len(self.rules)}, "
            f"strict={self.preference.strict_pairs()})"
        )


def build_framework(
    rules: Iterable[Rule],
    assumptions: Iterable[str],
    contrary: Mapping[str, str],
    leq_edges: Iterable[tuple[str, str]] = (),
    strict_edges: Iterable[tuple[str, str]] = (),
) -> Framework:
    """Validate raw input and return a closed, immutable :class:`Framework`.

    ``strict_edges`` carries ``a < b`` declarations: each is stored as the
    leq edge ``(a, b)`` and, after closure, must not be contradicted by
    ``b <= a``.
    """
    rules = frozenset(rules)
    assumptions = frozenset(assumptions)
    leq_edges = list(leq_edges)
    strict_edges = list(strict_edges)
    if not assumptions:
        raise EmptyAssumptionSet("the set of assumptions must be non-empty")
    for r in sorted(rules):
        if r.head in assumptions:
            raise NotFlat(f"assumption {r.head!r} is the head of rule '{r}'", sentence=r.head)
    for a in sorted(contrary):
        if a not in assumptions:
            raise ContraryOfNonAssumption(f"contrary declared for non-assumption {a!r}", sentence=a)
    for a in sorted(assumptions):
        if a not in contrary:
            raise MissingContrary(f"assumption {a!r} has no contrary", sentence=a)
    for a, b in leq_edges + strict_edges:
        for x in (a, b):
            if x not in assumptions:
                raise UnknownAssumptionInPreference(f"preference mentions unknown assumption {x!r}", sentence=x)
    pre = Preorder.from_edges(assumptions, leq_edges + strict_edges)
    for a, b in strict_edges:
        if pre.le(b, a):
            raise InconsistentStrictPreference(f"'{a} < {b}' contradicted by '{b} <= {a}' after closure",
                                               sentence=a, edge=(a, b))
    return Framework(rules, assumptions, dict(contrary), pre)

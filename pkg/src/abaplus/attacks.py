"""Plain and preference-aware attacks between sets of assumptions."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

DEFAULT_GRAPH_BOUND = 12


class TooLarge(RuntimeError):
    pass


class AttackKind(enum.Enum):
    NORMAL = "normal"
    REVERSE = "reverse"
    BOTH = "both"

    @classmethod
    def from_bits(cls, bits: int) -> Optional["AttackKind"]:
        return {0: None, 1: cls.NORMAL, 2: cls.REVERSE, 3: cls.BOTH}[bits]


@dataclass(frozen=True)
class AttackEdge:
    source: frozenset
    target: frozenset
    kind: AttackKind

    def sort_key(self):
        return (len(self.source), sorted(self.source), len(self.target), sorted(self.target))


def attacks(fw, a: Iterable[str], b: Iterable[str]) -> bool:
    idx = fw.index
    return idx.kernel.plain(idx.mask(a), idx.mask(b))


def lt_attacks(fw, a: Iterable[str], b: Iterable[str]) -> Optional[AttackKind]:
    idx = fw.index
    return AttackKind.from_bits(idx.kernel.kind(idx.mask(a), idx.mask(b)))


def subsets(items) -> Iterable[frozenset]:
    items = sorted(items)
    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


def omit_trivial(fw) -> Callable[[frozenset], bool]:
    """Node filter dropping the empty set and the full assumption set."""
    full = frozenset(fw.assumptions)
    return lambda s: bool(s) and s != full


def attack_graph(
    fw,
    use_preferences: bool = True,
    node_filter: Optional[Callable[[frozenset], bool]] = None,
    bound: int = DEFAULT_GRAPH_BOUND,
) -> tuple[list, list]:
    """Assumption-set graph: (nodes, edges), both in a stable order.

    Without preferences every edge has kind NORMAL.
    """
    if node_filter is None and len(fw.assumptions) > bound:
        raise TooLarge(f"2^{len(fw.assumptions)} nodes exceeds the graph bound 2^{bound}; pass a node filter")
    idx = fw.index
    nodes = [s for s in subsets(fw.assumptions) if node_filter is None or node_filter(s)]
    masks = [idx.mask(s) for s in nodes]
    edges = []
    for s, ms in zip(nodes, masks):
        for t, mt in zip(nodes, masks):
            if use_preferences:
                kind = AttackKind.from_bits(idx.kernel.kind(ms, mt))
            else:
                kind = AttackKind.NORMAL if idx.kernel.plain(ms, mt) else None
            if kind is not None:
                edges.append(AttackEdge(s, t, kind))
    return nodes, edges

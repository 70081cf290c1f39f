"""Conclusion closure and minimal assumption supports.

Supports are handled internally as integer bitmasks over the framework's
sorted assumption order; the public functions speak frozensets of names.

Attack computations only ever look at ⊆-minimal supports.  For a normal
attack on ``b`` we need *some* support inside the attacker with no member
strictly below ``b``: any support contains a minimal one, and dropping
members cannot create a member below ``b``, so a qualifying support exists
iff a qualifying minimal one does.  Reverse attacks and the contraposition
checks are defined here over minimal supports as well.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class SupportSet:
    target: str
    support: frozenset

    def __iter__(self):
        return iter(self.support)


def add_minimal(antichain: list, mask: int) -> bool:
    """Insert ``mask`` into a ⊆-antichain of bitmasks; False if subsumed."""
    for m in antichain:
        if m & mask == m:
            return False
    antichain[:] = [m for m in antichain if m & mask != mask]
    antichain.append(mask)
    return True


def minimize(masks: Iterable[int]) -> list:
    out = []
    for m in sorted(set(masks), key=lambda x: (bin(x).count("1"), x)):
        if not any(o & m == o for o in out):
            out.append(m)
    return out


class DeductionIndex:
    """Precomputed tables for one framework (built eagerly, read-only after)."""

    def __init__(self, fw):
        self.fw = fw
        self.order = tuple(sorted(fw.assumptions))
        self.bit = {a: 1 << i for i, a in enumerate(self.order)}
        self.n = len(self.order)
        self.full = (1 << self.n) - 1
        rules = sorted(fw.rules)
        self.facts = frozenset(r.head for r in rules if r.is_fact)
        self._by_body = {}
        for r in rules:
            for s in r.body:
                self._by_body.setdefault(s, []).append(r)
        self._rules = rules
        self.supports = self._saturate()

        pre = fw.preference
        # lower[i]: assumptions strictly below order[i]
        self.lower = []
        for b in self.order:
            m = 0
            for a in self.order:
                if pre.lt(a, b):
                    m |= self.bit[a]
            self.lower.append(m)

        # one row per (assumption whose contrary is derived, minimal support)
        targets, masks, lowered = [], [], []
        for i, b in enumerate(self.order):
            for s in self.supports.get(fw.contrary[b], ()):
                targets.append(i)
                masks.append(s)
                lowered.append(1 if s & self.lower[i] else 0)
        self.entry_targets = targets
        self.entry_masks = masks
        self.entry_lower = lowered

        from .kernel import make_kernel

        self.kernel = make_kernel(self.n, targets, masks, lowered)

    # -- masks <-> names
    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for a in names:
            m |= self.bit[a]
        return m

    def names(self, mask: int) -> frozenset:
        return frozenset(a for i, a in enumerate(self.order) if mask >> i & 1)

    def _saturate(self) -> dict:
        """Forward saturation labelling each sentence with its support antichain."""
        supp = {a: [self.bit[a]] for a in self.order}
        agenda = list(self.order)
        for f in sorted(self.facts):
            supp.setdefault(f, [])
            if add_minimal(supp[f], 0):
                agenda.append(f)
        while agenda:
            changed = set(agenda)
            agenda = []
            fired = {r for s in changed for r in self._by_body.get(s, ())}
            for r in sorted(fired):
                if any(s not in supp for s in r.body):
                    continue
                combos = [0]
                for s in sorted(r.body):
                    combos = minimize(c | m for c in combos for m in supp[s])
                head = supp.setdefault(r.head, [])
                grew = False
                for c in combos:
                    grew |= add_minimal(head, c)
                if grew:
                    agenda.append(r.head)
        return {s: sorted(v) for s, v in supp.items()}

    def closure_mask(self, mask: int) -> frozenset:
        """Cn of the assumption set encoded by ``mask`` (least fixed point)."""
        derived = set(self.names(mask)) | set(self.facts)
        agenda = list(derived)
        pending = {id(r): len(r.body) for r in self._rules}
        while agenda:
            s = agenda.pop()
            for r in self._by_body.get(s, ()):
                pending[id(r)] -= 1
                if pending[id(r)] == 0 and r.head not in derived:
                    derived.add(r.head)
                    agenda.append(r.head)
        return frozenset(derived)

    def derives_mask(self, mask: int, phi: str) -> bool:
        return any(s & mask == s for s in self.supports.get(phi, ()))


def closure(fw, e: Iterable[str]) -> frozenset:
    idx = fw.index
    return idx.closure_mask(idx.mask(e))


def derives(fw, e: Iterable[str], phi: str) -> bool:
    idx = fw.index
    return idx.derives_mask(idx.mask(e), phi)


def minimal_supports(fw, phi: str) -> set:
    idx = fw.index
    return {SupportSet(phi, idx.names(m)) for m in idx.supports.get(phi, ())}

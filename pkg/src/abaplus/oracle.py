"""Naive powerset oracle.

Re-derives everything from the definitions with no shared machinery: Cn by
rule saturation over names, supports by trying every subset, defence by
quantifying over every attacking subset.  Exponential twice over, so only
meant for frameworks with a handful of assumptions.
"""
from __future__ import annotations

import itertools

FAMILIES = ("stable", "complete", "preferred", "grounded", "ideal")


def powerset(items):
    items = sorted(items)
    return [frozenset(c) for r in range(len(items) + 1) for c in itertools.combinations(items, r)]


class Oracle:
    def __init__(self, fw):
        self.fw = fw
        self.A = frozenset(fw.assumptions)
        self.rules = [(r.head, frozenset(r.body)) for r in fw.rules]
        self.subsets = powerset(self.A)
        self._cn = {s: self._saturate(s) for s in self.subsets}
        self._supports = {}

    def _saturate(self, e):
        derived = set(e)
        changed = True
        while changed:
            changed = False
            for head, body in self.rules:
                if head not in derived and body <= derived:
                    derived.add(head)
                    changed = True
        return frozenset(derived)

    def cn(self, e):
        return self._cn[frozenset(e)]

    def supports(self, phi):
        """⊆-minimal S with phi in Cn(S), by checking every subset."""
        if phi not in self._supports:
            hits = [s for s in self.subsets if phi in self._cn[s]]
            self._supports[phi] = [s for s in hits if not any(o < s for o in hits)]
        return self._supports[phi]

    def lt(self, a, b):
        return self.fw.preference.lt(a, b)

    def attacks(self, a, b):
        return any(s <= a for beta in b for s in self.supports(self.fw.contrary[beta]))

    def lt_attacks(self, a, b):
        for beta in b:
            for s in self.supports(self.fw.contrary[beta]):
                if s <= a and not any(self.lt(x, beta) for x in s):
                    return True
        for alpha in a:
            for s in self.supports(self.fw.contrary[alpha]):
                if s <= b and any(self.lt(x, alpha) for x in s):
                    return True
        return False

    def rel(self, pref):
        return self.lt_attacks if pref else self.attacks

    def extensions(self, family, pref):
        att = self.rel(pref)
        cf = [e for e in self.subsets if not att(e, e)]

        def defends(e, t):
            return all(att(e, b) for b in self.subsets if att(b, t))

        def admissible(e):
            if pref:
                return defends(e, e)
            return all(defends(e, frozenset([a])) for a in e)

        adm = [e for e in cf if admissible(e)]
        if family == "stable":
            return {e for e in cf if all(att(e, frozenset([b])) for b in self.A - e)}
        complete = [e for e in adm if all(a in e for a in self.A if defends(e, frozenset([a])))]
        if family == "complete":
            return set(complete)
        preferred = [e for e in adm if not any(e < o for o in adm)]
        if family == "preferred":
            return set(preferred)
        if family == "grounded":
            return {e for e in complete if not any(o < e for o in complete)}
        inside = [e for e in adm if all(e <= p for p in preferred)]
        return {e for e in inside if not any(e < o for o in inside)}


def leaf_supports(fw, phi):
    """All assumption leaf-sets of deduction trees for ``phi`` (not minimised)."""
    assumptions = frozenset(fw.assumptions)
    table = {a: {frozenset([a])} for a in assumptions}
    changed = True
    while changed:
        changed = False
        for r in sorted(fw.rules):
            if any(s not in table for s in r.body):
                continue
            combos = {frozenset()}
            for s in sorted(r.body):
                combos = {c | x for c in combos for x in table[s]}
            cur = table.setdefault(r.head, set())
            if not combos <= cur:
                cur |= combos
                changed = True
    return table.get(phi, set())

"""Pure-Python attack kernel over assumption bitmasks.

The table has one row per (assumption ``t``, minimal support ``S`` of the
contrary of ``t``), with ``low`` set when ``S`` holds an assumption strictly
below ``t``.  Mirrors ``_kernel.pyx`` line for line.
"""

BACKEND = "python"


def _popcount(x):
    return bin(x).count("1")


class Kernel:
    def __init__(self, n, targets, masks, lowered):
        self.n = n
        self.rows = [(1 << t, m, bool(lo)) for t, m, lo in zip(targets, masks, lowered)]

    def plain(self, a, b):
        for tb, m, _ in self.rows:
            if tb & b and m & a == m:
                return True
        return False

    def kind(self, a, b):
        """Bit 1: normal <-attack a -> b; bit 2: reverse <-attack a -> b."""
        k = 0
        for tb, m, low in self.rows:
            if low:
                if tb & a and m & b == m:
                    k |= 2
            elif tb & b and m & a == m:
                k |= 1
        return k

    def rel(self, a, b, pref):
        if not pref:
            return self.plain(a, b)
        for tb, m, low in self.rows:
            if low:
                if tb & a and m & b == m:
                    return True
            elif tb & b and m & a == m:
                return True
        return False

    def set_defends(self, e, t, pref):
        # every minimal attacker of t is a row support (normal) or a row
        # target singleton (reverse); checking these is enough by monotonicity
        for tb, m, low in self.rows:
            if not pref or not low:
                if tb & t and not self.rel(e, m, pref):
                    return False
            elif m & t == m and not self.rel(e, tb, pref):
                return False
        return True

    def defended(self, e, pref):
        out = 0
        for i in range(self.n):
            if self.set_defends(e, 1 << i, pref):
                out |= 1 << i
        return out

    def attacks_outside(self, e, pref):
        for i in range(self.n):
            b = 1 << i
            if not b & e and not self.rel(e, b, pref):
                return False
        return True

    def conflict_free_sets(self, pref):
        out = []
        stack = [(0, 0)]
        while stack:
            s, nxt = stack.pop()
            out.append(s)
            for i in range(nxt, self.n):
                c = s | (1 << i)
                if not self.rel(c, c, pref):
                    stack.append((c, i + 1))
        return out

    def classify(self, pref):
        """Return (conflict_free, admissible, complete, stable) mask lists."""
        cf, adm, cpl, stb = [], [], [], []
        for e in self.conflict_free_sets(pref):
            cf.append(e)
            d = self.defended(e, pref)
            if pref:
                ok = self.set_defends(e, e, pref)
            else:
                ok = d & e == e
            if ok:
                adm.append(e)
                if d & ~e == 0:
                    cpl.append(e)
            if self.attacks_outside(e, pref):
                stb.append(e)
        return cf, adm, cpl, stb


def maximal(masks):
    kept = []
    for m in sorted(set(masks), key=lambda x: -_popcount(x)):
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


def minimal(masks):
    kept = []
    for m in sorted(set(masks), key=_popcount):
        if not any(m & k == k for k in kept):
            kept.append(m)
    return kept

# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled attack kernel; same API and semantics as ``_kernel_py``."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t

BACKEND = "cython"


cdef class Kernel:
    cdef public int n
    cdef int nrows
    cdef uint64_t *tb
    cdef uint64_t *ms
    cdef char *low

    def __cinit__(self, int n, targets, masks, lowered):
        if n > 63:
            raise ValueError("compiled kernel supports at most 63 assumptions")
        self.n = n
        self.nrows = len(targets)
        self.tb = <uint64_t *> malloc(max(self.nrows, 1) * sizeof(uint64_t))
        self.ms = <uint64_t *> malloc(max(self.nrows, 1) * sizeof(uint64_t))
        self.low = <char *> malloc(max(self.nrows, 1) * sizeof(char))
        if not self.tb or not self.ms or not self.low:
            raise MemoryError()
        cdef int k
        for k in range(self.nrows):
            self.tb[k] = (<uint64_t> 1) << <int> targets[k]
            self.ms[k] = <uint64_t> masks[k]
            self.low[k] = 1 if lowered[k] else 0

    def __dealloc__(self):
        free(self.tb)
        free(self.ms)
        free(self.low)

    cdef inline bint _plain(self, uint64_t a, uint64_t b) nogil:
        cdef int k
        for k in range(self.nrows):
            if (self.tb[k] & b) and (self.ms[k] & a) == self.ms[k]:
                return True
        return False

    cdef inline bint _rel(self, uint64_t a, uint64_t b, bint pref) nogil:
        cdef int k
        if not pref:
            return self._plain(a, b)
        for k in range(self.nrows):
            if self.low[k]:
                if (self.tb[k] & a) and (self.ms[k] & b) == self.ms[k]:
                    return True
            elif (self.tb[k] & b) and (self.ms[k] & a) == self.ms[k]:
                return True
        return False

    cdef bint _set_defends(self, uint64_t e, uint64_t t, bint pref) nogil:
        cdef int k
        for k in range(self.nrows):
            if not pref or not self.low[k]:
                if (self.tb[k] & t) and not self._rel(e, self.ms[k], pref):
                    return False
            elif (self.ms[k] & t) == self.ms[k] and not self._rel(e, self.tb[k], pref):
                return False
        return True

    cdef uint64_t _defended(self, uint64_t e, bint pref) nogil:
        cdef uint64_t out = 0
        cdef int i
        for i in range(self.n):
            if self._set_defends(e, (<uint64_t> 1) << i, pref):
                out |= (<uint64_t> 1) << i
        return out

    cdef bint _attacks_outside(self, uint64_t e, bint pref) nogil:
        cdef int i
        cdef uint64_t b
        for i in range(self.n):
            b = (<uint64_t> 1) << i
            if not (b & e) and not self._rel(e, b, pref):
                return False
        return True

    def plain(self, a, b):
        return self._plain(<uint64_t> a, <uint64_t> b)

    def kind(self, a, b):
        cdef uint64_t ua = a, ub = b
        cdef int k, out = 0
        for k in range(self.nrows):
            if self.low[k]:
                if (self.tb[k] & ua) and (self.ms[k] & ub) == self.ms[k]:
                    out |= 2
            elif (self.tb[k] & ub) and (self.ms[k] & ua) == self.ms[k]:
                out |= 1
        return out

    def rel(self, a, b, bint pref):
        return self._rel(<uint64_t> a, <uint64_t> b, pref)

    def set_defends(self, e, t, bint pref):
        return self._set_defends(<uint64_t> e, <uint64_t> t, pref)

    def defended(self, e, bint pref):
        return self._defended(<uint64_t> e, pref)

    def attacks_outside(self, e, bint pref):
        return self._attacks_outside(<uint64_t> e, pref)

    def conflict_free_sets(self, bint pref):
        out = []
        cdef list stack = [(0, 0)]
        cdef uint64_t s, c
        cdef int nxt, i
        while stack:
            s, nxt = stack.pop()
            out.append(s)
            for i in range(nxt, self.n):
                c = s | ((<uint64_t> 1) << i)
                if not self._rel(c, c, pref):
                    stack.append((c, i + 1))
        return out

    def classify(self, bint pref):
        cdef list cf = [], adm = [], cpl = [], stb = []
        cdef uint64_t e, d
        cdef bint ok
        for pe in self.conflict_free_sets(pref):
            e = pe
            cf.append(pe)
            d = self._defended(e, pref)
            if pref:
                ok = self._set_defends(e, e, pref)
            else:
                ok = (d & e) == e
            if ok:
                adm.append(pe)
                if (d & ~e) == 0:
                    cpl.append(pe)
            if self._attacks_outside(e, pref):
                stb.append(pe)
        return cf, adm, cpl, stb


cdef inline int _popcount(uint64_t x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def maximal(masks):
    cdef list order = sorted(set(masks), key=lambda x: -_popcount(<uint64_t> x))
    cdef list kept = []
    cdef uint64_t m, k
    cdef bint sub
    for pm in order:
        m = pm
        sub = False
        for pk in kept:
            k = pk
            if (m & k) == m:
                sub = True
                break
        if not sub:
            kept.append(pm)
    return kept


def minimal(masks):
    cdef list order = sorted(set(masks), key=lambda x: _popcount(<uint64_t> x))
    cdef list kept = []
    cdef uint64_t m, k
    cdef bint sup
    for pm in order:
        m = pm
        sup = False
        for pk in kept:
            k = pk
            if (m & k) == k:
                sup = True
                break
        if not sup:
            kept.append(pm)
    return kept

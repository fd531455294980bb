# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled state set. Values are int64; every bound product is formed in 128 bits."""

from libc.stdlib cimport malloc, realloc, free
from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    ctypedef long long int128 "__int128"

NAME = "cython"


cdef class StateSet:
    cdef int64_t* p
    cdef int64_t* w
    cdef uint64_t* m
    cdef int64_t* bp
    cdef int64_t* bw
    cdef uint64_t* bm
    cdef Py_ssize_t n
    cdef Py_ssize_t cap

    def __cinit__(self, int64_t p0=0, int64_t w0=0):
        self.cap = 16
        self.p = <int64_t*> malloc(self.cap * sizeof(int64_t))
        self.w = <int64_t*> malloc(self.cap * sizeof(int64_t))
        self.m = <uint64_t*> malloc(self.cap * sizeof(uint64_t))
        self.bp = <int64_t*> malloc(self.cap * sizeof(int64_t))
        self.bw = <int64_t*> malloc(self.cap * sizeof(int64_t))
        self.bm = <uint64_t*> malloc(self.cap * sizeof(uint64_t))
        if not (self.p and self.w and self.m and self.bp and self.bw and self.bm):
            raise MemoryError()
        self.p[0] = p0
        self.w[0] = w0
        self.m[0] = 0
        self.n = 1

    def __dealloc__(self):
        free(self.p); free(self.w); free(self.m)
        free(self.bp); free(self.bw); free(self.bm)

    cdef int _reserve(self, Py_ssize_t need) except -1:
        if need <= self.cap:
            return 0
        cdef Py_ssize_t c = self.cap
        while c < need:
            c *= 2
        cdef void* t
        t = realloc(self.p, c * sizeof(int64_t))
        if not t: raise MemoryError()
        self.p = <int64_t*> t
        t = realloc(self.w, c * sizeof(int64_t))
        if not t: raise MemoryError()
        self.w = <int64_t*> t
        t = realloc(self.m, c * sizeof(uint64_t))
        if not t: raise MemoryError()
        self.m = <uint64_t*> t
        t = realloc(self.bp, c * sizeof(int64_t))
        if not t: raise MemoryError()
        self.bp = <int64_t*> t
        t = realloc(self.bw, c * sizeof(int64_t))
        if not t: raise MemoryError()
        self.bw = <int64_t*> t
        t = realloc(self.bm, c * sizeof(uint64_t))
        if not t: raise MemoryError()
        self.bm = <uint64_t*> t
        self.cap = c
        return 0

    def __len__(self):
        return self.n

    def get(self, Py_ssize_t k):
        if k < 0 or k >= self.n:
            raise IndexError(k)
        return self.p[k], self.w[k], self.m[k]

    def profits(self):
        return [self.p[k] for k in range(self.n)]

    def weights(self):
        return [self.w[k] for k in range(self.n)]

    def masks(self):
        return [self.m[k] for k in range(self.n)]

    def load(self, p, w, m=None):
        cdef Py_ssize_t k, n = len(p)
        self._reserve(max(n, 1))
        for k in range(n):
            self.p[k] = p[k]
            self.w[k] = w[k]
            self.m[k] = 0 if m is None else m[k]
        self.n = n

    def find_le(self, int64_t limit):
        cdef Py_ssize_t lo = 0, hi = self.n, mid
        while lo < hi:
            mid = (lo + hi) >> 1
            if self.w[mid] <= limit:
                lo = mid + 1
            else:
                hi = mid
        return lo - 1

    def extend(self, int64_t dp, int64_t dw, int bit, int64_t W, int64_t wmax,
               int64_t pmin, int64_t z1, bint has_nl, int64_t pl, int64_t wl,
               int64_t pr, int64_t wr, bint dry=False):
        cdef Py_ssize_t n = self.n, i = 0, j = 0, out = 0, gen = 0
        if not dry:
            self._reserve(2 * n)
        cdef uint64_t keep = ~(<uint64_t>0), setb = 0
        if bit >= 0:
            setb = (<uint64_t>1) << bit
            keep = ~setb
        cdef int64_t cp, cw, wa, wb, last = 0
        cdef uint64_t cm
        cdef bint take_old, have = False
        cdef int64_t* P = self.p
        cdef int64_t* Wt = self.w
        cdef uint64_t* M = self.m
        cdef int64_t* OP = self.bp
        cdef int64_t* OW = self.bw
        cdef uint64_t* OM = self.bm
        with nogil:
            while i < n or j < n:
                if j >= n:
                    take_old = True
                elif i >= n:
                    take_old = False
                else:
                    wa = Wt[i]
                    wb = Wt[j] + dw
                    if wa != wb:
                        take_old = wa < wb
                    else:
                        take_old = P[i] >= P[j] + dp
                if take_old:
                    cp = P[i]; cw = Wt[i]; cm = M[i] & keep
                    i += 1
                else:
                    cp = P[j] + dp; cw = Wt[j] + dw; cm = (M[j] & keep) | setb
                    j += 1
                if cw > wmax:
                    break
                if have and cp <= last:
                    continue
                if cp <= pmin:
                    continue
                if cw <= W:
                    if (<int128>cp) * wr + (<int128>(W - cw)) * pr < (<int128>z1) * wr:
                        continue
                else:
                    if not has_nl:
                        continue
                    if (<int128>cp) * wl - (<int128>(cw - W)) * pl < (<int128>z1) * wl:
                        continue
                if not take_old:
                    if dry:
                        gen = 1
                        break
                    gen += 1
                have = True
                last = cp
                if not dry:
                    OP[out] = cp; OW[out] = cw; OM[out] = cm
                    out += 1
        if dry:
            return gen
        self._swap(out)
        return gen

    cdef void _swap(self, Py_ssize_t out):
        cdef int64_t* tp = self.p
        cdef int64_t* tw = self.w
        cdef uint64_t* tm = self.m
        self.p = self.bp; self.w = self.bw; self.m = self.bm
        self.bp = tp; self.bw = tw; self.bm = tm
        self.n = out

    def witness(self, int64_t dp, int64_t dw):
        cdef Py_ssize_t n = self.n, j = 0, k
        cdef int64_t tw, tp
        for k in range(n):
            tw = self.w[k] + dw
            tp = self.p[k] + dp
            while j < n and self.w[j] < tw:
                j += 1
            if j >= n or self.w[j] != tw or self.p[j] != tp:
                return self.w[k]
        return -1

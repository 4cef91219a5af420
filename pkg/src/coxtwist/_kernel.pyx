# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word kernel.  Same algorithm as ``_kernel_py`` on int64.

Coordinates beyond 2**56 raise ``OverflowError``; the dispatcher then
retries the call on the arbitrary-precision Python kernel.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

BACKEND = "cython"

cdef extern from *:
    ctypedef long long int128 "__int128"

cdef long long LIMIT = 1LL << 56


cdef inline int _sign(long long a, long long b) nogil:
    cdef long long p = 2 * a + b
    cdef long long q = b
    if p >= 0 and q >= 0:
        return 0 if (p == 0 and q == 0) else 1
    if p <= 0 and q <= 0:
        return -1
    # |p|, |q| < 2**58 here, so the squares fit in 128 bits
    cdef int128 l = <int128>p * p
    cdef int128 r = 5 * (<int128>q * q)
    if l == r:
        return 0
    if l > r:
        return 1 if p > 0 else -1
    return 1 if q > 0 else -1


cdef class Kernel:
    cdef public int n
    cdef int *row_len
    cdef int *row_t
    cdef long long *row_a
    cdef long long *row_b
    cdef public str backend

    def __cinit__(self, cartan):
        cdef int n = len(cartan)
        self.n = n
        self.backend = BACKEND
        self.row_len = <int *>malloc(n * sizeof(int))
        self.row_t = <int *>malloc(n * n * sizeof(int))
        self.row_a = <long long *>malloc(n * n * sizeof(long long))
        self.row_b = <long long *>malloc(n * n * sizeof(long long))
        cdef int s, t, k
        for s in range(n):
            k = 0
            for t in range(n):
                if t == s:
                    continue
                a, b = cartan[s][t]
                if a or b:
                    self.row_t[s * n + k] = t
                    self.row_a[s * n + k] = a
                    self.row_b[s * n + k] = b
                    k += 1
            self.row_len[s] = k

    def __dealloc__(self):
        free(self.row_len)
        free(self.row_t)
        free(self.row_a)
        free(self.row_b)

    cdef int _apply(self, long long *xa, long long *xb, int s) except -1:
        cdef long long sa = xa[s]
        cdef long long sb = xb[s]
        cdef int k, t
        cdef long long ma, mb
        cdef int base = s * self.n
        for k in range(self.row_len[s]):
            t = self.row_t[base + k]
            ma = self.row_a[base + k]
            mb = self.row_b[base + k]
            xa[t] -= ma * sa + mb * sb
            xb[t] -= ma * sb + mb * sa + mb * sb
            if xa[t] > LIMIT or xa[t] < -LIMIT or xb[t] > LIMIT or xb[t] < -LIMIT:
                raise OverflowError("kernel coordinate overflow")
        xa[s] = -sa
        xb[s] = -sb
        return 0

    cdef int _first_descent(self, long long *xa, long long *xb):
        cdef int s
        for s in range(self.n):
            if _sign(xa[s], xb[s]) < 0:
                return s
        return -1

    cdef int _load(self, word, long long *xa, long long *xb) except -1:
        cdef int i, s
        cdef int n = self.n
        for i in range(n):
            xa[i] = 1
            xb[i] = 0
        for i in range(len(word) - 1, -1, -1):
            s = word[i]
            self._apply(xa, xb, s)
        return 0

    cdef tuple _drain(self, long long *xa, long long *xb):
        out = []
        cdef int s
        while True:
            s = self._first_descent(xa, xb)
            if s < 0:
                return tuple(out)
            out.append(s)
            self._apply(xa, xb, s)

    def reduce(self, word):
        cdef long long *xa = <long long *>malloc(2 * self.n * sizeof(long long))
        cdef long long *xb = xa + self.n
        try:
            self._load(word, xa, xb)
            return self._drain(xa, xb)
        finally:
            free(xa)

    def length(self, word):
        cdef long long *xa = <long long *>malloc(2 * self.n * sizeof(long long))
        cdef long long *xb = xa + self.n
        cdef int s, count = 0
        try:
            self._load(word, xa, xb)
            while True:
                s = self._first_descent(xa, xb)
                if s < 0:
                    return count
                count += 1
                self._apply(xa, xb, s)
        finally:
            free(xa)

    def distance(self, x, y):
        return self.length(tuple(reversed(x)) + tuple(y))

    def left_descents(self, word):
        cdef long long *xa = <long long *>malloc(2 * self.n * sizeof(long long))
        cdef long long *xb = xa + self.n
        cdef int s
        try:
            self._load(word, xa, xb)
            return tuple(s for s in range(self.n) if _sign(xa[s], xb[s]) < 0)
        finally:
            free(xa)

    def is_identity(self, word):
        cdef long long *xa = <long long *>malloc(2 * self.n * sizeof(long long))
        cdef long long *xb = xa + self.n
        cdef int s
        try:
            self._load(word, xa, xb)
            for s in range(self.n):
                if xa[s] != 1 or xb[s] != 0:
                    return False
            return True
        finally:
            free(xa)

    def order(self, word, int cutoff):
        if len(word) == 0:
            return 1
        cdef int n = self.n
        cdef long long *xa = <long long *>malloc(2 * n * sizeof(long long))
        cdef long long *xb = xa + n
        cdef int i, k, s, done
        rev = tuple(reversed(word))
        try:
            for i in range(n):
                xa[i] = 1
                xb[i] = 0
            for k in range(1, cutoff + 1):
                for s in rev:
                    self._apply(xa, xb, s)
                done = 1
                for i in range(n):
                    if xa[i] != 1 or xb[i] != 0:
                        done = 0
                        break
                if done:
                    return k
            return 0
        finally:
            free(xa)

    def ball(self, int radius, long cap):
        cdef int n = self.n
        cdef int s, i
        cdef long long *ya = <long long *>malloc(2 * n * sizeof(long long))
        cdef long long *yb = ya + n
        cdef long long *tmp = <long long *>malloc(2 * n * sizeof(long long))
        try:
            layer = [((1,) * n + (0,) * n)]
            out = [()]
            for _ in range(radius):
                nxt = set()
                for vec in layer:
                    for i in range(2 * n):
                        tmp[i] = vec[i]
                    for s in range(n):
                        if _sign(tmp[s], tmp[n + s]) < 0:
                            continue
                        memcpy(ya, tmp, 2 * n * sizeof(long long))
                        self._apply(ya, yb, s)
                        nxt.add(tuple([ya[i] for i in range(2 * n)]))
                if len(out) + len(nxt) > cap:
                    return None
                keyed = []
                for vec in nxt:
                    for i in range(2 * n):
                        ya[i] = vec[i]
                    keyed.append((self._drain(ya, yb), vec))
                keyed.sort()
                out.extend(w for w, _ in keyed)
                layer = [v for _, v in keyed]
                if not layer:
                    break
            return out
        finally:
            free(ya)
            free(tmp)

# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled insertion kernels; drop-in mirror of plactic._kernels._pure.

One flat int buffer per tableau, one row per MAXW-slot stripe.  The word
enumerator keeps a stack of per-prefix tableaux so advancing the
lexicographic odometer re-inserts only the changed suffix.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.string cimport memcpy

BACKEND = "cython"


cdef struct Tab:
    int *cells          # stride * stride row-major
    int *rlen
    int nrows
    int stride


cdef int tab_alloc(Tab *t, int stride) except -1:
    t.stride = stride
    t.nrows = 0
    t.cells = <int *> PyMem_Malloc(stride * stride * sizeof(int))
    t.rlen = <int *> PyMem_Malloc(stride * sizeof(int))
    if t.cells == NULL or t.rlen == NULL:
        raise MemoryError()
    return 0


cdef void tab_free(Tab *t) noexcept:
    PyMem_Free(t.cells)
    PyMem_Free(t.rlen)
    t.cells = NULL
    t.rlen = NULL


cdef inline void tab_copy(Tab *dst, Tab *src) noexcept:
    cdef int r
    dst.nrows = src.nrows
    for r in range(src.nrows):
        dst.rlen[r] = src.rlen[r]
        memcpy(dst.cells + r * dst.stride, src.cells + r * src.stride,
               src.rlen[r] * sizeof(int))


cdef inline int tab_insert(Tab *t, int a) except -1:
    cdef int r = 0, lo, hi, mid, bumped
    cdef int *row
    while True:
        if r == t.nrows:
            if r >= t.stride:
                raise MemoryError("tableau capacity exceeded")
            t.cells[r * t.stride] = a
            t.rlen[r] = 1
            t.nrows += 1
            return 0
        row = t.cells + r * t.stride
        lo = 0
        hi = t.rlen[r]
        while lo < hi:                      # leftmost entry > a
            mid = (lo + hi) >> 1
            if row[mid] <= a:
                lo = mid + 1
            else:
                hi = mid
        if lo == t.rlen[r]:
            if lo >= t.stride:
                raise MemoryError("tableau capacity exceeded")
            row[lo] = a
            t.rlen[r] += 1
            return 0
        bumped = row[lo]
        row[lo] = a
        a = bumped
        r += 1


cdef inline bint tab_equal(Tab *x, Tab *y) noexcept:
    cdef int r, c
    if x.nrows != y.nrows:
        return False
    for r in range(x.nrows):
        if x.rlen[r] != y.rlen[r]:
            return False
        for c in range(x.rlen[r]):
            if x.cells[r * x.stride + c] != y.cells[r * y.stride + c]:
                return False
    return True


cdef object tab_to_tuple(Tab *t):
    cdef int r, c
    out = []
    for r in range(t.nrows):
        out.append(tuple([t.cells[r * t.stride + c] for c in range(t.rlen[r])]))
    return tuple(out)


def insertion_rows(word):
    """Insertion tableau of ``word`` as a tuple of row tuples."""
    cdef Tab t
    cdef int a
    word = tuple(word)
    tab_alloc(&t, len(word) + 1)
    try:
        for a in word:
            tab_insert(&t, a)
        return tab_to_tuple(&t)
    finally:
        tab_free(&t)


def insert_rows(rows, letters):
    """Insert ``letters`` in order into an existing tableau."""
    cdef Tab t
    cdef int a, n = 0
    rows = tuple(tuple(r) for r in rows)
    letters = tuple(letters)
    for row in rows:
        n += len(row)
    tab_alloc(&t, n + len(letters) + 1)
    try:
        for row in rows:
            t.rlen[t.nrows] = len(row)
            for i, a in enumerate(row):
                t.cells[t.nrows * t.stride + i] = a
            t.nrows += 1
        for a in letters:
            tab_insert(&t, a)
        return tab_to_tuple(&t)
    finally:
        tab_free(&t)


def commutes(u, w):
    """True iff P(u.w) == P(w.u)."""
    cdef Tab x, y
    cdef int a
    u = tuple(u)
    w = tuple(w)
    cdef int stride = len(u) + len(w) + 1
    tab_alloc(&x, stride)
    try:
        tab_alloc(&y, stride)
    except:
        tab_free(&x)
        raise
    try:
        for a in u:
            tab_insert(&x, a)
        for a in w:
            tab_insert(&x, a)
        for a in w:
            tab_insert(&y, a)
        for a in u:
            tab_insert(&y, a)
        return tab_equal(&x, &y)
    finally:
        tab_free(&x)
        tab_free(&y)


cdef class _Scanner:
    """Odometer over [m]^n with per-prefix tableau stacks."""

    cdef Tab *pa         # pa[i] = P(w[:i])
    cdef Tab *pb         # pb[i] = P(u . w[:i])
    cdef Tab scratch
    cdef int *digits
    cdef int *uword
    cdef int n, m, ulen, stride

    def __cinit__(self, u, int n, int m):
        cdef int i
        self.n = n
        self.m = m
        self.ulen = len(u)
        self.stride = n + self.ulen + 1
        self.pa = NULL
        self.pb = NULL
        self.digits = NULL
        self.uword = NULL
        self.pa = <Tab *> PyMem_Malloc((n + 1) * sizeof(Tab))
        self.pb = <Tab *> PyMem_Malloc((n + 1) * sizeof(Tab))
        self.digits = <int *> PyMem_Malloc((n + 1) * sizeof(int))
        self.uword = <int *> PyMem_Malloc((self.ulen + 1) * sizeof(int))
        if self.pa == NULL or self.pb == NULL or self.digits == NULL or self.uword == NULL:
            raise MemoryError()
        for i in range(n + 1):
            self.pa[i].cells = NULL
            self.pa[i].rlen = NULL
            self.pb[i].cells = NULL
            self.pb[i].rlen = NULL
        self.scratch.cells = NULL
        self.scratch.rlen = NULL
        for i in range(n + 1):
            tab_alloc(&self.pa[i], self.stride)
            tab_alloc(&self.pb[i], self.stride)
        tab_alloc(&self.scratch, self.stride)
        for i in range(self.ulen):
            self.uword[i] = u[i]
            tab_insert(&self.pb[0], self.uword[i])

    def __dealloc__(self):
        cdef int i
        if self.pa != NULL:
            for i in range(self.n + 1):
                tab_free(&self.pa[i])
            PyMem_Free(self.pa)
        if self.pb != NULL:
            for i in range(self.n + 1):
                tab_free(&self.pb[i])
            PyMem_Free(self.pb)
        tab_free(&self.scratch)
        PyMem_Free(self.digits)
        PyMem_Free(self.uword)

    cdef void rebuild(self, int frm) noexcept:
        cdef int i
        for i in range(frm, self.n):
            tab_copy(&self.pa[i + 1], &self.pa[i])
            tab_insert(&self.pa[i + 1], self.digits[i] + 1)
            tab_copy(&self.pb[i + 1], &self.pb[i])
            tab_insert(&self.pb[i + 1], self.digits[i] + 1)

    cdef bint leaf_commutes(self) noexcept:
        cdef int i
        tab_copy(&self.scratch, &self.pa[self.n])
        for i in range(self.ulen):
            tab_insert(&self.scratch, self.uword[i])
        return tab_equal(&self.scratch, &self.pb[self.n])

    cdef object run(self, long long start, long long stop, bint collect):
        cdef long long idx = start
        cdef int i, p
        cdef long long count = 0
        found = [] if collect else None
        rem = start
        for i in range(self.n - 1, -1, -1):
            self.digits[i] = rem % self.m
            rem //= self.m
        self.rebuild(0)
        while True:
            if self.leaf_commutes():
                if collect:
                    found.append(tuple([self.digits[i] + 1 for i in range(self.n)]))
                else:
                    count += 1
            idx += 1
            if idx >= stop:
                break
            p = self.n - 1
            while self.digits[p] == self.m - 1:
                self.digits[p] = 0
                p -= 1
            self.digits[p] += 1
            self.rebuild(p)
        if collect:
            return found
        return count


def _scan(u, int n, int m, start, stop, bint collect):
    total = m**n if n else 1
    if stop is None:
        stop = total
    stop = min(stop, total)
    if start >= stop:
        return [] if collect else 0
    if n == 0:
        return [()] if collect else 1
    if m < 1:
        return [] if collect else 0
    scanner = _Scanner(tuple(u), n, m)
    return scanner.run(start, stop, collect)


def count_commuting(u, n, m, start=0, stop=None):
    """Number of words w in [m]^n, index range [start, stop), with P(uw) == P(wu)."""
    return _scan(u, n, m, start, stop, False)


def commuting_words(u, n, m, start=0, stop=None):
    """The words themselves, in lexicographic order."""
    return _scan(u, n, m, start, stop, True)

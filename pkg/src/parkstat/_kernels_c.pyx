# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: hot inner loops of every engine.

Byte-identical outputs to parkstat._kernels_pure -- the pure module is the
reference, this one only removes interpreter overhead.  The brute-force
enumerator runs entirely at C level (and releases the GIL, so partitioned
ranges parallelize across threads); the diagonal steps keep exact Python
integers but drive the loops with C indices.
"""

from libc.stdlib cimport free, malloc

BACKEND = "c"


def brute_area_counts(n: int, a: int, first_lo: int, first_hi: int) -> list:
    """Tally area over all preference vectors with first entry in [lo, hi).

    Same contract as the pure twin: walks the odometer over {1..n+a-1}^n
    (first digit restricted), filters by the sorted parking criterion,
    returns dense counts[area] for area = 0 .. n(2a+n-3)/2.
    """
    cdef long cn = n, ca = a, lo = first_lo, hi = first_hi
    if cn < 1:
        raise ValueError("brute kernel needs n >= 1")
    if cn > 64:
        raise ValueError("brute kernel capped at n <= 64")
    cdef long base = cn + ca - 1
    cdef long max_area = cn * (2 * ca + cn - 3) // 2
    cdef long offset = cn * (2 * ca + cn - 1) // 2
    cdef long long *hist = <long long *> malloc((max_area + 1) * sizeof(long long))
    cdef long *vec = <long *> malloc(cn * sizeof(long))
    cdef long *srt = <long *> malloc(cn * sizeof(long))
    if hist == NULL or vec == NULL or srt == NULL:
        free(hist); free(vec); free(srt)
        raise MemoryError()
    cdef long i, j, t, v, tot
    cdef bint ok
    for i in range(max_area + 1):
        hist[i] = 0
    with nogil:
        if lo < hi:
            vec[0] = lo
            for i in range(1, cn):
                vec[i] = 1
            while vec[0] < hi:
                # insertion sort into srt, summing along the way
                tot = 0
                for i in range(cn):
                    v = vec[i]
                    tot += v
                    j = i
                    while j > 0 and srt[j - 1] > v:
                        srt[j] = srt[j - 1]
                        j -= 1
                    srt[j] = v
                ok = True
                for i in range(cn):
                    if srt[i] > ca + i:
                        ok = False
                        break
                if ok:
                    hist[offset - tot] += 1
                j = cn - 1
                while j > 0 and vec[j] == base:
                    vec[j] = 1
                    j -= 1
                vec[j] += 1
    out = [0] * (max_area + 1)
    for i in range(max_area + 1):
        out[i] = hist[i]
    free(hist); free(vec); free(srt)
    return out


def count_step(prev: list, s: int, n_cap: int, binom: list) -> list:
    """One anti-diagonal of the counting recurrence (see pure twin)."""
    cdef Py_ssize_t cs = s, cap = n_cap, n, k
    cdef Py_ssize_t top = cs if cs < cap else cap
    cdef list cprev = prev, cbinom = binom, row
    cdef list cur = [0] * (top + 1)
    cdef object acc, c
    cur[0] = 1
    for n in range(1, top + 1):
        if cs - n == 0:
            continue
        acc = cprev[n]
        row = cbinom[n]
        for k in range(1, n + 1):
            c = cprev[n - k]
            if c:
                acc = acc + row[k] * c
        cur[n] = acc
    return cur


def genfun_step(prev: list, s: int, n_cap: int, binom: list) -> list:
    """One anti-diagonal of the area generating-function recurrence."""
    cdef Py_ssize_t cs = s, cap = n_cap, n, k, i, e, m
    cdef Py_ssize_t top = cs if cs < cap else cap
    cdef Py_ssize_t a, deg
    cdef list cprev = prev, cbinom = binom, row, acc, child, head
    cdef list cur = [None] * (top + 1)
    cdef object w, c, obj
    cur[0] = [1]
    for n in range(1, top + 1):
        a = cs - n
        if a == 0:
            continue
        deg = n * (2 * a + n - 3) // 2
        acc = [0] * (deg + 1)
        obj = cprev[n]
        if obj is not None:
            head = <list> obj
            m = len(head)
            for i in range(m):
                acc[i] = head[i]
        row = cbinom[n]
        for k in range(1, n + 1):
            obj = cprev[n - k]
            if obj is None:
                continue
            child = <list> obj
            w = row[k]
            e = k * (k + 2 * a - 3) // 2
            m = len(child)
            for i in range(m):
                c = child[i]
                if c:
                    acc[e + i] = acc[e + i] + w * c
        cur[n] = acc
    return cur


def jet_step(prev: list, s: int, n_cap: int, kmax: int, binom: list) -> list:
    """One anti-diagonal of the jet recurrence, Taylor basis (see pure twin)."""
    cdef Py_ssize_t cs = s, cap = n_cap, width = kmax + 1, n, k, i, t, e
    cdef Py_ssize_t top = cs if cs < cap else cap
    cdef list cprev = prev, cbinom = binom, row, acc, child
    cdef list cur = [None] * (top + 1)
    cdef object w, wc, c, obj
    cdef Py_ssize_t a
    cdef list unit = [0] * width
    unit[0] = 1
    cur[0] = unit
    for n in range(1, top + 1):
        a = cs - n
        if a == 0:
            continue
        obj = cprev[n]
        acc = list(<list> obj) if obj is not None else [0] * width
        row = cbinom[n]
        for k in range(1, n + 1):
            obj = cprev[n - k]
            if obj is None:
                continue
            child = <list> obj
            w = row[k]
            e = k * (k + 2 * a - 3) // 2
            for i in range(width):
                acc[i] = acc[i] + w * child[i]
            c = 1
            for t in range(1, width):
                c = c * (e - t + 1) // t
                if not c:
                    break
                wc = w * c
                for i in range(t, width):
                    acc[i] = acc[i] + wc * child[i - t]
        cur[n] = acc
    return cur

# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled twins of the scans in ``_purekernels``; same signatures, same witnesses."""

from libc.stdlib cimport malloc, free

cdef enum:
    PLAIN = 0
    LEFT = 1
    RIGHT = 2


cdef int *_ints(seq, Py_ssize_t size) except NULL:
    cdef int *buf = <int *> malloc(max(size, 1) * sizeof(int))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(size):
        buf[i] = seq[i]
    return buf


def ku_witnesses(t, int n):
    cdef int *tab = _ints(t, n * n)
    cdef int x, y, z, xy
    cdef bint found = False
    w1 = w2 = w3 = w4 = None
    try:
        for x in range(n):
            for y in range(n):
                xy = tab[x * n + y]
                for z in range(n):
                    if tab[xy * n + tab[tab[y * n + z] * n + tab[x * n + z]]] != 0:
                        w1 = (x, y, z)
                        found = True
                        break
                if found:
                    break
            if found:
                break
        for x in range(n):
            if tab[x * n] != 0:
                w2 = (x,)
                break
        for x in range(n):
            if tab[x] != x:
                w3 = (x,)
                break
        found = False
        for x in range(n):
            for y in range(n):
                if x != y and tab[x * n + y] == 0 and tab[y * n + x] == 0:
                    w4 = (x, y)
                    found = True
                    break
            if found:
                break
    finally:
        free(tab)
    return w1, w2, w3, w4


def derivation_witness(t, int n, d, bint right_left):
    cdef int *tab = _ints(t, n * n)
    cdef int *dm = _ints(d, n)
    cdef int x, y, a, b, rhs
    try:
        for x in range(n):
            for y in range(n):
                a = tab[dm[x] * n + y]
                b = tab[x * n + dm[y]]
                if right_left:
                    rhs = tab[tab[b * n + a] * n + a]
                else:
                    rhs = tab[tab[a * n + b] * n + b]
                if dm[tab[x * n + y]] != rhs:
                    return (x, y)
    finally:
        free(tab)
        free(dm)
    return None


def ideal_witness(t, int n, d, rank, int kind):
    cdef int *tab = _ints(t, n * n)
    cdef int *dm = _ints(d, n)
    cdef int *rk = _ints(rank, n)
    cdef int x, y, z, dx, ry, yz, xz, lhs, p, rp
    try:
        for x in range(n):
            dx = dm[x]
            for y in range(n):
                ry = rk[y] if kind == PLAIN else rk[dm[y]]
                for z in range(n):
                    yz = tab[y * n + z]
                    xz = tab[x * n + z]
                    if kind == PLAIN:
                        lhs = rk[xz]
                        p = tab[x * n + yz]
                    elif kind == LEFT:
                        lhs = rk[dm[xz]]
                        p = tab[dx * n + yz]
                    elif kind == RIGHT:
                        lhs = rk[dm[xz]]
                        p = tab[x * n + dm[yz]]
                    else:
                        lhs = rk[dm[xz]]
                        p = dm[tab[x * n + yz]]
                    rp = rk[p]
                    if lhs < (rp if rp < ry else ry):
                        return (x, y, z)
    finally:
        free(tab)
        free(dm)
        free(rk)
    return None


cdef bint _consistent(int *t, int n):
    cdef int x, y, z, xy, yz, xz, e
    for x in range(n):
        for y in range(x + 1, n):
            if t[x * n + y] == 0 and t[y * n + x] == 0:
                return False
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            if xy < 0:
                continue
            for z in range(n):
                yz = t[y * n + z]
                xz = t[x * n + z]
                if yz < 0 or xz < 0:
                    continue
                e = t[yz * n + xz]
                if e < 0:
                    continue
                if t[xy * n + e] > 0:
                    return False
    return True


cdef int _fill(int *t, int n, int *cells, int ncells, int k, list out) except -1:
    cdef int v, i
    if k == ncells:
        tab = [t[i] for i in range(n * n)]
        if ku_witnesses(tab, n) == (None, None, None, None):
            out.append(tuple(tab))
        return 0
    for v in range(n):
        t[cells[k]] = v
        if _consistent(t, n):
            _fill(t, n, cells, ncells, k + 1, out)
    t[cells[k]] = -1
    return 0


def search_tables(int n):
    free_cells = [x * n + y for x in range(1, n) for y in range(1, n) if x != y]
    cdef int *t = <int *> malloc(n * n * sizeof(int))
    cdef int *cells = _ints(free_cells, len(free_cells))
    cdef int x
    out = []
    try:
        for x in range(n * n):
            t[x] = -1
        for x in range(n):
            t[x] = x
            t[x * n] = 0
            t[x * n + x] = 0
        _fill(t, n, cells, len(free_cells), 0, out)
    finally:
        free(t)
        free(cells)
    return out

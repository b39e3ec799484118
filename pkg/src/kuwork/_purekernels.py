"""Pure-Python scan kernels.

Every function here has a line-for-line twin in ``_kernels.pyx``.  Tables are
flat row-major sequences (``t[x * n + y] == x * y``); self-maps and grade ranks
are length-``n`` integer sequences.  Scans run in lexicographic order so the
first witness found is the smallest one.
"""

PLAIN = 0
LEFT = 1
RIGHT = 2
TWO_SIDED = 3


def ku_witnesses(t, n):
    """Smallest violating tuple per KU axiom, ``None`` where the axiom holds."""
    w1 = w2 = w3 = w4 = None
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            for z in range(n):
                if t[xy * n + t[t[y * n + z] * n + t[x * n + z]]] != 0:
                    w1 = (x, y, z)
                    break
            if w1 is not None:
                break
        if w1 is not None:
            break
    for x in range(n):
        if t[x * n] != 0:
            w2 = (x,)
            break
    for x in range(n):
        if t[x] != x:
            w3 = (x,)
            break
    for x in range(n):
        for y in range(n):
            if x != y and t[x * n + y] == 0 and t[y * n + x] == 0:
                w4 = (x, y)
                break
        if w4 is not None:
            break
    return w1, w2, w3, w4


def derivation_witness(t, n, d, right_left):
    """First pair (x, y) breaking the (l,r) identity, or the (r,l) one."""
    for x in range(n):
        dx = d[x]
        for y in range(n):
            a = t[dx * n + y]
            b = t[x * n + d[y]]
            if right_left:
                rhs = t[t[b * n + a] * n + a]
            else:
                rhs = t[t[a * n + b] * n + b]
            if d[t[x * n + y]] != rhs:
                return (x, y)
    return None


def ideal_witness(t, n, d, rank, kind):
    """First triple breaking the min-inequality of a (fuzzy) ideal condition.

    ``rank`` is any order-preserving integer image of the grades; a crisp set
    is the 0/1 rank of its mask.  ``kind`` picks the premise:

    PLAIN      rank[x*z]    >= min(rank[x*(y*z)],    rank[y])
    LEFT       rank[d(x*z)] >= min(rank[d(x)*(y*z)], rank[d(y)])
    RIGHT      rank[d(x*z)] >= min(rank[x*d(y*z)],   rank[d(y)])
    TWO_SIDED  rank[d(x*z)] >= min(rank[d(x*(y*z))], rank[d(y)])
    """
    for x in range(n):
        dx = d[x]
        for y in range(n):
            ry = rank[y] if kind == PLAIN else rank[d[y]]
            for z in range(n):
                yz = t[y * n + z]
                xz = t[x * n + z]
                if kind == PLAIN:
                    lhs = rank[xz]
                    p = t[x * n + yz]
                elif kind == LEFT:
                    lhs = rank[d[xz]]
                    p = t[dx * n + yz]
                elif kind == RIGHT:
                    lhs = rank[d[xz]]
                    p = t[x * n + d[yz]]
                else:
                    lhs = rank[d[xz]]
                    p = d[t[x * n + yz]]
                rp = rank[p]
                if lhs < (rp if rp < ry else ry):
                    return (x, y, z)
    return None


def search_tables(n):
    """All flat tables on ``{0..n-1}`` satisfying the four KU axioms.

    Row 0 is the identity, column 0 and the diagonal are zero; the remaining
    cells are filled in row-major order by backtracking, abandoning a branch
    as soon as a fully resolvable KU1 or KU4 instance fails.
    """
    t = [-1] * (n * n)
    for x in range(n):
        t[x] = x
        t[x * n] = 0
        t[x * n + x] = 0
    free = [x * n + y for x in range(1, n) for y in range(1, n) if x != y]
    out = []

    def consistent():
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
                    f = t[xy * n + e]
                    if f > 0:
                        return False
        return True

    def fill(k):
        if k == len(free):
            if ku_witnesses(t, n) == (None, None, None, None):
                out.append(tuple(t))
            return
        cell = free[k]
        for v in range(n):
            t[cell] = v
            if consistent():
                fill(k + 1)
        t[cell] = -1

    fill(0)
    return out

"""Independent brute-force oracles.

Written directly from the definitions with nested dict/list lookups and
``Fraction`` comparisons; nothing here imports the package's checkers or
kernels, so agreement between the two is meaningful.
"""

from fractions import Fraction
from itertools import permutations, product

A5 = [
    [0, 1, 2, 3, 4],
    [0, 0, 2, 2, 4],
    [0, 0, 0, 1, 4],
    [0, 0, 0, 0, 4],
    [0, 1, 1, 1, 0],
]
B5 = [
    [0, 1, 2, 3, 4],
    [0, 0, 2, 3, 3],
    [0, 1, 0, 1, 4],
    [0, 0, 0, 0, 3],
    [0, 0, 0, 0, 0],
]
EXAMPLE_D = [0, 0, 0, 0, 4]
EXAMPLE_MU = [Fraction(1), Fraction(1, 2), Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)]


def star(t, x, y):
    return t[x][y]


def ku_axiom_witnesses(t):
    n = len(t)
    els = list(range(n))
    ku1 = [(x, y, z) for x in els for y in els for z in els
           if star(t, star(t, x, y), star(t, star(t, y, z), star(t, x, z))) != 0]
    ku2 = [(x,) for x in els if star(t, x, 0) != 0]
    ku3 = [(x,) for x in els if star(t, 0, x) != x]
    ku4 = [(x, y) for x in els for y in els if x != y and star(t, x, y) == 0 and star(t, y, x) == 0]
    return tuple(min(w) if w else None for w in (ku1, ku2, ku3, ku4))


def is_ku(t):
    return ku_axiom_witnesses(t) == (None, None, None, None)


def meet(t, x, y):
    return star(t, star(t, x, y), y)


def is_lr(t, d):
    n = len(t)
    return all(d[star(t, x, y)] == meet(t, star(t, d[x], y), star(t, x, d[y]))
               for x in range(n) for y in range(n))


def is_rl(t, d):
    n = len(t)
    return all(d[star(t, x, y)] == meet(t, star(t, x, d[y]), star(t, d[x], y))
               for x in range(n) for y in range(n))


def derivations(t):
    n = len(t)
    return [list(d) for d in product(range(n), repeat=n) if is_lr(t, d) and is_rl(t, d)]


def crisp_ok(t, d, s, kind):
    """kind: plain, left, right, two-sided; s is a Python set."""
    n = len(t)
    if 0 not in s:
        return False
    for x, y, z in product(range(n), repeat=3):
        if kind == "plain":
            prem = star(t, x, star(t, y, z)) in s and y in s
            concl = star(t, x, z) in s
        else:
            if kind == "left":
                p = star(t, d[x], star(t, y, z))
            elif kind == "right":
                p = star(t, x, d[star(t, y, z)])
            else:
                p = d[star(t, x, star(t, y, z))]
            prem = p in s and d[y] in s
            concl = d[star(t, x, z)] in s
        if prem and not concl:
            return False
    return True


def fuzzy_ok(t, d, mu, kind):
    n = len(t)
    if any(mu[0] < mu[x] for x in range(n)):
        return False
    for x, y, z in product(range(n), repeat=3):
        if kind == "plain":
            lhs, rhs = mu[star(t, x, z)], min(mu[star(t, x, star(t, y, z))], mu[y])
        else:
            if kind == "left":
                p = star(t, d[x], star(t, y, z))
            elif kind == "right":
                p = star(t, x, d[star(t, y, z)])
            else:
                p = d[star(t, x, star(t, y, z))]
            lhs, rhs = mu[d[star(t, x, z)]], min(mu[p], mu[d[y]])
        if lhs < rhs:
            return False
    return True


def fuzzy_subalgebra_ok(t, mu):
    n = len(t)
    return all(mu[0] >= mu[x] for x in range(n)) and all(
        mu[x] >= min(mu[star(t, x, y)], mu[y]) for x in range(n) for y in range(n))


def relabel(t, sigma):
    """Table of the isomorphic copy where element x is renamed sigma[x]."""
    n = len(t)
    out = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            out[sigma[x]][sigma[y]] = sigma[t[x][y]]
    return tuple(tuple(r) for r in out)


def canonical(t):
    n = len(t)
    return min(relabel(t, (0,) + p) for p in permutations(range(1, n)))


def unpruned_catalog(n):
    """All n^(n*n) tables scanned; KU-algebras up to relabelings fixing 0."""
    found = set()
    for cells in product(range(n), repeat=n * n):
        t = [list(cells[i * n:(i + 1) * n]) for i in range(n)]
        if is_ku(t):
            found.add(canonical(t))
    return sorted(found)


def homomorphisms(s, t):
    n, m = len(s), len(t)
    return [f for f in product(range(m), repeat=n)
            if all(f[s[x][y]] == t[f[x]][f[y]] for x in range(n) for y in range(n))]


def level_ideals_ok(t, d, mu):
    """Every nonempty {x : mu(d(x)) >= a} is a KU-ideal, a ranging over [0, 1].

    Level sets only change at composed grades, so those plus 0 suffice.
    """
    n = len(t)
    alphas = {mu[d[x]] for x in range(n)} | {Fraction(0)}
    for a in alphas:
        u = {x for x in range(n) if mu[d[x]] >= a}
        if u and not crisp_ok(t, None, u, "plain"):
            return False
    return True

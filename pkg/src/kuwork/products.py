"""Direct products of KU-algebras and Cartesian products of fuzzy sets.

A pair ``(i, j)`` of the product ``X x Y`` is encoded row-major as
``i * len(Y) + j``; reports always decode codes back into pairs.  The
derivation used on ``X x X`` is the componentwise map ``d x d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import FiniteAlgebra, check_ku_axioms
from .derivations import SelfMap
from .errors import KUError, SizeMismatch
from .fuzzy import FuzzySet, fuzzy_ideal_witness, grade
from .reports import PRECONDITION, Clause, TheoremReport, from_clauses, render_value

READINGS = ("compose", "predecorated")


@dataclass(frozen=True)
class ProductAlgebra:
    left: FiniteAlgebra
    right: FiniteAlgebra
    algebra: FiniteAlgebra

    def encode(self, i: int, j: int) -> int:
        return i * self.right.n + j

    def decode(self, code: int) -> tuple[int, int]:
        return divmod(code, self.right.n)

    def decode_witness(self, w: tuple | None) -> tuple | None:
        if w is None:
            return None
        return tuple(self.decode(c) for c in w)


def product_algebra(a: FiniteAlgebra, b: FiniteAlgebra, *, require_ku: bool = True) -> ProductAlgebra:
    """``(x, y) * (u, v) = (x*u, y*v)``.

    With ``require_ku`` both factors must be KU-algebras, and the product is
    checked as well rather than assumed to be one.
    """
    if require_ku:
        for side, f in (("left", a), ("right", b)):
            report = check_ku_axioms(f)
            if not report.ok:
                raise KUError(f"{side} factor is not a KU-algebra:\n{report.render()}")
    nb = b.n
    table = tuple(
        tuple(a.table[i][u] * nb + b.table[j][v] for u in range(a.n) for v in range(nb))
        for i in range(a.n)
        for j in range(nb)
    )
    pa = ProductAlgebra(a, b, FiniteAlgebra(table))
    if require_ku and not check_ku_axioms(pa.algebra).ok:
        raise KUError("product of KU-algebras failed the KU axioms")
    return pa


def product_map(d1: SelfMap, d2: SelfMap) -> SelfMap:
    """Componentwise ``(x, y) -> (d1(x), d2(y))``."""
    return SelfMap(tuple(d1.image[i] * d2.n + d2.image[j] for i in range(d1.n) for j in range(d2.n)))


def cartesian_product_fuzzy(m: FuzzySet, b: FuzzySet) -> FuzzySet:
    """``(x, y) -> min(m(x), b(y))`` in pair-code order."""
    return FuzzySet(tuple(min(gm, gb) for gm in m.grades for gb in b.grades))


def strongest_fuzzy_relation(b: FuzzySet) -> FuzzySet:
    """``(x, y) -> min(b(x), b(y))`` on the square of ``b``'s carrier."""
    return cartesian_product_fuzzy(b, b)


def relation_witness(rel: FuzzySet, b: FuzzySet, d: SelfMap | None = None) -> tuple | None:
    """First pair with ``rel(x, y) > min(b(x), b(y))``.

    With ``d`` the bound is ``rel(d(x), d(y)) <= min(b(d(x)), b(d(y)))``.
    """
    n = b.n
    if rel.n != n * n:
        raise SizeMismatch(f"relation on {rel.n} pairs, expected {n * n}")
    if d is not None and d.n != n:
        raise SizeMismatch(f"map on {d.n} elements, fuzzy set on {n}")
    img = d.image if d is not None else range(n)
    for x in range(n):
        for y in range(n):
            u, v = img[x], img[y]
            if rel.grades[u * n + v] > min(b.grades[u], b.grades[v]):
                return (x, y)
    return None


def is_fuzzy_relation_on(rel: FuzzySet, b: FuzzySet, d: SelfMap | None = None) -> bool:
    return relation_witness(rel, b, d) is None


def _level(m: FuzzySet, t: Fraction) -> set[int]:
    return {x for x, g in enumerate(m.grades) if g >= t}


def check_level_product(m: FuzzySet, b: FuzzySet, t) -> TheoremReport:
    """Level sets of Cartesian products are Cartesian products of level sets.

    Checks ``(m x b)_t = m_t x b_t`` and ``(strongest(b))_t = b_t x b_t``;
    a witness is the first pair whose membership differs.
    """
    t = grade(t)

    def mismatch(prod: FuzzySet, f: FuzzySet, g: FuzzySet):
        lhs, fl, gl = _level(prod, t), _level(f, t), _level(g, t)
        for i in range(f.n):
            for j in range(g.n):
                if ((i * g.n + j) in lhs) != (i in fl and j in gl):
                    return (i, j)
        return None

    clauses = (
        Clause("cartesian", mismatch(cartesian_product_fuzzy(m, b), m, b)),
        Clause("strongest", mismatch(strongest_fuzzy_relation(b), b, b)),
    )
    return from_clauses("level-product", f"mu={m} beta={b} t={t}", clauses)


def _square(a: FiniteAlgebra, d: SelfMap) -> tuple[ProductAlgebra, SelfMap]:
    return product_algebra(a, a, require_ku=False), product_map(d, d)


def product_fuzzy(m: FuzzySet, b: FuzzySet, d: SelfMap, reading: str) -> FuzzySet:
    """Cartesian product under one of the two readings of its derivation form.

    ``compose`` keeps ``min(m(x), b(y))`` and lets the checker apply ``d x d``;
    ``predecorated`` stores ``min(m(d(x)), b(d(y)))`` before the checker
    applies ``d x d`` again.  They differ only when ``d`` is not idempotent.
    """
    if reading == "compose":
        return cartesian_product_fuzzy(m, b)
    if reading == "predecorated":
        return cartesian_product_fuzzy(FuzzySet(tuple(m.grades[v] for v in d.image)),
                                       FuzzySet(tuple(b.grades[v] for v in d.image)))
    raise KUError(f"unknown reading {reading!r}; expected one of {READINGS}")


def _match(a: FiniteAlgebra, d: SelfMap, *fs: FuzzySet) -> None:
    if d.n != a.n or any(f.n != a.n for f in fs):
        raise SizeMismatch("algebra, map and fuzzy sets must share one carrier")


def check_product_ideal(a: FiniteAlgebra, d: SelfMap, m: FuzzySet, b: FuzzySet, reading: str = "compose") -> TheoremReport:
    """Cartesian product of two fuzzy left derivation KU-ideals is one on ``X x X``.

    The verdict follows ``reading``; the other reading is evaluated too and
    recorded in the details, flagged when the two disagree.
    """
    _match(a, d, m, b)
    instance = f"n={a.n} d={d} mu={m} beta={b}"
    for name, f in (("mu", m), ("beta", b)):
        if fuzzy_ideal_witness(a, f, d, "left") is not None:
            return TheoremReport("product-left", instance, PRECONDITION, precondition=f"{name} is not a left ideal")
    pa, dd = _square(a, d)
    verdicts = {r: pa.decode_witness(fuzzy_ideal_witness(pa.algebra, product_fuzzy(m, b, d, r), dd, "left"))
                for r in READINGS}
    other = next(r for r in READINGS if r != reading)
    details = [(f"{other} reading", "ok" if verdicts[other] is None else "FAIL " + render_value(verdicts[other]))]
    if (verdicts[other] is None) != (verdicts[reading] is None):
        details.append(("readings", "diverge"))
    return from_clauses("product-left", instance, (Clause(reading, verdicts[reading]),), details)


def check_product_factors(a: FiniteAlgebra, d: SelfMap, m: FuzzySet, b: FuzzySet) -> TheoremReport:
    """Consequences for the factors when ``m x b`` is a fuzzy left derivation KU-ideal.

    Writing ``M(x) = m(d(x))`` and ``B(x) = b(d(x))``, each "for all x" is
    quantified over the whole disjunct:

    i    (all x: M(x) <= M(0)) or (all x: B(x) <= B(0))
    ii   if all x: M(x) <= M(0), then (all x: M(x) <= B(0)) or (all x: B(x) <= B(0))
    iii  if all x: B(x) <= B(0), then (all x: M(x) <= M(0)) or (all x: B(x) <= M(0))
    iv   m or b is a fuzzy left derivation KU-ideal

    A failing clause's witness lists, per disjunct, the first ``x`` breaking it.
    """
    _match(a, d, m, b)
    instance = f"n={a.n} d={d} mu={m} beta={b}"
    pa, dd = _square(a, d)
    pre = fuzzy_ideal_witness(pa.algebra, cartesian_product_fuzzy(m, b), dd, "left")
    if pre is not None:
        return TheoremReport("product-factors", instance, PRECONDITION,
                             precondition="mu x beta is not a left ideal",
                             details=(("product witness", render_value(pa.decode_witness(pre))),))
    mg = [m.grades[d.image[x]] for x in a.elements()]
    bg = [b.grades[d.image[x]] for x in a.elements()]

    def breaker(values, bound):
        return next((x for x, v in enumerate(values) if v > bound), None)

    m_top, b_top = breaker(mg, mg[0]), breaker(bg, bg[0])
    clauses = [Clause("i", None if m_top is None or b_top is None else (m_top, b_top))]
    if m_top is None:
        w1, w2 = breaker(mg, bg[0]), b_top
        clauses.append(Clause("ii", None if w1 is None or w2 is None else (w1, w2)))
    else:
        clauses.append(Clause("ii", None, "vacuous"))
    if b_top is None:
        w1, w2 = m_top, breaker(bg, mg[0])
        clauses.append(Clause("iii", None if w1 is None or w2 is None else (w1, w2)))
    else:
        clauses.append(Clause("iii", None, "vacuous"))
    wm, wb = fuzzy_ideal_witness(a, m, d, "left"), fuzzy_ideal_witness(a, b, d, "left")
    clauses.append(Clause("iv", None if wm is None or wb is None else (wm, wb)))
    details = (
        ("mu left ideal", "yes" if wm is None else "no"),
        ("beta left ideal", "yes" if wb is None else "no"),
    )
    return from_clauses("product-factors", instance, clauses, details)


def check_strongest_relation(a: FiniteAlgebra, d: SelfMap, b: FuzzySet) -> TheoremReport:
    """``b`` is a fuzzy left derivation KU-ideal iff its strongest relation is one on ``X x X``.

    When the relation side holds, ``b(d(x)) <= b(d(0)) = b(0)`` is checked as
    a consequence (clauses ``bounded`` and ``d0``).
    """
    _match(a, d, b)
    pa, dd = _square(a, d)
    base = fuzzy_ideal_witness(a, b, d, "left")
    rel = pa.decode_witness(fuzzy_ideal_witness(pa.algebra, strongest_fuzzy_relation(b), dd, "left"))
    g = b.grades
    clauses = [
        Clause("forward", rel if base is None else None),
        Clause("backward", base if rel is None else None),
    ]
    if rel is None:
        top = g[d.image[0]]
        clauses.append(Clause("bounded", next(((x,) for x in a.elements() if g[d.image[x]] > top), None)))
        clauses.append(Clause("d0", None if top == g[0] else (d.image[0],)))
    details = (("beta left ideal", "yes" if base is None else "no"),
               ("relation left ideal", "yes" if rel is None else "no"))
    return from_clauses("strongest-left", f"n={a.n} d={d} beta={b}", clauses, details)

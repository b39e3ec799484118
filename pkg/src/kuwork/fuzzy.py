"""Exact-rational fuzzy sets and the fuzzy (derivation) KU-ideal checkers.

Grades are :class:`fractions.Fraction` values in ``[0, 1]``; floats are
refused so that every comparison is exact.  The triple scans hand the
kernels an order-preserving integer ranking of the grades, which is all a
min/>= condition can observe.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from numbers import Rational
from typing import Iterable, Iterator, Sequence

from . import kernels as _kern
from .algebra import FiniteAlgebra, Subset, is_ku_ideal, ku_ideal_witness
from .derivations import SIDES, SelfMap
from .errors import KUError, SizeMismatch
from .reports import PRECONDITION, Clause, TheoremReport, from_clauses, render_value

Rational01 = Fraction
_GRADE_TEXT = re.compile(r"\d+(/\d+)?")


def grade(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact grade in [0, 1]."""
    if isinstance(value, bool) or isinstance(value, float):
        raise KUError(f"grade {value!r} must be exact (int, Fraction or 'p/q')")
    if isinstance(value, str):
        if not _GRADE_TEXT.fullmatch(value.strip()):
            raise KUError(f"cannot read grade {value!r}; write an integer or 'p/q'")
        try:
            value = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise KUError(f"cannot read grade {value!r}") from exc
    elif isinstance(value, Rational):
        value = Fraction(value)
    else:
        raise KUError(f"grade {value!r} must be exact (int, Fraction or 'p/q')")
    if not 0 <= value <= 1:
        raise KUError(f"grade {value} is outside [0, 1]")
    return value


@dataclass(frozen=True)
class FuzzySet:
    grades: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "grades", tuple(grade(g) for g in self.grades))

    @classmethod
    def constant(cls, n: int, c) -> FuzzySet:
        return cls((grade(c),) * n)

    @property
    def n(self) -> int:
        return len(self.grades)

    def __getitem__(self, x: int) -> Fraction:
        return self.grades[x]

    def __str__(self) -> str:
        return "[" + ",".join(str(g) for g in self.grades) + "]"


def ranks(values: Sequence[Fraction]) -> list[int]:
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


def _match(a: FiniteAlgebra, m: FuzzySet, d: SelfMap | None = None) -> None:
    if m.n != a.n:
        raise SizeMismatch(f"fuzzy set on {m.n} elements, algebra has {a.n}")
    if d is not None and d.n != a.n:
        raise SizeMismatch(f"map on {d.n} elements, algebra has {a.n}")


def is_fuzzy_subalgebra(a: FiniteAlgebra, m: FuzzySet) -> bool:
    _match(a, m)
    g, t = m.grades, a.table
    if any(g[0] < g[x] for x in a.elements()):
        return False
    return all(g[x] >= min(g[t[x][y]], g[y]) for x, y in product(a.elements(), repeat=2))


def fuzzy_ideal_witness(a: FiniteAlgebra, m: FuzzySet, d: SelfMap | None = None, side: str = "plain"):
    """``(x,)`` when ``m(0) < m(x)``, else the first triple breaking the min-inequality.

    ``side`` selects the second condition (``d`` is ignored for ``plain``):

    plain      m(x*z)    >= min(m(x*(y*z)),    m(y))
    left       m(d(x*z)) >= min(m(d(x)*(y*z)), m(d(y)))
    right      m(d(x*z)) >= min(m(x*d(y*z)),   m(d(y)))
    two-sided  m(d(x*z)) >= min(m(d(x*(y*z))), m(d(y)))
    """
    if side not in SIDES:
        raise KUError(f"unknown side {side!r}")
    if side == "plain":
        d = SelfMap.identity(a.n)
    elif d is None:
        raise KUError(f"side {side!r} needs a self-map")
    _match(a, m, d)
    g = m.grades
    for x in a.elements():
        if g[0] < g[x]:
            return (x,)
    return _kern.ideal_witness(a.flat, a.n, d.image, ranks(g), SIDES[side])


def is_fuzzy_ku_ideal(a: FiniteAlgebra, m: FuzzySet) -> bool:
    return fuzzy_ideal_witness(a, m) is None


def is_fuzzy_left_deriv_ku_ideal(a: FiniteAlgebra, d: SelfMap, m: FuzzySet) -> bool:
    return fuzzy_ideal_witness(a, m, d, "left") is None


def is_fuzzy_right_deriv_ku_ideal(a: FiniteAlgebra, d: SelfMap, m: FuzzySet) -> bool:
    return fuzzy_ideal_witness(a, m, d, "right") is None


def is_fuzzy_deriv_ku_ideal(a: FiniteAlgebra, d: SelfMap, m: FuzzySet) -> bool:
    return fuzzy_ideal_witness(a, m, d, "two-sided") is None


def level_set(a: FiniteAlgebra, d: SelfMap, m: FuzzySet, alpha) -> Subset:
    """``{x : m(d(x)) >= alpha}``."""
    _match(a, m, d)
    alpha = grade(alpha)
    return Subset(tuple(m.grades[d.image[x]] >= alpha for x in a.elements()))


def level_thresholds(a: FiniteAlgebra, d: SelfMap, m: FuzzySet) -> list[Fraction]:
    """Thresholds at which the composed level sets can change.

    Every composed grade, 0, and one value strictly above the largest grade
    when that grade is below 1.
    """
    spectrum = {m.grades[d.image[x]] for x in a.elements()} | {Fraction(0)}
    top = max(spectrum)
    if top < 1:
        spectrum.add((top + 1) / 2)
    return sorted(spectrum)


def check_level_characterization(a: FiniteAlgebra, d: SelfMap, m: FuzzySet, side: str = "left") -> TheoremReport:
    """Compare the fuzzy checker with "every nonempty composed level set is a KU-ideal".

    ``forward`` fails with ``(alpha, x, y, z)`` when the fuzzy condition holds
    but a level set is not a KU-ideal; ``backward`` fails with the fuzzy
    checker's own witness when every level set is a KU-ideal but the fuzzy
    condition does not hold.
    """
    if side not in ("left", "right"):
        raise KUError(f"side must be left or right, not {side!r}")
    _match(a, m, d)
    fuzzy_w = fuzzy_ideal_witness(a, m, d, side)
    level_w = None
    for alpha in level_thresholds(a, d, m):
        u = level_set(a, d, m, alpha)
        if len(u):
            w = ku_ideal_witness(a, u)
            if w is not None:
                level_w = (alpha,) + w
                break
    fuzzy_ok, levels_ok = fuzzy_w is None, level_w is None
    clauses = (
        Clause("forward", level_w if fuzzy_ok else None),
        Clause("backward", fuzzy_w if levels_ok else None),
    )
    details = (("fuzzy", "holds" if fuzzy_ok else "fails " + render_value(fuzzy_w)),
               ("levels", "all KU-ideals" if levels_ok else "fails " + render_value(level_w)))
    return from_clauses(f"level-{side}", f"n={a.n} d={d} mu={m}", clauses, details)


def intersect(ms: Sequence[FuzzySet]) -> FuzzySet:
    """Pointwise minimum."""
    ms = list(ms)
    if not ms:
        raise KUError("cannot intersect an empty family")
    n = ms[0].n
    if any(m.n != n for m in ms):
        raise SizeMismatch("fuzzy sets of different sizes")
    return FuzzySet(tuple(min(column) for column in zip(*(m.grades for m in ms))))


def check_intersection(a: FiniteAlgebra, d: SelfMap, ms: Sequence[FuzzySet], side: str = "left") -> TheoremReport:
    """The meet of fuzzy left (right) derivation KU-ideals is one again."""
    theorem = f"meet-{side}"
    instance = f"n={a.n} d={d} family=" + ";".join(map(str, ms))
    bad = [i for i, m in enumerate(ms) if fuzzy_ideal_witness(a, m, d, side) is not None]
    if bad:
        return TheoremReport(theorem, instance, PRECONDITION, precondition=f"member {bad[0]} is not a {side} ideal")
    return from_clauses(theorem, instance, (Clause("meet", fuzzy_ideal_witness(a, intersect(ms), d, side)),))


def check_left_ideal_lemmas(a: FiniteAlgebra, d: SelfMap, m: FuzzySet) -> TheoremReport:
    """Grade bounds that a fuzzy left derivation KU-ideal is claimed to satisfy.

    ``xy<=dz``: when ``x*y <= d(z)``, ``m(d(y)) >= min(m(d(x)), m(z))``.  The
    same bound with ``m(d(z))`` in place of ``m(z)`` is evaluated too and
    shown in the details without affecting the verdict.
    ``x<=dy``: when ``x <= d(y)``, ``m(d(x)) >= m(d(y))``.
    ``dx*(x*y)``: ``m(d(x)*(x*y)) >= m(d(y))``.
    """
    _match(a, m, d)
    t, g, img, r = a.table, m.grades, d.image, a.elements()

    def first(cells):
        return next(iter(cells), None)

    below = [(x, y, z) for x, y, z in product(r, r, r) if t[img[z]][t[x][y]] == 0]
    verbatim = first((x, y, z) for x, y, z in below if g[img[y]] < min(g[img[x]], g[z]))
    variant = first((x, y, z) for x, y, z in below if g[img[y]] < min(g[img[x]], g[img[z]]))
    clauses = (
        Clause("xy<=dz", verbatim),
        Clause("x<=dy", first((x, y) for x, y in product(r, r) if t[img[y]][x] == 0 and g[img[x]] < g[img[y]])),
        Clause("dx*(x*y)", first((x, y) for x, y in product(r, r) if g[t[img[x]][t[x][y]]] < g[img[y]])),
    )
    details = (("xy<=dz with m(d(z))", "ok" if variant is None else "FAIL " + render_value(variant)),)
    instance = f"n={a.n} d={d} mu={m}"
    pre = fuzzy_ideal_witness(a, m, d, "left")
    if pre is not None:
        return TheoremReport("lemmas-left", instance, PRECONDITION, clauses, "not a fuzzy left derivation KU-ideal", details)
    return from_clauses("lemmas-left", instance, clauses, details)


def indicator_fuzzy(a: FiniteAlgebra, s: Subset, t) -> FuzzySet:
    """Grade ``t`` on the KU-ideal ``s`` and 0 elsewhere, for ``0 < t < 1``."""
    t = grade(t)
    if not 0 < t < 1:
        raise KUError(f"t = {t} must lie strictly between 0 and 1")
    if s.n != a.n:
        raise SizeMismatch(f"subset over {s.n} elements, algebra has {a.n}")
    if not is_ku_ideal(a, s):
        raise KUError(f"{s} is not a KU-ideal")
    return FuzzySet(tuple(t if x in s else Fraction(0) for x in a.elements()))


def check_indicator(a: FiniteAlgebra, s: Subset, t, d: SelfMap) -> TheoremReport:
    """Build the indicator of ``s`` at ``t`` and report, not assume, its properties under ``d``."""
    m = indicator_fuzzy(a, s, t)
    u = level_set(a, d, m, t)
    diff = tuple(x for x in a.elements() if (x in u) != (x in s))
    clauses = (
        Clause("level set equals ideal", diff or None),
        Clause("left ideal", fuzzy_ideal_witness(a, m, d, "left")),
    )
    return from_clauses("indicator", f"n={a.n} ideal={s} t={grade(t)} d={d}", clauses)


def fuzzy_sets_over(n: int, grid: Iterable) -> Iterator[FuzzySet]:
    """Every fuzzy set on ``n`` elements with grades drawn from ``grid``."""
    values = sorted({grade(v) for v in grid})
    for grades in product(values, repeat=n):
        yield FuzzySet(grades)

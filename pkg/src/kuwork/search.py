"""Exhaustive KU-algebra catalog and the theorem sweep harness."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from . import kernels
from .algebra import FiniteAlgebra, check_ku_axioms, verify_identities
from .derivations import SelfMap, check_regularity, classify, enumerate_derivations, verify_derivation_properties
from .errors import CapExceeded, KUError
from .fuzzy import (
    check_intersection,
    check_left_ideal_lemmas,
    check_level_characterization,
    fuzzy_ideal_witness,
    fuzzy_sets_over,
    grade,
)
from .homomorphisms import (
    check_image_transport,
    check_preimage_transport,
    compatibility_witness,
    enumerate_homomorphisms,
)
from .products import (
    check_level_product,
    check_product_factors,
    check_product_ideal,
    check_strongest_relation,
    product_algebra,
    product_map,
)
from .reports import PRECONDITION, Clause, TheoremReport, from_clauses

CATALOG_CAP = 4
PRODUCT_LIMIT = 16
DEFAULT_GRID = (Fraction(0), Fraction(1, 3), Fraction(2, 3), Fraction(1))

SUITES = (
    "identities",
    "regularity",
    "derivation-props",
    "level-left",
    "level-right",
    "meet-left",
    "meet-right",
    "lemmas-left",
    "preimage-left",
    "preimage-right",
    "image-left",
    "image-right",
    "product-axioms",
    "derivation-square",
    "level-product",
    "product-left",
    "product-factors",
    "strongest-left",
)


@dataclass(frozen=True)
class CatalogEntry:
    algebra: FiniteAlgebra
    derivations: tuple[SelfMap, ...]
    index: int


def canonical_form(a: FiniteAlgebra) -> FiniteAlgebra:
    """Lexicographically least table among relabelings that fix 0."""
    n, t = a.n, a.table
    best = None
    for perm in permutations(range(1, n)):
        new = (0,) + perm
        old = [0] * n
        for o, v in enumerate(new):
            old[v] = o
        flat = tuple(new[t[old[i]][old[j]]] for i in range(n) for j in range(n))
        if best is None or flat < best:
            best = flat
    return FiniteAlgebra.from_flat(best, n)


@lru_cache(maxsize=None)
def _catalog(n: int) -> tuple[CatalogEntry, ...]:
    forms = sorted({canonical_form(FiniteAlgebra.from_flat(t, n)).table for t in kernels.search_tables(n)})
    entries = []
    for i, table in enumerate(forms):
        a = FiniteAlgebra(table)
        entries.append(CatalogEntry(a, tuple(enumerate_derivations(a, "both", override=True)), i))
    return tuple(entries)


def enumerate_ku_algebras(n: int, *, cap: int = CATALOG_CAP, override: bool = False) -> list[CatalogEntry]:
    """Every KU-algebra on ``{0..n-1}`` up to isomorphism fixing 0, canonical and sorted."""
    if n < 1:
        raise KUError("size must be at least 1")
    if n > cap and not override:
        raise CapExceeded(f"n = {n} exceeds the catalog cap {cap}; pass override=True")
    return list(_catalog(n))


def catalog_upto(max_n: int) -> list[tuple[int, CatalogEntry]]:
    return [(n, e) for n in range(1, max_n + 1) for e in _catalog(n)]


class SweepResult(list):
    """Reports in canonical order, plus counts of instances filtered by preconditions."""

    def __init__(self, reports=(), filtered=None):
        super().__init__(reports)
        self.filtered = Counter(filtered or {})

    @property
    def failures(self) -> list[TheoremReport]:
        return [r for r in self if r.failed]

    def records(self) -> str:
        lines = [r.record() for r in self]
        lines.extend(f"# filtered\t{key}\t{count}" for key, count in sorted(self.filtered.items()))
        return "\n".join(lines) + ("\n" if lines else "")


def _tag(n: int, e: CatalogEntry) -> str:
    return f"A{n}.{e.index}"


def _retag(report: TheoremReport, tag: str) -> TheoremReport:
    return TheoremReport(report.theorem, f"{tag} {report.instance}", report.verdict, report.clauses,
                         report.precondition, report.details)


def _unit_algebra(suite, n, idx, grid):
    e = _catalog(n)[idx]
    a, tag = e.algebra, _tag(n, e)
    reports, filtered = [], Counter()

    def emit(report):
        if report.verdict == PRECONDITION:
            filtered[f"{suite}: {report.precondition}"] += 1
        else:
            reports.append(_retag(report, tag))

    if suite == "identities":
        emit(verify_identities(a))
    elif suite == "product-axioms":
        for m in range(1, PRODUCT_LIMIT // n + 1):
            for other in _catalog(m) if m <= CATALOG_CAP else ():
                pa = product_algebra(a, other.algebra, require_ku=False)
                rep = check_ku_axioms(pa.algebra)
                clauses = [Clause(label, pa.decode_witness(w)) for label, w in rep.verdicts]
                emit(from_clauses("product-axioms", f"x {_tag(m, other)}", clauses))
    for d in e.derivations:
        if suite == "regularity":
            emit(check_regularity(a, d))
        elif suite == "derivation-props":
            emit(verify_derivation_properties(a, d))
        elif suite == "derivation-square":
            pa = product_algebra(a, a, require_ku=False)
            cls = classify(pa.algebra, product_map(d, d))
            emit(from_clauses("derivation-square", f"d={d}", (
                Clause("lr", pa.decode_witness(cls.lr_witness)),
                Clause("rl", pa.decode_witness(cls.rl_witness)),
            )))
        elif suite in ("level-left", "level-right"):
            for m in fuzzy_sets_over(a.n, grid):
                emit(check_level_characterization(a, d, m, suite.split("-")[1]))
        elif suite in ("meet-left", "meet-right"):
            side = suite.split("-")[1]
            good = [m for m in fuzzy_sets_over(a.n, grid) if fuzzy_ideal_witness(a, m, d, side) is None]
            for i, m1 in enumerate(good):
                for m2 in good[i:]:
                    emit(check_intersection(a, d, (m1, m2), side))
        elif suite == "lemmas-left":
            for m in fuzzy_sets_over(a.n, grid):
                emit(check_left_ideal_lemmas(a, d, m))
        elif suite == "product-left":
            sets = list(fuzzy_sets_over(a.n, grid))
            good = [m for m in sets if fuzzy_ideal_witness(a, m, d, "left") is None]
            filtered[f"{suite}: a factor is not a left ideal"] += len(sets) ** 2 - len(good) ** 2
            for m1, m2 in product(good, repeat=2):
                emit(check_product_ideal(a, d, m1, m2))
        elif suite == "product-factors":
            sets = list(fuzzy_sets_over(a.n, grid))
            for m1, m2 in product(sets, repeat=2):
                emit(check_product_factors(a, d, m1, m2))
        elif suite == "strongest-left":
            for b in fuzzy_sets_over(a.n, grid):
                emit(check_strongest_relation(a, d, b))
    return reports, filtered


def _unit_hom(suite, n_src, i_src, n_dst, i_dst, grid):
    """Every (f, d_src, d_dst, mu) instance is either reported or counted as filtered."""
    src, dst = _catalog(n_src)[i_src], _catalog(n_dst)[i_dst]
    tag = f"{_tag(n_src, src)}->{_tag(n_dst, dst)}"
    kind, side = suite.split("-")
    carrier = dst.algebra if kind == "preimage" else src.algebra
    sets = list(fuzzy_sets_over(carrier.n, grid))
    pairs = list(product(src.derivations, dst.derivations))
    reports, filtered = [], Counter()
    for f in enumerate_homomorphisms(src.algebra, dst.algebra):
        if not f.onto:
            filtered[f"{suite}: f is not onto"] += len(pairs) * len(sets)
            continue
        for d_src, d_dst in pairs:
            if compatibility_witness(f, d_src, d_dst) is not None:
                filtered[f"{suite}: incompatible derivations"] += len(sets)
                continue
            for m in sets:
                if kind == "preimage":
                    report = check_preimage_transport(f, m, d_src, d_dst, side)
                else:
                    report = check_image_transport(f, m, d_src, d_dst, side)
                if report.verdict == PRECONDITION:
                    filtered[f"{suite}: {report.precondition}"] += 1
                else:
                    reports.append(_retag(report, tag))
    return reports, filtered


def _run_unit(unit):
    kind, args = unit
    return (_unit_hom if kind == "hom" else _unit_algebra)(*args)


def _units(suite: str, max_n: int, grid):
    if suite == "level-product":
        return []
    if suite.startswith(("preimage", "image")):
        cat = catalog_upto(max_n)
        return [("hom", (suite, n1, e1.index, n2, e2.index, grid)) for (n1, e1), (n2, e2) in product(cat, cat)]
    return [("algebra", (suite, n, e.index, grid)) for n, e in catalog_upto(max_n)]


def _level_product_reports(max_n, grid):
    reports = []
    for n in range(1, max_n + 1):
        sets = list(fuzzy_sets_over(n, grid))
        for m, b in product(sets, repeat=2):
            for t in grid:
                reports.append(check_level_product(m, b, t))
    return reports


def sweep(suite, max_n: int, grid=DEFAULT_GRID, *, workers: int = 1, override: bool = False) -> SweepResult:
    """Run every requested checker over the catalog up to ``max_n``.

    Instances whose preconditions fail are not reported individually; they
    are counted in ``result.filtered`` by suite and reason.  Output order is
    canonical (suite order, then catalog order) for any ``workers``.
    """
    suite = [suite] if isinstance(suite, str) else list(suite)
    if not suite:
        raise KUError("the suite must name at least one theorem")
    unknown = [s for s in suite if s not in SUITES]
    if unknown:
        raise KUError(f"unknown theorem id(s): {', '.join(unknown)}; known: {', '.join(SUITES)}")
    if max_n < 1:
        raise KUError("size must be at least 1")
    grid = tuple(sorted({grade(g) for g in grid}))
    for n in range(1, max_n + 1):
        enumerate_ku_algebras(n, override=override)
    ordered = [s for s in SUITES if s in suite]
    units = [u for s in ordered for u in _units(s, max_n, grid)]
    if workers > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_unit, units))
    else:
        outcomes = [_run_unit(u) for u in units]
    result = SweepResult()
    for s in ordered:
        if s == "level-product":
            result.extend(_level_product_reports(max_n, grid))
        for unit, (reports, filtered) in zip(units, outcomes):
            if unit[1][0] == s:
                result.extend(reports)
                result.filtered.update(filtered)
    return result

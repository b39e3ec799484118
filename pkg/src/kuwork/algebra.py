"""Finite magmas with a zero constant, the KU axioms and crisp ideals.

The carrier is always ``{0, ..., n-1}`` and ``0`` is the distinguished
constant.  ``table[x][y]`` holds ``x * y``.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator

from . import kernels
from .errors import KUError, SizeMismatch
from .reports import PRECONDITION, Clause, TheoremReport, from_clauses, render_value

KU_AXIOMS = ("KU1", "KU2", "KU3", "KU4")


@dataclass(frozen=True)
class FiniteAlgebra:
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.table)
        n = len(rows)
        if n < 1:
            raise KUError("an algebra needs at least one element")
        for x, row in enumerate(rows):
            if len(row) != n:
                raise KUError(f"row {x} has {len(row)} entries, expected {n}")
            for y, v in enumerate(row):
                if not 0 <= v < n:
                    raise KUError(f"entry {x}*{y} = {v} is outside 0..{n - 1}")
        if self.names is not None and len(self.names) != n:
            raise KUError(f"{len(self.names)} element names for {n} elements")
        object.__setattr__(self, "table", rows)

    @classmethod
    def from_flat(cls, flat: Iterable[int], n: int) -> FiniteAlgebra:
        flat = list(flat)
        return cls(tuple(tuple(flat[x * n:(x + 1) * n]) for x in range(n)))

    @property
    def n(self) -> int:
        return len(self.table)

    @cached_property
    def flat(self) -> array:
        return array("i", (v for row in self.table for v in row))

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def elements(self) -> range:
        return range(self.n)

    def name(self, x: int) -> str:
        return self.names[x] if self.names else str(x)

    def check_element(self, x: int) -> int:
        if not 0 <= x < self.n:
            raise IndexError(f"element {x} is outside 0..{self.n - 1}")
        return x

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.table)


@dataclass(frozen=True)
class Subset:
    """Membership mask over the carrier of some algebra."""

    mask: tuple[bool, ...]

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> Subset:
        mask = [False] * n
        for x in members:
            if not 0 <= x < n:
                raise KUError(f"member {x} is outside 0..{n - 1}")
            mask[x] = True
        return cls(tuple(mask))

    @classmethod
    def full(cls, n: int) -> Subset:
        return cls((True,) * n)

    @classmethod
    def empty(cls, n: int) -> Subset:
        return cls((False,) * n)

    @property
    def n(self) -> int:
        return len(self.mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(x for x, m in enumerate(self.mask) if m)

    def __contains__(self, x: int) -> bool:
        return 0 <= x < len(self.mask) and self.mask[x]

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return sum(self.mask)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class AxiomReport:
    """Per-clause verdicts; a verdict is ``None`` (holds) or a violating tuple.

    ``stopped_at`` is only set by the loop replica: the clause and tuple at
    which its scan order first stopped.
    """

    verdicts: tuple[tuple[str, tuple | None], ...]
    stopped_at: tuple[str, tuple] | None = None
    loop: bool = False

    @property
    def ok(self) -> bool:
        if self.loop:
            return self.stopped_at is None
        return all(w is None for _, w in self.verdicts)

    def witness(self, label: str) -> tuple | None:
        return dict(self.verdicts)[label]

    def render(self) -> str:
        title = "loop algorithm" if self.loop else "KU axioms"
        lines = [f"{title}: {'pass' if self.ok else 'fail'}"]
        for label, w in self.verdicts:
            lines.append(f"  {label}: {'ok' if w is None else 'FAIL ' + render_value(w)}")
        if self.stopped_at is not None:
            lines.append(f"  stopped at {self.stopped_at[0]} {render_value(self.stopped_at[1])}")
        return "\n".join(lines)


def check_ku_axioms(a: FiniteAlgebra) -> AxiomReport:
    """Decide KU1-KU4, each failure carrying its lexicographically least witness."""
    return AxiomReport(tuple(zip(KU_AXIOMS, kernels.ku_witnesses(a.flat, a.n))))


def is_ku_algebra(a: FiniteAlgebra) -> bool:
    return check_ku_axioms(a).ok


def loop_algorithm_check(a: FiniteAlgebra) -> AxiomReport:
    """Replica of the three-nested-loop KU-algebra decision procedure.

    The loop tests ``x*x = 0``, then ``(y*x)*x = 0`` and then the
    KU1 instance for every ``(x, y, z)``, stopping at the first failure.  The
    literal ``(y*x)*x = 0`` test is not a KU axiom (with ``y = x`` it demands
    ``x = 0``), so this procedure rejects every algebra with more than one
    element.  Each clause is also scanned on its own, so the report shows
    every clause verdict and not only the one that stopped the loop.  The
    ``(y*x)*x`` witness is ``(x, y)`` in loop order.
    """
    n, t = a.n, a.table
    stopped = None
    for x in range(n):
        if t[x][x] != 0:
            stopped = ("x*x", (x,))
            break
        for y in range(n):
            if t[t[y][x]][x] != 0:
                stopped = ("(y*x)*x", (x, y))
                break
            for z in range(n):
                if t[t[x][y]][t[t[y][z]][t[x][z]]] != 0:
                    stopped = ("KU1", (x, y, z))
                    break
            if stopped:
                break
        if stopped:
            break
    diag = next(((x,) for x in range(n) if t[x][x] != 0), None)
    yxx = next(((x, y) for x, y in product(range(n), repeat=2) if t[t[y][x]][x] != 0), None)
    ku1 = check_ku_axioms(a).witness("KU1")
    return AxiomReport((("x*x", diag), ("(y*x)*x", yxx), ("KU1", ku1)), stopped, loop=True)


def loop_divergence(a: FiniteAlgebra) -> list[str]:
    """Lines describing where the loop replica departs from the axiom check.

    Empty when the two agree clause by clause.
    """
    axioms = check_ku_axioms(a)
    loop = loop_algorithm_check(a)
    lines = []
    if axioms.ok != loop.ok:
        lines.append(f"KU axioms {'accept' if axioms.ok else 'reject'}, "
                     f"loop algorithm {'accepts' if loop.ok else 'rejects'}")
    for label, w in loop.verdicts:
        if w is not None and label != "KU1":
            lines.append(f"loop clause {label} fails at {render_value(w)}; not a KU axiom")
    return lines


def induced_order(a: FiniteAlgebra, x: int, y: int) -> bool:
    """``x <= y`` iff ``y * x = 0``."""
    a.check_element(x)
    a.check_element(y)
    return a.table[y][x] == 0


def meet(a: FiniteAlgebra, x: int, y: int) -> int:
    """``(x * y) * y``."""
    a.check_element(x)
    a.check_element(y)
    return a.table[a.table[x][y]][y]


def _first(cells) -> tuple | None:
    return next(iter(cells), None)


def verify_identities(a: FiniteAlgebra) -> TheoremReport:
    """Scan the five listed consequences of the KU axioms (labels i, ii, iii, v, vi)."""
    t, r = a.table, range(a.n)
    clauses = (
        Clause("i", _first((z,) for z in r if t[z][z] != 0), "z*z=0"),
        Clause("ii", _first((x, z) for x, z in product(r, r) if t[z][t[x][z]] != 0), "z*(x*z)=0"),
        Clause(
            "iii",
            _first(
                (x, y, z)
                for x, y, z in product(r, r, r)
                if t[y][x] == 0 and t[t[x][z]][t[y][z]] != 0
            ),
            "x<=y => y*z<=x*z",
        ),
        Clause(
            "v",
            _first((x, y, z) for x, y, z in product(r, r, r) if t[z][t[y][x]] != t[y][t[z][x]]),
            "z*(y*x)=y*(z*x)",
        ),
        Clause("vi", _first((x, y) for x, y in product(r, r) if t[y][t[t[y][x]][x]] != 0), "y*((y*x)*x)=0"),
    )
    report = from_clauses("identities", f"n={a.n}", clauses)
    if not is_ku_algebra(a):
        return TheoremReport(report.theorem, report.instance, PRECONDITION, clauses, "not a KU-algebra")
    return report


def _size(a: FiniteAlgebra, s: Subset) -> None:
    if s.n != a.n:
        raise SizeMismatch(f"subset over {s.n} elements, algebra has {a.n}")


def subalgebra_witness(a: FiniteAlgebra, s: Subset) -> tuple[int, int] | None:
    _size(a, s)
    return _first((x, y) for x, y in product(s.members, repeat=2) if a.table[x][y] not in s)


def is_subalgebra(a: FiniteAlgebra, s: Subset) -> bool:
    _size(a, s)
    if not len(s):
        raise KUError("a subalgebra must be nonempty")
    return subalgebra_witness(a, s) is None


def ideal_witness(a: FiniteAlgebra, s: Subset) -> tuple | None:
    """``(0,)`` when 0 is missing, else the first ``(y, z)`` with ``y*z, y`` in ``s`` but ``z`` not."""
    _size(a, s)
    if 0 not in s:
        return (0,)
    return _first((y, z) for y, z in product(s.members, a.elements()) if a.table[y][z] in s and z not in s)


def is_ideal(a: FiniteAlgebra, s: Subset) -> bool:
    return ideal_witness(a, s) is None


def ku_ideal_witness(a: FiniteAlgebra, s: Subset) -> tuple | None:
    """``(0,)`` when 0 is missing, else the first failing ``(x, y, z)``."""
    _size(a, s)
    if 0 not in s:
        return (0,)
    identity = range(a.n)
    return kernels.ideal_witness(a.flat, a.n, identity, [int(m) for m in s.mask], kernels.PLAIN)


def is_ku_ideal(a: FiniteAlgebra, s: Subset) -> bool:
    return ku_ideal_witness(a, s) is None


def all_subsets(n: int) -> Iterator[Subset]:
    for bits in product((False, True), repeat=n):
        yield Subset(bits)

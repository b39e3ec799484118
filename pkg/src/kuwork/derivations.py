"""Self-maps, (l,r)/(r,l) derivations and crisp derivation KU-ideals."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from . import kernels as _kern
from .algebra import FiniteAlgebra, Subset, subalgebra_witness
from .errors import CapExceeded, KUError, SizeMismatch
from .reports import PRECONDITION, Clause, TheoremReport, from_clauses

DERIVATION_CAP = 6

SIDES = {"plain": _kern.PLAIN, "left": _kern.LEFT, "right": _kern.RIGHT, "two-sided": _kern.TWO_SIDED}


@dataclass(frozen=True)
class SelfMap:
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        for x, v in enumerate(image):
            if not 0 <= v < len(image):
                raise KUError(f"d({x}) = {v} is outside 0..{len(image) - 1}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> SelfMap:
        return cls(tuple(range(n)))

    @classmethod
    def zero(cls, n: int) -> SelfMap:
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.image)) + "]"


@dataclass(frozen=True)
class DerivationClass:
    lr_witness: tuple[int, int] | None
    rl_witness: tuple[int, int] | None
    is_regular: bool

    @property
    def is_lr(self) -> bool:
        return self.lr_witness is None

    @property
    def is_rl(self) -> bool:
        return self.rl_witness is None

    @property
    def is_two_sided(self) -> bool:
        return self.is_lr and self.is_rl

    def render(self) -> str:
        def flag(ok, w):
            return "yes" if ok else f"no, fails at {w}"

        return (
            f"(l,r)-derivation: {flag(self.is_lr, self.lr_witness)}\n"
            f"(r,l)-derivation: {flag(self.is_rl, self.rl_witness)}\n"
            f"regular: {'yes' if self.is_regular else 'no'}"
        )


def _match(a: FiniteAlgebra, d: SelfMap) -> None:
    if d.n != a.n:
        raise SizeMismatch(f"map on {d.n} elements, algebra has {a.n}")


def classify(a: FiniteAlgebra, d: SelfMap) -> DerivationClass:
    """Test ``d(x*y) = (d(x)*y) ^ (x*d(y))`` and the swapped identity separately.

    The two identities are independent, so both witnesses are reported.
    """
    _match(a, d)
    return DerivationClass(
        _kern.derivation_witness(a.flat, a.n, d.image, False),
        _kern.derivation_witness(a.flat, a.n, d.image, True),
        d.image[0] == 0,
    )


def _accepts(kind: str):
    if kind == "lr":
        return lambda c: c.is_lr
    if kind == "rl":
        return lambda c: c.is_rl
    if kind == "both":
        return lambda c: c.is_two_sided
    raise KUError(f"unknown derivation kind {kind!r}; expected lr, rl or both")


def enumerate_derivations(
    a: FiniteAlgebra, kind: str = "both", *, cap: int = DERIVATION_CAP, override: bool = False
) -> list[SelfMap]:
    """Every self-map of the requested kind, in lexicographic order of images."""
    accept = _accepts(kind)
    if a.n > cap and not override:
        raise CapExceeded(f"{a.n}^{a.n} self-maps exceed the cap n <= {cap}; pass override=True")
    found = []
    for image in product(range(a.n), repeat=a.n):
        d = SelfMap(image)
        if accept(classify(a, d)):
            found.append(d)
    return found


def fixed_set(a: FiniteAlgebra, d: SelfMap) -> Subset:
    _match(a, d)
    return Subset(tuple(d.image[x] == x for x in range(a.n)))


def kernel(a: FiniteAlgebra, d: SelfMap) -> Subset:
    """Preimage of 0."""
    _match(a, d)
    return Subset(tuple(v == 0 for v in d.image))


def _instance(a: FiniteAlgebra, d: SelfMap) -> str:
    return f"n={a.n} d={d}"


def check_regularity(a: FiniteAlgebra, d: SelfMap) -> TheoremReport:
    """A two-sided derivation fixes 0."""
    _match(a, d)
    clauses = (Clause("d(0)=0", None if d.image[0] == 0 else (d.image[0],)),)
    if not classify(a, d).is_two_sided:
        return TheoremReport("regularity", _instance(a, d), PRECONDITION, clauses, "not a two-sided derivation")
    return from_clauses("regularity", _instance(a, d), clauses)


def verify_derivation_properties(a: FiniteAlgebra, d: SelfMap) -> TheoremReport:
    """Order bounds of a two-sided derivation and closure of its kernel and fixed set.

    ``u <= v`` is read as ``v * u = 0``.
    """
    _match(a, d)
    t, r, img = a.table, range(a.n), d.image

    def first(cells):
        return next(iter(cells), None)

    clauses = (
        Clause("i", first((x,) for x in r if t[x][img[x]] != 0), "d(x)<=x"),
        Clause(
            "ii",
            first((x, y) for x, y in product(r, r) if t[t[img[x]][y]][img[t[x][y]]] != 0),
            "d(x*y)<=d(x)*y",
        ),
        Clause(
            "iii",
            first((x, y) for x, y in product(r, r) if t[t[x][img[y]]][img[t[x][y]]] != 0),
            "d(x*y)<=x*d(y)",
        ),
        Clause("v", first((x,) for x in r if img[t[x][img[x]]] != 0), "d(x*d(x))=0"),
        Clause("vi", subalgebra_witness(a, kernel(a, d)), "kernel is a subalgebra"),
        Clause("fix", subalgebra_witness(a, fixed_set(a, d)), "fixed set is a subalgebra"),
    )
    if not classify(a, d).is_two_sided:
        return TheoremReport(
            "derivation-props", _instance(a, d), PRECONDITION, clauses, "not a two-sided derivation"
        )
    return from_clauses("derivation-props", _instance(a, d), clauses)


def derivation_ideal_witness(a: FiniteAlgebra, d: SelfMap, s: Subset, side: str) -> tuple | None:
    """``(0,)`` if 0 is missing from ``s``, else the first triple breaking the closure.

    ``side`` is ``left`` (premise ``d(x)*(y*z)``), ``right`` (``x*d(y*z)``) or
    ``two-sided`` (``d(x*(y*z))``); each also needs ``d(y)`` in ``s`` and
    concludes ``d(x*z)`` in ``s``.
    """
    _match(a, d)
    if s.n != a.n:
        raise SizeMismatch(f"subset over {s.n} elements, algebra has {a.n}")
    if 0 not in s:
        return (0,)
    return _kern.ideal_witness(a.flat, a.n, d.image, [int(m) for m in s.mask], SIDES[side])


def is_left_derivation_ku_ideal(a: FiniteAlgebra, d: SelfMap, s: Subset) -> bool:
    return derivation_ideal_witness(a, d, s, "left") is None


def is_right_derivation_ku_ideal(a: FiniteAlgebra, d: SelfMap, s: Subset) -> bool:
    return derivation_ideal_witness(a, d, s, "right") is None


def is_derivation_ku_ideal(a: FiniteAlgebra, d: SelfMap, s: Subset) -> bool:
    return derivation_ideal_witness(a, d, s, "two-sided") is None


def maps_of(n: int) -> Iterable[SelfMap]:
    return (SelfMap(image) for image in product(range(n), repeat=n))

"""Homomorphisms between finite KU-algebras and fuzzy image/preimage transport."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import FiniteAlgebra
from .derivations import SelfMap
from .errors import CapExceeded, KUError, SizeMismatch
from .fuzzy import FuzzySet, fuzzy_ideal_witness
from .reports import PRECONDITION, Clause, TheoremReport, from_clauses

HOM_CAP = 6 ** 6
SUP_EXHAUSTIVE = 12


def _check_image(src: FiniteAlgebra, dst: FiniteAlgebra, image) -> tuple[int, ...]:
    image = tuple(int(v) for v in image)
    if len(image) != src.n:
        raise SizeMismatch(f"map has {len(image)} entries, source has {src.n} elements")
    for x, v in enumerate(image):
        if not 0 <= v < dst.n:
            raise KUError(f"f({x}) = {v} is outside the target 0..{dst.n - 1}")
    return image


def homomorphism_witness(src: FiniteAlgebra, dst: FiniteAlgebra, image) -> tuple[int, int] | None:
    """First pair with ``f(x*y) != f(x)*f(y)``."""
    f = _check_image(src, dst, image)
    s, t = src.table, dst.table
    for x, y in product(src.elements(), repeat=2):
        if f[s[x][y]] != t[f[x]][f[y]]:
            return (x, y)
    return None


def is_homomorphism(src: FiniteAlgebra, dst: FiniteAlgebra, image) -> bool:
    return homomorphism_witness(src, dst, image) is None


@dataclass(frozen=True)
class Homomorphism:
    source: FiniteAlgebra
    target: FiniteAlgebra
    image: tuple[int, ...]

    def __post_init__(self):
        image = _check_image(self.source, self.target, self.image)
        w = homomorphism_witness(self.source, self.target, image)
        if w is not None:
            raise KUError(f"not a homomorphism: f({w[0]}*{w[1]}) != f({w[0]})*f({w[1]})")
        object.__setattr__(self, "image", image)

    @property
    def onto(self) -> bool:
        return set(self.image) == set(self.target.elements())

    def __call__(self, x: int) -> int:
        return self.image[x]

    def fiber(self, y: int) -> tuple[int, ...]:
        return tuple(x for x, v in enumerate(self.image) if v == y)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.image)) + "]"


def enumerate_homomorphisms(
    src: FiniteAlgebra, dst: FiniteAlgebra, *, cap: int = HOM_CAP, override: bool = False
) -> list[Homomorphism]:
    """Every homomorphism ``src -> dst`` in lexicographic order of images."""
    if dst.n ** src.n > cap and not override:
        raise CapExceeded(f"{dst.n}^{src.n} maps exceed the cap {cap}; pass override=True")
    return [
        Homomorphism(src, dst, image)
        for image in product(dst.elements(), repeat=src.n)
        if homomorphism_witness(src, dst, image) is None
    ]


def preimage_fuzzy(f: Homomorphism, beta: FuzzySet) -> FuzzySet:
    """``x -> beta(f(x))``."""
    if beta.n != f.target.n:
        raise SizeMismatch(f"fuzzy set on {beta.n} elements, target has {f.target.n}")
    return FuzzySet(tuple(beta.grades[v] for v in f.image))


def image_fuzzy(f: Homomorphism, m: FuzzySet) -> FuzzySet:
    """Fiberwise maximum of ``m``; 0 over elements outside the range."""
    if m.n != f.source.n:
        raise SizeMismatch(f"fuzzy set on {m.n} elements, source has {f.source.n}")
    out = [Fraction(0)] * f.target.n
    hit = [False] * f.target.n
    for x, y in enumerate(f.image):
        if not hit[y] or m.grades[x] > out[y]:
            out[y] = m.grades[x]
            hit[y] = True
    return FuzzySet(tuple(out))


def has_sup_property(m: FuzzySet) -> tuple[bool, dict[tuple[int, ...], int]]:
    """Attaining element for the supremum over each subset.

    Finite sets always attain their maximum, so the verdict is True; the
    witnesses are exhaustive up to ``SUP_EXHAUSTIVE`` elements and a fixed
    pseudo-random sample of subsets beyond that.
    """
    n = m.n
    if n <= SUP_EXHAUSTIVE:
        masks = range(1, 2 ** n)
    else:
        rng = random.Random(0)
        masks = sorted({rng.randrange(1, 2 ** n) for _ in range(4096)})
    witnesses = {}
    for mask in masks:
        members = tuple(x for x in range(n) if mask >> x & 1)
        best = max(members, key=lambda x: (m.grades[x], -x))
        witnesses[members] = best
    holds = all(m.grades[w] == max(m.grades[x] for x in s) for s, w in witnesses.items())
    return holds, witnesses


def compatibility_witness(f: Homomorphism, d_src: SelfMap, d_dst: SelfMap) -> tuple[int] | None:
    """First ``x`` with ``f(d_src(x)) != d_dst(f(x))``."""
    if d_src.n != f.source.n or d_dst.n != f.target.n:
        raise SizeMismatch("derivations do not match the homomorphism's algebras")
    for x in f.source.elements():
        if f.image[d_src.image[x]] != d_dst.image[f.image[x]]:
            return (x,)
    return None


def _instance(f: Homomorphism, m: FuzzySet, d_src: SelfMap, d_dst: SelfMap) -> str:
    return f"{f.source.n}->{f.target.n} f={f} d={d_src}/{d_dst} mu={m}"


def check_preimage_transport(
    f: Homomorphism, beta: FuzzySet, d_src: SelfMap, d_dst: SelfMap, side: str = "left"
) -> TheoremReport:
    """Onto preimage of a fuzzy ``side`` derivation KU-ideal is one again.

    Preconditions, reported by name when they fail: ``f`` onto, ``beta`` an
    ideal of the target under ``d_dst``, and ``f . d_src = d_dst . f``.
    """
    theorem, instance = f"preimage-{side}", _instance(f, beta, d_src, d_dst)
    if not f.onto:
        return TheoremReport(theorem, instance, PRECONDITION, precondition="f is not onto")
    if fuzzy_ideal_witness(f.target, beta, d_dst, side) is not None:
        return TheoremReport(theorem, instance, PRECONDITION, precondition=f"beta is not a {side} ideal of the target")
    w = compatibility_witness(f, d_src, d_dst)
    if w is not None:
        return TheoremReport(theorem, instance, PRECONDITION, precondition=f"incompatible derivations at x={w[0]}")
    mu = preimage_fuzzy(f, beta)
    return from_clauses(theorem, instance, (Clause("preimage", fuzzy_ideal_witness(f.source, mu, d_src, side)),))


def check_image_transport(
    f: Homomorphism, m: FuzzySet, d_src: SelfMap, d_dst: SelfMap, side: str = "left"
) -> TheoremReport:
    """Homomorphic image of a fuzzy ``side`` derivation KU-ideal is one again.

    Preconditions: ``m`` an ideal of the source under ``d_src`` and
    ``f . d_src = d_dst . f``.  Ontoness is not required; it is recorded in
    the details together with the (always satisfied) sup property.
    """
    theorem, instance = f"image-{side}", _instance(f, m, d_src, d_dst)
    if fuzzy_ideal_witness(f.source, m, d_src, side) is not None:
        return TheoremReport(theorem, instance, PRECONDITION, precondition=f"mu is not a {side} ideal of the source")
    w = compatibility_witness(f, d_src, d_dst)
    if w is not None:
        return TheoremReport(theorem, instance, PRECONDITION, precondition=f"incompatible derivations at x={w[0]}")
    beta = image_fuzzy(f, m)
    details = (("onto", "yes" if f.onto else "no"), ("sup property", "yes" if has_sup_property(m)[0] else "no"))
    return from_clauses(theorem, instance, (Clause("image", fuzzy_ideal_witness(f.target, beta, d_dst, side)),), details)

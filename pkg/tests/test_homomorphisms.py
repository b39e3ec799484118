from fractions import Fraction

import pytest

from kuwork import (
    FuzzySet,
    Homomorphism,
    SelfMap,
    check_image_transport,
    check_preimage_transport,
    enumerate_homomorphisms,
    enumerate_ku_algebras,
    has_sup_property,
    image_fuzzy,
    is_homomorphism,
    preimage_fuzzy,
)
from kuwork.errors import CapExceeded, KUError, SizeMismatch
from kuwork.homomorphisms import compatibility_witness
from kuwork.reports import PASS, PRECONDITION

import oracles
from conftest import frac

HALF = Fraction(1, 2)


def test_identity_and_zero(a5):
    assert is_homomorphism(a5, a5, (0, 1, 2, 3, 4))
    assert Homomorphism(a5, a5, (0, 1, 2, 3, 4)).onto
    zero = Homomorphism(a5, a5, (0,) * 5)
    assert not zero.onto


def test_out_of_range_image(a5):
    with pytest.raises(KUError):
        is_homomorphism(a5, a5, (0, 1, 2, 3, 5))
    with pytest.raises(KUError):
        Homomorphism(a5, a5, (0, 1, 2, 4, 3))


def test_enumeration_matches_brute_force(a5, b5):
    got = [f.image for f in enumerate_homomorphisms(a5, b5)]
    assert got == oracles.homomorphisms(oracles.A5, oracles.B5)
    assert len(got) == 7
    assert len(enumerate_homomorphisms(a5, a5)) == len(oracles.homomorphisms(oracles.A5, oracles.A5)) == 7
    images = [f.image for f in enumerate_homomorphisms(a5, a5)]
    assert (0, 1, 2, 3, 4) in images and (0,) * 5 in images


def test_single_point_source(a5):
    one = enumerate_ku_algebras(1)[0].algebra
    assert [f.image for f in enumerate_homomorphisms(one, a5)] == [(0,)]


def test_cap():
    from kuwork import FiniteAlgebra
    big = FiniteAlgebra(tuple(tuple(0 if i == j or j == 0 else j for j in range(7)) for i in range(7)))
    with pytest.raises(CapExceeded):
        enumerate_homomorphisms(big, big)


def test_preimage(a5, mu5):
    ident = Homomorphism(a5, a5, (0, 1, 2, 3, 4))
    assert preimage_fuzzy(ident, mu5) == mu5
    zero = Homomorphism(a5, a5, (0,) * 5)
    assert preimage_fuzzy(zero, mu5) == FuzzySet.constant(5, 1)
    f = Homomorphism(a5, a5, (0, 0, 1, 1, 2))
    assert preimage_fuzzy(f, mu5).grades == tuple(mu5.grades[v] for v in f.image)
    with pytest.raises(SizeMismatch):
        preimage_fuzzy(f, FuzzySet.constant(3, 1))


def test_image(a5, b5, mu5):
    ident = Homomorphism(a5, a5, (0, 1, 2, 3, 4))
    assert image_fuzzy(ident, mu5) == mu5
    f = Homomorphism(a5, b5, (0, 0, 2, 2, 4))
    got = image_fuzzy(f, mu5).grades
    want = tuple(max((mu5.grades[x] for x in range(5) if f.image[x] == y), default=Fraction(0)) for y in range(5))
    assert got == want == frac(1, 0, HALF, 0, "1/4")
    assert f.fiber(2) == (2, 3)


def test_image_through_onto_zero_map():
    two = enumerate_ku_algebras(2)[0].algebra
    f = Homomorphism(two, two, (0, 0))
    assert image_fuzzy(f, FuzzySet(frac(HALF, 1))).grades == frac(1, 0)


def test_sup_property():
    ok, wit = has_sup_property(FuzzySet(frac(1, HALF, 0)))
    assert ok and wit[(1, 2)] == 1 and wit[(0, 1, 2)] == 0
    assert has_sup_property(FuzzySet.constant(4, HALF))[0]


def test_transport_identity_passes(a5, d5):
    ident = Homomorphism(a5, a5, (0, 1, 2, 3, 4))
    beta = FuzzySet.constant(5, HALF)
    assert check_preimage_transport(ident, beta, d5, d5, "left").verdict == PASS
    assert check_image_transport(ident, beta, d5, d5, "right").verdict == PASS


def test_transport_preconditions(a5, d5):
    zero = Homomorphism(a5, a5, (0,) * 5)
    rep = check_preimage_transport(zero, FuzzySet.constant(5, 1), d5, d5)
    assert rep.verdict == PRECONDITION and rep.precondition == "f is not onto"
    ident = Homomorphism(a5, a5, (0, 1, 2, 3, 4))
    rep = check_image_transport(ident, FuzzySet.constant(5, 1), d5, SelfMap.identity(5))
    assert rep.verdict == PRECONDITION and "incompatible" in rep.precondition
    assert compatibility_witness(ident, d5, SelfMap.identity(5)) == (1,)


def test_constant_image_off_range():
    three = enumerate_ku_algebras(3)[0].algebra
    two = enumerate_ku_algebras(2)[0].algebra
    for f in enumerate_homomorphisms(two, three):
        if not f.onto:
            beta = image_fuzzy(f, FuzzySet.constant(2, HALF))
            assert all(beta.grades[y] == (HALF if f.fiber(y) else 0) for y in range(3))
            rep = check_image_transport(f, FuzzySet.constant(2, HALF), SelfMap.zero(2), SelfMap.zero(3))
            assert rep.verdict in (PASS, "fail")

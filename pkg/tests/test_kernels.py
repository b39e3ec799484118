import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kuwork import kernels
from kuwork.fuzzy import ranks

BACKENDS = kernels.backends()
KINDS = (kernels.PLAIN, kernels.LEFT, kernels.RIGHT, kernels.TWO_SIDED)


@st.composite
def instances(draw):
    n = draw(st.integers(1, 4))
    flat = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    d = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    rank = draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    return n, flat, d, rank


def test_backend_reported():
    assert kernels.BACKEND in BACKENDS
    assert "pure" in BACKENDS


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")
@settings(max_examples=400, deadline=None)
@given(instances())
def test_compiled_and_pure_agree(inst):
    n, flat, d, rank = inst
    pure, compiled = BACKENDS["pure"], BACKENDS["compiled"]
    assert pure.ku_witnesses(flat, n) == compiled.ku_witnesses(flat, n)
    for rl in (False, True):
        assert pure.derivation_witness(flat, n, d, rl) == compiled.derivation_witness(flat, n, d, rl)
    for kind in KINDS:
        assert pure.ideal_witness(flat, n, d, rank, kind) == compiled.ideal_witness(flat, n, d, rank, kind)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_search_agrees(n):
    assert sorted(BACKENDS["pure"].search_tables(n)) == sorted(BACKENDS["compiled"].search_tables(n))


def test_ranks_preserve_order():
    from fractions import Fraction
    vals = [Fraction(1, 2), Fraction(0), Fraction(1, 2), Fraction(1)]
    assert ranks(vals) == [1, 0, 1, 2]

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kuwork import (
    FuzzySet,
    SelfMap,
    Subset,
    check_indicator,
    check_intersection,
    check_left_ideal_lemmas,
    check_level_characterization,
    enumerate_ku_algebras,
    grade,
    indicator_fuzzy,
    intersect,
    is_fuzzy_deriv_ku_ideal,
    is_fuzzy_ku_ideal,
    is_fuzzy_left_deriv_ku_ideal,
    is_fuzzy_right_deriv_ku_ideal,
    is_fuzzy_subalgebra,
    level_set,
)
from kuwork.errors import KUError
from kuwork.fuzzy import fuzzy_ideal_witness, fuzzy_sets_over, level_thresholds
from kuwork.reports import FAIL, PASS, PRECONDITION

import oracles
from conftest import frac

CATALOG = [e for n in (1, 2, 3) for e in enumerate_ku_algebras(n)]
HALF = Fraction(1, 2)
GRADES = st.fractions(min_value=0, max_value=1, max_denominator=6)


def fuzzy(n):
    return st.lists(GRADES, min_size=n, max_size=n).map(lambda g: FuzzySet(tuple(g)))


def test_grade_parsing():
    assert grade("3/4") == Fraction(3, 4)
    assert grade(1) == 1
    for bad in (0.5, True, "2", "-1/3", "x"):
        with pytest.raises(KUError):
            grade(bad)


def test_constant_sets_pass_everything(a5, d5):
    c = FuzzySet.constant(5, HALF)
    assert is_fuzzy_subalgebra(a5, c)
    assert is_fuzzy_ku_ideal(a5, c)
    assert is_fuzzy_left_deriv_ku_ideal(a5, d5, c)
    assert is_fuzzy_right_deriv_ku_ideal(a5, d5, c)
    assert is_fuzzy_deriv_ku_ideal(a5, d5, c)
    assert check_left_ideal_lemmas(a5, d5, c).verdict == PASS


def test_top_grade_must_sit_at_zero(a5, d5):
    m = FuzzySet(frac(0, 1, 0, 0, 0))
    assert not is_fuzzy_subalgebra(a5, m)
    assert not is_fuzzy_ku_ideal(a5, m)
    assert fuzzy_ideal_witness(a5, m) == (1,)


def test_example_subalgebra_grades(a5):
    m = FuzzySet(frac(1, HALF, HALF, HALF, 0))
    assert is_fuzzy_subalgebra(a5, m) is oracles.fuzzy_subalgebra_ok(oracles.A5, list(m.grades)) is False


def test_example_fuzzy_set_on_second_table(b5, d5, mu5):
    t, d, mu = oracles.B5, oracles.EXAMPLE_D, oracles.EXAMPLE_MU
    assert is_fuzzy_ku_ideal(b5, mu5) is oracles.fuzzy_ok(t, None, mu, "plain") is False
    assert is_fuzzy_left_deriv_ku_ideal(b5, d5, mu5) is oracles.fuzzy_ok(t, d, mu, "left") is True
    assert is_fuzzy_right_deriv_ku_ideal(b5, d5, mu5) is oracles.fuzzy_ok(t, d, mu, "right") is False
    assert is_fuzzy_deriv_ku_ideal(b5, d5, mu5) is oracles.fuzzy_ok(t, d, mu, "two-sided") is False
    assert fuzzy_ideal_witness(b5, mu5, d5, "right") == (0, 1, 4)


def test_witness_replays(b5, d5, mu5):
    x, y, z = fuzzy_ideal_witness(b5, mu5, d5, "right")
    t, d, g = b5.table, d5.image, mu5.grades
    assert g[d[t[x][z]]] < min(g[t[x][d[t[y][z]]]], g[d[y]])


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(CATALOG), st.data())
def test_fuzzy_checkers_match_oracle(entry, data):
    a = entry.algebra
    d = data.draw(st.sampled_from(entry.derivations))
    m = data.draw(fuzzy(a.n))
    g = list(m.grades)
    assert is_fuzzy_ku_ideal(a, m) == oracles.fuzzy_ok(a.table, None, g, "plain")
    assert is_fuzzy_left_deriv_ku_ideal(a, d, m) == oracles.fuzzy_ok(a.table, d.image, g, "left")
    assert is_fuzzy_right_deriv_ku_ideal(a, d, m) == oracles.fuzzy_ok(a.table, d.image, g, "right")
    assert is_fuzzy_deriv_ku_ideal(a, d, m) == oracles.fuzzy_ok(a.table, d.image, g, "two-sided")
    assert is_fuzzy_subalgebra(a, m) == oracles.fuzzy_subalgebra_ok(a.table, g)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CATALOG), st.data())
def test_identity_map_collapses_to_plain(entry, data):
    a = entry.algebra
    m = data.draw(fuzzy(a.n))
    ident = SelfMap.identity(a.n)
    plain = is_fuzzy_ku_ideal(a, m)
    assert is_fuzzy_left_deriv_ku_ideal(a, ident, m) == plain
    assert is_fuzzy_right_deriv_ku_ideal(a, ident, m) == plain
    assert is_fuzzy_deriv_ku_ideal(a, ident, m) == plain


def test_level_sets(b5, d5, mu5):
    assert level_set(b5, d5, mu5, HALF).members == (0, 1, 2, 3)
    c = FuzzySet.constant(5, HALF)
    assert level_set(b5, d5, c, HALF) == Subset.full(5)
    assert len(level_set(b5, d5, c, Fraction(3, 4))) == 0


def test_level_thresholds_cover_every_level_set(b5, d5, mu5):
    ts = level_thresholds(b5, d5, mu5)
    composed = {mu5.grades[v] for v in d5.image}
    assert composed | {Fraction(0)} <= set(ts)
    # the top composed grade is 1 here, so nothing in [0, 1] lies above it
    assert max(ts) == 1
    low = FuzzySet(frac(HALF, "1/4", "1/4", "1/4", "1/4"))
    assert any(t > HALF for t in level_thresholds(b5, d5, low))


def test_level_characterization_constant_holds(a5, d5):
    assert check_level_characterization(a5, d5, FuzzySet.constant(5, HALF)).verdict == PASS


def test_level_characterization_forward_counterexample():
    # a fuzzy left derivation KU-ideal whose composed level set is not a KU-ideal
    entry = next(e for e in enumerate_ku_algebras(3) if e.algebra.table == ((0, 1, 2), (0, 0, 0), (0, 2, 0)))
    a, d = entry.algebra, SelfMap((0, 2, 0))
    m = FuzzySet(frac("1/3", 0, 0))
    assert oracles.fuzzy_ok(a.table, d.image, list(m.grades), "left")
    assert not oracles.level_ideals_ok(a.table, d.image, list(m.grades))
    rep = check_level_characterization(a, d, m, "left")
    assert rep.verdict == FAIL
    assert rep.witness == ("forward", (Fraction(1, 3), 0, 2, 1))


def test_level_characterization_backward_counterexample():
    # level sets only see mu(d(x)); the top-grade condition sees mu itself
    a = enumerate_ku_algebras(2)[0].algebra
    d, m = SelfMap((0, 0)), FuzzySet(frac(0, "1/3"))
    assert oracles.level_ideals_ok(a.table, d.image, list(m.grades))
    assert not oracles.fuzzy_ok(a.table, d.image, list(m.grades), "left")
    assert check_level_characterization(a, d, m, "left").witness[0] == "backward"


def test_intersect():
    m = FuzzySet(frac(1, HALF, "1/4", 0, 0))
    assert intersect([m]) == m
    assert intersect([FuzzySet.constant(5, 1), FuzzySet.constant(5, HALF)]) == FuzzySet.constant(5, HALF)
    assert intersect([m, FuzzySet(frac(1, "3/4", 0, HALF, 0))]).grades == frac(1, HALF, 0, 0, 0)
    with pytest.raises(KUError):
        intersect([])


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CATALOG), st.data())
def test_intersection_is_pointwise_min(entry, data):
    a = entry.algebra
    ms = data.draw(st.lists(fuzzy(a.n), min_size=1, max_size=4))
    got = intersect(ms)
    assert all(got.grades[x] == min(m.grades[x] for m in ms) for x in a.elements())
    assert all(got.grades[x] <= m.grades[x] for m in ms for x in a.elements())


def test_intersection_of_left_ideals(b5, d5, mu5):
    rep = check_intersection(b5, d5, (mu5, FuzzySet.constant(5, HALF)), "left")
    assert rep.verdict == PASS


def test_left_ideal_lemmas_on_example(b5, d5, mu5):
    rep = check_left_ideal_lemmas(b5, d5, mu5)
    got = {c.label: c.witness for c in rep.clauses}
    assert got["xy<=dz"] is None and got["x<=dy"] is None
    assert got["dx*(x*y)"] == (0, 1)
    t, d, g = b5.table, d5.image, mu5.grades
    assert g[t[d[0]][t[0][1]]] < g[d[1]]


def test_left_ideal_lemmas_precondition(a5, d5):
    assert check_left_ideal_lemmas(a5, d5, FuzzySet(frac(0, 1, 0, 0, 0))).verdict == PRECONDITION


def test_indicator(a5, d5):
    s = Subset.of(5, [0, 1, 2, 3])
    m = indicator_fuzzy(a5, s, HALF)
    assert m.grades == frac(HALF, HALF, HALF, HALF, 0)
    assert indicator_fuzzy(a5, Subset.full(5), HALF) == FuzzySet.constant(5, HALF)
    assert check_indicator(a5, s, HALF, d5).verdict == PASS
    for bad in (0, 1):
        with pytest.raises(KUError):
            indicator_fuzzy(a5, s, bad)


def test_fuzzy_sets_over_counts():
    grid = (0, HALF, 1)
    assert len(list(fuzzy_sets_over(2, grid))) == 9

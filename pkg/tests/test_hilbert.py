import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from excsing.hilbert import (
    ConstraintSet,
    HilbertCandidate,
    ambient_forms,
    binomial_d,
    builtin_constraints,
    check_candidate,
    newton_extend,
    qivj,
    search,
)
from oracle_search import brute_search


def poly_values(coeffs, upto):
    """P(m) = sum_j a_j C(m + 3, j) at m = 1..upto (shifted so values stay integral)."""
    return [sum(a * comb(m + 3, j) for j, a in enumerate(coeffs)) for m in range(1, upto + 1)]


@pytest.mark.parametrize("n", range(1, 7))
def test_binomial_d_independent_of_delta(n):
    rng = random.Random(1000 + n)
    for _ in range(200):
        coeffs = [rng.randint(-50, 50) for _ in range(n)] + [rng.randint(1, 60)]
        h = poly_values(coeffs, n + 12)
        ds = {binomial_d(h, n, delta) for delta in range(12)}
        assert ds == {coeffs[-1]}


def test_binomial_d_bounds():
    with pytest.raises(IndexError):
        binomial_d([1, 2, 3], 2, 1)
    assert binomial_d([9, 45, 165, 450, 1017, 2019], 4, 0) == 36


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-100, 100), min_size=1, max_size=7), st.integers(0, 10))
def test_newton_extend_matches_direct_evaluation(coeffs, extra):
    n = len(coeffs) - 1
    direct = poly_values(coeffs, n + 1 + extra)
    assert newton_extend(direct[: n + 1], n + 1 + extra) == direct


def test_newton_extend_short_horizon():
    with pytest.raises(ValueError):
        newton_extend([1, 2, 3], 2)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 500), min_size=9, max_size=9), st.integers(2, 4), st.integers(0, 3))
def test_qivj_pascal_rule(q, j, shift):
    i = j + 2 + shift
    assert qivj(q, i, j) == qivj(q, i, j - 1) - qivj(q, i - 1, j - 1)
    assert qivj(q, i, 1) == q[i - 1] - q[i - 2]


def test_qivj_errors():
    with pytest.raises(ValueError):
        qivj([1, 2, 3], 2, 2)
    with pytest.raises(ValueError):
        qivj([1, 2, 3], 2, 0)


def test_qivj_curve_example():
    # q = (0,0,0,45,270): q_5(V_3) = 270 - 3*45 = 135, q_4(V_3) = 45
    q = (0, 0, 0, 45, 270)
    assert qivj(q, 5, 3) == 135
    assert qivj(q, 4, 3) == 45


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("strict", [False, True])
def test_search_matches_brute_force(n, strict, sums):
    found = search(n, sums, builtin_constraints(n, strict))
    assert {(c.d, c.h) for c in found} == brute_search(n, sums, strict)
    assert found == sorted(found)
    for c in found:
        assert check_candidate(c, builtin_constraints(n, strict), sums).passed


# frozen from the oracle above: what the bare hypotheses leave at n = 6
STRICT_ONLY_6 = {
    (18, (0, 0, 5, 45, 261)),
    (18, (0, 0, 5, 45, 216)),
    (18, (0, 0, 0, 225, 900)),
    (18, (0, 0, 0, 180, 810)),
    (18, (0, 0, 0, 180, 765)),
    (18, (0, 0, 0, 45, 252)),
    (27, (0, 0, 5, 225, 936)),
    (27, (0, 0, 5, 180, 801)),
    (27, (0, 0, 0, 225, 981)),
    (27, (0, 0, 0, 180, 792)),
    (27, (0, 0, 0, 180, 747)),
}


def test_bare_hypotheses_leave_thirteen_at_n6(sums):
    strict = search(6, sums, builtin_constraints(6, strict=True))
    assert len(strict) == 13
    assert {(c.d, c.q[:5]) for c in strict} == STRICT_ONLY_6
    full = builtin_constraints(6)
    for c in strict:
        names = {r.name for r in check_candidate(c, full, sums).failures}
        assert names and names <= {"q3", "q4-d9"}


def test_search_parallel_identical(sums):
    assert search(5, sums, workers=3) == search(5, sums, workers=1)
    assert search(6, sums, workers=2) == search(6, sums)


def test_survivor_reports(sums):
    (c4,) = search(4, sums)
    assert c4.d == 36 and c4.q[:5] == (0, 0, 0, 45, 270)
    rep = check_candidate(c4, builtin_constraints(4), sums)
    assert rep.passed and "curve-4" in rep["curve-4"].name
    (c5,) = search(5, sums)
    assert c5.d == 45 and c5.q[:7] == (0, 0, 0, 0, 0, 39, 270)


def test_forged_q4_breaks_membership(sums):
    (c4,) = search(4, sums)
    q = list(c4.q)
    q[3] = 44  # h_4 = 451, not a partial sum of [45, 180, 270]
    forged = HilbertCandidate.from_q(4, 36, q)
    assert forged.h[3] == 451
    rep = check_candidate(forged, builtin_constraints(4), sums)
    assert not rep["membership[4]"].passed
    assert not rep["degree"].passed  # no longer a degree-4 polynomial with d = 36


def test_check_candidate_short_horizon(sums):
    c = HilbertCandidate(d=36, h=(9, 45, 165), n=4)
    rep = check_candidate(c, builtin_constraints(4), sums)
    assert not rep.passed and rep.failures[0].name == "horizon"


def test_candidate_json_round_trip():
    c = HilbertCandidate.from_q(4, 36, [0, 0, 0, 45, 270, 984])
    assert HilbertCandidate.from_json(c.to_json()) == c
    assert c.h[0] == ambient_forms(1) == 9


def test_constraint_set_validation():
    with pytest.raises(ValueError):
        ConstraintSet(n=5, horizon=5)
    with pytest.raises(ValueError):
        builtin_constraints(7)
    with pytest.raises(ValueError):
        ConstraintSet(n=2, horizon=6, divisor=0)


def test_constraint_descriptions():
    rules = {r["name"]: r["rule"] for r in builtin_constraints(5).describe()}
    assert rules["curve-5"] == "max(0, 125-5d) <= q5-4q4+6q3 <= 126-5/2d"
    assert rules["stupid-5"] == "0 <= q4-3q3 < 126"
    assert "q4-d9" in {r["name"] for r in builtin_constraints(6).describe()}
    assert "q4-d9" not in {r["name"] for r in builtin_constraints(6, strict=True).describe()}


@pytest.mark.parametrize("n", range(1, 7))
def test_zero_h_convention_changes_nothing(n, sums):
    import dataclasses

    for strict in (False, True):
        c = builtin_constraints(n, strict)
        assert search(n, sums, c) == search(n, sums, dataclasses.replace(c, allow_zero_h=False))

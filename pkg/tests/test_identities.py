from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings, strategies as st

from hyperfact import identities as ids
from hyperfact.errors import InvalidSpec, PoleInRHS
from hyperfact.series import eval_terminating

from conftest import q_values, rationals

REJECT = (InvalidSpec, PoleInRHS, ZeroDivisionError)


def checked(fn, *args):
    try:
        report = fn(*args)
    except REJECT:
        assume(False)
    return report


def test_saalschutz_rhs_examples():
    assert ids.saalschutz_rhs(F(3), F(5, 2), F(7, 3), 0) == 1
    assert ids.saalschutz_rhs(1, 2, 4, 1) == F(3, 2)
    assert ids.saalschutz_rhs(F(2, 3), F(1, 7), F(2, 3), 3) == 0
    with pytest.raises(PoleInRHS):
        ids.saalschutz_rhs(1, 2, 0, 1)


def test_verify_saalschutz_examples():
    r = ids.verify_saalschutz(1, 2, 4, 1)
    assert r.holds and r.lhs == r.rhs == F(3, 2)
    r = ids.verify_saalschutz(F(1, 3), F(-2, 5), F(9, 7), 0)
    assert r.holds and r.lhs == 1
    assert r.to_json()["parameters"]["A"] == "1/3"


@settings(max_examples=200)
@given(rationals(), rationals(), rationals(), st.integers(0, 25))
def test_saalschutz_property(A, B, C, n):
    assert checked(ids.verify_saalschutz, A, B, C, n).holds


@given(rationals(), rationals(), rationals(), st.integers(0, 10))
def test_saalschutz_rhs_symmetric(A, B, C, n):
    try:
        value = ids.saalschutz_rhs(A, B, C, n)
    except PoleInRHS:
        assume(False)
    assert value == ids.saalschutz_rhs(B, A, C, n)


def test_karlsson_minton_rhs_examples():
    assert ids.karlsson_minton_terminating_rhs(1, 1, []) == F(1, 2)
    assert ids.karlsson_minton_terminating_rhs(4, F(2, 3), [(F(2, 3), 2), (F(5), 1)]) == 0
    assert ids.karlsson_minton_terminating_rhs(2, 1, [(3, 1)]) == F(2, 9)


def test_karlsson_minton_lhs_examples():
    r = ids.verify_karlsson_minton(2, 1, [(3, 1)])
    assert r.holds and r.lhs == F(2, 9)
    assert ids.verify_karlsson_minton(1, 1, []).lhs == F(1, 2)


def test_fields_wimp_examples():
    r = ids.verify_fields_wimp_vanishing(2, [(2, 1)])
    assert r.holds and r.lhs == 0
    assert ids.verify_fields_wimp_vanishing(1, []).lhs == 0
    with pytest.raises(ValueError):
        ids.verify_fields_wimp_vanishing(2, [(F(1, 2), 2)])


pairs_strategy = st.lists(st.tuples(rationals(), st.integers(0, 5)), max_size=3)


@given(st.integers(1, 15), rationals(), pairs_strategy)
def test_karlsson_minton_property(N, B, pairs):
    assume(sum(m for _, m in pairs) <= N)
    assert checked(ids.verify_karlsson_minton, N, B, pairs).holds


@given(st.integers(1, 15), pairs_strategy)
def test_fields_wimp_property(N, pairs):
    assume(sum(m for _, m in pairs) < N)
    report = checked(ids.verify_fields_wimp_vanishing, N, pairs)
    assert report.holds and report.lhs == 0


def test_whipple_examples():
    r = ids.verify_whipple(0, F(1, 2), F(1, 3), F(1, 5), F(2, 7), F(3, 11))
    assert r.holds and r.lhs == 1
    # A = E zeroes the prefactor but puts 1 - n among the transformed
    # denominators: the right side is 0 * pole, so the call is rejected
    with pytest.raises(InvalidSpec):
        ids.verify_whipple(3, F(1, 2), F(1, 3), F(1, 5), F(2, 7), F(1, 2))
    lhs = ids.verify_saalschutz(F(1, 3), F(1, 5), F(2, 7), 3).rhs
    assert lhs != 0


@settings(max_examples=100)
@given(st.integers(0, 15), rationals(), rationals(), rationals(), rationals(), rationals())
def test_whipple_property(n, A, B, C, D, E):
    report = checked(ids.verify_whipple, n, A, B, C, D, E)
    assert report.holds
    p = report.parameter_assignment
    assert p["D"] + p["E"] + p["F"] == A + B + C + 1 - n


@given(st.integers(1, 10), rationals(), rationals(), rationals(), rationals())
def test_whipple_with_b_equal_d(n, A, C, D, E):
    assert checked(ids.verify_whipple, n, A, D, C, D, E).holds


def test_q_saalschutz_examples():
    q = F(1, 3)
    r = ids.verify_q_saalschutz(F(2), F(3, 5), F(7, 2), q, 0)
    assert r.holds and r.lhs == 1
    r = ids.verify_q_saalschutz(F(2, 7), F(3, 5), F(2, 7), q, 4)
    assert r.rhs == 0 and r.lhs == 0


@settings(max_examples=100)
@given(rationals(nonzero=True), rationals(nonzero=True), rationals(nonzero=True), q_values(), st.integers(0, 20))
def test_q_saalschutz_property(A, B, C, q, n):
    assert checked(ids.verify_q_saalschutz, A, B, C, q, n).holds


def test_sears_examples():
    q = F(1, 2)
    r = ids.verify_sears(0, F(2), F(3), F(5), F(7), F(11), q)
    assert r.holds and r.lhs == 1
    r = ids.verify_sears(1, F(2, 3), F(-3, 4), F(5, 7), F(7, 3), F(-11, 5), q)
    assert r.holds
    # n = 1 is a two-term sum on each side
    A, B, C, D, E = F(2, 3), F(-3, 4), F(5, 7), F(7, 3), F(-11, 5)
    Fp = ids.sears_balance(1, A, B, C, D, E, q)
    lhs = 1 + (1 - 1 / q) * (1 - A) * (1 - B) * (1 - C) * q / ((1 - D) * (1 - E) * (1 - Fp) * (1 - q))
    assert r.lhs == lhs


@settings(max_examples=100)
@given(
    st.integers(0, 15),
    st.lists(rationals(nonzero=True), min_size=5, max_size=5),
    q_values(),
)
def test_sears_property(n, params, q):
    A, B, C, D, E = params
    report = checked(ids.verify_sears, n, A, B, C, D, E, q)
    assert report.holds
    p = report.parameter_assignment
    assert D * E * p["F"] == q ** (1 - n) * A * B * C


def test_report_holds_tracks_equality():
    r = ids.IdentityReport("x", {}, F(1), F(2))
    assert not r.holds and r.to_json()["holds"] is False


def test_karlsson_minton_series_shape():
    spec = ids.karlsson_minton_series(3, F(1, 2), [(F(2), 1)])
    assert spec.num == (-3, F(1, 2), F(3)) and spec.den == (F(3, 2), F(2))
    assert eval_terminating(spec) == ids.karlsson_minton_terminating_rhs(3, F(1, 2), [(F(2), 1)])

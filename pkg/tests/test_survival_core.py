import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from refcurve import (
    Cohort,
    InputDataError,
    LeftContinuousStepFunction,
    StepFunction,
    SubjectRecord,
    at_risk,
    counting_process,
    kaplan_meier,
    na_variance,
    nelson_aalen,
)
from conftest import random_cohort


# ---------------------------------------------------------------- records

def test_subject_record_validation():
    SubjectRecord(time=1.0, event=True)
    with pytest.raises(InputDataError, match="time must be finite"):
        SubjectRecord(time=-1.0, event=True)
    with pytest.raises(InputDataError, match="time must be finite"):
        SubjectRecord(time=float("nan"), event=False)
    with pytest.raises(InputDataError, match="group"):
        SubjectRecord(time=1.0, event=True, group="C")


def test_cohort_from_arrays_and_accessors():
    c = Cohort.from_arrays([2.0, 1.0, 3.0], [1, 0, 1])
    assert c.n == 3
    assert c.n_events() == 2
    assert c.max_time() == 3.0
    np.testing.assert_array_equal(np.sort(c.times), [1.0, 2.0, 3.0])


def test_cohort_rejects_bad_input():
    with pytest.raises(InputDataError, match="equal length"):
        Cohort.from_arrays([1.0, 2.0], [1])
    with pytest.raises(InputDataError, match="finite"):
        Cohort.from_arrays([1.0, -2.0], [1, 1])
    empty = Cohort.from_arrays([], [])  # empty cohorts exist; engines reject them
    assert empty.n == 0
    with pytest.raises(InputDataError, match="empty cohort"):
        empty.max_time()


def test_cohort_immutable():
    c = Cohort.from_arrays([1.0], [1])
    with pytest.raises(AttributeError):
        c.times = np.array([2.0])
    with pytest.raises(ValueError):
        c.times[:] = 9.0  # backing arrays are read-only


def test_cohort_mixed_groups_rejected():
    recs = [SubjectRecord(1.0, True, group="A"), SubjectRecord(2.0, False, group="B")]
    with pytest.raises(InputDataError, match="mixed group"):
        Cohort(records=tuple(recs))


# ---------------------------------------------------------- step functions

def test_step_function_right_continuous():
    f = StepFunction(np.array([1.0, 2.0]), np.array([0.5, 1.5]), initial_value=0.0)
    assert f(0.999) == 0.0
    assert f(1.0) == 0.5  # right-continuous: jump value attained at the jump
    assert f(1.5) == 0.5
    assert f(2.0) == 1.5
    assert f(99.0) == 1.5  # constant extrapolation beyond the last jump
    assert f.eval_left(1.0) == 0.0
    assert f.eval_left(2.0) == 0.5


def test_step_function_vectorized_eval():
    f = StepFunction(np.array([1.0, 2.0]), np.array([1.0, 3.0]))
    out = f(np.array([0.0, 1.0, 1.9, 2.5]))
    np.testing.assert_allclose(out, [0.0, 1.0, 1.0, 3.0])


def test_step_function_integrate_exact():
    f = StepFunction(np.array([1.0, 2.0]), np.array([1.0, 3.0]))
    # piecewise-constant integral: 0*1 + 1*1 + 3*1 over [0, 3]
    assert f.integrate(0.0, 3.0) == pytest.approx(4.0, abs=1e-14)
    assert f.integrate(0.5, 1.5) == pytest.approx(0.5, abs=1e-14)
    assert f.integrate(2.0, 2.0) == 0.0


def test_step_function_merge_grid():
    f = StepFunction(np.array([1.0, 3.0]), np.array([1.0, 2.0]))
    g = StepFunction(np.array([2.0, 3.0]), np.array([5.0, 6.0]))
    merged = f.merge_grid(g)
    np.testing.assert_array_equal(merged, [1.0, 2.0, 3.0])


def test_step_function_validation():
    with pytest.raises(InputDataError, match="strictly increasing"):
        StepFunction(np.array([2.0, 1.0]), np.array([1.0, 2.0]))
    with pytest.raises(InputDataError, match="equal length"):
        StepFunction(np.array([1.0]), np.array([1.0, 2.0]))
    f = StepFunction(np.array([1.0]), np.array([1.0]))
    with pytest.raises(AttributeError):
        f.values = np.array([2.0])


# ------------------------------------------------- counting / at-risk

def test_counting_and_at_risk(three_subject_cohort):
    N = counting_process(three_subject_cohort)
    assert N(0.5) == 0
    assert N(1.0) == 1
    assert N(1.5) == 1  # censoring does not count
    assert N(2.0) == 2

    Y = at_risk(three_subject_cohort)
    assert isinstance(Y, LeftContinuousStepFunction)
    assert Y(0.0) == 3
    assert Y(1.0) == 3   # subject failing AT t is still at risk at t
    assert Y(1.5) == 2   # ... and so is the one censored at 1.5
    assert Y(1.5 + 1e-9) == 1
    assert Y(2.0) == 1
    assert Y(2.1) == 0


# ------------------------------------------------------------- estimators

def test_nelson_aalen_hand_values(three_subject_cohort):
    na = nelson_aalen(three_subject_cohort)
    assert na(1.0) == pytest.approx(1.0 / 3.0, abs=1e-15)
    assert na(1.9) == pytest.approx(1.0 / 3.0, abs=1e-15)
    assert na(2.0) == pytest.approx(4.0 / 3.0, abs=1e-15)
    assert na(50.0) == pytest.approx(4.0 / 3.0, abs=1e-15)


def test_na_variance_hand_values(three_subject_cohort):
    # n * sum d/Y^2 = 3 * (1/9 + 1/1) = 10/3 at t=2
    va = na_variance(three_subject_cohort)
    assert va(1.0) == pytest.approx(3.0 / 9.0, abs=1e-15)
    assert va(2.0) == pytest.approx(10.0 / 3.0, abs=1e-15)


def test_kaplan_meier_hand_values(three_subject_cohort):
    km = kaplan_meier(three_subject_cohort)
    assert km(0.5) == 1.0
    assert km(1.0) == pytest.approx(2.0 / 3.0, abs=1e-15)
    assert km(2.0) == 0.0


def test_estimators_with_ties():
    c = Cohort.from_arrays([1.0, 1.0, 2.0], [1, 1, 1])
    na = nelson_aalen(c)
    assert na(1.0) == pytest.approx(2.0 / 3.0, abs=1e-15)
    assert na(2.0) == pytest.approx(2.0 / 3.0 + 1.0, abs=1e-15)
    va = na_variance(c)
    assert va(2.0) == pytest.approx(3.0 * (2.0 / 9.0 + 1.0), abs=1e-14)
    km = kaplan_meier(c)
    assert km(1.0) == pytest.approx(1.0 / 3.0, abs=1e-15)


def test_km_censoring_target():
    c = Cohort.from_arrays([1.0, 1.5, 2.0], [1, 0, 1])
    kmc = kaplan_meier(c, target="censoring")
    # censoring "events" are the flipped indicators: single censoring at 1.5, Y=2
    assert kmc(1.0) == 1.0
    assert kmc(1.5) == pytest.approx(0.5, abs=1e-15)
    with pytest.raises(InputDataError, match="target"):
        kaplan_meier(c, target="both")


def _brute_na_km_va(times, events):
    """Definitional O(n^2) evaluation at each distinct event time."""
    times = np.asarray(times, dtype=float)
    events = np.asarray(events)
    n = times.size
    uniq = np.unique(times[events > 0])
    na, km, va = {}, {}, {}
    acc_na = 0.0
    acc_km = 1.0
    acc_va = 0.0
    for t in uniq:
        y = np.sum(times >= t)
        d = np.sum((times == t) & (events > 0))
        acc_na += d / y
        acc_km *= 1.0 - d / y
        acc_va += d / y**2
        na[t], km[t], va[t] = acc_na, acc_km, n * acc_va
    return na, km, va


def test_estimators_match_brute_force():
    rng = np.random.default_rng(7)
    for trial in range(200):
        c = random_cohort(rng, int(rng.integers(1, 12)), with_ties=bool(trial % 2))
        if c.n_events() == 0:
            continue
        na_b, km_b, va_b = _brute_na_km_va(c.times, c.events)
        na, km, va = nelson_aalen(c), kaplan_meier(c), na_variance(c)
        for t in na_b:
            assert na(t) == pytest.approx(na_b[t], abs=1e-14)
            assert km(t) == pytest.approx(km_b[t], abs=1e-14)
            assert va(t) == pytest.approx(va_b[t], abs=1e-14)


@given(
    times=st.lists(st.integers(1, 8), min_size=1, max_size=15),
    events=st.data(),
)
@settings(max_examples=150, deadline=None)
def test_na_monotone_km_decreasing(times, events):
    ev = [events.draw(st.booleans()) for _ in times]
    if not any(ev):
        return
    c = Cohort.from_arrays(np.array(times) / 2.0, np.array(ev, dtype=int))
    na = nelson_aalen(c)
    km = kaplan_meier(c)
    assert np.all(np.diff(na.values) > 0)
    assert np.all(np.diff(km.values) < 0)
    assert km.values[-1] >= 0.0
    # NA never exceeds -log(KM) wherever KM > 0
    mask = km.values > 0
    assert np.all(na.values[mask] <= -np.log(km.values[mask]) + 1e-12)

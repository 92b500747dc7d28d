"""Type-I-error inflation of the classical one-sample log-rank test.

When the reference cumulative hazard is estimated from a historical
cohort rather than known, the classical test statistic is standardized
by a variance that ignores the estimation error, so its actual level
exceeds the nominal one.  This module computes the expected values of
both variance estimates under the null — plugging Kaplan-Meier and
scaled hazard-variance curves of the historical cohort into the limit
formulas, with uniform accrual/follow-up censoring for the prospective
trial — and the resulting actual rejection level

    2 * Phi( sqrt(E[var_classical] / E[var_adjusted]) * Phi^{-1}(alpha/2) ).

All integrands here are step functions against piecewise-linear or
piecewise-quadratic weights, so every integral is evaluated in closed
form per step interval; the module performs no quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import sqrt

import numpy as np
from scipy.special import ndtr, ndtri

from .errors import DegenerateDataError, InputDataError
from .survival_core import Cohort, kaplan_meier, na_variance

__all__ = [
    "InflationInput",
    "expected_var_oslr",
    "expected_var_new",
    "inflated_level",
    "sweep",
]


@dataclass(frozen=True)
class InflationInput:
    """Historical cohort plus prospective-trial design parameters.

    ``pi`` is the planned experimental-to-historical allocation ratio;
    accrual is uniform over ``[0, accrual_a]`` with ``followup_f`` of
    additional follow-up, so administrative censoring in the new trial
    is U(followup_f, accrual_a + followup_f).
    """

    historical: Cohort
    accrual_a: float
    followup_f: float
    pi: float
    alpha: float

    def __post_init__(self):
        if not self.accrual_a > 0.0:
            raise InputDataError("accrual_a must be positive")
        if self.followup_f < 0.0:
            raise InputDataError("followup_f must be >= 0")
        if not self.pi > 0.0:
            raise InputDataError("pi must be positive")
        if not 0.0 < self.alpha < 1.0:
            raise InputDataError("alpha must be in (0, 1)")
        if self.historical.n_events() == 0:
            raise InputDataError("historical cohort has no events")

    def horizon(self) -> float:
        return self.accrual_a + self.followup_f


def expected_var_oslr(inp: InflationInput) -> float:
    """Null expectation of the classical variance estimate.

    Equals the probability that a new-trial subject dies on study when
    events follow the historical Kaplan-Meier curve:
    (1/a) * integral over [f, a+f] of (1 - KM)(u) du, closed form.
    """
    km = kaplan_meier(inp.historical)
    lo, hi = inp.followup_f, inp.horizon()
    return ((hi - lo) - km.integrate(lo, hi)) / inp.accrual_a


def expected_var_new(inp: InflationInput) -> float:
    """Null expectation of the adjusted variance estimate.

    Adds to :func:`expected_var_oslr` the reference-curve sampling
    contribution 2*pi*(J1 + J2) with

        J1 = ∫ var_A(u) * KM(u)^2 * S_C(u) * f_C(u) du,
        J2 = Σ_t var_A(t) * KM(t) * S_C(t)^2 * ΔF(t),

    where var_A is the scaled variance curve of the historical hazard
    estimate, ΔF(t) the Kaplan-Meier jump mass, and S_C, f_C the uniform
    design censoring.  Step values are taken right-continuously at each
    jump; curves extend constantly beyond the historical horizon.
    """
    base = expected_var_oslr(inp)
    km = kaplan_meier(inp.historical)
    var_a = na_variance(inp.historical)
    a = inp.accrual_a
    lo, hi = inp.followup_f, inp.horizon()

    # step x linear piece: segments of the union knot grid inside [f, a+f]
    knots = np.union1d(km.merge_grid(var_a), [lo, hi])
    knots = knots[(knots >= lo) & (knots <= hi)]
    j1 = 0.0
    if knots.size >= 2:
        left, right = knots[:-1], knots[1:]
        mids = 0.5 * (left + right)
        step_vals = var_a(mids) * km(mids) ** 2
        # ∫ (hi - u) / a^2 du over each segment
        weights = ((hi - left) ** 2 - (hi - right) ** 2) / (2.0 * a * a)
        j1 = float(np.dot(step_vals, weights))

    # step x quadratic against the Kaplan-Meier jump masses
    times = km.jump_times
    surv = km.values
    masses = np.diff(surv, prepend=1.0) * -1.0
    cens_surv = np.clip((hi - times) / a, 0.0, 1.0)
    j2 = float(np.sum(var_a(times) * surv * cens_surv**2 * masses))

    return base + 2.0 * inp.pi * (j1 + j2)


def inflated_level(inp: InflationInput) -> float:
    """Actual rejection level of the classical test at nominal ``alpha``.

    Always >= alpha; equality holds exactly when the reference-curve
    correction vanishes.
    """
    e_oslr = expected_var_oslr(inp)
    e_new = expected_var_new(inp)
    if e_new <= 0.0:
        raise DegenerateDataError(
            "expected variance is zero: no historical events inside the "
            "design window"
        )
    return 2.0 * float(ndtr(sqrt(e_oslr / e_new) * ndtri(inp.alpha / 2.0)))


def sweep(template: InflationInput, axis: str, grid) -> list[dict]:
    """Inflated level along a grid of ``pi`` or ``followup`` values.

    Rows keep the grid order; a row that fails validation or turns out
    degenerate is marked with its error message instead of aborting the
    sweep.
    """
    if axis not in ("pi", "followup"):
        raise InputDataError(f"unknown sweep axis {axis!r}")
    values = [float(v) for v in grid]
    if not values:
        raise InputDataError("sweep grid is empty")
    if any(b < a for a, b in zip(values, values[1:])):
        raise InputDataError("sweep grid must be sorted ascending")

    rows = []
    for value in values:
        row = {axis: value, "expected_var_oslr": None,
               "expected_var_new": None, "inflated_level": None,
               "error": None}
        try:
            if axis == "pi":
                inp = replace(template, pi=value)
            else:
                inp = replace(template, followup_f=value)
            row["expected_var_oslr"] = expected_var_oslr(inp)
            row["expected_var_new"] = expected_var_new(inp)
            row["inflated_level"] = inflated_level(inp)
        except (ValueError, RuntimeError) as exc:
            row["error"] = str(exc)
        rows.append(row)
    return rows

"""NumPy implementation of the hot statistical kernels.

These are the per-replicate workhorses of the Monte Carlo engine; a
compiled twin lives in ``_kernels_cy.pyx`` and must produce the same
numbers (checked by the test suite).  Both operate on raw arrays so the
simulation loop never has to build estimator objects.

``one_sample_stats`` returns the pieces shared by the variability-
adjusted test and the classical one-sample log-rank test; the quadratic
double sum over experimental-time minima is reduced to O(n log n) by
sorting: with x_(1) <= ... <= x_(m), the minimum x_i ^ x_j equals x_(k)
for exactly 2(m-k)+1 ordered pairs (diagonal included), so

    sum_{i,j} v(x_i ^ x_j) = sum_k v(x_(k)) * (2(m-k) + 1).
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["one_sample_stats", "two_sample_stats"]


def _as_float(a) -> np.ndarray:
    return np.ascontiguousarray(a, dtype=np.float64)


def _hazard_tables(times: np.ndarray, events: np.ndarray):
    """Distinct event times with cumulative hazard and variance increments.

    Returns ``(tev, na_cum, var_cum)``: sorted distinct event times and the
    running sums of d/Y and d/Y^2 (the latter *not* scaled by cohort size:
    the scaling cancels against the allocation ratio downstream).
    """
    n = times.size
    order = np.argsort(times, kind="stable")
    ts = times[order]
    es = events[order]
    uniq, start = np.unique(ts, return_index=True)
    d = np.add.reduceat(es, start)
    y = (n - start).astype(np.float64)
    mask = d > 0
    tev = uniq[mask]
    dm = d[mask]
    ym = y[mask]
    return tev, np.cumsum(dm / ym), np.cumsum(dm / (ym * ym))


def one_sample_stats(control_times, control_events, exp_times, exp_events):
    """Shared statistics of the one-sample tests.

    Returns ``(m_hat, var_new, var_oslr)`` where ``m_hat`` is the scaled
    difference between observed experimental events and those predicted
    by the control cumulative-hazard estimate, ``var_oslr`` the classical
    variance N_B / n_B and ``var_new`` the variability-adjusted variance.
    """
    ta = _as_float(control_times)
    ea = _as_float(control_events)
    tb = _as_float(exp_times)
    eb = _as_float(exp_events)
    nb = tb.size

    tev, na_cum, var_cum = _hazard_tables(ta, ea)

    xb = np.sort(tb)
    idx = np.searchsorted(tev, xb, side="right")
    padded_na = np.concatenate(([0.0], na_cum))
    padded_var = np.concatenate(([0.0], var_cum))

    n_events_b = float(eb.sum())
    m_hat = (n_events_b - float(padded_na[idx].sum())) / math.sqrt(nb)
    var_oslr = n_events_b / nb

    weights = 2.0 * (nb - np.arange(1, nb + 1, dtype=np.float64)) + 1.0
    double_sum = float(np.dot(padded_var[idx], weights))
    var_new = var_oslr + double_sum / nb
    return m_hat, var_new, var_oslr


def two_sample_stats(control_times, control_events, exp_times, exp_events):
    """Log-rank O-E and hypergeometric variance over the pooled cohort.

    Returns ``(o_minus_e, variance)`` with the tie-corrected variance
    term d * (Y_B/Y) * (1 - Y_B/Y) * (Y - d)/(Y - 1) per event time.
    """
    ta = _as_float(control_times)
    ea = _as_float(control_events)
    tb = _as_float(exp_times)
    eb = _as_float(exp_events)

    tev = np.unique(np.concatenate([ta[ea > 0], tb[eb > 0]]))
    if tev.size == 0:
        return 0.0, 0.0

    tas = np.sort(ta)
    tbs = np.sort(tb)
    ya = ta.size - np.searchsorted(tas, tev, side="left")
    yb = tb.size - np.searchsorted(tbs, tev, side="left")

    ea_times = np.sort(ta[ea > 0])
    eb_times = np.sort(tb[eb > 0])
    da = (np.searchsorted(ea_times, tev, side="right")
          - np.searchsorted(ea_times, tev, side="left")).astype(np.float64)
    db = (np.searchsorted(eb_times, tev, side="right")
          - np.searchsorted(eb_times, tev, side="left")).astype(np.float64)

    y = (ya + yb).astype(np.float64)
    d = da + db
    frac = yb / y
    o_minus_e = float(np.sum(db - d * frac))
    with np.errstate(invalid="ignore", divide="ignore"):
        per_time = d * frac * (1.0 - frac) * (y - d) / (y - 1.0)
    per_time[y <= 1.0] = 0.0
    return o_minus_e, float(per_time.sum())

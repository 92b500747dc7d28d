"""Acceptance gate: nine end-to-end criteria, one [PASS]/[FAIL] line each.

Everything here is deterministic (frozen seeds, one PRNG substream per
replicate), so reruns print identical numbers.  Two criteria are known
to fail and are left failing on purpose rather than tuned around:

* criterion 1, second column: sizing the adjusted test by its own
  normal approximation lands 3-26 subjects below the embedded benchmark
  grid across the whole column (the event-count column matches 14/15);
* criterion 4: the benchmark's adjusted-test power column is not
  attained by the statistic as defined, while the two-sample comparator
  power is reproduced within tolerance.

Both deviations are described in the README; the implementations follow
the written definitions, not the benchmark numbers.
"""

import math
import time

import numpy as np
import pytest
from scipy.stats import kstest

from refcurve import (
    Cohort,
    InflationInput,
    SimulationConfig,
    TrialDesign,
    classical_oslr,
    inflated_level,
    kaplan_meier,
    na_variance,
    nelson_aalen,
    new_test,
    rejection_study,
    required_accrual,
    schoenfeld_sample_size,
    statistic_sample,
    sweep,
    two_sample_logrank,
)
from refcurve import _backend
from refcurve import _kernels_py
from refcurve._tables import TWO_SAMPLE_COMPARISON

from conftest import random_cohort


@pytest.fixture(scope="module")
def report(request):
    """Print one un-captured [PASS]/[FAIL] line, then assert."""
    capman = request.config.pluginmanager.getplugin("capturemanager")

    def _report(num: int, ok: bool, detail: str) -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}"
        if capman is not None:
            with capman.global_and_fixture_disabled():
                print(f"\n{line}", flush=True)
        else:
            print(f"\n{line}", flush=True)
        assert ok, line

    return _report


def _table1_design(kappa, pi):
    return TrialDesign(accrual_a=None, followup_f=3.0, rate_r=100.0, pi=pi,
                       alpha=0.05, omega0=1.0, kappa=kappa, s1=0.5)


@pytest.fixture(scope="module")
def type1_error_runs():
    """Three type-I-error cells at 4000 replicates, shared by criteria 2+3."""
    cells = ((1.0, 1000, 1.0), (0.5, 500, 0.25), (2.0, 500, 1.0))
    t0 = time.perf_counter()
    reports = []
    for kappa, n, pi in cells:
        cfg = SimulationConfig(design=_table1_design(kappa, pi),
                               omega_true=1.0, replications=4000, seed=11,
                               n_total=n, tests=("new", "oslr"))
        reports.append(rejection_study(cfg))
    return reports, time.perf_counter() - t0


def test_criterion_1_deterministic_sample_sizes(report):
    grid = [(k, w) for k in (0.1, 0.25, 0.5, 0.75, 1.0)
            for w in (0.5, 0.67, 0.8)]
    t0 = time.perf_counter()
    hits_events, hits_adjusted = 0, 0
    for kappa, omega0 in grid:
        design = TrialDesign(accrual_a=None, followup_f=3.0, rate_r=100.0,
                             pi=1.0, alpha=0.05, omega0=omega0, kappa=kappa,
                             s1=0.5)
        n_events = schoenfeld_sample_size(design, 0.8).n_total
        n_adjusted = required_accrual(design, 0.8).n_total
        hits_events += n_events == TWO_SAMPLE_COMPARISON[
            (0.5, kappa, omega0, 1)]["n"]
        hits_adjusted += n_adjusted == TWO_SAMPLE_COMPARISON[
            (0.5, kappa, omega0, 2)]["n"]
    dt = time.perf_counter() - t0
    ok = hits_events >= 13 and hits_adjusted >= 13 and dt < 60.0
    report(1, ok, f"event-count sizing matches benchmark {hits_events}/15, "
                  f"adjusted-test sizing {hits_adjusted}/15 "
                  f"(need >=13 each; {dt:.1f}s)")


def test_criterion_2_adjusted_test_level(report, type1_error_runs):
    reports, dt = type1_error_runs
    targets = (0.052, 0.052, 0.051)
    rates = [r.rates["new"] for r in reports]
    errs = [abs(a - b) for a, b in zip(rates, targets)]
    ok = all(e <= 0.012 for e in errs) and dt < 600.0
    report(2, ok, "alpha_new " + "/".join(f"{r:.4f}" for r in rates)
                  + " vs benchmark 0.052/0.052/0.051 (tol 0.012; "
                  f"{dt:.1f}s)")


def test_criterion_3_classical_test_inflation(report, type1_error_runs):
    reports, _ = type1_error_runs
    targets = (0.170, 0.083, 0.177)
    rates = [r.rates["oslr"] for r in reports]
    errs = [abs(a - b) for a, b in zip(rates, targets)]
    # the headline effect: >3x nominal level at equal allocation
    ok = all(e <= 0.02 for e in errs) and rates[0] > 3 * 0.05
    report(3, ok, "alpha_oslr " + "/".join(f"{r:.4f}" for r in rates)
                  + " vs benchmark 0.170/0.083/0.177 (tol 0.02)")


def test_criterion_4_power_reproduction(report):
    runs = {}
    for kappa, n in ((1.0, 82), (5.0, 66)):
        design = TrialDesign(accrual_a=None, followup_f=3.0, rate_r=100.0,
                             pi=1.0, alpha=0.05, omega0=0.5, kappa=kappa,
                             s1=0.5)
        cfg = SimulationConfig(design=design, omega_true=0.5,
                               replications=4000, seed=71, n_total=n,
                               tests=("new", "two_sample"))
        runs[kappa] = rejection_study(cfg).rates
    ok_new = abs(runs[1.0]["new"] - 0.810) <= 0.02
    ok_lr = abs(runs[1.0]["two_sample"] - 0.799) <= 0.02
    ok_steep = abs(runs[5.0]["new"] - 0.402) <= 0.03
    tag = {True: "ok", False: "MISS"}
    report(4, ok_new and ok_lr and ok_steep,
           f"power_new {runs[1.0]['new']:.4f} vs 0.810+-0.02 {tag[ok_new]}; "
           f"power_lr {runs[1.0]['two_sample']:.4f} vs 0.799+-0.02 "
           f"{tag[ok_lr]}; "
           f"steep-hazard power_new {runs[5.0]['new']:.4f} vs 0.402+-0.03 "
           f"{tag[ok_steep]}")


def test_criterion_5_predicted_vs_empirical_inflation(report):
    # one synthetic exponential historical cohort (200 subjects, median
    # survival 1, censoring U(2,4)) feeds the analytic level prediction;
    # the empirical side re-estimates the reference curve per replicate
    rng = np.random.default_rng(2026)
    c = math.log(2.0)
    event_time = rng.exponential(1.0 / c, 200)
    censor = rng.uniform(2.0, 4.0, 200)
    historical = Cohort.from_arrays(np.minimum(event_time, censor),
                                    event_time <= censor)
    predicted = inflated_level(InflationInput(
        historical=historical, accrual_a=2.0, followup_f=2.0, pi=0.5,
        alpha=0.05))
    design = TrialDesign(accrual_a=2.0, followup_f=2.0, rate_r=150.0,
                         pi=0.5, alpha=0.05, omega0=0.5, kappa=1.0, s1=0.5)
    cfg = SimulationConfig(design=design, omega_true=1.0,
                           replications=10_000, seed=515, tests=("oslr",))
    empirical = rejection_study(cfg).rates["oslr"]
    diff = abs(predicted - empirical)
    report(5, diff <= 0.015,
           f"predicted oslr level {predicted:.4f} vs empirical "
           f"{empirical:.4f} at 10^4 reps (|diff| {diff:.4f} <= 0.015; "
           f"historical events {historical.n_events()})")


def _naive_one_sample(ta, ea, tb, eb):
    """Definitional evaluation: O(n^2) double sum, per-subject scans."""
    ta, tb = np.asarray(ta, float), np.asarray(tb, float)
    ea, eb = np.asarray(ea, bool), np.asarray(eb, bool)
    uniq = np.unique(ta[ea])

    def cum(power, s):
        total = 0.0
        for u in uniq:
            if u > s:
                break
            d = np.sum((ta == u) & ea)
            y = np.sum(ta >= u)
            total += d / y ** power
        return total

    n_b = tb.size
    m_hat = (eb.sum() - sum(cum(1, x) for x in tb)) / math.sqrt(n_b)
    var_oslr = eb.sum() / n_b
    double = sum(cum(2, min(x, y)) for x in tb for y in tb)
    return m_hat, var_oslr + double / n_b, var_oslr


def test_criterion_6_oracle_equivalence(report):
    rng = np.random.default_rng(606)
    kernels = [("python", _kernels_py.one_sample_stats)]
    if _backend.backend_name() == "compiled":
        kernels.append(("compiled", _backend.one_sample_stats))
    worst = 0.0
    checked = 0
    for trial in range(1000):
        ctrl = random_cohort(rng, int(rng.integers(1, 13)),
                             with_ties=bool(trial % 2))
        exp = random_cohort(rng, int(rng.integers(1, 13)),
                            with_ties=bool(trial % 3))
        ref = _naive_one_sample(ctrl.times, ctrl.events,
                                exp.times, exp.events)
        for _, kernel in kernels:
            got = kernel(ctrl.times, ctrl.events, exp.times, exp.events)
            for a, b in zip(got, ref):
                err = abs(a - b) / max(1.0, abs(b))
                worst = max(worst, err)
                if err > 1e-12:
                    report(6, False,
                           f"kernel {got} vs naive {ref} at trial {trial}")
        # estimator curves against per-time definitional sums
        if ctrl.n_events():
            na, km, va = nelson_aalen(ctrl), kaplan_meier(ctrl), \
                na_variance(ctrl)
            for u in np.unique(ctrl.times[ctrl.events]):
                d = np.sum((ctrl.times == u) & ctrl.events)
                y = np.sum(ctrl.times >= u)
                prev = na.eval_left(u)
                assert na(u) == pytest.approx(prev + d / y, abs=1e-14)
                assert km(u) == pytest.approx(
                    km.eval_left(u) * (1 - d / y), abs=1e-14)
                assert va(u) == pytest.approx(
                    va.eval_left(u) + ctrl.n * d / y**2, abs=1e-14)
        checked += 1
    report(6, checked >= 1000 and worst <= 1e-12,
           f"{checked} random instances (n<=12): pairwise-sum reduction vs "
           f"naive double sum, worst rel err {worst:.2e}; estimator curves "
           f"match definitional increments")


def test_criterion_7_null_calibration(report):
    design = _table1_design(1.0, 1.0)
    cfg = SimulationConfig(design=design, omega_true=1.0, replications=2000,
                           seed=31337, n_total=1000, tests=("new",))
    out = statistic_sample(cfg)
    ks_p = kstest(out["z_new"], "norm").pvalue
    var_m = float(np.var(out["m_hat"], ddof=1))
    # closed-form asymptotic variance for the exponential planning curve,
    # a = 10, f = 3, pi = 1:  2 * (1 - (e^{-cf} - e^{-c(a+f)})/(c a))
    sigma2 = 1.9639678457056122
    rel = abs(var_m - sigma2) / sigma2
    ok = ks_p > 0.01 and rel <= 0.03
    report(7, ok, f"2000 null Z: KS p={ks_p:.4f} (>0.01); "
                  f"Var[m_hat] {var_m:.4f} vs analytic {sigma2:.4f} "
                  f"(rel err {rel:.4f} <= 0.03)")


def test_criterion_8_rank_invariance(report):
    rng = np.random.default_rng(808)
    transforms = (lambda t: t ** 2, np.log1p)
    worst = 0.0
    done = 0
    while done < 100:
        ctrl = random_cohort(rng, int(rng.integers(3, 41)))
        exp = random_cohort(rng, int(rng.integers(3, 41)))
        try:
            base = (new_test(ctrl, exp).statistic,
                    classical_oslr(nelson_aalen(ctrl), exp).statistic,
                    two_sample_logrank(ctrl, exp).statistic)
        except RuntimeError:
            continue  # degenerate draw; take a fresh one
        for f in transforms:
            tc = Cohort.from_arrays(f(ctrl.times), ctrl.events)
            te = Cohort.from_arrays(f(exp.times), exp.events)
            mapped = (new_test(tc, te).statistic,
                      classical_oslr(nelson_aalen(tc), te).statistic,
                      two_sample_logrank(tc, te).statistic)
            for a, b in zip(base, mapped):
                worst = max(worst, abs(a - b) / max(1.0, abs(a)))
        done += 1
    report(8, worst <= 1e-12,
           f"statistics invariant under t->t^2 and t->log1p(t) over "
           f"{done} instances (worst rel drift {worst:.2e})")


def test_criterion_9_level_sweeps_on_standin(report, standin_cohort):
    horizon = standin_cohort.max_time()
    template = InflationInput(historical=standin_cohort, accrual_a=2.0,
                              followup_f=2.0, pi=0.5, alpha=0.05)
    pi_rows = sweep(template, "pi", [0.0625, 0.125, 0.25, 0.5, 1.0, 2.0])
    pi_levels = [r["inflated_level"] for r in pi_rows]
    pi_ok = (all(r["error"] is None for r in pi_rows)
             and all(b > a for a, b in zip(pi_levels, pi_levels[1:])))

    f_grid = [2.0, 3.5, 5.0, 6.5, 8.0, 9.25, 10.5]
    f_rows = sweep(template, "followup", f_grid)
    f_levels = [r["inflated_level"] for r in f_rows]
    peak = int(np.argmax(f_levels))
    f_ok = (all(r["error"] is None for r in f_rows)
            and abs(2.0 + f_grid[peak] - horizon) < 0.5
            and f_levels[peak] > f_levels[0])
    report(9, pi_ok and f_ok,
           f"pi-sweep strictly increasing ({pi_levels[0]:.4f}->"
           f"{pi_levels[-1]:.4f}); followup-sweep peaks at f={f_grid[peak]} "
           f"(a+f={2.0 + f_grid[peak]:.1f} vs horizon {horizon:.2f})")

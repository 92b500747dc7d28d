"""Seedable Monte Carlo engine for empirical operating characteristics.

Trials are generated under the planning model: entries uniform on the
accrual window, administrative censoring ``C = a + f - entry``, Weibull
control hazard and a proportional experimental hazard with true ratio
``omega_true`` (1 = null).  Every replicate draws from its own PRNG
substream derived from ``(seed, replicate_index)``, so results are
bit-identical for a given configuration regardless of how replicates
are scheduled across workers (``REFCURVE_THREADS`` caps the pool).

``rejection_study`` measures rejection rates of the adjusted one-sample
test, the classical one-sample test (reference curve = control-arm
hazard estimate treated as deterministic) and the two-sample log-rank
test; ``table_repro`` re-runs the embedded benchmark grids and reports
per-cell deviations.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from . import _backend
from ._tables import ONE_SAMPLE_TYPE1, TWO_SAMPLE_COMPARISON
from .design import (TrialDesign, allocate_arms, required_accrual,
                     schoenfeld_sample_size)
from .errors import InputDataError
from .survival_core import GROUP_CONTROL, GROUP_EXPERIMENTAL, Cohort

__all__ = [
    "SimulationConfig",
    "SimulationReport",
    "generate_trial",
    "rejection_study",
    "statistic_sample",
    "table_repro",
    "VALID_TESTS",
]

VALID_TESTS = ("new", "oslr", "two_sample")


@dataclass(frozen=True)
class SimulationConfig:
    """One simulation cell.

    ``n_total`` overrides the design's rate*accrual when supplied; the
    accrual length is then re-derived as ``n_total / rate_r`` so the
    censoring law follows the realized sample size, matching the
    benchmark protocol where a cell is specified by ``n`` alone.
    """

    design: TrialDesign
    omega_true: float
    replications: int
    seed: int
    n_total: int | None = None
    tests: tuple[str, ...] = VALID_TESTS

    def __post_init__(self):
        object.__setattr__(self, "tests", tuple(self.tests))
        if not self.omega_true > 0.0:
            raise InputDataError("omega_true must be positive")
        if self.replications < 1:
            raise InputDataError("replications must be >= 1")
        if not 0 <= int(self.seed) < 2**64:
            raise InputDataError("seed must be a 64-bit unsigned integer")
        if not self.tests:
            raise InputDataError("tests must not be empty")
        for name in self.tests:
            if name not in VALID_TESTS:
                raise InputDataError(f"unknown test {name!r}")
        if self.n_total is not None and self.n_total < 1:
            raise InputDataError("n_total must be positive")

    def resolved(self) -> tuple[int, int, int, float]:
        """(n_total, n_control, n_experimental, accrual length)."""
        d = self.design
        if self.n_total is not None:
            n = int(self.n_total)
            accrual = n / d.rate_r
        else:
            accrual = d.require_accrual()
            # guard against float noise pushing r*a just past an integer
            n = math.ceil(d.rate_r * accrual - 1e-9)
        n_control, n_experimental = allocate_arms(n, d.pi)
        if n_control < 1 or n_experimental < 1:
            raise InputDataError("allocation produces empty arm")
        return n, n_control, n_experimental, accrual


@dataclass(frozen=True)
class SimulationReport:
    rates: dict
    std_errors: dict
    rejections: dict
    degenerate: dict
    replications: int
    seed: int
    n_total: int
    n_control: int
    n_experimental: int
    alpha: float
    omega_true: float

    def as_dict(self) -> dict:
        return {
            "rates": dict(self.rates),
            "std_errors": dict(self.std_errors),
            "rejections": dict(self.rejections),
            "degenerate": dict(self.degenerate),
            "replications": self.replications,
            "seed": self.seed,
            "n_total": self.n_total,
            "n_control": self.n_control,
            "n_experimental": self.n_experimental,
            "alpha": self.alpha,
            "omega_true": self.omega_true,
        }


def _draw_arm(rng, size, accrual, followup, scale_c, kappa, omega):
    entry = rng.uniform(0.0, accrual, size)
    cens = accrual + followup - entry
    event_time = (rng.exponential(1.0, size) / (scale_c * omega)) ** (1.0 / kappa)
    times = np.minimum(event_time, cens)
    return times, event_time <= cens


def _trial_arrays(config: SimulationConfig, replicate_index: int):
    if replicate_index < 0:
        raise InputDataError("replicate_index must be >= 0")
    n, n_control, n_experimental, accrual = config.resolved()
    d = config.design
    scale_c = d.curves().scale_c
    rng = np.random.default_rng([int(config.seed), int(replicate_index)])
    ta, ea = _draw_arm(rng, n_control, accrual, d.followup_f,
                       scale_c, d.kappa, 1.0)
    tb, eb = _draw_arm(rng, n_experimental, accrual, d.followup_f,
                       scale_c, d.kappa, config.omega_true)
    return ta, ea, tb, eb


def generate_trial(config: SimulationConfig,
                   replicate_index: int) -> tuple[Cohort, Cohort]:
    """Control and experimental cohorts of one replicate (deterministic)."""
    ta, ea, tb, eb = _trial_arrays(config, replicate_index)
    return (Cohort.from_arrays(ta, ea, GROUP_CONTROL),
            Cohort.from_arrays(tb, eb, GROUP_EXPERIMENTAL))


def _worker_count() -> int:
    raw = os.environ.get("REFCURVE_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _one_replicate(config, i, z_crit, reject, degen):
    ta, ea, tb, eb = _trial_arrays(config, i)
    tests = config.tests
    m_hat = var_new = var_oslr = 0.0
    if "new" in tests or "oslr" in tests:
        m_hat, var_new, var_oslr = _backend.one_sample_stats(ta, ea, tb, eb)
        # the adjusted variance dominates the classical one in every draw
        assert var_new >= var_oslr - 1e-9 * max(1.0, var_oslr)
    for j, name in enumerate(tests):
        if name == "two_sample":
            stat, var = _backend.two_sample_stats(ta, ea, tb, eb)
        else:
            stat = m_hat
            var = var_new if name == "new" else var_oslr
        if var <= 0.0:
            degen[i, j] = True
        else:
            reject[i, j] = abs(stat) >= z_crit * math.sqrt(var)


def rejection_study(config: SimulationConfig) -> SimulationReport:
    """Empirical rejection rates at the design alpha.

    Degenerate replicates (a test's variance estimate is zero, possible
    at very small arm sizes) count as non-rejections and are surfaced in
    the report's ``degenerate`` field per test.
    """
    n, n_control, n_experimental, _ = config.resolved()
    reps = config.replications
    z_crit = float(ndtri(1.0 - config.design.alpha / 2.0))
    reject = np.zeros((reps, len(config.tests)), dtype=bool)
    degen = np.zeros_like(reject)

    def run_block(indices):
        for i in indices:
            _one_replicate(config, i, z_crit, reject, degen)

    workers = _worker_count()
    if workers > 1 and reps > 1:
        blocks = [b for b in np.array_split(np.arange(reps), workers * 4)
                  if b.size]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run_block, blocks))
    else:
        run_block(range(reps))

    rates, ses, rejs, degs = {}, {}, {}, {}
    for j, name in enumerate(config.tests):
        k = int(reject[:, j].sum())
        p = k / reps
        rates[name] = p
        ses[name] = math.sqrt(p * (1.0 - p) / reps)
        rejs[name] = k
        degs[name] = int(degen[:, j].sum())
    return SimulationReport(
        rates=rates, std_errors=ses, rejections=rejs, degenerate=degs,
        replications=reps, seed=int(config.seed), n_total=n,
        n_control=n_control, n_experimental=n_experimental,
        alpha=config.design.alpha, omega_true=config.omega_true,
    )


def statistic_sample(config: SimulationConfig) -> dict:
    """Per-replicate one-sample statistics, for calibration checks.

    Returns arrays ``m_hat``, ``var_new``, ``var_oslr`` and the
    standardized ``z_new`` (NaN where the variance is degenerate).
    """
    reps = config.replications
    m = np.empty(reps)
    vn = np.empty(reps)
    vo = np.empty(reps)
    for i in range(reps):
        ta, ea, tb, eb = _trial_arrays(config, i)
        m[i], vn[i], vo[i] = _backend.one_sample_stats(ta, ea, tb, eb)
    with np.errstate(invalid="ignore", divide="ignore"):
        z = np.where(vn > 0.0, m / np.sqrt(vn), np.nan)
    return {"m_hat": m, "var_new": vn, "var_oslr": vo, "z_new": z}


def _cell_seeds(seed: int, index: int, count: int) -> list[int]:
    ss = np.random.SeedSequence([int(seed), int(index)])
    return [int(s) for s in ss.generate_state(count, np.uint64)]


_TABLE_S1 = {"T2": 0.5, "T3": 0.8, "T4": 0.2}


def table_repro(table_id: str, rows=None, replications: int = 1000,
                seed: int = 0) -> list[dict]:
    """Re-run benchmark grid cells and report deviations.

    ``table_id`` is "T1" (one-sample type-I grid, rows keyed by
    ``(kappa, n, pi)``) or "T2"/"T3"/"T4" (two-sample comparison grids
    for 1-year control survival 0.5/0.8/0.2, rows keyed by
    ``(kappa, omega0, scenario)`` with scenario 1 sized for the
    comparator and scenario 2 for the adjusted test).  ``rows=None``
    runs the whole grid.  Each cell gets an independent substream
    derived from ``seed``, so selections reproduce the same numbers as
    full runs.
    """
    if table_id == "T1":
        return _repro_one_sample(rows, replications, seed)
    if table_id in _TABLE_S1:
        return _repro_comparison(table_id, rows, replications, seed)
    raise InputDataError(f"unknown table {table_id!r}")


def _select(universe: list, rows) -> list:
    if rows is None:
        return list(universe)
    available = set(universe)
    selected = []
    for key in rows:
        key = tuple(key)
        if key not in available:
            raise InputDataError(f"row {key!r} is not in the table")
        selected.append(key)
    return selected


def _repro_one_sample(rows, replications, seed) -> list[dict]:
    universe = sorted(ONE_SAMPLE_TYPE1)
    out = []
    for key in _select(universe, rows):
        kappa, n, pi = key
        (cell_seed,) = _cell_seeds(seed, universe.index(key), 1)
        design = TrialDesign(accrual_a=None, followup_f=3.0, rate_r=100.0,
                             pi=pi, alpha=0.05, omega0=1.0, kappa=kappa,
                             s1=0.5)
        report = rejection_study(SimulationConfig(
            design=design, omega_true=1.0, replications=replications,
            seed=cell_seed, n_total=int(n), tests=("new", "oslr"),
        ))
        bench_new, bench_lr = ONE_SAMPLE_TYPE1[key]
        out.append({
            "table": "T1", "kappa": kappa, "n": int(n), "pi": pi,
            "alpha_new": report.rates["new"],
            "alpha_lr": report.rates["oslr"],
            "benchmark_alpha_new": bench_new,
            "benchmark_alpha_lr": bench_lr,
            "abs_err_new": abs(report.rates["new"] - bench_new),
            "abs_err_lr": abs(report.rates["oslr"] - bench_lr),
            "degenerate_new": report.degenerate["new"],
            "degenerate_lr": report.degenerate["oslr"],
            "replications": replications,
        })
    return out


def _repro_comparison(table_id, rows, replications, seed) -> list[dict]:
    s1 = _TABLE_S1[table_id]
    universe = sorted(k[1:] for k in TWO_SAMPLE_COMPARISON if k[0] == s1)
    out = []
    for key in _select(universe, rows):
        kappa, omega0, scenario = key
        bench = TWO_SAMPLE_COMPARISON[(s1, kappa, omega0, scenario)]
        base = TrialDesign(accrual_a=None, followup_f=3.0, rate_r=100.0,
                           pi=1.0, alpha=0.05, omega0=omega0, kappa=kappa,
                           s1=s1)
        if scenario == 1:
            sized = schoenfeld_sample_size(base, 0.8)
        else:
            sized = required_accrual(base, 0.8)
        null_seed, alt_seed = _cell_seeds(seed, universe.index(key), 2)

        def run(omega, run_seed):
            return rejection_study(SimulationConfig(
                design=base, omega_true=omega, replications=replications,
                seed=run_seed, n_total=sized.n_total,
                tests=("new", "two_sample"),
            ))

        null_rep = run(1.0, null_seed)
        alt_rep = run(omega0, alt_seed)
        row = {
            "table": table_id, "kappa": kappa, "omega0": omega0,
            "scenario": scenario,
            "n": sized.n_total, "benchmark_n": bench["n"],
            "alpha_new": null_rep.rates["new"],
            "alpha_lr": null_rep.rates["two_sample"],
            "power_new": alt_rep.rates["new"],
            "power_lr": alt_rep.rates["two_sample"],
            "replications": replications,
            "degenerate_null": max(null_rep.degenerate.values()),
            "degenerate_alt": max(alt_rep.degenerate.values()),
        }
        for field in ("alpha_new", "alpha_lr", "power_new", "power_lr"):
            row[f"benchmark_{field}"] = bench[field]
            row[f"abs_err_{field}"] = abs(row[field] - bench[field])
        out.append(row)
    return out

"""Command-line front end.

Four subcommands: ``test`` (run the tests on two CSV cohorts),
``design`` (sample-size planning), ``inflate`` (type-I-error inflation
of the classical test given historical data), ``simulate`` (Monte Carlo
operating characteristics).

Input CSV dialect: comma-separated, UTF-8, '.' decimal separator,
header row mandatory with at least ``time`` and ``status`` columns
(status 1 = event, 0 = censored); unknown columns are ignored.  Public
survival datasets often ship time in days and multi-valued status codes
(e.g. 0 = censored, 1 = transplant, 2 = death) — recode status to 0/1
before use and pass ``--time-unit days`` to convert times to years
(division by 365.25).

Exit codes: 0 success, 2 input error (bad flags, malformed CSV, empty
cohort), 3 numeric or degenerate-data error.  JSON output round-trips
exactly: every float is serialized with full shortest-repr precision.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from .design import TrialDesign, power as design_power, required_accrual, \
    schoenfeld_sample_size
from .errors import InputDataError
from .inflation import InflationInput, expected_var_new, expected_var_oslr, \
    inflated_level, sweep
from .simulation import VALID_TESTS, SimulationConfig, rejection_study
from .survival_core import GROUP_CONTROL, GROUP_EXPERIMENTAL, Cohort, \
    nelson_aalen
from .test_engine import classical_oslr, new_test, two_sample_logrank

DAYS_PER_YEAR = 365.25


def read_cohort_csv(path: str, group: str, time_unit: str = "years") -> Cohort:
    """Parse one cohort CSV; errors carry the offending line number."""
    times: list[float] = []
    events: list[bool] = []
    try:
        fh = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise InputDataError(f"{path}: {exc.strerror or exc}") from None
    with fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise InputDataError(f"{path}: empty file (header row required)")
        cols = {name.strip().lower(): name for name in reader.fieldnames}
        for required in ("time", "status"):
            if required not in cols:
                raise InputDataError(
                    f"{path}: header must contain a {required!r} column"
                )
        for lineno, row in enumerate(reader, start=2):
            raw_time = (row.get(cols["time"]) or "").strip()
            raw_status = (row.get(cols["status"]) or "").strip()
            try:
                t = float(raw_time)
            except ValueError:
                raise InputDataError(
                    f"{path}: line {lineno}: invalid time {raw_time!r}"
                ) from None
            if raw_status not in ("0", "1"):
                raise InputDataError(
                    f"{path}: line {lineno}: status must be 0 or 1, "
                    f"got {raw_status!r}"
                )
            if not t >= 0.0:
                raise InputDataError(
                    f"{path}: line {lineno}: time must be >= 0, got {t!r}"
                )
            times.append(t / DAYS_PER_YEAR if time_unit == "days" else t)
            events.append(raw_status == "1")
    if not times:
        raise InputDataError(f"{path}: empty cohort")
    return Cohort.from_arrays(times, events, group)


def _csv_text(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()),
                            lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _emit(payload, fmt: str, out: str | None, csv_rows: list[dict]) -> None:
    if fmt == "csv":
        text = _csv_text(csv_rows)
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _fail(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(3 if isinstance(exc, RuntimeError) else 2)


_format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
    show_default=True, help="Output format.")
_out_option = click.option(
    "--out", type=click.Path(dir_okay=False, writable=True), default=None,
    help="Write output to this file instead of stdout.")
_time_unit_option = click.option(
    "--time-unit", type=click.Choice(["years", "days"]), default="years",
    show_default=True, help="Unit of the CSV time column; days are "
    "converted to years.")


@click.group()
def main():
    """One-sample log-rank testing with reference-curve variability."""


@main.command("test")
@click.option("--control", "control_path", required=True,
              type=click.Path(dir_okay=False),
              help="CSV with the control (reference) cohort.")
@click.option("--experimental", "experimental_path", required=True,
              type=click.Path(dir_okay=False),
              help="CSV with the experimental cohort.")
@click.option("--alpha", type=click.FloatRange(0.0, 1.0, min_open=True,
              max_open=True), default=0.05, show_default=True,
              help="Two-sided significance level.")
@click.option("--mode", type=click.Choice(["new", "oslr", "two_sample",
              "all"]), default="new", show_default=True,
              help="Which test(s) to run; 'oslr' treats the control-arm "
              "hazard estimate as a deterministic reference.")
@_time_unit_option
@_format_option
@_out_option
def cmd_test(control_path, experimental_path, alpha, mode, time_unit, fmt,
             out):
    """Run the one-sample or two-sample tests on two cohort CSVs."""
    try:
        control = read_cohort_csv(control_path, GROUP_CONTROL, time_unit)
        experimental = read_cohort_csv(experimental_path,
                                       GROUP_EXPERIMENTAL, time_unit)
        modes = ["new", "oslr", "two_sample"] if mode == "all" else [mode]
        rows = []
        for name in modes:
            if name == "new":
                result = new_test(control, experimental, alpha)
            elif name == "oslr":
                result = classical_oslr(nelson_aalen(control), experimental,
                                        alpha)
            else:
                result = two_sample_logrank(control, experimental, alpha)
            rows.append({"mode": name, **result.as_dict()})
        payload = rows[0] if len(rows) == 1 else rows
        _emit(payload, fmt, out, rows)
    except (ValueError, RuntimeError) as exc:
        _fail(exc)


@main.command("design")
@click.option("--kappa", type=float, required=True,
              help="Weibull shape of the control hazard.")
@click.option("--s1", type=click.FloatRange(0.0, 1.0, min_open=True,
              max_open=True), required=True,
              help="1-year control survival probability.")
@click.option("--omega0", type=float, required=True,
              help="Planning hazard ratio (experimental vs control).")
@click.option("--rate", "rate_r", type=float, default=100.0,
              show_default=True, help="Accrual rate per year.")
@click.option("--f", "followup_f", type=float, default=3.0,
              show_default=True, help="Follow-up period after accrual.")
@click.option("--pi", type=float, default=1.0, show_default=True,
              help="Experimental-to-control allocation ratio.")
@click.option("--alpha", type=click.FloatRange(0.0, 1.0, min_open=True,
              max_open=True), default=0.05, show_default=True)
@click.option("--power", "target_power", type=click.FloatRange(
              0.0, 1.0, min_open=True, max_open=True), default=0.8,
              show_default=True, help="Target power at the planning "
              "alternative.")
@click.option("--method", type=click.Choice(["new", "schoenfeld"]),
              default="new", show_default=True,
              help="Size for the adjusted test or for the two-sample "
              "log-rank comparator (expected-event counting).")
@click.option("--power-curve", "power_curve_path",
              type=click.Path(dir_okay=False, writable=True), default=None,
              help="Also write a CSV of accrual length vs adjusted-test "
              "power around the solution.")
@_out_option
def cmd_design(kappa, s1, omega0, rate_r, followup_f, pi, alpha,
               target_power, method, power_curve_path, out):
    """Compute the required sample size for the planning model."""
    try:
        design = TrialDesign(accrual_a=None, followup_f=followup_f,
                             rate_r=rate_r, pi=pi, alpha=alpha,
                             omega0=omega0, kappa=kappa, s1=s1)
        if method == "schoenfeld":
            result = schoenfeld_sample_size(design, target_power)
        else:
            result = required_accrual(design, target_power)
        if power_curve_path:
            from dataclasses import replace
            import numpy as np
            grid = np.linspace(0.1 * result.accrual_a,
                               1.3 * result.accrual_a, 25)
            rows = [{"accrual_a": float(a),
                     "power": design_power(replace(design, accrual_a=a))}
                    for a in grid]
            with open(power_curve_path, "w", encoding="utf-8") as fh:
                fh.write(_csv_text(rows))
        payload = {"method": method, **result.as_dict()}
        _emit(payload, "json", out, [payload])
    except (ValueError, RuntimeError) as exc:
        _fail(exc)


def _parse_grid(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputDataError(f"invalid grid {text!r}: expected "
                             "comma-separated numbers") from None


@main.command("inflate")
@click.option("--historical", "historical_path", required=True,
              type=click.Path(dir_okay=False),
              help="CSV with the historical control cohort.")
@click.option("--a", "accrual_a", type=float, required=True,
              help="Planned accrual length of the prospective trial.")
@click.option("--f", "followup_f", type=float, default=0.0,
              show_default=True, help="Planned follow-up period.")
@click.option("--pi", type=float, default=None,
              help="Planned experimental-to-historical allocation ratio "
              "(required unless sweeping over pi).")
@click.option("--alpha", type=click.FloatRange(0.0, 1.0, min_open=True,
              max_open=True), default=0.05, show_default=True)
@click.option("--sweep-axis", type=click.Choice(["pi", "followup"]),
              default=None, help="Sweep the level along this axis.")
@click.option("--sweep-grid", default=None,
              help="Comma-separated grid for the sweep axis.")
@_time_unit_option
@_format_option
@_out_option
def cmd_inflate(historical_path, accrual_a, followup_f, pi, alpha,
                sweep_axis, sweep_grid, time_unit, fmt, out):
    """Actual level of the classical test given a historical cohort."""
    try:
        if (sweep_axis is None) != (sweep_grid is None):
            raise InputDataError(
                "--sweep-axis and --sweep-grid must be given together")
        historical = read_cohort_csv(historical_path, GROUP_CONTROL,
                                     time_unit)
        if sweep_axis is None:
            if pi is None:
                raise InputDataError("--pi is required")
            inp = InflationInput(historical=historical, accrual_a=accrual_a,
                                 followup_f=followup_f, pi=pi, alpha=alpha)
            payload = {
                "expected_var_oslr": expected_var_oslr(inp),
                "expected_var_new": expected_var_new(inp),
                "inflated_level": inflated_level(inp),
                "accrual_a": accrual_a, "followup_f": followup_f,
                "pi": pi, "alpha": alpha,
            }
            _emit(payload, fmt, out, [payload])
            return
        grid = _parse_grid(sweep_grid)
        if not grid:
            raise InputDataError("sweep grid is empty")
        template_pi = pi if pi is not None else grid[0]
        if sweep_axis == "pi" and pi is None and template_pi <= 0.0:
            raise InputDataError("pi grid values must be positive")
        inp = InflationInput(historical=historical, accrual_a=accrual_a,
                             followup_f=followup_f, pi=template_pi,
                             alpha=alpha)
        rows = sweep(inp, sweep_axis, grid)
        _emit(rows, fmt, out, rows)
    except (ValueError, RuntimeError) as exc:
        _fail(exc)


@main.command("simulate")
@click.option("--kappa", type=float, required=True,
              help="Weibull shape of the control hazard.")
@click.option("--s1", type=click.FloatRange(0.0, 1.0, min_open=True,
              max_open=True), required=True,
              help="1-year control survival probability.")
@click.option("--omega", "omega_true", type=float, default=1.0,
              show_default=True, help="True hazard ratio generating the "
              "experimental arm (1 = null).")
@click.option("--n", "n_total", type=click.IntRange(min=1), default=None,
              help="Total sample size (accrual length is n/rate).")
@click.option("--a", "accrual_a", type=float, default=None,
              help="Accrual length in years (alternative to --n).")
@click.option("--rate", "rate_r", type=float, default=100.0,
              show_default=True, help="Accrual rate per year.")
@click.option("--f", "followup_f", type=float, default=3.0,
              show_default=True, help="Follow-up period after accrual.")
@click.option("--pi", type=float, required=True,
              help="Experimental-to-control allocation ratio.")
@click.option("--alpha", type=click.FloatRange(0.0, 1.0, min_open=True,
              max_open=True), default=0.05, show_default=True)
@click.option("--reps", "replications", type=click.IntRange(min=1),
              default=1000, show_default=True)
@click.option("--seed", type=click.IntRange(min=0), required=True,
              help="PRNG seed; required, there is no wall-clock default.")
@click.option("--tests", multiple=True, type=click.Choice(VALID_TESTS),
              help="Subset of tests to run (default: all three).")
@_format_option
@_out_option
def cmd_simulate(kappa, s1, omega_true, n_total, accrual_a, rate_r,
                 followup_f, pi, alpha, replications, seed, tests, fmt, out):
    """Monte Carlo rejection rates under the planning model."""
    try:
        if n_total is None and accrual_a is None:
            raise InputDataError("one of --n or --a is required")
        design = TrialDesign(accrual_a=accrual_a, followup_f=followup_f,
                             rate_r=rate_r, pi=pi, alpha=alpha, omega0=1.0,
                             kappa=kappa, s1=s1)
        config = SimulationConfig(
            design=design, omega_true=omega_true, replications=replications,
            seed=seed, n_total=n_total,
            tests=tuple(tests) if tests else VALID_TESTS,
        )
        report = rejection_study(config)
        payload = report.as_dict()
        rows = [{
            "test": name,
            "rate": report.rates[name],
            "std_error": report.std_errors[name],
            "rejections": report.rejections[name],
            "degenerate": report.degenerate[name],
            "replications": report.replications,
            "n_total": report.n_total,
            "seed": report.seed,
        } for name in config.tests]
        _emit(payload, fmt, out, rows)
    except (ValueError, RuntimeError) as exc:
        _fail(exc)


if __name__ == "__main__":
    main()

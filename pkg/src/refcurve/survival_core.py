"""Counting-process primitives and nonparametric estimators.

Everything here works on right-censored observations ``(time, event)``:
``time`` is the minimum of the event time and the censoring time, and
``event`` says which one was observed.  The estimators are returned as
:class:`StepFunction` objects so downstream code can evaluate, merge and
integrate them without re-deriving jump grids.

Conventions used throughout (and relied on by the test modules):

* tied times contribute jointly; a subject observed at ``t`` is still at
  risk at ``t`` (the at-risk count is left-continuous),
* 0/0 := 0,
* beyond the last observed time every step function extrapolates as a
  constant, which is how "evaluation at infinity" is realized,
* times are plain float64 and ties mean bitwise-equal floats; input data
  is assumed pre-rounded, there is no epsilon tie logic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InputDataError

GROUP_CONTROL = "A"
GROUP_EXPERIMENTAL = "B"

__all__ = [
    "GROUP_CONTROL",
    "GROUP_EXPERIMENTAL",
    "SubjectRecord",
    "Cohort",
    "StepFunction",
    "LeftContinuousStepFunction",
    "counting_process",
    "at_risk",
    "nelson_aalen",
    "na_variance",
    "kaplan_meier",
]


@dataclass(frozen=True)
class SubjectRecord:
    """One observation: follow-up time, event indicator, group label."""

    time: float
    event: bool
    group: str = GROUP_CONTROL

    def __post_init__(self):
        t = float(self.time)
        if not np.isfinite(t) or t < 0.0:
            raise InputDataError(f"time must be finite and >= 0, got {self.time!r}")
        if self.group not in (GROUP_CONTROL, GROUP_EXPERIMENTAL):
            raise InputDataError(f"group must be 'A' or 'B', got {self.group!r}")
        object.__setattr__(self, "time", t)
        object.__setattr__(self, "event", bool(self.event))


class Cohort:
    """Immutable collection of observations from a single group.

    Iteration order is preserved but irrelevant to every estimator.
    """

    __slots__ = ("times", "events", "group")

    def __init__(self, records: Iterable[SubjectRecord] = (), group: str | None = None):
        records = tuple(records)
        groups = {r.group for r in records}
        if len(groups) > 1 or (group is not None and groups - {group}):
            raise InputDataError("cohort records carry mixed group labels")
        if group is None:
            group = groups.pop() if groups else GROUP_CONTROL
        times = np.array([r.time for r in records], dtype=np.float64)
        events = np.array([r.event for r in records], dtype=bool)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "events", events)
        object.__setattr__(self, "group", group)
        self.times.setflags(write=False)
        self.events.setflags(write=False)

    @classmethod
    def from_arrays(cls, times, events, group: str = GROUP_CONTROL) -> "Cohort":
        """Build a cohort directly from parallel time/event arrays."""
        times = np.asarray(times, dtype=np.float64)
        events = np.asarray(events, dtype=bool)
        if times.ndim != 1 or times.shape != events.shape:
            raise InputDataError("times and events must be 1-d arrays of equal length")
        if times.size and (not np.all(np.isfinite(times)) or times.min() < 0.0):
            raise InputDataError("times must be finite and >= 0")
        self = cls.__new__(cls)
        object.__setattr__(self, "times", times.copy())
        object.__setattr__(self, "events", events.copy())
        object.__setattr__(self, "group", group)
        self.times.setflags(write=False)
        self.events.setflags(write=False)
        return self

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("Cohort is immutable")

    @property
    def n(self) -> int:
        return int(self.times.size)

    def __len__(self) -> int:
        return self.n

    @property
    def records(self) -> tuple[SubjectRecord, ...]:
        return tuple(
            SubjectRecord(t, bool(e), self.group)
            for t, e in zip(self.times, self.events)
        )

    def n_events(self) -> int:
        return int(self.events.sum())

    def max_time(self) -> float:
        if self.n == 0:
            raise InputDataError("empty cohort")
        return float(self.times.max())

    def __repr__(self):
        return f"Cohort(n={self.n}, events={self.n_events()}, group={self.group!r})"


class StepFunction:
    """Right-continuous piecewise-constant function of time.

    ``initial_value`` holds on ``[0, jump_times[0])``, ``values[k]`` on
    ``[jump_times[k], jump_times[k+1])`` and the last value extends
    forever (constant extrapolation).  Evaluation uses binary search.
    """

    __slots__ = ("jump_times", "values", "initial_value")

    def __init__(self, jump_times, values, initial_value: float = 0.0):
        jump_times = np.asarray(jump_times, dtype=np.float64)
        values = np.asarray(values, dtype=np.float64)
        if jump_times.shape != values.shape or jump_times.ndim != 1:
            raise InputDataError("jump_times and values must be 1-d of equal length")
        if jump_times.size and np.any(np.diff(jump_times) <= 0.0):
            raise InputDataError("jump_times must be strictly increasing")
        object.__setattr__(self, "jump_times", jump_times)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "initial_value", float(initial_value))
        self.jump_times.setflags(write=False)
        self.values.setflags(write=False)

    def __setattr__(self, name, value):
        raise AttributeError("StepFunction is immutable")

    def __call__(self, s):
        """Evaluate right-continuously at scalar or array ``s``."""
        s = np.asarray(s, dtype=np.float64)
        idx = np.searchsorted(self.jump_times, s, side="right")
        padded = np.concatenate(([self.initial_value], self.values))
        out = padded[idx]
        return float(out) if out.ndim == 0 else out

    def eval_left(self, s):
        """Left-continuous evaluation: at a jump, return the pre-jump value."""
        s = np.asarray(s, dtype=np.float64)
        idx = np.searchsorted(self.jump_times, s, side="left")
        padded = np.concatenate(([self.initial_value], self.values))
        out = padded[idx]
        return float(out) if out.ndim == 0 else out

    def merge_grid(self, other: "StepFunction") -> np.ndarray:
        """Union of both jump grids (for aligned evaluation downstream)."""
        return np.union1d(self.jump_times, other.jump_times)

    def integrate(self, lo: float, hi: float) -> float:
        """Exact ``∫_lo^hi`` of the step function (closed form, no quadrature)."""
        if hi <= lo:
            return 0.0
        knots = self.jump_times[(self.jump_times > lo) & (self.jump_times < hi)]
        grid = np.concatenate(([lo], knots, [hi]))
        # midpoints are safe under either continuity convention
        vals = self(0.5 * (grid[:-1] + grid[1:]))
        return float(np.sum(np.atleast_1d(vals) * np.diff(grid)))

    def __repr__(self):
        k = self.jump_times.size
        return f"StepFunction({k} jumps, initial={self.initial_value})"


class LeftContinuousStepFunction(StepFunction):
    """Step function whose *call* convention is the pre-jump value.

    Used for the at-risk process, which is left-continuous by definition;
    internally it is stored on the same right-continuous representation.
    """

    __slots__ = ()

    def __call__(self, s):
        return self.eval_left(s)


def _require_nonempty(cohort: Cohort):
    if cohort.n == 0:
        raise InputDataError("empty cohort")


def _event_table(times: np.ndarray, events: np.ndarray):
    """Distinct observed times with event counts and pre-jump at-risk counts.

    Returns ``(t, d, y, c)``: distinct sorted times, events at each,
    number at risk at each (subjects with time >= t), and multiplicities.
    """
    order = np.argsort(times, kind="stable")
    ts = times[order]
    es = events[order]
    t, start = np.unique(ts, return_index=True)
    d = np.add.reduceat(es.astype(np.int64), start) if ts.size else np.array([], dtype=np.int64)
    y = ts.size - start
    c = np.diff(np.append(start, ts.size))
    return t, d, y, c


def counting_process(cohort: Cohort) -> StepFunction:
    """N(s) = number of observed events up to and including s."""
    _require_nonempty(cohort)
    t, d, _, _ = _event_table(cohort.times, cohort.events)
    mask = d > 0
    return StepFunction(t[mask], np.cumsum(d[mask]).astype(np.float64), 0.0)


def at_risk(cohort: Cohort) -> LeftContinuousStepFunction:
    """Y(s) = number of subjects with observed time >= s (left-continuous)."""
    _require_nonempty(cohort)
    t, _, y, c = _event_table(cohort.times, cohort.events)
    return LeftContinuousStepFunction(t, (y - c).astype(np.float64), float(cohort.n))


def nelson_aalen(cohort: Cohort) -> StepFunction:
    """Cumulative-hazard estimate: sum of d_t / Y(t) over event times <= s."""
    _require_nonempty(cohort)
    t, d, y, _ = _event_table(cohort.times, cohort.events)
    mask = d > 0
    return StepFunction(t[mask], np.cumsum(d[mask] / y[mask]), 0.0)


def na_variance(cohort: Cohort) -> StepFunction:
    """Variance function of the cumulative-hazard estimate, scaled by n.

    sigma(s) = n * sum over event times t <= s of d_t / Y(t)^2.
    """
    _require_nonempty(cohort)
    t, d, y, _ = _event_table(cohort.times, cohort.events)
    mask = d > 0
    vals = np.cumsum(d[mask] / (y[mask].astype(np.float64) ** 2)) * cohort.n
    return StepFunction(t[mask], vals, 0.0)


def kaplan_meier(cohort: Cohort, target: str = "event") -> StepFunction:
    """Product-limit survival estimate for the event or censoring time.

    ``target="censoring"`` swaps the roles of the event and censoring
    flags, giving the estimated survival function of the censoring
    variable instead.
    """
    _require_nonempty(cohort)
    if target not in ("event", "censoring"):
        raise InputDataError(f"target must be 'event' or 'censoring', got {target!r}")
    flags = cohort.events if target == "event" else ~cohort.events
    t, d, y, _ = _event_table(cohort.times, flags)
    mask = d > 0
    return StepFunction(t[mask], np.cumprod(1.0 - d[mask] / y[mask]), 1.0)

"""Analytic power and sample-size planning.

The planning model: control event times are Weibull with cumulative
hazard ``Lambda(t) = -log(s1) * t**kappa`` (``s1`` = 1-year control
survival), the experimental hazard is proportional with planning ratio
``omega0 < 1``, patients accrue uniformly at rate ``r`` over ``[0, a]``
and are followed for ``f`` more years, so censoring is U(f, a+f) in both
arms and there is no loss to follow-up.

Under this model the adjusted one-sample log-rank statistic is
approximately normal with unit variance and mean ``log(omega0) * mu /
sigma`` where

    mu      = sqrt(n) * sqrt(pi/(1+pi)) * I,
    I       = integral of F_T(u) f_C(u) du          (event fraction),
    sigma^2 = I + 2 pi * integral of sigma_A(u) f_X(u) S_X(u) du,

with X = min(T, C) and ``sigma_A`` the limit of the scaled variance
function of the control cumulative-hazard estimate,

    sigma_A(s) = integral_0^s  lambda(u) / (S_T(u) S_C(u)) du.

``sigma_A`` diverges logarithmically at the accrual horizon ``a+f``, but
only where the outer integrand's ``S_C`` factors vanish; the outer
integral is finite and is computed by adaptive quadrature with explicit
geometric refinement toward the horizon.  The inner integral is memoized
on the outer scheme's nodes and evaluated on the ``w = u**kappa`` axis,
which removes the hazard's ``u**(kappa-1)`` singularity at zero.
"""

from __future__ import annotations

import math
from bisect import bisect_right, insort
from dataclasses import dataclass, replace

import numpy as np
from scipy.integrate import quad
from scipy.special import ndtr, ndtri

from .errors import DesignInfeasibleError, InputDataError, QuadratureError

__all__ = [
    "TrialDesign",
    "DesignResult",
    "WeibullCurves",
    "weibull_cum_hazard",
    "allocate_arms",
    "mu_sigma",
    "power",
    "required_accrual",
    "schoenfeld_events",
    "schoenfeld_sample_size",
    "drift_variance_functions",
]

ABS_TOL = 1e-9          # absolute tolerance of the outer quadratures
INNER_TOL = 1e-12       # per-leg tolerance of the memoized inner integral
ACCRUAL_TOL = 1e-4      # bisection width on the accrual length, in years
ACCRUAL_CAP = 100.0     # beyond this the design is declared infeasible
LOG_SURV_CAP = 500.0    # truncate integrals once S_T < exp(-cap): below
                        # double-precision relevance, avoids overflow of
                        # the 1/S_T factor inside sigma_A at large kappa


@dataclass(frozen=True)
class WeibullCurves:
    """Cumulative hazard ``c * t**kappa`` and its derived curves."""

    scale_c: float
    kappa: float

    def cum_hazard(self, t):
        return self.scale_c * np.power(t, self.kappa)

    def hazard(self, t):
        return self.scale_c * self.kappa * np.power(t, self.kappa - 1.0)

    def surv(self, t):
        return np.exp(-self.cum_hazard(t))

    def cdf(self, t):
        return -np.expm1(-self.cum_hazard(t))

    def dens(self, t):
        return self.hazard(t) * self.surv(t)

    def time_at_cum_hazard(self, q: float) -> float:
        """Inverse of the cumulative hazard."""
        return (q / self.scale_c) ** (1.0 / self.kappa)


def weibull_cum_hazard(s1: float, kappa: float) -> WeibullCurves:
    """Planning curves for 1-year survival ``s1`` and shape ``kappa``."""
    if not 0.0 < s1 < 1.0:
        raise InputDataError(f"s1 must be in (0, 1), got {s1!r}")
    if not kappa > 0.0:
        raise InputDataError(f"kappa must be > 0, got {kappa!r}")
    return WeibullCurves(-math.log(s1), kappa)


@dataclass(frozen=True)
class TrialDesign:
    """Planning parameters; ``accrual_a`` may be None for sizing calls."""

    accrual_a: float | None
    followup_f: float
    rate_r: float
    pi: float
    alpha: float
    omega0: float
    kappa: float
    s1: float

    def __post_init__(self):
        if self.accrual_a is not None and not self.accrual_a > 0.0:
            raise InputDataError("accrual_a must be positive (or None)")
        if self.followup_f < 0.0:
            raise InputDataError("followup_f must be >= 0")
        if not self.rate_r > 0.0:
            raise InputDataError("rate_r must be positive")
        if not self.pi > 0.0:
            raise InputDataError("pi must be positive")
        if not 0.0 < self.alpha < 1.0:
            raise InputDataError("alpha must be in (0, 1)")
        if not 0.0 < self.omega0 <= 1.0:
            raise InputDataError("omega0 must be in (0, 1]")
        weibull_cum_hazard(self.s1, self.kappa)  # range checks

    def curves(self) -> WeibullCurves:
        return weibull_cum_hazard(self.s1, self.kappa)

    def require_accrual(self) -> float:
        if self.accrual_a is None:
            raise InputDataError("design has no accrual length set")
        return self.accrual_a


@dataclass(frozen=True)
class DesignResult:
    accrual_a: float
    n_total: int
    n_control: int
    n_experimental: int
    achieved_power: float
    mu: float
    sigma: float

    def as_dict(self) -> dict:
        return {
            "accrual_a": self.accrual_a,
            "n_total": self.n_total,
            "n_control": self.n_control,
            "n_experimental": self.n_experimental,
            "achieved_power": self.achieved_power,
            "mu": self.mu,
            "sigma": self.sigma,
        }


def allocate_arms(n_total: int, pi: float) -> tuple[int, int]:
    """Split ``n_total`` into (control, experimental) sizes near ratio pi.

    Control gets round(n / (1 + pi)), half away from zero; the tables and
    the simulation engine share this convention so sizes stay consistent.
    """
    n_control = int(math.floor(n_total / (1.0 + pi) + 0.5))
    return n_control, n_total - n_control


def _quad(fn, lo, hi, tol=ABS_TOL, points=None):
    """scipy quad with the package's failure contract."""
    if hi <= lo:
        return 0.0
    kwargs = {}
    if points is not None:
        pts = [p for p in points if lo < p < hi]
        if pts:
            kwargs["points"] = pts
    res = quad(fn, lo, hi, epsabs=tol, epsrel=1e-10, limit=500,
               full_output=1, **kwargs)
    val, abserr = res[0], res[1]
    if len(res) > 3 and abserr > max(tol, abs(val) * 1e-8):
        raise QuadratureError(
            f"quadrature did not converge on [{lo:g}, {hi:g}]: achieved "
            f"absolute tolerance {abserr:.2e} (requested {tol:.2e})"
        )
    return val


def _integrate_toward_endpoint(fn, lo, hi, tol=ABS_TOL, points=None):
    """Integral over [lo, hi) of an integrand that decays to zero at ``hi``
    with unbounded derivatives (integrable endpoint behavior).

    Geometric subdivision accumulates slices toward the endpoint; once a
    slice contributes less than ``tol`` the remaining tail is of the same
    order and the sum is accepted.
    """
    width = hi - lo
    if width <= 0.0:
        return 0.0
    left = lo
    total = 0.0
    for k in range(1, 64):
        cut = hi - width / 2.0 ** k
        piece = _quad(fn, left, cut, tol=tol, points=points if k == 1 else None)
        total += piece
        left = cut
        if k > 1 and abs(piece) < tol:
            return total
    raise QuadratureError(
        f"endpoint refinement near {hi:g} stalled: last slice {piece:.2e} "
        f"exceeds the requested tolerance {tol:.2e}"
    )


class _SigmaA:
    """Memoized inner integral ``sigma_A`` of the nested variance formula.

    Values are cached at every requested node; a new node only costs the
    integral from the nearest smaller cached node.  The integration runs
    on the ``w = u**kappa`` axis where

        sigma_A(u) = c * ∫_0^{u^kappa} exp(c w) * cens(w^{1/kappa}) dw,

    with ``cens(v) = max(1, a / (a + f - v))`` the reciprocal censoring
    survival; the substitution removes the hazard singularity at zero.
    Per-call state only — instances are not shared.
    """

    def __init__(self, curves: WeibullCurves, accrual_a: float, followup_f: float):
        self._c = curves.scale_c
        self._kappa = curves.kappa
        self._a = accrual_a
        self._horizon = accrual_a + followup_f
        self._w_kink = followup_f ** curves.kappa if followup_f > 0.0 else None
        self._nodes: list[float] = [0.0]
        self._vals: list[float] = [0.0]

    def _integrand(self, w: float) -> float:
        v = w ** (1.0 / self._kappa)
        gap = self._horizon - v
        cens = 1.0 if gap >= self._a else self._a / gap
        return self._c * math.exp(min(self._c * w, 700.0)) * cens

    def __call__(self, u: float) -> float:
        if u <= 0.0:
            return 0.0
        if u >= self._horizon:
            raise ValueError("sigma_A diverges at the accrual horizon")
        w = u ** self._kappa
        i = bisect_right(self._nodes, w) - 1
        base_w, base_val = self._nodes[i], self._vals[i]
        if base_w == w:
            return base_val
        points = [self._w_kink] if self._w_kink is not None else None
        val = base_val + _quad(self._integrand, base_w, w,
                               tol=INNER_TOL, points=points)
        insort(self._nodes, w)
        self._vals.insert(self._nodes.index(w), val)
        return val


class _PlanningModel:
    """All design integrals for one (design, accrual) configuration."""

    def __init__(self, design: TrialDesign):
        self.design = design
        self.a = design.require_accrual()
        self.f = design.followup_f
        self.horizon = self.a + self.f
        self.curves = design.curves()
        # stay clear of exp overflow in 1/S_T: beyond u_hi the outer
        # integrands are below double-precision relevance anyway
        self.u_hi = min(self.horizon,
                        self.curves.time_at_cum_hazard(LOG_SURV_CAP))
        self.sigma_a = _SigmaA(self.curves, self.a, self.f)

    # survival / density of the design censoring C ~ U(f, a+f)
    def cens_surv(self, u: float) -> float:
        if u <= self.f:
            return 1.0
        if u >= self.horizon:
            return 0.0
        return (self.horizon - u) / self.a

    def cens_dens(self, u: float) -> float:
        return 1.0 / self.a if self.f <= u <= self.horizon else 0.0

    def event_fraction_upto(self, s: float) -> float:
        """∫ F_T(s ^ u) f_C(u) du — the drift integral truncated at s."""
        w = self.curves
        if s <= self.f:
            return float(w.cdf(s))
        hi = min(s, self.horizon)
        val = _quad(lambda u: w.cdf(u) / self.a, self.f, hi, tol=ABS_TOL)
        if s < self.horizon:
            val += float(w.cdf(s)) * (self.horizon - s) / self.a
        return val

    def event_fraction(self) -> float:
        return self.event_fraction_upto(self.horizon)

    def _outer_integrand(self, u: float) -> float:
        w = self.curves
        st = float(w.surv(u))
        ft = float(w.dens(u))
        sc = self.cens_surv(u)
        fc = self.cens_dens(u)
        f_x = ft * sc + st * fc
        s_x = st * sc
        return self.sigma_a(u) * f_x * s_x

    def variance_correction_upto(self, s: float) -> float:
        """∫_0^inf sigma_A(s ^ u) f_X(u) S_X(u) du (before the 2*pi factor).

        For finite s the tail beyond s is closed-form: integrating
        f_X S_X = -(S_X^2)'/2 gives sigma_A(s) * S_X(s)^2 / 2.
        """
        if s <= 0.0:
            return 0.0
        if s >= self.u_hi:
            return self.variance_correction()
        head = _quad(self._outer_integrand, 0.0, s, tol=ABS_TOL,
                     points=[self.f])
        st = float(self.curves.surv(s))
        s_x = st * self.cens_surv(s)
        return head + self.sigma_a(s) * s_x * s_x / 2.0

    def variance_correction(self) -> float:
        """Full outer integral, with geometric refinement at the horizon."""
        if self.u_hi < self.horizon:
            # integrand already ~exp(-LOG_SURV_CAP) at u_hi: plain quadrature
            return _quad(self._outer_integrand, 0.0, self.u_hi,
                         tol=ABS_TOL, points=[self.f])
        head = _quad(self._outer_integrand, 0.0, self.f, tol=ABS_TOL)
        tail = _integrate_toward_endpoint(self._outer_integrand,
                                          self.f, self.horizon, tol=ABS_TOL)
        return head + tail

    def mu_sigma(self) -> tuple[float, float]:
        d = self.design
        n_real = d.rate_r * self.a
        frac = self.event_fraction()
        mu = math.sqrt(n_real) * math.sqrt(d.pi / (1.0 + d.pi)) * frac
        sigma_sq = frac + 2.0 * d.pi * self.variance_correction()
        return mu, math.sqrt(sigma_sq)


def mu_sigma(design: TrialDesign) -> tuple[float, float]:
    """Mean and standard deviation of the planning-model normal limit."""
    return _PlanningModel(design).mu_sigma()


def power(design: TrialDesign) -> float:
    """Probability of rejection under the planning alternative."""
    mu, sigma = mu_sigma(design)
    z_alpha = float(ndtri(design.alpha / 2.0))
    return float(ndtr(z_alpha - math.log(design.omega0) * mu / sigma))


def _bracket_and_bisect(predicate, lo: float, hi: float):
    """Smallest x in (lo, cap] with predicate(x) true, via doubling + bisection.

    ``predicate`` must be monotone (false below the root, true above).
    """
    while not predicate(hi):
        lo, hi = hi, hi * 2.0
        if hi > ACCRUAL_CAP:
            raise DesignInfeasibleError("design infeasible")
    while hi - lo > ACCRUAL_TOL:
        mid = 0.5 * (lo + hi)
        if predicate(mid):
            hi = mid
        else:
            lo = mid
    return hi


def required_accrual(design: TrialDesign, target_power: float = 0.8) -> DesignResult:
    """Smallest accrual length whose analytic power reaches the target.

    The returned ``n_total`` is ceil(rate * accrual); no further rounding
    is applied (unlike the comparator path, which rounds up to even).
    """
    if not design.alpha / 2.0 < target_power < 1.0:
        raise InputDataError("target power must lie in (alpha/2, 1)")

    def reaches(a: float) -> bool:
        return power(replace(design, accrual_a=a)) >= target_power

    a = _bracket_and_bisect(reaches, 0.0, 0.01)
    final = replace(design, accrual_a=a)
    mu, sigma = mu_sigma(final)
    n_total = math.ceil(design.rate_r * a)
    n_control, n_experimental = allocate_arms(n_total, design.pi)
    return DesignResult(
        accrual_a=a,
        n_total=n_total,
        n_control=n_control,
        n_experimental=n_experimental,
        achieved_power=power(final),
        mu=mu,
        sigma=sigma,
    )


def schoenfeld_events(alpha: float, target_power: float, omega0: float,
                      pi: float = 1.0) -> float:
    """Required event count of the two-sample log-rank comparator (unrounded)."""
    if not 0.0 < omega0 < 1.0:
        raise InputDataError("omega0 must be in (0, 1) for event sizing")
    if not alpha / 2.0 < target_power < 1.0:
        raise InputDataError("target power must lie in (alpha/2, 1)")
    z = float(ndtri(1.0 - alpha / 2.0)) + float(ndtri(target_power))
    return z * z * (1.0 + pi) ** 2 / (pi * math.log(omega0) ** 2)


def _expected_events(design: TrialDesign, a: float) -> float:
    """Expected pooled events by analysis time under the planning alternative."""
    w = design.curves()
    om = design.omega0

    def integrand(t):
        st = float(w.surv(t))
        return 2.0 - st - st ** om

    return design.rate_r / 2.0 * _quad(
        integrand, design.followup_f, a + design.followup_f, tol=ABS_TOL
    )


def schoenfeld_sample_size(design: TrialDesign, target_power: float = 0.8) -> DesignResult:
    """Comparator sizing: accrual solving expected events = required events.

    Requires equal allocation (the per-arm accrual rate is r/2).  The
    total is rounded up to an even integer so the arms split exactly.
    """
    if design.pi != 1.0:
        raise InputDataError("comparator sizing assumes equal allocation (pi = 1)")
    if not design.alpha / 2.0 < target_power < 1.0:
        raise InputDataError("target power must lie in (alpha/2, 1)")
    d_events = schoenfeld_events(design.alpha, target_power, design.omega0,
                                 design.pi)

    def reaches(a: float) -> bool:
        return _expected_events(design, a) >= d_events

    a = _bracket_and_bisect(reaches, 0.0, 0.01)
    n_total = math.ceil(design.rate_r * a)
    if n_total % 2:
        n_total += 1
    n_control, n_experimental = allocate_arms(n_total, design.pi)

    # power implied by the comparator model at the solved accrual
    z_alpha = float(ndtri(1.0 - design.alpha / 2.0))
    events = _expected_events(design, a)
    achieved = float(ndtr(
        abs(math.log(design.omega0)) * math.sqrt(design.pi * events)
        / (1.0 + design.pi) - z_alpha
    ))
    mu, sigma = mu_sigma(replace(design, accrual_a=a))
    return DesignResult(
        accrual_a=a,
        n_total=n_total,
        n_control=n_control,
        n_experimental=n_experimental,
        achieved_power=achieved,
        mu=mu,
        sigma=sigma,
    )


def drift_variance_functions(design: TrialDesign, gamma: float):
    """Time-indexed drift and variance of the statistic's Gaussian limit.

    ``gamma`` parameterizes local alternatives (hazard ratio
    ``exp(-gamma/sqrt(n))``); mapping ``gamma = -sqrt(n) log(omega0)``
    recovers the fixed planning alternative.  Returns ``(mu_s, var_s)``,
    callables of time; ``var_s`` at the horizon equals the planning
    ``sigma**2`` of :func:`mu_sigma`.
    """
    if gamma < 0.0:
        raise InputDataError("gamma must be >= 0")
    model = _PlanningModel(design)
    pi = design.pi
    scale = math.sqrt(pi / (1.0 + pi))

    def mu_s(s: float) -> float:
        if s <= 0.0:
            return 0.0
        return -gamma * scale * model.event_fraction_upto(s)

    def var_s(s: float) -> float:
        if s <= 0.0:
            return 0.0
        return (model.event_fraction_upto(s)
                + 2.0 * pi * model.variance_correction_upto(s))

    return mu_s, var_s

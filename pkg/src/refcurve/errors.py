"""Exception types shared across the package.

The split mirrors the CLI exit-code contract: input problems (bad files,
empty cohorts, out-of-range parameters) exit with code 2, numeric or
degenerate-data failures with code 3.
"""


class InputDataError(ValueError):
    """Malformed or unusable input (CSV parse errors, empty cohorts, ...)."""


class DegenerateDataError(RuntimeError):
    """Data carries no information for the requested statistic."""


class DesignInfeasibleError(RuntimeError):
    """No accrual length below the search cap reaches the target."""


class QuadratureError(RuntimeError):
    """Numerical integration failed to reach the requested tolerance."""

"""One-sample log-rank testing that accounts for the sampling
variability of an estimated reference curve, plus the matching design,
inflation-diagnostic and simulation tooling.

Hot kernels run through a compiled extension when available; set
``REFCURVE_BACKEND=python`` (or ``compiled``) to force a backend and
``REFCURVE_THREADS`` to cap simulation workers.
"""

from ._backend import HAVE_COMPILED, backend_name
from .design import (DesignResult, TrialDesign, WeibullCurves, allocate_arms,
                     drift_variance_functions, mu_sigma, power,
                     required_accrual, schoenfeld_events,
                     schoenfeld_sample_size, weibull_cum_hazard)
from .errors import (DegenerateDataError, DesignInfeasibleError,
                     InputDataError, QuadratureError)
from .inflation import (InflationInput, expected_var_new, expected_var_oslr,
                        inflated_level, sweep)
from .simulation import (SimulationConfig, SimulationReport, generate_trial,
                         rejection_study, statistic_sample, table_repro)
from .survival_core import (GROUP_CONTROL, GROUP_EXPERIMENTAL, Cohort,
                            LeftContinuousStepFunction, StepFunction,
                            SubjectRecord, at_risk, counting_process,
                            kaplan_meier, na_variance, nelson_aalen)
from .test_engine import (TestResult, classical_oslr, m_hat_zero, new_test,
                          sigma_hat_sq, two_sample_logrank)

__version__ = "0.1.0"

__all__ = [
    "HAVE_COMPILED", "backend_name",
    "DesignResult", "TrialDesign", "WeibullCurves", "allocate_arms",
    "drift_variance_functions", "mu_sigma", "power", "required_accrual",
    "schoenfeld_events", "schoenfeld_sample_size", "weibull_cum_hazard",
    "DegenerateDataError", "DesignInfeasibleError", "InputDataError",
    "QuadratureError",
    "InflationInput", "expected_var_new", "expected_var_oslr",
    "inflated_level", "sweep",
    "SimulationConfig", "SimulationReport", "generate_trial",
    "rejection_study", "statistic_sample", "table_repro",
    "GROUP_CONTROL", "GROUP_EXPERIMENTAL", "Cohort",
    "LeftContinuousStepFunction", "StepFunction", "SubjectRecord",
    "at_risk", "counting_process", "kaplan_meier", "na_variance",
    "nelson_aalen",
    "TestResult", "classical_oslr", "m_hat_zero", "new_test",
    "sigma_hat_sq", "two_sample_logrank",
    "__version__",
]

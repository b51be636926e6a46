"""Ablowitz-Segur solutions of Painleve II and their total integrals.

Quick start::

    from pii_totals import PIIProblem, period_averaged_total
    res = period_averaged_total(PIIProblem.from_values(0.25, 0.35))
    res.averaged, res.predicted
"""

from importlib import resources

from .errors import PIIError
from .monodromy import (
    ASParameters,
    Family,
    classify_family,
    predicted_exp_total,
    predicted_total_integral,
)
from .pii_ode import PIIProblem, SolverConfig, Trajectory, integrate
from .totals import IntegralResult, period_averaged_total, remainder_slope, tail_fit_total

__version__ = "0.1.0"


def report_schema() -> dict:
    """The JSON schema that CLI reports validate against."""
    import json

    return json.loads(resources.files(__name__).joinpath("schemas/report.schema.json").read_text())


__all__ = [
    "ASParameters",
    "Family",
    "IntegralResult",
    "PIIError",
    "PIIProblem",
    "SolverConfig",
    "Trajectory",
    "classify_family",
    "integrate",
    "period_averaged_total",
    "predicted_exp_total",
    "predicted_total_integral",
    "remainder_slope",
    "report_schema",
    "tail_fit_total",
]

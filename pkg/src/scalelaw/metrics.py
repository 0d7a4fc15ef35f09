"""Loss and evaluation metrics in log space."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from scalelaw.errors import ArgumentError

LOSS_EPSILON = 1e-16
REPORT_EPSILON = 1e-36
NORM_EPSILON = 1e-20


@dataclass(frozen=True)
class MetricInputs:
    actual: np.ndarray
    predicted: np.ndarray
    epsilon: float = REPORT_EPSILON

    def __post_init__(self):
        a = np.asarray(self.actual, dtype=float).ravel()
        p = np.asarray(self.predicted, dtype=float).ravel()
        if a.size == 0 or a.shape != p.shape:
            raise ArgumentError(
                f"actual and predicted must be nonempty and of equal length ({a.size} vs {p.size})"
            )
        if self.epsilon < 0:
            raise ArgumentError("epsilon must be nonnegative")
        if np.any(a < 0) or np.any(p < 0):
            raise ArgumentError("metric inputs must be nonnegative")
        object.__setattr__(self, "actual", a)
        object.__setattr__(self, "predicted", p)

    def log_errors(self) -> np.ndarray:
        """(log(y + eps) - log(y_hat + eps))^2 per point."""
        with np.errstate(divide="ignore"):
            d = np.log(self.actual + self.epsilon) - np.log(self.predicted + self.epsilon)
        return d * d


def _inputs(actual, predicted=None, epsilon=REPORT_EPSILON) -> MetricInputs:
    if isinstance(actual, MetricInputs):
        return actual
    return MetricInputs(actual, predicted, epsilon)


def msle(actual, predicted=None, epsilon: float = REPORT_EPSILON) -> float:
    """Mean squared log error.  Accepts a MetricInputs or (actual, predicted, epsilon)."""
    return float(np.mean(_inputs(actual, predicted, epsilon).log_errors()))


def rmsle(actual, predicted=None, epsilon: float = REPORT_EPSILON) -> float:
    return float(np.sqrt(msle(actual, predicted, epsilon)))


def root_standard_log_error(actual, predicted=None, epsilon: float = REPORT_EPSILON) -> float:
    """sqrt(mu + sigma / sqrt(N)) - sqrt(mu) over squared log errors (sigma with N - 1)."""
    err = _inputs(actual, predicted, epsilon).log_errors()
    n = err.size
    if n < 2:
        raise ArgumentError("root standard log error needs at least two points")
    mu = float(np.mean(err))
    sigma = float(np.std(err, ddof=1))
    return float(np.sqrt(mu + sigma / np.sqrt(n)) - np.sqrt(mu))

"""Fit, evaluate and extrapolate multivariate neural scaling laws."""

from __future__ import annotations

from scalelaw.analysis import ComputeBudget, compare_forms, compute_optimal, simulate_noiseless
from scalelaw.data import (
    ScalingDataset,
    compute_norm_stats,
    frontier_validation_split,
    load_dataset,
    load_fixture,
    threshold_split,
)
from scalelaw.errors import (
    ArgumentError,
    ConfigurationError,
    DataLoadError,
    DomainError,
    FitError,
    NotRepresentableError,
    ParameterError,
    ScaleLawError,
    SolverError,
    SplitError,
)
from scalelaw.fit import FitConfig, FitResult, Grids, fit_form, fit_with_selection, l2_penalty, select_hyperparameters
from scalelaw.forms import (
    CfParams,
    DcParams,
    FormSpec,
    LimitConstant,
    MbnslParams,
    ParamSet,
    eval_cf,
    eval_dc,
    eval_form,
    eval_mbnsl,
    grad_form,
    limit_combine,
    log_eval_mbnsl,
    log_grad_form,
)
from scalelaw.metrics import msle, rmsle, root_standard_log_error

__version__ = "0.1.0"

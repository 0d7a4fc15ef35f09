"""Noiseless simulation, compute-optimal allocation and multi-form comparison."""

from __future__ import annotations

import io
import logging
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np
from scipy.optimize import minimize

from scalelaw.data import ScalingDataset
from scalelaw.errors import ArgumentError, DomainError, ScaleLawError, SolverError
from scalelaw.fit import FitConfig, FitResult, Grids, fit_form, fit_with_selection
from scalelaw.forms import FormSpec, Params, eval_form, log_grad_form

log = logging.getLogger(__name__)

DEFAULT_COMPUTE_CONSTANT = 6.0


def simulate_noiseless(
    spec: FormSpec,
    params: Params,
    grid,
    dim_names: Sequence[str] | None = None,
    metric_name: str = "y",
) -> ScalingDataset:
    """Dataset with y = eval_form(x) exactly at each grid point."""
    x = np.atleast_2d(np.asarray(grid, dtype=float))
    y = np.atleast_1d(eval_form(spec, params, x))
    names = dim_names or [f"x{i + 1}" for i in range(spec.arity)]
    return ScalingDataset(x, y, names, metric_name)


def log_grid(lows: Sequence[float], highs: Sequence[float], counts: Sequence[int]) -> np.ndarray:
    """Cartesian product of log-spaced axes, one row per point."""
    axes = [np.logspace(math.log10(lo), math.log10(hi), int(n)) for lo, hi, n in zip(lows, highs, counts)]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.column_stack([g.ravel() for g in mesh])


# --------------------------------------------------------------------------
# Compute-optimal allocation
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ComputeBudget:
    """Budget ``compute = constant * prod_{l in compute_dims} x_l`` (dimensions 0-based).

    ``free_dims`` are optimized without constraint; every other dimension is
    held at ``fixed_values[dim]``.
    """

    compute: float
    compute_dims: tuple[int, ...]
    free_dims: tuple[int, ...] = ()
    constant: float = DEFAULT_COMPUTE_CONSTANT
    fixed_values: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "compute_dims", tuple(int(i) for i in self.compute_dims))
        object.__setattr__(self, "free_dims", tuple(int(i) for i in self.free_dims))
        object.__setattr__(self, "fixed_values", {int(k): float(v) for k, v in dict(self.fixed_values).items()})
        if not (self.compute > 0 and self.constant > 0):
            raise ArgumentError("compute and its constant must be positive")
        if not self.compute_dims:
            raise ArgumentError("at least one compute dimension is required")
        if set(self.compute_dims) & set(self.free_dims):
            raise ArgumentError("compute and free dimensions overlap")
        if len(set(self.compute_dims)) != len(self.compute_dims) or len(set(self.free_dims)) != len(self.free_dims):
            raise ArgumentError("repeated dimension in budget")
        if any(v <= 0 for v in self.fixed_values.values()):
            raise ArgumentError("fixed values must be positive")


@dataclass(frozen=True)
class OptimalAllocation:
    x: np.ndarray
    y: float
    multiplier: float
    residual: float
    constraint_residual: float


class _Reduced:
    """log x as an affine function of unconstrained coordinates."""

    def __init__(self, spec: FormSpec, budget: ComputeBudget):
        m = spec.arity
        used = set(budget.compute_dims) | set(budget.free_dims)
        if any(i < 0 or i >= m for i in used):
            raise ArgumentError(f"budget refers to dimensions outside 0..{m - 1}")
        missing = [i for i in range(m) if i not in used and i not in budget.fixed_values]
        if missing:
            raise ArgumentError(f"dimensions {missing} are neither optimized nor given fixed values")
        self.m = m
        self.D = list(budget.compute_dims)
        self.H = list(budget.free_dims)
        nd = len(self.D)
        self.base = np.zeros(m)
        for i, v in budget.fixed_values.items():
            if i not in used:
                self.base[i] = math.log(v)
        self.base[self.D] = math.log(budget.compute / budget.constant) / nd
        # orthonormal basis of the zero-sum subspace of the compute dimensions
        if nd > 1:
            q, _ = np.linalg.qr(np.eye(nd) - 1.0 / nd)
            self.basis = q[:, : nd - 1]
        else:
            self.basis = np.zeros((1, 0))
        self.size = (nd - 1) + len(self.H)

    def log_x(self, v: np.ndarray) -> np.ndarray:
        lx = self.base.copy()
        nd1 = len(self.D) - 1
        lx[self.D] += self.basis @ v[:nd1]
        lx[self.H] = v[nd1:]
        return lx

    def pullback(self, g_lx: np.ndarray) -> np.ndarray:
        return np.concatenate([self.basis.T @ g_lx[self.D], g_lx[self.H]])


def _log_y_and_slope(spec: FormSpec, params: Params, lx: np.ndarray) -> tuple[float, np.ndarray]:
    """log y and d log y / d log x."""
    if not np.all(np.isfinite(np.exp(lx))):
        raise DomainError("allocation left the representable range")
    log_y, _, slope = log_grad_form(spec, params, lx)
    return log_y, slope


def compute_optimal(
    spec: FormSpec,
    params: Params,
    budget: ComputeBudget,
    starts: int = 8,
    seed: int = 0,
    tol: float = 1e-8,
    init_spread: float = 4.0,
) -> OptimalAllocation:
    """Minimize y subject to the compute budget.

    The constraint is eliminated by moving log x only inside the budget
    surface; stationarity there is the Lagrange system.  ``residual`` is the
    norm of the constrained log-log gradient (the compute-dimension slopes
    minus their mean, plus the free-dimension slopes).
    """
    red = _Reduced(spec, budget)
    rng = np.random.default_rng(seed)

    def fun(v):
        try:
            with np.errstate(all="ignore"):
                ly, slope = _log_y_and_slope(spec, params, red.log_x(v))
        except (ScaleLawError, OverflowError, ValueError):
            return math.inf, np.zeros_like(v)
        if not (math.isfinite(ly) and np.all(np.isfinite(slope))):
            return math.inf, np.zeros_like(v)
        return ly, red.pullback(slope)

    def residual(v):
        _, slope = _log_y_and_slope(spec, params, red.log_x(v))
        d = slope[red.D]
        return float(np.linalg.norm(d - d.mean()) + np.linalg.norm(slope[red.H]))

    def polish(v):
        """Newton steps on the reduced gradient with a finite-difference Hessian."""
        for _ in range(30):
            f, g = fun(v)
            if not math.isfinite(f) or np.linalg.norm(g) < 1e-14:
                break
            h = 1e-5
            hess = np.empty((red.size, red.size))
            for i in range(red.size):
                e = np.zeros(red.size)
                e[i] = h
                hess[:, i] = (fun(v + e)[1] - fun(v - e)[1]) / (2 * h)
            hess = 0.5 * (hess + hess.T)
            try:
                step = np.linalg.solve(hess, g)
            except np.linalg.LinAlgError:
                break
            v_new = v - step
            f_new, g_new = fun(v_new)
            if not (math.isfinite(f_new) and np.linalg.norm(g_new) < np.linalg.norm(g)):
                break
            v = v_new
        return v

    if red.size == 0:
        v = np.zeros(0)
        candidates = [v]
    else:
        inits = [np.zeros(red.size)] + [rng.normal(0.0, init_spread, red.size) for _ in range(max(starts, 1) - 1)]
        candidates = []
        for v0 in inits:
            if not math.isfinite(fun(v0)[0]):
                continue
            res = minimize(fun, v0, jac=True, method="BFGS", options={"gtol": 1e-12, "maxiter": 2000})
            candidates.append(polish(res.x))

    best = None
    for v in candidates:
        try:
            r = residual(v)
        except ScaleLawError:
            continue
        lx = red.log_x(v)
        y = float(eval_form(spec, params, np.exp(lx)))
        if not (math.isfinite(y) and math.isfinite(r)):
            continue
        key = (r > tol, y)
        if best is None or key < best[0]:
            best = (key, lx, y, r)
    if best is None:
        raise SolverError("no finite starting point found")
    _, lx, y, r = best
    x = np.exp(lx)
    _, slope = _log_y_and_slope(spec, params, lx)
    # x_l dy/dx_l = y * slope_l, so the multiplier needs no plain derivative either.
    multiplier = float(np.mean(-y * slope[red.D])) / budget.compute
    constraint = abs(budget.compute - budget.constant * float(np.prod(x[red.D]))) / budget.compute
    result = OptimalAllocation(x, y, multiplier, r, constraint)
    if r > tol:
        raise SolverError(f"no stationary point found (best residual {r:.3g} > {tol:g})", best=result)
    return result


# --------------------------------------------------------------------------
# Comparison tables
# --------------------------------------------------------------------------


TSV_COLUMNS = (
    "form", "n", "S", "lambda", "train_rmsle", "train_rsle", "test_rmsle", "test_rsle", "wall_seconds",
)


@dataclass
class ComparisonRow:
    label: str
    spec: FormSpec
    result: FitResult | None = None
    error: str | None = None

    def values(self) -> list:
        r = self.result
        if r is None:
            return [self.label, None, None, None, None, None, None, None, None]
        return [
            self.label, r.break_count, r.oppositional_count, r.l2_weight,
            r.train_rmsle, r.train_rsle, r.test_rmsle, r.test_rsle, r.wall_seconds,
        ]


def _cell(v) -> str:
    if v is None:
        return "nan"
    if isinstance(v, float):
        return repr(v)
    return str(v)


@dataclass
class ComparisonTable:
    rows: list[ComparisonRow]

    @property
    def winner(self) -> int | None:
        """Row index with the lowest test RMSLE (train RMSLE if there is no test set)."""
        best = None
        for i, row in enumerate(self.rows):
            r = row.result
            if r is None:
                continue
            score = r.test_rmsle if r.test_rmsle is not None else r.train_rmsle
            if score is not None and math.isfinite(score) and (best is None or score < best[0]):
                best = (score, i)
        return None if best is None else best[1]

    def to_tsv(self, include_timing: bool = True) -> str:
        cols = TSV_COLUMNS if include_timing else TSV_COLUMNS[:-1]
        out = io.StringIO()
        out.write("\t".join(cols) + "\n")
        for row in self.rows:
            vals = row.values()[: len(cols)]
            out.write("\t".join(_cell(v) for v in vals) + "\n")
        return out.getvalue()

    def to_text(self) -> str:
        win = self.winner
        header = f"{'form':<10} {'n':>2} {'S':>2} {'lambda':>8}  {'train RMSLE ± RSLE':>24}  {'test RMSLE ± RSLE':>24}  {'secs':>8}"
        lines = [header, "-" * len(header)]

        def pm(a, b):
            if a is None:
                return "-"
            return f"{a:.3e} ± {b:.2e}" if b is not None else f"{a:.3e}"

        for i, row in enumerate(self.rows):
            r = row.result
            mark = " *" if i == win else ""
            if r is None:
                lines.append(f"{row.label:<10} failed: {row.error}")
                continue
            lines.append(
                f"{row.label:<10} {r.break_count:>2} {r.oppositional_count:>2} {r.l2_weight:>8.1e}  "
                f"{pm(r.train_rmsle, r.train_rsle):>24}  {pm(r.test_rmsle, r.test_rsle):>24}  "
                f"{r.wall_seconds:>8.1f}{mark}"
            )
        if win is not None:
            lines.append("* lowest extrapolation error")
        return "\n".join(lines) + "\n"


def compare_forms(
    train: ScalingDataset,
    test: ScalingDataset | None,
    specs: Sequence[FormSpec],
    cfg: FitConfig = FitConfig(),
    grids: Grids | None = None,
    labels: Sequence[str] | None = None,
) -> ComparisonTable:
    """Fit each spec on the same split; a failed fit is recorded in its row."""
    labels = list(labels) if labels is not None else [s.form_kind for s in specs]
    if len(labels) != len(specs):
        raise ArgumentError("one label per spec")
    rows = []
    for label, spec in zip(labels, specs):
        try:
            if grids is None:
                res = fit_form(train, spec, cfg, test=test)
            else:
                res = fit_with_selection(train, spec, grids, cfg, test=test)
            rows.append(ComparisonRow(label, spec, res))
        except ScaleLawError as exc:
            log.warning("%s fit failed: %s", label, exc)
            rows.append(ComparisonRow(label, spec, error=str(exc)))
    return ComparisonTable(rows)

"""Multi-start fitting of functional forms and the grid-search selection protocol.

Tree forms (UNSL, A1, A2, A3, CF) are fitted in network coordinates on
z-normalized log inputs.  Each kernel is a one-hidden-layer softplus network

    log K(z) = beta0 + w0 . z + sum_j v_j * softplus(W_j . z + beta_j)

which maps onto the canonical constants as log b = beta0, c0 = -w0,
c_j = W_j |v_j|, log d_j = -beta_j |v_j|, f_j = -v_j.  The sign of each v_j
is fixed per seed and its magnitude is ``f_floor + softplus(rho_j)``, so the
sharpness never crosses the floor.  All kernels of a form are evaluated by a
single fused primitive with a hand-written vector-Jacobian product; the
expression tree on top of it uses :mod:`scalelaw.autodiff`.

DC is fitted directly in its own parameters on raw log inputs.
"""

from __future__ import annotations

import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import minimize

from scalelaw import autodiff as ad
from scalelaw.data import NormStats, ScalingDataset, compute_norm_stats, frontier_validation_split
from scalelaw.errors import ArgumentError, ConfigurationError, FitError, ParameterError
from scalelaw.forms import (
    F_FLOOR,
    Break,
    DcParams,
    FormSpec,
    LimitConstant,
    TREE_FORMS,
    MbnslParams,
    ParamSet,
    Params,
    _dc_log_var,
    cf_from_paramset,
    eval_form,
    kernel_slots,
    limit_roles,
    rescale_params,
    structure,
    tree_log_eval,
)
from scalelaw.metrics import LOSS_EPSILON, NORM_EPSILON, REPORT_EPSILON, rmsle, root_standard_log_error

log = logging.getLogger(__name__)

DEFAULT_N_GRID = (0, 1, 2)
DEFAULT_S_GRID = (0, 1)
DEFAULT_LAMBDA_GRID = (0.0, 1e-7, 1e-6, 3e-6, 1e-5, 1e-4, 1e-3)

# Returned to the line search in place of a non-finite objective so it backs off.
_REJECT = 1e100


@dataclass(frozen=True)
class FitConfig:
    seeds: int = 20
    max_steps: int = 20000
    l2_weight: float = 0.0
    loss_epsilon: float = LOSS_EPSILON
    norm_epsilon: float = NORM_EPSILON
    f_floor: float = F_FLOOR
    init_scale_rule: str = "fan_in_normal"
    warmup_steps: int = 0
    warmup_lr: float = 1e-2
    gtol: float = 1e-12
    ftol: float = 1e-16
    seed_base: int = 0
    threads: int | None = None

    def __post_init__(self):
        if self.seeds < 1:
            raise ArgumentError("seeds must be >= 1")
        if self.max_steps < 1:
            raise ArgumentError("max_steps must be >= 1")
        if not self.l2_weight >= 0:
            raise ArgumentError("l2_weight must be >= 0")
        if self.f_floor < F_FLOOR:
            raise ArgumentError(f"f_floor must be at least {F_FLOOR}")
        if self.init_scale_rule != "fan_in_normal":
            raise ArgumentError(f"unknown init rule {self.init_scale_rule!r}")


@dataclass
class FitResult:
    spec: FormSpec
    best_params: Params
    best_seed: int
    per_seed_train_loss: np.ndarray
    train_rmsle: float
    train_rsle: float | None
    val_rmsle: float | None = None
    val_rsle: float | None = None
    test_rmsle: float | None = None
    test_rsle: float | None = None
    break_count: int = 0
    oppositional_count: int = 0
    l2_weight: float = 0.0
    norm_stats: NormStats | None = None
    wall_seconds: float = 0.0
    diagnostics: dict = field(default_factory=dict)

    def predict(self, x) -> np.ndarray:
        return predict(self.spec, self.best_params, x)


def predict(spec: FormSpec, params: Params, x) -> np.ndarray:
    """Evaluate a fitted form on dataset rows (columns chosen by ``spec.input_map``)."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    return np.asarray(eval_form(spec, params, spec.select_inputs(x)))


def _threads() -> int:
    env = os.environ.get("SCALELAW_THREADS")
    try:
        cap = int(env) if env else 0
    except ValueError:
        cap = 0
    n = len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)
    return max(1, min(n, cap) if cap > 0 else n)


# --------------------------------------------------------------------------
# Network coordinates for tree forms
# --------------------------------------------------------------------------


class Network:
    """Flat layout of a tree form's parameters in network coordinates."""

    def __init__(self, spec: FormSpec, f_floor: float = F_FLOOR):
        if spec.form_kind == "dc":
            raise ConfigurationError("dc has no network layout")
        self.spec = spec
        self.f_floor = f_floor
        self.slots = kernel_slots(spec)
        self.roles = limit_roles(spec)
        m, K = spec.arity, len(self.slots)
        nmax = max((k.n_breaks for k in self.slots), default=0)
        self.nmax = nmax
        pos = 0
        zero = -1  # patched to the padding slot below
        b0 = np.zeros(K, dtype=int)
        w0 = np.full((K, m), zero)
        W = np.full((K, nmax, m), zero)
        beta = np.full((K, nmax), zero)
        rho = np.full((K, nmax), zero)
        names = []
        for k, slot in enumerate(self.slots):
            b0[k] = pos
            names.append(f"k{slot.kernel_id}.bias")
            pos += 1
            for i in slot.index_set:
                w0[k, i] = pos
                names.append(f"k{slot.kernel_id}.w0[{i}]")
                pos += 1
            for j in range(slot.n_breaks):
                for i in slot.index_set:
                    W[k, j, i] = pos
                    names.append(f"k{slot.kernel_id}.W{j + 1}[{i}]")
                    pos += 1
                beta[k, j] = pos
                rho[k, j] = pos + 1
                names += [f"k{slot.kernel_id}.beta{j + 1}", f"k{slot.kernel_id}.rho{j + 1}"]
                pos += 2
        self.limit_pos = {}
        for role in self.roles:
            self.limit_pos[role] = pos
            names.append(role)
            pos += 1
        self.size = pos
        for arr in (w0, W, beta, rho):
            arr[arr == zero] = pos
        self.b0_map, self.w0_map, self.W_map, self.beta_map, self.rho_map = b0, w0, W, beta, rho
        self.break_mask = rho != pos
        self.names = names
        self.weight_positions = np.concatenate([w0[w0 != pos], W[W != pos]]).astype(int)
        self.column = {slot.kernel_id: k for k, slot in enumerate(self.slots)}

    # -- initialization -----------------------------------------------------

    def initial(self, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
        """LeCun-normal weights, zero biases and limits; returns (theta, break signs)."""
        theta = np.zeros(self.size)
        signs = np.ones((len(self.slots), self.nmax))
        for k, slot in enumerate(self.slots):
            width = len(slot.index_set)
            theta[self.w0_map[k, list(slot.index_set)]] = rng.normal(0.0, 1.0 / math.sqrt(width), width)
            for j in range(slot.n_breaks):
                theta[self.W_map[k, j, list(slot.index_set)]] = rng.normal(0.0, 1.0 / math.sqrt(width), width)
            if slot.n_breaks:
                v = rng.normal(0.0, 1.0 / math.sqrt(slot.n_breaks), slot.n_breaks)
                signs[k, : slot.n_breaks] = np.where(v < 0, -1.0, 1.0)
                mag = np.maximum(np.abs(v) - self.f_floor, 1e-6)
                theta[self.rho_map[k, : slot.n_breaks]] = mag + np.log(-np.expm1(-mag))
        return theta, signs

    # -- evaluation ---------------------------------------------------------

    def _unpack(self, theta: np.ndarray, signs: np.ndarray):
        te = np.append(theta, 0.0)
        rho = te[self.rho_map]
        mag = self.f_floor + ad.softplus_value(rho)
        v = np.where(self.break_mask, signs * mag, 0.0)
        return te[self.b0_map], te[self.w0_map], te[self.W_map], te[self.beta_map], rho, v

    def kernels_var(self, theta: ad.Var, signs: np.ndarray, z: np.ndarray) -> ad.Var:
        """Fused evaluation of every kernel: an (N, K) matrix of log K values."""
        b0, w0, W, beta, rho, v = self._unpack(theta.value, signs)
        lin = z @ w0.T + b0
        if self.nmax:
            H = np.einsum("nm,kjm->nkj", z, W) + beta
            S = ad.softplus_value(H)
            out = lin + np.einsum("nkj,kj->nk", S, v)
        else:
            out = lin
        size = self.size
        maps = (self.b0_map, self.w0_map, self.W_map, self.beta_map, self.rho_map)

        def vjp(G):
            grads = [G.sum(axis=0), G.T @ z]
            if self.nmax:
                g_v = np.einsum("nk,nkj->kj", G, S)
                g_H = G[:, :, None] * v[None] * ad.sigmoid_value(H)
                grads += [
                    np.einsum("nkj,nm->kjm", g_H, z),
                    g_H.sum(axis=0),
                    np.where(self.break_mask, g_v * signs * ad.sigmoid_value(rho), 0.0),
                ]
            idx = np.concatenate([mp.ravel() for mp in maps[: len(grads)]])
            val = np.concatenate([g.ravel() for g in grads])
            return np.bincount(idx, weights=val, minlength=size + 1)[:size]

        return ad.Var(out, ((theta, vjp),))

    def log_output(self, theta: ad.Var, signs: np.ndarray, z: np.ndarray) -> ad.Var:
        K = self.kernels_var(theta, signs, z)
        return tree_log_eval(
            structure(self.spec),
            lambda k: ad.take(K, (slice(None), self.column[k.kernel_id])),
            lambda role: ad.take(theta, self.limit_pos[role]),
        )

    def l2(self, theta: np.ndarray, signs: np.ndarray) -> tuple[float, np.ndarray]:
        """0.5 * sum of squared non-bias weights, with its gradient."""
        g = np.zeros(self.size)
        w = theta[self.weight_positions]
        g[self.weight_positions] = w
        value = 0.5 * float(np.sum(w * w))
        if self.nmax:
            _, _, _, _, rho, v = self._unpack(theta, signs)
            value += 0.5 * float(np.sum(v * v))
            gr = np.where(self.break_mask, v * signs * ad.sigmoid_value(rho), 0.0)
            np.add.at(g, self.rho_map[self.break_mask], gr[self.break_mask])
        return value, g

    # -- conversion ---------------------------------------------------------

    def to_params(self, theta: np.ndarray, signs: np.ndarray) -> ParamSet:
        """Canonical constants in the normalized coordinates the network was fitted in."""
        b0, w0, W, beta, _, v = self._unpack(theta, signs)
        kernels = {}
        for k, slot in enumerate(self.slots):
            idx = list(slot.index_set)
            breaks = []
            for j in range(slot.n_breaks):
                mag = abs(v[k, j])
                breaks.append(Break(tuple(W[k, j, idx] * mag), -beta[k, j] * mag, -v[k, j]))
            kernels[slot.kernel_id] = MbnslParams(
                slot.kernel_id, slot.index_set, b0[k], tuple(-w0[k, idx]), tuple(breaks)
            )
        limits = {role: LimitConstant(role, theta[p]) for role, p in self.limit_pos.items()}
        return ParamSet(kernels, limits)


def l2_penalty(params: Params) -> float:
    """0.5 * sum of squared exponent-bearing weights, biases and limits excluded.

    For a kernel these weights are -c0, c_j / |f_j| and -f_j (the network
    coordinates of the fitter); for CF and DC they are c1 and c2.
    """
    if isinstance(params, ParamSet):
        total = 0.0
        for k in params.kernels.values():
            total += sum(c * c for c in k.init_exponents)
            for b in k.breaks:
                total += sum((c / abs(b.sharpness)) ** 2 for c in b.exponents)
                total += b.sharpness**2
        return 0.5 * total
    return 0.5 * (params.c1**2 + params.c2**2)


# --------------------------------------------------------------------------
# Objectives
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class _Problem:
    """Everything a worker process needs to run one seed."""

    spec: FormSpec
    lx: np.ndarray  # raw log inputs, form columns only
    y: np.ndarray
    stats: NormStats
    target_scale: float
    cfg: FitConfig

    @property
    def targets(self) -> np.ndarray:
        return np.log(self.y + self.cfg.loss_epsilon)


def _data_loss(problem: _Problem, log_pred: ad.Var) -> ad.Var:
    """MSLE with the loss epsilon, divided by the variance of the log targets."""
    eps = math.log(problem.cfg.loss_epsilon)
    resid = ad.logsumexp([log_pred, eps]) - problem.targets
    return ad.mean(ad.square(resid)) / problem.target_scale**2


def _tree_objective(problem: _Problem, net: Network, signs: np.ndarray) -> Callable:
    z = (problem.lx - problem.stats.log_x_mean) / problem.stats.log_x_std
    u = problem.stats.log_y_mean
    lam = problem.cfg.l2_weight

    def fun(theta: np.ndarray) -> tuple[float, np.ndarray]:
        th = ad.Var(theta)
        with np.errstate(all="ignore"):
            loss = _data_loss(problem, net.log_output(th, signs, z) + u)
            (g,) = ad.grad(loss, [th])
        value = float(loss.value)
        if lam > 0:
            p, gp = net.l2(theta, signs)
            value += lam * p
            g = g + lam * gp
        return value, g

    return fun


def _dc_objective(problem: _Problem) -> Callable:
    lx = problem.lx
    u = problem.stats.log_y_mean
    lam = problem.cfg.l2_weight
    shift = np.array([u, u, 0.0, u, 0.0, 0.0, 0.0])

    def fun(theta: np.ndarray) -> tuple[float, np.ndarray]:
        th = ad.Var(theta + shift)
        with np.errstate(all="ignore"):
            try:
                loss = _data_loss(problem, _dc_log_var(th, ad.Var(lx)))
            except ParameterError:
                return math.inf, np.zeros_like(theta)
            (g,) = ad.grad(loss, [th])
        value = float(loss.value) + lam * 0.5 * (theta[2] ** 2 + theta[4] ** 2)
        if lam > 0:
            g = g.copy()
            g[2] += lam * theta[2]
            g[4] += lam * theta[4]
        return value, g

    return fun


def _dc_initial(problem: _Problem, rng: np.random.Generator) -> np.ndarray:
    """A data-informed start: two power-law terms sharing the excess over a floor."""
    yn = problem.stats.apply_y(problem.y)
    c1, c2 = rng.uniform(0.2, 0.8, 2)
    a = float(yn.min()) * rng.uniform(0.3, 0.9)
    excess = max(float(np.mean(yn)) - a, 1e-12) / 2
    mean_lx = problem.lx.mean(axis=0)
    log_b1 = math.log(excess) + c1 * mean_lx[0]
    log_b2 = math.log(excess) + c2 * mean_lx[2]
    log_d = np.log(rng.uniform(1.0, 30.0, 2))
    return np.array([math.log(a), log_b1, c1, log_b2, c2, log_d[0], log_d[1]])


# --------------------------------------------------------------------------
# Per-seed optimization
# --------------------------------------------------------------------------


def _optimize(fun: Callable, theta0: np.ndarray, cfg: FitConfig, bounds=None) -> tuple[float, np.ndarray, dict]:
    """Adam warmup then L-BFGS-B; returns the best point ever evaluated."""
    best = [math.inf, theta0.copy()]

    def tracked(theta):
        f, g = fun(theta)
        if not (np.isfinite(f) and np.all(np.isfinite(g))):
            return _REJECT, np.zeros_like(theta)
        if f < best[0]:
            best[0], best[1] = f, theta.copy()
        return f, g

    f0, _ = fun(theta0)
    if not np.isfinite(f0):
        return math.nan, theta0, {"status": "non-finite initial loss"}

    theta = theta0.copy()
    if cfg.warmup_steps > 0:
        m1 = np.zeros_like(theta)
        m2 = np.zeros_like(theta)
        b1, b2 = 0.9, 0.999
        for t in range(1, cfg.warmup_steps + 1):
            f, g = fun(theta)
            if not (np.isfinite(f) and np.all(np.isfinite(g))):
                return math.nan, best[1], {"status": f"non-finite loss at warmup step {t}"}
            if f < best[0]:
                best[0], best[1] = f, theta.copy()
            m1 = b1 * m1 + (1 - b1) * g
            m2 = b2 * m2 + (1 - b2) * g * g
            step = cfg.warmup_lr * (m1 / (1 - b1**t)) / (np.sqrt(m2 / (1 - b2**t)) + 1e-8)
            theta = theta - step
            if bounds is not None:
                theta = np.clip(theta, [lo if lo is not None else -np.inf for lo, _ in bounds], np.inf)
        theta = best[1].copy()

    res = minimize(
        tracked,
        theta,
        jac=True,
        method="L-BFGS-B",
        bounds=bounds,
        options={
            "maxiter": cfg.max_steps,
            "maxfun": 2 * cfg.max_steps + 100,
            "ftol": cfg.ftol,
            "gtol": cfg.gtol,
            "maxcor": 30,
        },
    )
    info = {"status": str(res.message), "iterations": int(res.nit), "evaluations": int(res.nfev)}
    return best[0], best[1], info


def _run_seed(args) -> tuple[int, float, np.ndarray, np.ndarray | None, dict]:
    problem, seed = args
    rng = np.random.default_rng(seed)
    if problem.spec.form_kind == "dc":
        theta0 = _dc_initial(problem, rng)
        bounds = [(None, None), (None, None), (1e-4, None), (None, None), (1e-4, None), (None, None), (None, None)]
        loss, theta, info = _optimize(_dc_objective(problem), theta0, problem.cfg, bounds)
        return seed, loss, theta, None, info
    net = Network(problem.spec, problem.cfg.f_floor)
    theta0, signs = net.initial(rng)
    loss, theta, info = _optimize(_tree_objective(problem, net, signs), theta0, problem.cfg)
    return seed, loss, theta, signs, info


def _final_params(problem: _Problem, theta: np.ndarray, signs) -> Params:
    spec = problem.spec
    stats = problem.stats
    if spec.form_kind == "dc":
        u = stats.log_y_mean
        shifted = theta + np.array([u, u, 0.0, u, 0.0, 0.0, 0.0])
        return DcParams(*(float(v) for v in shifted))
    net = Network(spec, problem.cfg.f_floor)
    raw = rescale_params(spec, net.to_params(theta, signs), stats.log_x_mean, stats.log_x_std, stats.log_y_mean)
    return cf_from_paramset(raw) if spec.form_kind == "cf" else raw


def _score(spec: FormSpec, params: Params, ds: ScalingDataset | None) -> tuple[float | None, float | None]:
    if ds is None or len(ds) == 0:
        return None, None
    with np.errstate(all="ignore"):
        pred = predict(spec, params, ds.x)
    r = rmsle(ds.y, pred, REPORT_EPSILON)
    s = root_standard_log_error(ds.y, pred, REPORT_EPSILON) if len(ds) >= 2 else None
    return r, s


def fit_form(
    train: ScalingDataset,
    spec: FormSpec,
    cfg: FitConfig = FitConfig(),
    val: ScalingDataset | None = None,
    test: ScalingDataset | None = None,
) -> FitResult:
    """Fit ``spec`` to ``train`` from ``cfg.seeds`` random starts; keep the lowest training loss."""
    if len(train) == 0:
        raise ArgumentError("training set is empty")
    start = time.perf_counter()
    x = spec.select_inputs(train.x)
    stats = compute_norm_stats(
        ScalingDataset(x, train.y, [f"x{i}" for i in range(x.shape[1])]), cfg.norm_epsilon
    )
    t = np.log(train.y + cfg.loss_epsilon)
    scale = float(np.std(t))
    if not (np.isfinite(scale) and scale > 0):
        scale = 1.0
    problem = _Problem(spec, np.log(x), np.asarray(train.y), stats, scale, cfg)

    seeds = [cfg.seed_base + i for i in range(cfg.seeds)]
    workers = min(cfg.threads or _threads(), len(seeds))
    tasks = [(problem, s) for s in seeds]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_seed, tasks))
    else:
        results = [_run_seed(task) for task in tasks]
    results.sort(key=lambda r: r[0])

    losses = np.array([r[1] for r in results], dtype=float)
    diagnostics = {"seeds": {r[0]: r[4] for r in results}}
    ok = np.isfinite(losses)
    if not ok.any():
        raise FitError(f"all {len(seeds)} seeds diverged", diagnostics)
    best = int(np.flatnonzero(ok)[np.argmin(losses[ok])])
    seed, _, theta, signs, _ = results[best]
    params = _final_params(problem, theta, signs)

    tr = _score(spec, params, train)
    va = _score(spec, params, val)
    te = _score(spec, params, test)
    return FitResult(
        spec=spec,
        best_params=params,
        best_seed=seed,
        per_seed_train_loss=losses,
        train_rmsle=tr[0],
        train_rsle=tr[1],
        val_rmsle=va[0],
        val_rsle=va[1],
        test_rmsle=te[0],
        test_rsle=te[1],
        break_count=spec.break_count if spec.form_kind in TREE_FORMS else 0,
        oppositional_count=spec.effective_oppositional_count if spec.form_kind in ("unsl", "a3") else 0,
        l2_weight=cfg.l2_weight,
        norm_stats=stats,
        wall_seconds=time.perf_counter() - start,
        diagnostics=diagnostics,
    )


# --------------------------------------------------------------------------
# Hyperparameter selection
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Grids:
    break_counts: tuple[int, ...] = DEFAULT_N_GRID
    oppositional_counts: tuple[int, ...] = DEFAULT_S_GRID
    l2_weights: tuple[float, ...] = DEFAULT_LAMBDA_GRID

    def __post_init__(self):
        for name in ("break_counts", "oppositional_counts", "l2_weights"):
            values = tuple(sorted(set(getattr(self, name))))
            if not values:
                raise ArgumentError(f"grid {name} is empty")
            object.__setattr__(self, name, values)


def _cells(spec: FormSpec, grids: Grids) -> list[tuple[int, int, float]]:
    """Grid cells that give distinct models for this form."""
    ns = grids.break_counts if spec.form_kind in TREE_FORMS else (0,)
    ss = grids.oppositional_counts if spec.form_kind in ("unsl", "a3") else (0,)
    return [(n, s, lam) for n in ns for s in ss for lam in grids.l2_weights]


def configure(spec: FormSpec, n: int, s: int) -> FormSpec:
    if spec.form_kind not in TREE_FORMS:
        return spec
    return spec.with_hparams(n=n, S=s if spec.form_kind in ("unsl", "a3") else None)


def select_hyperparameters(
    train: ScalingDataset,
    spec: FormSpec,
    grids: Grids = Grids(),
    cfg: FitConfig = FitConfig(),
) -> tuple[int, int, float]:
    """Pick (n, S, lambda) by validation RMSLE on the Pareto-frontier hold-out."""
    cells = _cells(spec, grids)
    if len(cells) == 1:
        return cells[0]
    fallback = cells[0][:2] + (grids.l2_weights[-1],)
    inner, val = frontier_validation_split(train)
    if len(val) == 0 or len(inner) == 0:
        log.warning("validation split is degenerate; using n=%d, S=%d, lambda=%g", *fallback)
        return fallback
    scored = []
    for n, s, lam in cells:
        try:
            res = fit_form(inner, configure(spec, n, s), replace(cfg, l2_weight=lam), val=val)
            score = res.val_rmsle if res.val_rmsle is not None and np.isfinite(res.val_rmsle) else math.inf
        except (FitError, ParameterError) as exc:
            log.warning("grid cell n=%d S=%d lambda=%g failed: %s", n, s, lam, exc)
            score = math.inf
        log.info("grid cell n=%d S=%d lambda=%g: validation RMSLE %.6g", n, s, lam, score)
        scored.append((score, n, s, -lam))
    score, n, s, neg_lam = min(scored)
    if not math.isfinite(score):
        log.warning("every grid cell failed; using n=%d, S=%d, lambda=%g", *fallback)
        return fallback
    return n, s, -neg_lam


def fit_with_selection(
    train: ScalingDataset,
    spec: FormSpec,
    grids: Grids = Grids(),
    cfg: FitConfig = FitConfig(),
    test: ScalingDataset | None = None,
) -> FitResult:
    """Select hyperparameters, then refit on the whole training set."""
    n, s, lam = select_hyperparameters(train, spec, grids, cfg)
    return fit_form(train, configure(spec, n, s), replace(cfg, l2_weight=lam), test=test)

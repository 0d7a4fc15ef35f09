from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from scalelaw.analysis import (
    TSV_COLUMNS,
    ComputeBudget,
    compare_forms,
    compute_optimal,
    log_grid,
    simulate_noiseless,
)
from scalelaw.data import ScalingDataset, threshold_split
from scalelaw.errors import ArgumentError, SolverError
from scalelaw.fit import FitConfig, fit_form
from scalelaw.forms import Break, CfParams, FormSpec, LimitConstant, MbnslParams, ParamSet, eval_cf, eval_form, grad_form, paramset_from_cf
from scalelaw.metrics import rmsle

CF = FormSpec("cf", 2)


# ---------------------------------------------------------------- simulation


def test_simulate_constant_and_single_point():
    spec = FormSpec("a1", 2, break_count=0)
    p = ParamSet({0: MbnslParams(0, (0, 1), 0.3, (0.0, 0.0))}, {})
    ds = simulate_noiseless(spec, p, log_grid([1, 1], [1e3, 1e3], [4, 5]))
    assert len(ds) == 20 and np.all(ds.y == ds.y[0])
    one = simulate_noiseless(spec, p, [[2.0, 3.0]])
    assert len(one) == 1 and one.y[0] == eval_form(spec, p, [2.0, 3.0])


def test_log_grid_shape_and_endpoints():
    g = log_grid([1, 10], [100, 1000], [3, 2])
    assert g.shape == (6, 2)
    np.testing.assert_allclose(sorted(set(g[:, 0])), [1, 10, 100])


def test_extrapolation_fails_past_an_unseen_break():
    # A break far beyond the fitting window (many widths away) is invisible to
    # the fit, so error past the break dwarfs the in-window error.
    spec = FormSpec("a1", 1, break_count=1)
    width = 0.2  # |f| sets the width of the transition in log x (with c = 1)
    truth = ParamSet({0: MbnslParams(0, (0,), 0.0, (0.3,), (Break((1.0,), math.log(1e5), width),))}, {})
    window = simulate_noiseless(spec, truth, np.logspace(0, 2, 40)[:, None])
    nearest = math.log(1e5) - math.log(1e2)
    assert nearest >= 10 * width
    res = fit_form(window, spec, FitConfig(seeds=2, max_steps=2000, threads=1))
    beyond = simulate_noiseless(spec, truth, np.logspace(6, 7, 20)[:, None])
    err_out = rmsle(beyond.y, res.predict(beyond.x))
    assert err_out >= 10 * max(res.train_rmsle, 1e-12)


def test_simulate_then_fit_recovers_a_smooth_law():
    spec = FormSpec("a3", 2, break_count=0, oppositional_count=0, bottleneck_sets={0: ()})
    truth = ParamSet(
        {0: MbnslParams(0, (0, 1), 1.0, (0.3, 0.2))},
        {"a0": LimitConstant("a0", math.log(0.2)), "a1": LimitConstant("a1", math.log(0.5))},
    )
    ds = simulate_noiseless(spec, truth, log_grid([1, 1], [1e4, 1e4], [9, 9]))
    train, test = threshold_split(ds, [1.001e3, 1.001e3])
    res = fit_form(train, spec, FitConfig(seeds=2, max_steps=3000, threads=1), test=test)
    assert res.test_rmsle <= 1e-3


# ---------------------------------------------------------------- compute-optimal


def test_symmetric_cf_splits_compute_evenly():
    p = paramset_from_cf(CfParams(math.log(0.1), math.log(5.0), 0.3, math.log(5.0), 0.3))
    budget = ComputeBudget(1e20, (0, 1))
    res = compute_optimal(CF, p, budget)
    target = math.sqrt(1e20 / 6)
    np.testing.assert_allclose(res.x, [target, target], rtol=1e-8)
    assert res.constraint_residual <= 1e-10
    assert res.residual <= 1e-8


def test_cf_params_work_directly():
    p = CfParams(math.log(0.1), math.log(5.0), 0.3, math.log(5.0), 0.3)
    res = compute_optimal(CF, p, ComputeBudget(1e12, (0, 1), constant=2.0))
    np.testing.assert_allclose(res.x, math.sqrt(5e11), rtol=1e-8)


def _grid_oracle(p, C, C0):
    # Dense scan along log x1 on the budget line, then a finer scan around the best cell.
    lo, hi = -10.0, math.log(C / C0) + 10
    for n in (200001, 200001):
        t = np.linspace(lo, hi, n)
        y = eval_cf(p, np.exp(t), np.exp(math.log(C / C0) - t))
        i = int(np.argmin(y))
        step = t[1] - t[0]
        lo, hi = t[i] - 2 * step, t[i] + 2 * step
    return t[i]


def test_general_cf_matches_grid_search_and_balances_marginal_terms():
    rng = np.random.default_rng(0)
    for _ in range(5):
        p = CfParams(rng.uniform(-3, 0), rng.uniform(0, 4), rng.uniform(0.1, 0.6), rng.uniform(0, 4), rng.uniform(0.1, 0.6))
        C = 10 ** rng.uniform(15, 24)
        res = compute_optimal(CF, p, ComputeBudget(C, (0, 1)))
        assert abs(math.log(res.x[0]) - _grid_oracle(p, C, 6.0)) <= 1e-4
        b1, b2 = math.exp(p.log_b1), math.exp(p.log_b2)
        lhs = p.c1 * b1 * res.x[0] ** -p.c1
        rhs = p.c2 * b2 * res.x[1] ** -p.c2
        assert lhs == pytest.approx(rhs, rel=1e-7)
        assert res.constraint_residual <= 1e-10
        # The reported multiplier solves dy/dx_l + multiplier * C / x_l = 0 on the compute dims.
        _, gx = grad_form(CF, p, res.x)
        np.testing.assert_allclose(gx + res.multiplier * C / res.x, 0, atol=1e-8 * np.max(np.abs(gx)))


def test_free_dimension_is_stationary():
    # y = a0 + K(x1, x2) + K(x3), where the x3 kernel turns from falling to rising.
    spec = FormSpec("a2", 3, nonbottleneck_sets={0: (0, 1)}, bottleneck_sets={0: (2,)}, break_overrides={0: 0, 3: 1})
    p = ParamSet(
        {
            0: MbnslParams(0, (0, 1), 2.0, (0.3, 0.4)),
            3: MbnslParams(3, (2,), 0.0, (0.5,), (Break((1.0,), math.log(1e-2), -1.0),)),
        },
        {"a0": LimitConstant("a0", math.log(0.05))},
    )
    res = compute_optimal(spec, p, ComputeBudget(1e18, (0, 1), free_dims=(2,)))
    x = res.x
    _, gx = grad_form(spec, p, x)
    assert abs(gx[2] * x[2] / res.y) <= 1e-8

    def on_slice(t):
        return float(eval_form(spec, p, [x[0], x[1], math.exp(t)]))

    oracle = minimize_scalar(on_slice, bracket=(-20, math.log(x[2]) + 1, 20), method="golden", tol=1e-10)
    assert abs(math.log(x[2]) - oracle.x) <= 1e-4
    assert res.constraint_residual <= 1e-10


def test_budget_monotonicity():
    p = CfParams(math.log(0.3), math.log(40.0), 0.35, math.log(60.0), 0.28)
    ys = [compute_optimal(CF, p, ComputeBudget(C, (0, 1))).y for C in np.logspace(10, 26, 9)]
    assert all(b <= a + 1e-10 for a, b in zip(ys, ys[1:]))


def test_no_stationary_point_raises_with_best_attached():
    # The second input has no effect and both constants are negligible, so y keeps
    # falling as compute moves to x1 and the log slope never flattens.
    p = CfParams(-300.0, math.log(5.0), 0.3, -300.0, 0.0)
    with pytest.raises(SolverError) as info:
        compute_optimal(CF, p, ComputeBudget(1e12, (0, 1)), starts=2)
    assert info.value.best is not None and info.value.best.residual > 1e-8


def test_budget_validation():
    with pytest.raises(ArgumentError):
        ComputeBudget(1e10, ())
    with pytest.raises(ArgumentError):
        ComputeBudget(1e10, (0, 1), free_dims=(1,))
    with pytest.raises(ArgumentError):
        ComputeBudget(-1.0, (0,))
    spec = FormSpec("a1", 3, break_count=0)
    p = ParamSet({0: MbnslParams(0, (0, 1, 2), 0.0, (0.1, 0.2, 0.3))}, {})
    with pytest.raises(ArgumentError, match="neither optimized nor given"):
        compute_optimal(spec, p, ComputeBudget(1e10, (0, 1)))
    res = compute_optimal(
        FormSpec("a1", 3, break_count=0), p, ComputeBudget(1e10, (0,), fixed_values={1: 3.0, 2: 7.0})
    )
    np.testing.assert_allclose(res.x, [1e10 / 6, 3.0, 7.0], rtol=1e-14)


# ---------------------------------------------------------------- comparison tables


def _small_problem():
    rng = np.random.default_rng(1)
    x = np.exp(rng.uniform(0, 6, (40, 2)))
    y = eval_cf(CfParams(math.log(0.2), 1.0, 0.3, 1.5, 0.4), x[:, 0], x[:, 1])
    return threshold_split(ScalingDataset(x, y, ["n", "d"]))


def test_single_spec_gives_one_row():
    train, test = _small_problem()
    table = compare_forms(train, test, [CF], FitConfig(seeds=1, max_steps=200, threads=1))
    tsv = table.to_tsv().splitlines()
    assert tsv[0].split("\t") == list(TSV_COLUMNS)
    assert len(tsv) == 2
    assert table.winner == 0
    assert "*" in table.to_text()


def test_identical_specs_give_identical_rows_and_errors_are_recorded():
    train, test = _small_problem()
    specs = [CF, CF, FormSpec("dc", 3)]
    table = compare_forms(train, test, specs, FitConfig(seeds=1, max_steps=200, threads=1), labels=["a", "b", "bad"])
    rows = table.to_tsv(include_timing=False).splitlines()[1:]
    assert rows[0].split("\t")[1:] == rows[1].split("\t")[1:]
    assert table.rows[2].result is None and "3 input dimensions" in table.rows[2].error
    assert rows[2].split("\t")[0] == "bad" and rows[2].endswith("nan")
    assert "failed" in table.to_text()
    assert "wall_seconds" not in table.to_tsv(include_timing=False)


def test_tsv_numbers_round_trip():
    train, test = _small_problem()
    table = compare_forms(train, test, [CF], FitConfig(seeds=1, max_steps=100, threads=1))
    fields = table.to_tsv().splitlines()[1].split("\t")
    r = table.rows[0].result
    assert float(fields[4]) == r.train_rmsle and float(fields[6]) == r.test_rmsle

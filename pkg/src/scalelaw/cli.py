"""Command-line interface: fit, predict, compare, compute-optimal, simulate.

Exit codes: 0 success, 2 usage or data error, 3 fit or solver failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from dataclasses import replace
from pathlib import Path
from typing import Sequence

import numpy as np

from scalelaw import fixtures
from scalelaw.analysis import ComputeBudget, compare_forms, compute_optimal, simulate_noiseless
from scalelaw.data import (
    ScalingDataset,
    default_thresholds,
    load_dataset,
    load_fixture,
    threshold_split,
    write_dataset,
)
from scalelaw.errors import FitError, ScaleLawError, SolverError
from scalelaw.fit import DEFAULT_LAMBDA_GRID, DEFAULT_N_GRID, DEFAULT_S_GRID, FitConfig, FitResult, Grids
from scalelaw.fit import configure, fit_form, fit_with_selection, predict
from scalelaw.forms import FORM_KINDS, CfParams, FormSpec, flatten_params, param_names, unflatten_params

log = logging.getLogger("scalelaw")

SCHEMA = "scalelaw.fit/1"
EXIT_OK, EXIT_USAGE, EXIT_FIT = 0, 2, 3
PLOT_POINTS = 256


class UsageError(ScaleLawError):
    pass


# --------------------------------------------------------------------------
# Encoding helpers
# --------------------------------------------------------------------------


def _num(v):
    """JSON-safe float: repr precision, non-finite values as strings."""
    if v is None:
        return None
    v = float(v)
    if math.isfinite(v):
        return v
    return "nan" if math.isnan(v) else ("inf" if v > 0 else "-inf")


def _unnum(v) -> float:
    if isinstance(v, str):
        if v not in ("nan", "inf", "-inf"):
            raise UsageError(f"bad numeric field {v!r}")
        return float(v)
    return float(v)


def _fmt(v) -> str:
    return repr(float(v))


def _parse_list(text: str, kind=float) -> tuple:
    try:
        return tuple(kind(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"cannot parse list {text!r}") from None


# --------------------------------------------------------------------------
# Shared option groups
# --------------------------------------------------------------------------


def _add_data(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--data", help="CSV with header x1,...,xm,y")
    g.add_argument("--fixture", help=f"embedded dataset: {', '.join(fixtures.fixture_names())}")


def _add_split(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument(
        "--split-threshold", action="append", default=None, metavar="DIM=VAL",
        help="train iff x_DIM < VAL for every given DIM (name or 0-based index); repeatable",
    )
    g.add_argument("--split-half", action="store_true", help="threshold every dimension at max/2 (default)")


def _add_fit_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n-grid", default=None, help=f"break counts (default {','.join(map(str, DEFAULT_N_GRID))})")
    p.add_argument("--s-grid", default=None, help=f"oppositional counts (default {','.join(map(str, DEFAULT_S_GRID))})")
    p.add_argument("--lambda-grid", default=None, help="L2 weights (default the 7-value ladder 0..1e-3)")
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--max-steps", type=int, default=20000)
    p.add_argument("--seed-base", type=int, default=0)
    p.add_argument("--overfit", action=argparse.BooleanOptionalAction, default=None,
                   help="include the overfitting term (fixture default, else on)")
    p.add_argument("--hparam-force", action=argparse.BooleanOptionalAction, default=None,
                   help="include the hyperparameter terms (fixture default, else on)")
    p.add_argument("--upper-limit", action=argparse.BooleanOptionalAction, default=None,
                   help="learn a finite upper limit on the metric (fixture default, else off)")
    p.add_argument("--input-map", default=None,
                   help="comma-separated 0-based data columns feeding the form (DC/CF column order)")


def _load(args) -> tuple[ScalingDataset, dict]:
    if args.fixture:
        ds = load_fixture(args.fixture)
        return ds, dict(fixtures.FIXTURES[fixtures.resolve(args.fixture)])
    return load_dataset(args.data), {}


def _split(ds: ScalingDataset, args):
    thr = default_thresholds(ds)
    if args.split_threshold:
        thr = np.full(ds.arity, np.inf)
        for item in args.split_threshold:
            if "=" not in item:
                raise UsageError(f"--split-threshold expects DIM=VAL, got {item!r}")
            dim, val = item.rsplit("=", 1)
            try:
                thr[ds.dim_index(dim.strip())] = float(val)
            except ValueError:
                raise UsageError(f"bad threshold value {val!r}") from None
    train, test = threshold_split(ds, thr)
    return train, test, thr


def _spec(form: str, ds: ScalingDataset, meta: dict, args) -> FormSpec:
    flags = meta.get("flags", {})
    overfit = args.overfit if args.overfit is not None else flags.get("overfit", True)
    hforce = args.hparam_force if args.hparam_force is not None else flags.get("hparam_force", True)
    upper = args.upper_limit if args.upper_limit is not None else flags.get("upper_limit", False)
    arity = {"cf": 2, "dc": 3}.get(form, ds.arity)
    imap = None
    if args.input_map:
        imap = _parse_list(args.input_map, int)
    elif form == "dc" and "dc_input_map" in meta:
        imap = tuple(meta["dc_input_map"])
    if imap is None and arity != ds.arity:
        raise UsageError(f"form {form} takes {arity} inputs but the data has {ds.arity} (use --input-map)")
    if imap is not None and (len(imap) != arity or any(i < 0 or i >= ds.arity for i in imap)):
        raise UsageError(f"--input-map {imap} must list {arity} columns in 0..{ds.arity - 1}")
    return FormSpec(
        form, arity, break_count=1, oppositional_count=1 if hforce else 0,
        overfit_enabled=overfit, hparam_force_enabled=hforce, metric_upper_limit_enabled=upper,
        input_map=imap,
    )


def _grids(args) -> Grids:
    return Grids(
        _parse_list(args.n_grid, int) if args.n_grid else DEFAULT_N_GRID,
        _parse_list(args.s_grid, int) if args.s_grid else DEFAULT_S_GRID,
        _parse_list(args.lambda_grid, float) if args.lambda_grid else DEFAULT_LAMBDA_GRID,
    )


def _config(args) -> FitConfig:
    return FitConfig(seeds=args.seeds, max_steps=args.max_steps, seed_base=args.seed_base)


def _fit(train, test, spec, grids: Grids, cfg: FitConfig) -> FitResult:
    single = len(grids.break_counts) == len(grids.oppositional_counts) == len(grids.l2_weights) == 1
    if single:
        spec = configure(spec, grids.break_counts[0], grids.oppositional_counts[0])
        return fit_form(train, spec, replace(cfg, l2_weight=grids.l2_weights[0]), test=test)
    return fit_with_selection(train, spec, grids, cfg, test=test)


# --------------------------------------------------------------------------
# Fit artifacts
# --------------------------------------------------------------------------


def spec_to_json(spec: FormSpec) -> dict:
    return {
        "form_kind": spec.form_kind,
        "arity": spec.arity,
        "break_count": spec.break_count,
        "oppositional_count": spec.oppositional_count,
        "overfit_enabled": spec.overfit_enabled,
        "hparam_force_enabled": spec.hparam_force_enabled,
        "metric_upper_limit_enabled": spec.metric_upper_limit_enabled,
        "nonbottleneck_sets": [[r, list(s)] for r, s in spec.nonbottleneck_sets],
        "bottleneck_sets": [[r, list(s)] for r, s in spec.bottleneck_sets],
        "break_overrides": [list(p) for p in spec.break_overrides],
        "input_map": list(spec.input_map) if spec.input_map is not None else None,
    }


def spec_from_json(obj: dict) -> FormSpec:
    return FormSpec(
        obj["form_kind"], int(obj["arity"]),
        break_count=int(obj["break_count"]),
        oppositional_count=int(obj["oppositional_count"]),
        overfit_enabled=bool(obj["overfit_enabled"]),
        hparam_force_enabled=bool(obj["hparam_force_enabled"]),
        metric_upper_limit_enabled=bool(obj["metric_upper_limit_enabled"]),
        nonbottleneck_sets=[(r, tuple(s)) for r, s in obj.get("nonbottleneck_sets", [])],
        bottleneck_sets=[(r, tuple(s)) for r, s in obj.get("bottleneck_sets", [])],
        break_overrides=[tuple(p) for p in obj.get("break_overrides", [])],
        input_map=tuple(obj["input_map"]) if obj.get("input_map") is not None else None,
    )


def fit_to_json(result: FitResult, ds: ScalingDataset, source: str, thresholds, cfg: FitConfig) -> dict:
    spec = result.spec
    return {
        "schema": SCHEMA,
        "dataset": {"source": source, "dim_names": list(ds.dim_names), "metric_name": ds.metric_name},
        "form": spec_to_json(spec),
        "hyperparameters": {
            "n": result.break_count,
            "S": result.oppositional_count,
            "lambda": _num(result.l2_weight),
        },
        "split": {"thresholds": [_num(t) for t in thresholds]},
        "config": {"seeds": cfg.seeds, "max_steps": cfg.max_steps, "seed_base": cfg.seed_base},
        "parameters": {
            "names": param_names(spec),
            "values": [_num(v) for v in flatten_params(spec, result.best_params)],
        },
        "best_seed": result.best_seed,
        "per_seed_train_loss": [_num(v) for v in result.per_seed_train_loss],
        "metrics": {
            "train_rmsle": _num(result.train_rmsle),
            "train_rsle": _num(result.train_rsle),
            "test_rmsle": _num(result.test_rmsle),
            "test_rsle": _num(result.test_rsle),
        },
    }


def load_fit(path) -> tuple[FormSpec, object, dict]:
    """Read a fit artifact; returns (spec, params, raw document)."""
    path = Path(path)
    if not path.is_file():
        raise UsageError(f"{path}: file not found")
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        raise UsageError(f"{path}: expected schema {SCHEMA!r}")
    try:
        spec = spec_from_json(doc["form"])
        names = doc["parameters"]["names"]
        values = [_unnum(v) for v in doc["parameters"]["values"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: malformed fit artifact ({exc})") from None
    if names != param_names(spec):
        raise UsageError(f"{path}: parameter names do not match the form's layout")
    return spec, unflatten_params(spec, values), doc


def _write_plot_data(out: Path, ds, train, test, spec, params, colorbar_dim) -> None:
    plot = out / "plot"
    plot.mkdir(parents=True, exist_ok=True)
    cdim = ds.dim_index(colorbar_dim) if colorbar_dim is not None else (1 if ds.arity > 1 else 0)
    xdim = 0 if cdim != 0 or ds.arity == 1 else 1
    with (plot / "points.tsv").open("w") as fh:
        fh.write("\t".join([*ds.dim_names, ds.metric_name, "y_pred", "role", "marker"]) + "\n")
        for part, role, marker in ((train, "train", "triangle"), (test, "test", "circle")):
            if len(part) == 0:
                continue
            pred = predict(spec, params, part.x)
            for xi, yi, pi in zip(part.x, part.y, pred):
                fh.write("\t".join([*map(_fmt, xi), _fmt(yi), _fmt(pi), role, marker]) + "\n")

    lo, hi = ds.x[:, xdim].min() / 10, ds.x[:, xdim].max() * 10
    axis = np.logspace(math.log10(lo), math.log10(hi), PLOT_POINTS)
    rest = ds.x.max(axis=0)
    values = np.unique(ds.x[:, cdim]) if ds.arity > 1 else np.array([np.nan])
    with (plot / "slices.tsv").open("w") as index:
        index.write(f"file\t{ds.dim_names[cdim]}\n")
        for i, v in enumerate(values):
            grid = np.tile(rest, (PLOT_POINTS, 1))
            grid[:, xdim] = axis
            if ds.arity > 1:
                grid[:, cdim] = v
            with np.errstate(all="ignore"):
                pred = predict(spec, params, grid)
            name = f"slice_{i:03d}.tsv"
            index.write(f"{name}\t{_fmt(v)}\n")
            with (plot / name).open("w") as fh:
                fh.write(f"{ds.dim_names[xdim]}\ty_pred\n")
                for a, b in zip(axis, pred):
                    fh.write(f"{_fmt(a)}\t{_fmt(b)}\n")


# --------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------


def cmd_fit(args) -> int:
    ds, meta = _load(args)
    train, test, thr = _split(ds, args)
    spec = _spec(args.form, ds, meta, args)
    cfg = _config(args)
    result = _fit(train, test, spec, _grids(args), cfg)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    source = f"fixture:{fixtures.resolve(args.fixture)}" if args.fixture else f"csv:{args.data}"
    doc = fit_to_json(result, ds, source, thr, cfg)
    (out / "fit.json").write_text(json.dumps(doc, indent=2) + "\n")
    _write_plot_data(out, ds, train, test, result.spec, result.best_params, args.colorbar_dim)
    print(f"form {result.spec.form_kind}  n={result.break_count} S={result.oppositional_count} "
          f"lambda={result.l2_weight:g}  best seed {result.best_seed}")
    print(f"train RMSLE {result.train_rmsle:.6e}")
    if result.test_rmsle is not None:
        rsle = f" ± {result.test_rsle:.3e}" if result.test_rsle is not None else ""
        print(f"test RMSLE {result.test_rmsle:.6e}{rsle}")
    print(f"wrote {out / 'fit.json'}")
    return EXIT_OK


def cmd_predict(args) -> int:
    spec, params, doc = load_fit(args.fit)
    if args.x:
        x = np.array([_parse_list(item) for item in args.x])
        names = doc["dataset"]["dim_names"]
        y = None
    else:
        if not (args.data or args.fixture):
            raise UsageError("predict needs --data, --fixture or --x")
        ds, _ = _load(args)
        x, y, names = ds.x, ds.y, list(ds.dim_names)
    pred = predict(spec, params, x)
    lines = ["\t".join([*names, "y_pred"] + (["y"] if y is not None else []))]
    for i, xi in enumerate(x):
        row = [*map(_fmt, xi), _fmt(pred[i])] + ([_fmt(y[i])] if y is not None else [])
        lines.append("\t".join(row))
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_compare(args) -> int:
    ds, meta = _load(args)
    train, test, _ = _split(ds, args)
    forms = _parse_list(args.forms, str)
    unknown = [f for f in forms if f not in FORM_KINDS]
    if unknown:
        raise UsageError(f"unknown forms {unknown}; expected {FORM_KINDS}")
    specs = [_spec(f, ds, meta, args) for f in forms]
    grids = _grids(args)
    cfg = _config(args)
    single = len(grids.break_counts) == len(grids.oppositional_counts) == len(grids.l2_weights) == 1
    if single:
        specs = [configure(s, grids.break_counts[0], grids.oppositional_counts[0]) for s in specs]
        table = compare_forms(train, test, specs, replace(cfg, l2_weight=grids.l2_weights[0]), labels=forms)
    else:
        table = compare_forms(train, test, specs, cfg, grids=grids, labels=forms)
    sys.stdout.write(table.to_text())
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "compare.tsv").write_text(table.to_tsv(include_timing=not args.omit_timing))
        print(f"wrote {out / 'compare.tsv'}")
    failed = [r.label for r in table.rows if r.result is None]
    return EXIT_FIT if len(failed) == len(table.rows) else EXIT_OK


def _params_source(args):
    if args.cf:
        a, b1, c1, b2, c2 = _parse_list(args.cf)
        if min(a, b1, b2) <= 0:
            raise UsageError("--cf needs positive a, b1, b2")
        return FormSpec("cf", 2), CfParams(math.log(a), math.log(b1), c1, math.log(b2), c2), None
    if args.fit:
        return load_fit(args.fit)
    raise UsageError("give --fit or --cf")


def cmd_compute_optimal(args) -> int:
    spec, params, _ = _params_source(args)
    fixed = {}
    for item in args.fixed or []:
        dim, val = item.rsplit("=", 1)
        fixed[int(dim)] = float(val)
    budget = ComputeBudget(
        args.compute, _parse_list(args.compute_dims, int),
        _parse_list(args.free_dims, int) if args.free_dims else (),
        args.compute_constant, fixed,
    )
    res = compute_optimal(spec, params, budget, starts=args.starts, seed=args.seed_base)
    for i, v in enumerate(res.x):
        print(f"x{i + 1}\t{_fmt(v)}")
    print(f"y\t{_fmt(res.y)}")
    print(f"multiplier\t{_fmt(res.multiplier)}")
    print(f"residual\t{_fmt(res.residual)}")
    print(f"constraint_residual\t{_fmt(res.constraint_residual)}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    spec, params, doc = _params_source(args)
    axes = []
    for item in args.grid:
        parts = item.split(":")
        if len(parts) != 3:
            raise UsageError(f"--grid expects LOW:HIGH:COUNT, got {item!r}")
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
        if lo <= 0 or hi <= 0 or n < 1:
            raise UsageError(f"bad grid axis {item!r}")
        axes.append(np.logspace(math.log10(lo), math.log10(hi), n))
    if len(axes) != spec.arity:
        raise UsageError(f"need one --grid per input ({spec.arity}), got {len(axes)}")
    mesh = np.meshgrid(*axes, indexing="ij")
    grid = np.column_stack([g.ravel() for g in mesh])
    names = doc["dataset"]["dim_names"] if doc and len(doc["dataset"]["dim_names"]) == spec.arity else None
    sim = simulate_noiseless(spec, params, grid, names)
    write_dataset(sim, args.out)
    print(f"wrote {len(sim)} points to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scalelaw", description="Fit and extrapolate neural scaling laws.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="fit one functional form")
    _add_data(p)
    p.add_argument("--form", choices=FORM_KINDS, default="unsl")
    _add_split(p)
    _add_fit_options(p)
    p.add_argument("--out", default="scalelaw_out")
    p.add_argument("--colorbar-dim", default=None, help="dimension that colors the plot slices")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("predict", help="evaluate a fitted form")
    p.add_argument("--fit", required=True, help="fit.json written by 'fit'")
    _add_data(p, required=False)
    p.add_argument("--x", action="append", help="comma-separated input point; repeatable")
    p.add_argument("--out", default=None, help="TSV path (default stdout)")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("compare", help="fit several forms on one split")
    _add_data(p)
    p.add_argument("--forms", default="unsl,dc,a1,a2,a3")
    _add_split(p)
    _add_fit_options(p)
    p.add_argument("--out", default=None)
    p.add_argument("--omit-timing", action="store_true", help="write nan for wall_seconds")
    p.set_defaults(func=cmd_compare)

    for name, func, extra in (("compute-optimal", cmd_compute_optimal, True), ("simulate", cmd_simulate, False)):
        p = sub.add_parser(name)
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--fit", help="fit.json written by 'fit'")
        g.add_argument("--cf", help="CF constants a,b1,c1,b2,c2")
        if extra:
            p.add_argument("--compute", type=float, required=True)
            p.add_argument("--compute-dims", required=True, help="0-based dims whose product is compute")
            p.add_argument("--free-dims", default=None, help="0-based dims optimized freely")
            p.add_argument("--fixed", action="append", metavar="DIM=VAL", help="hold a dimension fixed")
            p.add_argument("--compute-constant", type=float, default=6.0)
            p.add_argument("--starts", type=int, default=8)
            p.add_argument("--seed-base", type=int, default=0)
        else:
            p.add_argument("--grid", action="append", required=True, metavar="LOW:HIGH:COUNT",
                           help="log-spaced axis per input; repeat once per input")
            p.add_argument("--out", required=True, help="CSV path")
        p.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s"
    )
    try:
        return args.func(args)
    except (FitError, SolverError) as exc:
        print(f"scalelaw: error: {exc}", file=sys.stderr)
        return EXIT_FIT
    except (ScaleLawError, OSError) as exc:
        print(f"scalelaw: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

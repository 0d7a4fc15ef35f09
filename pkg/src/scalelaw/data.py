"""Datasets, log-space normalization statistics and the two split procedures."""

from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from scalelaw import fixtures
from scalelaw.errors import ArgumentError, DataLoadError, SplitError
from scalelaw.metrics import NORM_EPSILON

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DataPoint:
    x: tuple[float, ...]
    y: float

    def __post_init__(self):
        x = tuple(float(v) for v in self.x)
        y = float(self.y)
        if not all(math.isfinite(v) and v > 0 for v in x) or not (math.isfinite(y) and y > 0):
            raise ArgumentError(f"data point ({x}, {y}) must be positive and finite")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)


@dataclass(frozen=True, eq=False)
class ScalingDataset:
    """Immutable (x, y) observations.  ``x`` has shape (N, m)."""

    x: np.ndarray
    y: np.ndarray
    dim_names: tuple[str, ...]
    metric_name: str = "y"

    def __post_init__(self):
        x = np.array(self.x, dtype=float, ndmin=2)
        y = np.array(self.y, dtype=float).ravel()
        if x.shape[0] == 0 and y.size == 0:
            x = x.reshape(0, len(self.dim_names))
        if x.ndim != 2 or x.shape[0] != y.size:
            raise ArgumentError(f"x has shape {x.shape} but y has {y.size} entries")
        names = tuple(str(n) for n in self.dim_names)
        if len(names) != x.shape[1]:
            raise ArgumentError(f"{len(names)} dimension names for {x.shape[1]} input columns")
        if not (np.all(np.isfinite(x)) and np.all(x > 0) and np.all(np.isfinite(y)) and np.all(y > 0)):
            raise ArgumentError("all inputs and outputs must be positive and finite")
        x.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "dim_names", names)

    @classmethod
    def from_points(cls, points: Sequence[DataPoint], dim_names, metric_name: str = "y") -> "ScalingDataset":
        if not points:
            return cls(np.zeros((0, len(dim_names))), np.zeros(0), dim_names, metric_name)
        return cls([p.x for p in points], [p.y for p in points], dim_names, metric_name)

    @property
    def arity(self) -> int:
        return self.x.shape[1]

    def __len__(self) -> int:
        return self.y.size

    @property
    def points(self) -> list[DataPoint]:
        return [DataPoint(tuple(xi), yi) for xi, yi in zip(self.x, self.y)]

    def subset(self, mask_or_index) -> "ScalingDataset":
        idx = np.asarray(mask_or_index)
        return ScalingDataset(self.x[idx], self.y[idx], self.dim_names, self.metric_name)

    def merge(self, other: "ScalingDataset") -> "ScalingDataset":
        if other.dim_names != self.dim_names:
            raise ArgumentError("cannot merge datasets with different dimensions")
        return ScalingDataset(
            np.vstack([self.x, other.x]), np.concatenate([self.y, other.y]), self.dim_names, self.metric_name
        )

    def dim_index(self, name_or_index) -> int:
        if isinstance(name_or_index, int):
            i = name_or_index
        elif str(name_or_index).lstrip("-").isdigit():
            i = int(name_or_index)
        elif name_or_index in self.dim_names:
            return self.dim_names.index(name_or_index)
        else:
            raise ArgumentError(f"unknown dimension {name_or_index!r}; have {list(self.dim_names)}")
        if not 0 <= i < self.arity:
            raise ArgumentError(f"dimension index {i} out of range 0..{self.arity - 1}")
        return i


# --------------------------------------------------------------------------
# Loading
# --------------------------------------------------------------------------


def load_fixture(name: str) -> ScalingDataset:
    try:
        key = fixtures.resolve(name)
    except KeyError as exc:
        raise DataLoadError(str(exc.args[0])) from None
    f = fixtures.FIXTURES[key]
    x = np.column_stack([np.asarray(c, dtype=float) for c in f["columns"]])
    return ScalingDataset(x, np.asarray(f["y"], dtype=float), f["dim_names"], f["metric_name"])


def load_dataset(
    path,
    format: str = "csv",
    x_columns: Sequence[str] | None = None,
    y_column: str | None = None,
) -> ScalingDataset:
    """Read a CSV with a header row.

    By default every column but the last is an input and the last is the
    metric.  ``x_columns`` / ``y_column`` select named columns instead.
    """
    if format != "csv":
        raise DataLoadError(f"unsupported format {format!r}; only csv is supported")
    path = Path(path)
    if not path.is_file():
        raise DataLoadError(f"{path}: file not found")
    with path.open(newline="") as fh:
        rows = list(csv.reader(fh))
    rows = [r for r in rows if any(cell.strip() for cell in r)]
    if not rows:
        raise DataLoadError(f"{path}: empty file")
    header = [h.strip() for h in rows[0]]
    if len(header) < 2:
        raise DataLoadError(f"{path}: need at least one input column and one metric column")
    if y_column is None:
        y_col = len(header) - 1
    elif y_column in header:
        y_col = header.index(y_column)
    else:
        raise DataLoadError(f"{path}: no column named {y_column!r}")
    if x_columns is None:
        x_cols = [i for i in range(len(header)) if i != y_col]
    else:
        missing = [c for c in x_columns if c not in header]
        if missing:
            raise DataLoadError(f"{path}: no column named {missing[0]!r}")
        x_cols = [header.index(c) for c in x_columns]

    xs, ys = [], []
    for line_no, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise DataLoadError(f"{path}: row {line_no} has {len(row)} fields, header has {len(header)}")
        values = []
        for col in x_cols + [y_col]:
            cell = row[col].strip()
            try:
                v = float(cell)
            except ValueError:
                raise DataLoadError(
                    f"{path}: row {line_no}, column {header[col]!r}: cannot parse {cell!r}"
                ) from None
            if not math.isfinite(v) or v <= 0:
                raise DataLoadError(
                    f"{path}: row {line_no}, column {header[col]!r}: value {cell} must be positive and finite"
                )
            values.append(v)
        xs.append(values[:-1])
        ys.append(values[-1])
    if not ys:
        raise DataLoadError(f"{path}: no data rows")
    return ScalingDataset(np.array(xs), np.array(ys), [header[i] for i in x_cols], header[y_col])


def write_dataset(ds: ScalingDataset, path) -> None:
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow([*ds.dim_names, ds.metric_name])
        for xi, yi in zip(ds.x, ds.y):
            w.writerow([repr(float(v)) for v in xi] + [repr(float(yi))])


# --------------------------------------------------------------------------
# Splits
# --------------------------------------------------------------------------


def default_thresholds(ds: ScalingDataset) -> np.ndarray:
    return ds.x.max(axis=0) / 2.0


def threshold_split(ds: ScalingDataset, thresholds: Sequence[float] | None = None):
    """Train iff x_i < threshold_i for every dimension; the rest is test."""
    thr = default_thresholds(ds) if thresholds is None else np.asarray(thresholds, dtype=float)
    if thr.shape != (ds.arity,):
        raise ArgumentError(f"expected {ds.arity} thresholds, got {thr.shape}")
    mask = np.all(ds.x < thr, axis=1)
    if not mask.any():
        raise SplitError("threshold split left no training points")
    return ds.subset(mask), ds.subset(~mask)


def pareto_maximal(x: np.ndarray) -> np.ndarray:
    """Mask of points not weakly dominated (>= everywhere, > somewhere) by another point."""
    x = np.asarray(x, dtype=float)
    ge = np.all(x[:, None, :] >= x[None, :, :], axis=2)
    gt = np.any(x[:, None, :] > x[None, :, :], axis=2)
    dominated_by = ge & gt  # [j, i]: j dominates i
    return ~dominated_by.any(axis=0)


def frontier_validation_split(train: ScalingDataset):
    """Hold out the Pareto-maximal points of ``train`` for validation.

    When fewer than half the points would remain for fitting, only the
    largest points (by product of inputs, earlier rows first on ties) are
    kept for validation so at least half stay in the inner training set.
    """
    n = len(train)
    if n == 0:
        raise SplitError("cannot split an empty training set")
    if n == 1:
        log.warning("frontier split: a single training point leaves nothing to validate on")
        return train, train.subset(np.zeros(1, dtype=bool))
    val = pareto_maximal(train.x)
    if n - val.sum() < n / 2:
        keep = n // 2
        log.warning(
            "frontier split is degenerate (%d of %d points on the frontier); keeping %d for validation",
            int(val.sum()), n, keep,
        )
        cand = np.flatnonzero(val)
        size = np.sum(np.log(train.x[cand]), axis=1)
        order = sorted(range(cand.size), key=lambda i: (-size[i], cand[i]))
        chosen = cand[order[:keep]]
        val = np.zeros(n, dtype=bool)
        val[chosen] = True
    return train.subset(~val), train.subset(val)


# --------------------------------------------------------------------------
# Normalization
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class NormStats:
    log_x_mean: np.ndarray
    log_x_std: np.ndarray
    log_y_mean: float
    epsilon: float = NORM_EPSILON

    def apply_x(self, x) -> np.ndarray:
        return (np.log(np.asarray(x, dtype=float)) - self.log_x_mean) / self.log_x_std

    def unapply_x(self, z) -> np.ndarray:
        return np.exp(np.asarray(z, dtype=float) * self.log_x_std + self.log_x_mean)

    def apply_y(self, y) -> np.ndarray:
        return np.asarray(y, dtype=float) * math.exp(-self.log_y_mean)

    def unapply_y(self, v) -> np.ndarray:
        return np.asarray(v, dtype=float) * math.exp(self.log_y_mean)


def compute_norm_stats(train: ScalingDataset, epsilon: float = NORM_EPSILON) -> NormStats:
    if len(train) == 0:
        raise ArgumentError("cannot compute statistics of an empty dataset")
    lx = np.log(train.x)
    mean = lx.mean(axis=0)
    std = lx.std(axis=0)
    std = np.where(std > 0, std, 1.0)
    return NormStats(mean, std, float(np.mean(np.log(train.y + epsilon))), epsilon)

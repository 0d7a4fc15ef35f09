"""Closed-form manipulations of single kernels.

* The sum of two pure power laws, ``b * prod x^-c0 + g * prod x^h``, is the
  same function as a one-break kernel with sharpness -1, break exponents
  ``c0 + h`` and break location ``b / g``.
* Any kernel has a tangent monomial ``wb * prod x^wc`` at a point, i.e. its
  tangent hyperplane in log-log coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from scalelaw import autodiff as ad
from scalelaw.errors import ArgumentError, DomainError, NotRepresentableError
from scalelaw.forms import Break, MbnslParams, log_eval_mbnsl


@dataclass(frozen=True)
class AdditivePair:
    """``y = b * prod_i x_i^(-c0_i) + g * prod_i x_i^(h_i)``, over every input dimension."""

    log_b: float
    c0: tuple[float, ...]
    log_g: float
    h: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "c0", tuple(float(v) for v in self.c0))
        object.__setattr__(self, "h", tuple(float(v) for v in self.h))
        if len(self.c0) != len(self.h) or not self.c0:
            raise ArgumentError("c0 and h must be nonempty and of equal length")

    def log_eval(self, log_x) -> np.ndarray:
        lx = np.asarray(log_x, dtype=float)
        first = self.log_b - lx @ np.asarray(self.c0)
        second = self.log_g + lx @ np.asarray(self.h)
        return np.logaddexp(first, second)


@dataclass(frozen=True)
class TangentPlane:
    """``wb * prod_i x_i^(wc_i)``; a line/plane in log-log coordinates."""

    log_wb: float
    w_c: tuple[float, ...]

    def log_eval(self, log_x) -> np.ndarray:
        return self.log_wb + np.asarray(log_x, dtype=float) @ np.asarray(self.w_c)


def additive_to_single_break(p: AdditivePair, kernel_id: int = 0) -> MbnslParams:
    """The one-break kernel (sharpness -1) equal to ``p`` everywhere."""
    c0 = np.asarray(p.c0)
    c1 = c0 + np.asarray(p.h)
    m = len(p.c0)
    return MbnslParams(kernel_id, tuple(range(m)), p.log_b, p.c0, (Break(tuple(c1), p.log_b - p.log_g, -1.0),))


def single_break_to_additive(k: MbnslParams) -> AdditivePair:
    """Inverse of :func:`additive_to_single_break`; needs exactly one break with sharpness -1."""
    if k.n_breaks != 1 or k.breaks[0].sharpness != -1.0:
        raise NotRepresentableError(
            "only a kernel with exactly one break of sharpness -1 is a sum of two power laws"
        )
    b = k.breaks[0]
    h = np.asarray(b.exponents) - np.asarray(k.init_exponents)
    return AdditivePair(k.log_offset, k.init_exponents, k.log_offset - b.log_location, tuple(h))


def tangent_hyperplane(k: MbnslParams, x) -> TangentPlane:
    """Tangent monomial of kernel ``k`` at ``x`` (one entry per index-set member)."""
    x = np.asarray(x, dtype=float)
    if x.shape != (len(k.index_set),):
        raise ArgumentError(f"kernel over {len(k.index_set)} dimensions got x of shape {x.shape}")
    if not np.all(np.isfinite(x)) or np.any(x <= 0):
        raise DomainError("every input must be positive and finite")
    lx = np.log(x)
    w_c = -np.asarray(k.init_exponents, dtype=float)
    for b in k.breaks:
        c = np.asarray(b.exponents)
        arg = (lx @ c - b.log_location) / abs(b.sharpness)
        w_c = w_c - np.sign(b.sharpness) * c * ad.sigmoid_value(arg)
    log_wb = log_eval_mbnsl(k, lx) - float(lx @ w_c)
    return TangentPlane(float(log_wb), tuple(float(v) for v in w_c))

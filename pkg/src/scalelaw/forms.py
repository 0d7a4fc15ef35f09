"""Functional forms: MBNSL kernels, UNSL and its ablations, and the CF/DC baselines.

Every form is evaluated in log space.  Sums of nonnegative terms go through
logsumexp, every ``(Y^-1 + a^-1)^-1`` through :func:`limit_combine`, and the
softplus inside each kernel uses the branchless ``max(z, 0) + log1p(e^-|z|)``
identity, so no intermediate overflows for moderate parameters.

UNSL, A1, A2 and A3 are compiled from a :class:`FormSpec` into a small
expression tree (see :func:`structure`); evaluation, gradients and the
normalized-to-raw parameter conversion all walk that tree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from types import MappingProxyType
from typing import Iterator, Mapping, Sequence, Union

import numpy as np

from scalelaw import autodiff as ad
from scalelaw.errors import ArgumentError, ConfigurationError, DomainError, ParameterError

F_FLOOR = 1e-3

FORM_KINDS = ("unsl", "a1", "a2", "a3", "cf", "dc")
TREE_FORMS = ("unsl", "a1", "a2", "a3")


# --------------------------------------------------------------------------
# Parameter types
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Break:
    """One smooth transition of an MBNSL kernel."""

    exponents: tuple[float, ...]
    log_location: float
    sharpness: float


@dataclass(frozen=True)
class MbnslParams:
    """Constants of one MBNSL kernel over the dimensions in ``index_set`` (0-based)."""

    kernel_id: int
    index_set: tuple[int, ...]
    log_offset: float
    init_exponents: tuple[float, ...]
    breaks: tuple[Break, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "index_set", tuple(int(i) for i in self.index_set))
        object.__setattr__(self, "init_exponents", tuple(float(c) for c in self.init_exponents))
        brks = tuple(
            b if isinstance(b, Break) else Break(tuple(b[0]), float(b[1]), float(b[2]))
            for b in self.breaks
        )
        brks = tuple(
            Break(tuple(float(c) for c in b.exponents), float(b.log_location), float(b.sharpness))
            for b in brks
        )
        object.__setattr__(self, "breaks", brks)
        width = len(self.index_set)
        if width == 0:
            raise ConfigurationError(f"kernel {self.kernel_id}: empty index set")
        if len(set(self.index_set)) != width:
            raise ConfigurationError(f"kernel {self.kernel_id}: repeated index in {self.index_set}")
        if len(self.init_exponents) != width:
            raise ConfigurationError(
                f"kernel {self.kernel_id}: {len(self.init_exponents)} initial exponents for "
                f"{width} dimensions"
            )
        for j, b in enumerate(self.breaks):
            if len(b.exponents) != width:
                raise ConfigurationError(
                    f"kernel {self.kernel_id} break {j}: {len(b.exponents)} exponents for "
                    f"{width} dimensions"
                )
            if not abs(b.sharpness) >= F_FLOOR:
                raise ParameterError(
                    f"kernel {self.kernel_id} break {j}: |sharpness| {abs(b.sharpness):g} "
                    f"is below the floor {F_FLOOR:g}"
                )

    @property
    def n_breaks(self) -> int:
        return len(self.breaks)


@dataclass(frozen=True)
class LimitConstant:
    """A limit constant stored in log space.

    For role ``"a0"`` (the additive floor) ``log_value`` is ``log a0``.  For
    every other role it is ``log(a^-1)``; ``-inf`` encodes ``a = inf``.
    """

    role: str
    log_value: float

    def __post_init__(self):
        v = float(self.log_value)
        object.__setattr__(self, "log_value", v)
        if math.isnan(v) or v == math.inf:
            raise ParameterError(f"limit {self.role}: log value must be finite or -inf, got {v}")
        if self.is_offset and not math.isfinite(v):
            raise ParameterError("a0 must be finite and positive")

    @property
    def is_offset(self) -> bool:
        return self.role == "a0"

    @property
    def log_inverse(self) -> float:
        return -self.log_value if self.is_offset else self.log_value

    @classmethod
    def infinite(cls, role: str) -> "LimitConstant":
        return cls(role, -math.inf)


def _role_index(role: str) -> int:
    return int(role[1:])


@dataclass(frozen=True)
class ParamSet:
    kernels: Mapping[int, MbnslParams]
    limits: Mapping[str, LimitConstant]

    def __post_init__(self):
        kernels = dict(self.kernels) if isinstance(self.kernels, Mapping) else {
            k.kernel_id: k for k in self.kernels
        }
        for key, k in kernels.items():
            if key != k.kernel_id:
                raise ConfigurationError(f"kernel stored under id {key} has kernel_id {k.kernel_id}")
        limits = dict(self.limits) if isinstance(self.limits, Mapping) else {
            a.role: a for a in self.limits
        }
        for key, a in limits.items():
            if key != a.role:
                raise ConfigurationError(f"limit stored under {key} has role {a.role}")
        object.__setattr__(self, "kernels", MappingProxyType(dict(sorted(kernels.items()))))
        object.__setattr__(
            self, "limits", MappingProxyType(dict(sorted(limits.items(), key=lambda kv: _role_index(kv[0]))))
        )


@dataclass(frozen=True)
class CfParams:
    log_a: float
    log_b1: float
    c1: float
    log_b2: float
    c2: float

    FIELDS = ("log_a", "log_b1", "c1", "log_b2", "c2")

    def as_array(self) -> np.ndarray:
        return np.array([getattr(self, f) for f in self.FIELDS])


@dataclass(frozen=True)
class DcParams:
    log_a: float
    log_b1: float
    c1: float
    log_b2: float
    c2: float
    log_d1: float
    log_d2: float

    FIELDS = ("log_a", "log_b1", "c1", "log_b2", "c2", "log_d1", "log_d2")

    def as_array(self) -> np.ndarray:
        return np.array([getattr(self, f) for f in self.FIELDS])


Params = Union[ParamSet, CfParams, DcParams]


# --------------------------------------------------------------------------
# Form specification and its expression tree
# --------------------------------------------------------------------------


def _freeze_sets(value) -> tuple[tuple[int, tuple[int, ...]], ...]:
    if not value:
        return ()
    items = value.items() if isinstance(value, Mapping) else value
    return tuple(sorted((int(r), tuple(sorted(int(i) for i in s))) for r, s in items))


@dataclass(frozen=True)
class FormSpec:
    """Which form to build and how.

    ``nonbottleneck_sets`` / ``bottleneck_sets`` map a resource-block number
    to the dimensions (0-based) of its joint kernel and of its per-dimension
    kernels; unlisted blocks use every dimension.  ``break_overrides`` maps kernel id to a per-kernel
    break count.  ``input_map`` selects and orders dataset columns for the
    form's inputs (``None`` = identity).
    """

    form_kind: str
    arity: int
    break_count: int = 1
    oppositional_count: int = 1
    overfit_enabled: bool = True
    hparam_force_enabled: bool = True
    metric_upper_limit_enabled: bool = False
    nonbottleneck_sets: tuple = field(default=())
    bottleneck_sets: tuple = field(default=())
    break_overrides: tuple = field(default=())
    input_map: tuple[int, ...] | None = None

    def __post_init__(self):
        kind = self.form_kind.lower()
        if kind not in FORM_KINDS:
            raise ConfigurationError(f"unknown form {self.form_kind!r}; expected one of {FORM_KINDS}")
        object.__setattr__(self, "form_kind", kind)
        fixed = {"cf": 2, "dc": 3}.get(kind)
        if fixed is not None and self.arity != fixed:
            raise ConfigurationError(f"{kind} takes exactly {fixed} inputs, got arity {self.arity}")
        if self.arity < 1:
            raise ConfigurationError("arity must be at least 1")
        if self.break_count < 0 or self.oppositional_count < 0:
            raise ConfigurationError("break_count and oppositional_count must be >= 0")
        object.__setattr__(self, "nonbottleneck_sets", _freeze_sets(self.nonbottleneck_sets))
        object.__setattr__(self, "bottleneck_sets", _freeze_sets(self.bottleneck_sets))
        overrides = self.break_overrides
        if isinstance(overrides, Mapping):
            overrides = overrides.items()
        object.__setattr__(
            self, "break_overrides", tuple(sorted((int(k), int(n)) for k, n in overrides or ()))
        )
        for _, dims in self.nonbottleneck_sets + self.bottleneck_sets:
            if any(i < 0 or i >= self.arity for i in dims):
                raise ConfigurationError(f"index set {dims} outside 0..{self.arity - 1}")
        if self.input_map is not None:
            imap = tuple(int(i) for i in self.input_map)
            if len(imap) != self.arity:
                raise ConfigurationError(f"input_map {imap} must have {self.arity} entries")
            object.__setattr__(self, "input_map", imap)

    @property
    def effective_oppositional_count(self) -> int:
        return self.oppositional_count if self.hparam_force_enabled else 0

    def nonbottleneck_set(self, r: int) -> tuple[int, ...]:
        return dict(self.nonbottleneck_sets).get(r, tuple(range(self.arity)))

    def bottleneck_set(self, r: int) -> tuple[int, ...]:
        return dict(self.bottleneck_sets).get(r, tuple(range(self.arity)))

    def breaks_for(self, kernel_id: int) -> int:
        return dict(self.break_overrides).get(kernel_id, self.break_count)

    def select_inputs(self, x: np.ndarray) -> np.ndarray:
        """Pick this form's input columns out of a dataset matrix."""
        x = np.asarray(x, dtype=float)
        if self.input_map is None:
            if x.shape[-1] != self.arity:
                raise ConfigurationError(
                    f"{self.form_kind} expects {self.arity} input dimensions, data has {x.shape[-1]}"
                )
            return x
        if max(self.input_map) >= x.shape[-1]:
            raise ConfigurationError(
                f"input_map {self.input_map} refers past the {x.shape[-1]} data dimensions"
            )
        return x[..., list(self.input_map)]

    def with_hparams(self, n: int | None = None, S: int | None = None) -> "FormSpec":
        """Copy with a new shared break count and/or oppositional count."""
        changes = {}
        if n is not None:
            changes["break_count"] = n
        if S is not None:
            changes["oppositional_count"] = S
            changes["hparam_force_enabled"] = S > 0
        return replace(self, **changes)


@dataclass(frozen=True)
class Kernel:
    kernel_id: int
    index_set: tuple[int, ...]
    n_breaks: int


@dataclass(frozen=True)
class Offset:
    role: str


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class LimitedReciprocal:
    """(body^-1 + a^-1)^-1"""

    body: object
    role: str


@dataclass(frozen=True)
class ShiftedReciprocal:
    """(body + a^-1)^-1"""

    body: object
    role: str


def _resource_block(spec: FormSpec, r: int):
    m = spec.arity
    base = r * (m + 1)
    terms = []
    U = spec.nonbottleneck_set(r)
    if U:
        terms.append(Kernel(base, U, spec.breaks_for(base)))
    for t in spec.bottleneck_set(r):
        kid = base + t + 1
        terms.append(Kernel(kid, (t,), spec.breaks_for(kid)))
    if not terms:
        raise ConfigurationError(f"resource block {r} has neither a non-bottleneck nor a bottleneck kernel")
    return Sum(tuple(terms)) if len(terms) > 1 else terms[0]


def _hparam_block(spec: FormSpec, q: int):
    terms = [LimitedReciprocal(_resource_block(spec, q), f"a{q}")]
    for s in range(1, spec.effective_oppositional_count + 1):
        terms.append(ShiftedReciprocal(_resource_block(spec, q + s), f"a{q + s}"))
    return Sum(tuple(terms)) if len(terms) > 1 else terms[0]


@lru_cache(maxsize=None)
def structure(spec: FormSpec):
    """Expression tree of a tree form (UNSL, A1, A2, A3, and CF as a special case)."""
    kind = spec.form_kind
    if kind == "a1":
        return Kernel(0, tuple(range(spec.arity)), spec.breaks_for(0))
    if kind == "a2":
        return Sum((Offset("a0"), _resource_block(spec, 0)))
    if kind == "a3":
        inner = [LimitedReciprocal(_resource_block(spec, 0), "a1")]
        for s in range(1, spec.effective_oppositional_count + 1):
            inner.append(ShiftedReciprocal(_resource_block(spec, s), f"a{s + 2}"))
        body = Sum(tuple(inner)) if len(inner) > 1 else inner[0]
        if spec.metric_upper_limit_enabled:
            body = LimitedReciprocal(body, "a2")
        return Sum((Offset("a0"), body))
    if kind == "unsl":
        body_terms = [_hparam_block(spec, 3)]
        if spec.overfit_enabled:
            body_terms.append(ShiftedReciprocal(_hparam_block(spec, spec.effective_oppositional_count + 4), "a1"))
        body = Sum(tuple(body_terms)) if len(body_terms) > 1 else body_terms[0]
        if spec.metric_upper_limit_enabled:
            body = LimitedReciprocal(body, "a2")
        return Sum((Offset("a0"), body))
    if kind == "cf":
        return Sum((Offset("a0"), Kernel(1, (0,), 0), Kernel(2, (1,), 0)))
    raise ConfigurationError(f"{kind} has no tree structure")


def walk(node) -> Iterator:
    yield node
    if isinstance(node, Sum):
        for t in node.terms:
            yield from walk(t)
    elif isinstance(node, (LimitedReciprocal, ShiftedReciprocal)):
        yield from walk(node.body)


def kernel_slots(spec: FormSpec) -> list[Kernel]:
    ks = [n for n in walk(structure(spec)) if isinstance(n, Kernel)]
    ids = [k.kernel_id for k in ks]
    if len(set(ids)) != len(ids):
        raise ConfigurationError(f"kernel ids are not unique: {ids}")
    return sorted(ks, key=lambda k: k.kernel_id)


def limit_roles(spec: FormSpec) -> list[str]:
    roles = {n.role for n in walk(structure(spec)) if isinstance(n, (Offset, LimitedReciprocal, ShiftedReciprocal))}
    return sorted(roles, key=_role_index)


def check_params(spec: FormSpec, params: Params) -> None:
    """Raise ConfigurationError unless ``params`` matches what ``spec`` demands."""
    if spec.form_kind == "cf" and isinstance(params, CfParams):
        return
    if spec.form_kind == "dc":
        if not isinstance(params, DcParams):
            raise ConfigurationError("dc expects DcParams")
        return
    if not isinstance(params, ParamSet):
        want = "CfParams or a ParamSet" if spec.form_kind == "cf" else "a ParamSet"
        raise ConfigurationError(f"{spec.form_kind} expects {want}")
    slots = kernel_slots(spec)
    want = {k.kernel_id: k for k in slots}
    if set(want) != set(params.kernels):
        missing = sorted(set(want) - set(params.kernels))
        extra = sorted(set(params.kernels) - set(want))
        raise ConfigurationError(f"kernel mismatch: missing {missing}, unexpected {extra}")
    for kid, slot in want.items():
        k = params.kernels[kid]
        if k.index_set != slot.index_set:
            raise ConfigurationError(
                f"kernel {kid}: index set {k.index_set} but the form wires {slot.index_set}"
            )
        if k.n_breaks != slot.n_breaks:
            raise ConfigurationError(f"kernel {kid}: {k.n_breaks} breaks but the form wires {slot.n_breaks}")
    roles = limit_roles(spec)
    if set(roles) != set(params.limits):
        missing = sorted(set(roles) - set(params.limits))
        extra = sorted(set(params.limits) - set(roles))
        raise ConfigurationError(f"limit mismatch: missing {missing}, unexpected {extra}")


# --------------------------------------------------------------------------
# Flat parameter layout
# --------------------------------------------------------------------------


def param_names(spec: FormSpec) -> list[str]:
    """Names of the flat parameter vector, in canonical order."""
    if spec.form_kind == "cf":
        return list(CfParams.FIELDS)
    if spec.form_kind == "dc":
        return list(DcParams.FIELDS)
    names = []
    for k in kernel_slots(spec):
        p = f"k{k.kernel_id}"
        names.append(f"{p}.log_b")
        names += [f"{p}.c0[{i}]" for i in k.index_set]
        for j in range(k.n_breaks):
            names += [f"{p}.break{j + 1}.c[{i}]" for i in k.index_set]
            names += [f"{p}.break{j + 1}.log_d", f"{p}.break{j + 1}.f"]
    names += limit_roles(spec)
    return names


def flatten_params(spec: FormSpec, params: Params) -> np.ndarray:
    check_params(spec, params)
    if isinstance(params, (CfParams, DcParams)):
        return params.as_array()
    out: list[float] = []
    for kid, k in params.kernels.items():
        out.append(k.log_offset)
        out.extend(k.init_exponents)
        for b in k.breaks:
            out.extend(b.exponents)
            out += [b.log_location, b.sharpness]
    out.extend(a.log_value for a in params.limits.values())
    return np.array(out, dtype=float)


def unflatten_params(spec: FormSpec, theta: Sequence[float]) -> Params:
    theta = [float(v) for v in theta]
    if spec.form_kind == "cf":
        return CfParams(*theta)
    if spec.form_kind == "dc":
        return DcParams(*theta)
    expected = len(param_names(spec))
    if len(theta) != expected:
        raise ConfigurationError(f"{spec.form_kind} has {expected} parameters, got {len(theta)}")
    pos = 0
    kernels = {}
    for slot in kernel_slots(spec):
        w = len(slot.index_set)
        log_b = theta[pos]
        c0 = theta[pos + 1 : pos + 1 + w]
        pos += 1 + w
        breaks = []
        for _ in range(slot.n_breaks):
            breaks.append(Break(tuple(theta[pos : pos + w]), theta[pos + w], theta[pos + w + 1]))
            pos += w + 2
        kernels[slot.kernel_id] = MbnslParams(slot.kernel_id, slot.index_set, log_b, tuple(c0), tuple(breaks))
    limits = {}
    for role in limit_roles(spec):
        limits[role] = LimitConstant(role, theta[pos])
        pos += 1
    return ParamSet(kernels, limits)


# --------------------------------------------------------------------------
# Log-space evaluation (Var based, so gradients come for free)
# --------------------------------------------------------------------------


def limit_combine(log_body, log_inverse):
    """log((e^body)^-1 + e^log_inverse)^-1 = body - log1p(e^(body + log_inverse)).

    Accepts floats, arrays or :class:`~scalelaw.autodiff.Var`; ``log_inverse``
    may be ``-inf`` (no limit) and ``log_body`` may be ``-inf``.
    """
    if isinstance(log_inverse, LimitConstant):
        log_inverse = log_inverse.log_inverse
    if isinstance(log_body, ad.Var) or isinstance(log_inverse, ad.Var):
        body = ad.as_var(log_body)
        return body - ad.softplus(body + log_inverse)
    body = np.asarray(log_body, dtype=float)
    with np.errstate(invalid="ignore"):
        z = body + log_inverse
    z = np.where(np.isneginf(body) | np.isneginf(np.asarray(log_inverse, dtype=float)), -np.inf, z)
    out = body - ad.softplus_value(z)
    return float(out) if out.ndim == 0 else out


def _kernel_log_var(lx: ad.Var, theta: ad.Var, pos: int, slot: Kernel) -> tuple[ad.Var, int]:
    """Canonical MBNSL in log space; returns (log K per point, next position)."""
    w = len(slot.index_set)
    cols = list(slot.index_set)
    lxs = ad.take(lx, (slice(None), cols))
    log_b = ad.take(theta, pos)
    c0 = ad.take(theta, slice(pos + 1, pos + 1 + w))
    out = log_b - lxs @ c0
    pos += 1 + w
    for _ in range(slot.n_breaks):
        c = ad.take(theta, slice(pos, pos + w))
        log_d = ad.take(theta, pos + w)
        f = ad.take(theta, pos + w + 1)
        inner = (lxs @ c - log_d) / ad.absolute(f)
        out = out - f * ad.softplus(inner)
        pos += w + 2
    return out, pos


def tree_log_eval(node, kernel_fn, limit_fn):
    """Evaluate an expression tree in log space.

    ``kernel_fn(Kernel) -> Var`` gives log K; ``limit_fn(role) -> Var`` gives
    ``log a0`` for the offset role and ``log(a^-1)`` for the rest.
    """
    if isinstance(node, Kernel):
        return kernel_fn(node)
    if isinstance(node, Offset):
        return limit_fn(node.role)
    if isinstance(node, Sum):
        return ad.logsumexp([tree_log_eval(t, kernel_fn, limit_fn) for t in node.terms])
    if isinstance(node, LimitedReciprocal):
        return limit_combine(tree_log_eval(node.body, kernel_fn, limit_fn), limit_fn(node.role))
    if isinstance(node, ShiftedReciprocal):
        body = tree_log_eval(node.body, kernel_fn, limit_fn)
        return -ad.logsumexp([body, limit_fn(node.role)])
    raise TypeError(f"unknown node {node!r}")


def _tree_log_var(spec: FormSpec, theta: ad.Var, lx: ad.Var) -> ad.Var:
    offsets = {}
    pos = 0
    for slot in kernel_slots(spec):
        offsets[slot.kernel_id] = pos
        pos += 1 + len(slot.index_set) + slot.n_breaks * (len(slot.index_set) + 2)
    role_pos = {role: pos + i for i, role in enumerate(limit_roles(spec))}
    cache = {}

    def kernel_fn(k: Kernel):
        cache[k.kernel_id] = _kernel_log_var(lx, theta, offsets[k.kernel_id], k)[0]
        return cache[k.kernel_id]

    def limit_fn(role: str):
        return ad.take(theta, role_pos[role])

    return tree_log_eval(structure(spec), kernel_fn, limit_fn)


def _cf_log_var(theta: ad.Var, lx: ad.Var) -> ad.Var:
    log_a, log_b1, c1, log_b2, c2 = (ad.take(theta, i) for i in range(5))
    lx1 = ad.take(lx, (slice(None), 0))
    lx2 = ad.take(lx, (slice(None), 1))
    return ad.logsumexp([log_a, log_b1 - c1 * lx1, log_b2 - c2 * lx2])


def _dc_check(c1: float, c2: float) -> None:
    if c1 == 0 or c1 + c2 == 0:
        raise ParameterError(f"dc requires c1 != 0 and c1 + c2 != 0 (c1={c1}, c2={c2})")
    if c1 * c2 <= 0:
        raise ParameterError(f"dc requires c1 and c2 of the same sign (c1={c1}, c2={c2})")


def _dc_log_var(theta: ad.Var, lx: ad.Var) -> ad.Var:
    log_a, log_b1, c1, log_b2, c2, log_d1, log_d2 = (ad.take(theta, i) for i in range(7))
    _dc_check(float(c1.value), float(c2.value))
    lx1, lx2, lx3 = (ad.take(lx, (slice(None), i)) for i in range(3))
    zero = 0.0
    r_d = ad.maximum(zero, ad.expm1(lx2 - lx3))
    log_g = (ad.log(ad.absolute(c1)) + log_b1 - ad.log(ad.absolute(c2)) - log_b2) / (c1 + c2)
    log_cap = (c2 / c1) * (lx3 + log_g) + log_g
    log_u = ad.minimum(lx1, log_cap)
    r_n = ad.maximum(zero, ad.expm1(lx1 - log_u))
    d1 = ad.exp(log_d1)
    d2 = ad.exp(log_d2)
    term1 = log_b1 - c1 * (log_u + ad.log1p(d1 * -ad.expm1(-r_n / d1)))
    term2 = log_b2 - c2 * (lx3 + ad.log1p(d2 * -ad.expm1(-r_d / d2)))
    return ad.logsumexp([log_a, term1, term2])


def _check_x(x, arity: int) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim not in (1, 2) or x.shape[-1] != arity:
        raise ArgumentError(f"expected {arity} input dimensions, got shape {x.shape}")
    if not np.all(np.isfinite(x)) or np.any(x <= 0):
        raise DomainError("every input must be positive and finite")
    return x


def _log_form_var(spec: FormSpec, theta: ad.Var, lx: ad.Var) -> ad.Var:
    if spec.form_kind == "cf":
        return _cf_log_var(theta, lx)
    if spec.form_kind == "dc":
        return _dc_log_var(theta, lx)
    return _tree_log_var(spec, theta, lx)


def _as_evaluable(spec: FormSpec, params: Params) -> Params:
    check_params(spec, params)
    if spec.form_kind == "cf" and isinstance(params, ParamSet):
        return cf_from_paramset(params)
    return params


def log_eval_form(spec: FormSpec, params: Params, log_x) -> np.ndarray | float:
    """log y for a batch (N, m) or a single point (m,) of log inputs."""
    params = _as_evaluable(spec, params)
    lx = np.asarray(log_x, dtype=float)
    single = lx.ndim == 1
    lx2 = np.atleast_2d(lx)
    if lx2.shape[-1] != spec.arity:
        raise ArgumentError(f"expected {spec.arity} input dimensions, got shape {lx.shape}")
    theta = ad.Var(flatten_params(spec, params))
    out = _log_form_var(spec, theta, ad.Var(lx2)).value
    return float(out[0]) if single else out


def eval_form(spec: FormSpec, params: Params, x) -> np.ndarray | float:
    """y at one point (m,) or many (N, m)."""
    x = _check_x(x, spec.arity)
    return np.exp(log_eval_form(spec, params, np.log(x)))


def grad_form(spec: FormSpec, params: Params, x) -> tuple[np.ndarray, np.ndarray]:
    """(dy/dtheta over the canonical flat layout, dy/dx) at a single point."""
    x = _check_x(x, spec.arity)
    if x.ndim != 1:
        raise ArgumentError("grad_form takes a single point")
    params = _as_evaluable(spec, params)
    theta = ad.Var(flatten_params(spec, params))
    lx = ad.Var(np.log(x)[None, :])
    log_y = _log_form_var(spec, theta, lx)
    y = float(np.exp(log_y.value[0]))
    g_theta, g_lx = ad.grad(log_y, [theta, lx], seed=np.array([y]))
    return g_theta, g_lx[0] / x


def log_grad_form(spec: FormSpec, params: Params, log_x) -> tuple[float, np.ndarray, np.ndarray]:
    """(log y, d log y / d theta, d log y / d log x) at a single point, all in log space.

    Unlike :func:`grad_form` this never forms dy/dx, so it stays accurate where
    y or x is too large or small for the plain derivative to be representable.
    """
    params = _as_evaluable(spec, params)
    lx0 = np.asarray(log_x, dtype=float)
    if lx0.shape != (spec.arity,):
        raise ArgumentError(f"expected {spec.arity} log inputs, got shape {lx0.shape}")
    theta = ad.Var(flatten_params(spec, params))
    lx = ad.Var(lx0[None, :])
    log_y = _log_form_var(spec, theta, lx)
    g_theta, g_lx = ad.grad(log_y, [theta, lx])
    return float(log_y.value[0]), g_theta, g_lx[0]


def log_eval_mbnsl(params: MbnslParams, log_x) -> float | np.ndarray:
    """log of one MBNSL kernel; ``log_x`` holds one entry per index-set member."""
    lx = np.asarray(log_x, dtype=float)
    width = len(params.index_set)
    if lx.shape[-1:] != (width,) or lx.ndim > 2:
        raise ArgumentError(f"kernel over {width} dimensions got log_x of shape {lx.shape}")
    single = lx.ndim == 1
    slot = Kernel(params.kernel_id, tuple(range(width)), params.n_breaks)
    theta = [params.log_offset, *params.init_exponents]
    for b in params.breaks:
        theta += [*b.exponents, b.log_location, b.sharpness]
    out = _kernel_log_var(ad.Var(np.atleast_2d(lx)), ad.Var(np.array(theta)), 0, slot)[0].value
    return float(out[0]) if single else out


def eval_mbnsl(params: MbnslParams, x) -> float | np.ndarray:
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)) or np.any(x <= 0):
        raise DomainError("every input must be positive and finite")
    return np.exp(log_eval_mbnsl(params, np.log(x)))


def eval_cf(params: CfParams, x1, x2):
    x = _check_x(np.stack(np.broadcast_arrays(np.asarray(x1, float), np.asarray(x2, float)), -1), 2)
    out = np.exp(_cf_log_var(ad.Var(params.as_array()), ad.Var(np.log(np.atleast_2d(x)))).value)
    return float(out[0]) if x.ndim == 1 else out


def eval_dc(params: DcParams, x1, x2, x3):
    arrays = np.broadcast_arrays(*(np.asarray(v, float) for v in (x1, x2, x3)))
    x = _check_x(np.stack(arrays, -1), 3)
    out = np.exp(_dc_log_var(ad.Var(params.as_array()), ad.Var(np.log(np.atleast_2d(x)))).value)
    return float(out[0]) if x.ndim == 1 else out


# --------------------------------------------------------------------------
# Coordinate changes
# --------------------------------------------------------------------------


def _output_shifts(node, s: float, kernel_shift: dict, limit_shift: dict) -> None:
    if isinstance(node, Kernel):
        kernel_shift[node.kernel_id] = s
    elif isinstance(node, Offset):
        limit_shift[node.role] = s
    elif isinstance(node, Sum):
        for t in node.terms:
            _output_shifts(t, s, kernel_shift, limit_shift)
    elif isinstance(node, LimitedReciprocal):
        limit_shift[node.role] = -s
        _output_shifts(node.body, s, kernel_shift, limit_shift)
    elif isinstance(node, ShiftedReciprocal):
        limit_shift[node.role] = -s
        _output_shifts(node.body, -s, kernel_shift, limit_shift)


def rescale_params(
    spec: FormSpec,
    params: ParamSet,
    log_x_mean: Sequence[float],
    log_x_std: Sequence[float],
    log_y_shift: float,
) -> ParamSet:
    """Convert parameters fitted on z = (log x - mean) / std with output y / e^shift.

    The returned parameters evaluate to the same function of the raw inputs,
    times ``e^log_y_shift``.
    """
    check_params(spec, params)
    mu = np.asarray(log_x_mean, dtype=float)
    sd = np.asarray(log_x_std, dtype=float)
    kshift: dict = {}
    lshift: dict = {}
    _output_shifts(structure(spec), float(log_y_shift), kshift, lshift)
    kernels = {}
    for kid, k in params.kernels.items():
        idx = list(k.index_set)
        m_k, s_k = mu[idx], sd[idx]
        c0 = np.asarray(k.init_exponents)
        log_b = k.log_offset + float(np.sum(c0 * m_k / s_k)) + kshift[kid]
        breaks = []
        for b in k.breaks:
            c = np.asarray(b.exponents)
            breaks.append(
                Break(tuple(c / s_k), b.log_location + float(np.sum(c * m_k / s_k)), b.sharpness)
            )
        kernels[kid] = MbnslParams(kid, k.index_set, log_b, tuple(c0 / s_k), tuple(breaks))
    limits = {
        role: LimitConstant(role, a.log_value + lshift[role] if math.isfinite(a.log_value) else a.log_value)
        for role, a in params.limits.items()
    }
    return ParamSet(kernels, limits)


def cf_from_paramset(params: ParamSet) -> CfParams:
    k1, k2 = params.kernels[1], params.kernels[2]
    return CfParams(
        params.limits["a0"].log_value, k1.log_offset, k1.init_exponents[0], k2.log_offset, k2.init_exponents[0]
    )


def paramset_from_cf(params: CfParams) -> ParamSet:
    return ParamSet(
        {
            1: MbnslParams(1, (0,), params.log_b1, (params.c1,)),
            2: MbnslParams(2, (1,), params.log_b2, (params.c2,)),
        },
        {"a0": LimitConstant("a0", params.log_a)},
    )

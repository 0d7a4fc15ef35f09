"""Minimal reverse-mode automatic differentiation over numpy arrays.

Every :class:`Var` holds a value and the list of parents it was computed
from, each paired with a vector-Jacobian product.  :func:`backward` walks the
graph in reverse topological order and accumulates adjoints.

Only the primitives needed by the scaling-law forms are provided.  Ties in
``maximum``/``minimum`` send the whole adjoint to the first argument, which
is the left-branch subgradient for ``maximum(0, t)`` and ``minimum(x, cap)``.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

import numpy as np

Vjp = Callable[[np.ndarray], np.ndarray]


class Var:
    __slots__ = ("value", "parents")

    def __init__(self, value, parents: tuple[tuple["Var", Vjp], ...] = ()):
        self.value = np.asarray(value, dtype=float)
        self.parents = parents

    @property
    def shape(self) -> tuple[int, ...]:
        return self.value.shape

    def __repr__(self) -> str:
        return f"Var({self.value!r})"

    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(other, self)

    def __mul__(self, other):
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return div(self, other)

    def __rtruediv__(self, other):
        return div(other, self)

    def __neg__(self):
        return neg(self)

    def __matmul__(self, other):
        return matmul(self, other)

    def __rmatmul__(self, other):
        return matmul(other, self)

    def __getitem__(self, index):
        return take(self, index)


def as_var(x) -> Var:
    return x if isinstance(x, Var) else Var(x)


def _unbroadcast(g: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    if g.shape == shape:
        return g
    while g.ndim > len(shape):
        g = g.sum(axis=0)
    for axis, size in enumerate(shape):
        if size == 1 and g.shape[axis] != 1:
            g = g.sum(axis=axis, keepdims=True)
    return g


def add(a, b) -> Var:
    a, b = as_var(a), as_var(b)
    sa, sb = a.shape, b.shape
    return Var(
        a.value + b.value,
        ((a, lambda g: _unbroadcast(g, sa)), (b, lambda g: _unbroadcast(g, sb))),
    )


def sub(a, b) -> Var:
    a, b = as_var(a), as_var(b)
    sa, sb = a.shape, b.shape
    return Var(
        a.value - b.value,
        ((a, lambda g: _unbroadcast(g, sa)), (b, lambda g: -_unbroadcast(g, sb))),
    )


def mul(a, b) -> Var:
    a, b = as_var(a), as_var(b)
    av, bv = a.value, b.value
    return Var(
        av * bv,
        (
            (a, lambda g: _unbroadcast(g * bv, av.shape)),
            (b, lambda g: _unbroadcast(g * av, bv.shape)),
        ),
    )


def div(a, b) -> Var:
    a, b = as_var(a), as_var(b)
    av, bv = a.value, b.value
    out = av / bv
    return Var(
        out,
        (
            (a, lambda g: _unbroadcast(g / bv, av.shape)),
            (b, lambda g: _unbroadcast(-g * out / bv, bv.shape)),
        ),
    )


def neg(a) -> Var:
    a = as_var(a)
    return Var(-a.value, ((a, lambda g: -g),))


def matmul(a, b) -> Var:
    a, b = as_var(a), as_var(b)
    av, bv = a.value, b.value
    if av.ndim != 2 or bv.ndim != 1:
        raise ValueError("matmul supports (n, d) @ (d,) only")
    return Var(
        av @ bv,
        ((a, lambda g: np.outer(g, bv)), (b, lambda g: g @ av)),
    )


def take(a, index) -> Var:
    a = as_var(a)
    shape = a.shape

    def vjp(g):
        out = np.zeros(shape)
        np.add.at(out, index, g)
        return out

    return Var(a.value[index], ((a, vjp),))


def total(a, axis=None) -> Var:
    a = as_var(a)
    shape = a.shape

    def vjp(g):
        if axis is None:
            return np.broadcast_to(g, shape).copy()
        return np.broadcast_to(np.expand_dims(g, axis), shape).copy()

    return Var(a.value.sum(axis=axis), ((a, vjp),))


def mean(a) -> Var:
    a = as_var(a)
    return total(a) / a.value.size


def exp(a) -> Var:
    a = as_var(a)
    out = np.exp(a.value)
    return Var(out, ((a, lambda g: g * out),))


def log(a) -> Var:
    a = as_var(a)
    av = a.value
    with np.errstate(divide="ignore"):
        out = np.log(av)
    return Var(out, ((a, lambda g: g / av),))


def log1p(a) -> Var:
    a = as_var(a)
    av = a.value
    return Var(np.log1p(av), ((a, lambda g: g / (1.0 + av)),))


def expm1(a) -> Var:
    a = as_var(a)
    av = a.value
    return Var(np.expm1(av), ((a, lambda g: g * np.exp(av)),))


def square(a) -> Var:
    a = as_var(a)
    av = a.value
    return Var(av * av, ((a, lambda g: 2.0 * g * av),))


def absolute(a) -> Var:
    a = as_var(a)
    sign = np.sign(a.value)
    return Var(np.abs(a.value), ((a, lambda g: g * sign),))


def power(a, p: float) -> Var:
    a = as_var(a)
    av = a.value
    return Var(av**p, ((a, lambda g: g * p * av ** (p - 1.0)),))


def softplus_value(x: np.ndarray) -> np.ndarray:
    """log(1 + e^x) as max(x, 0) + log1p(e^-|x|); exact at +-inf."""
    x = np.asarray(x, dtype=float)
    with np.errstate(invalid="ignore"):
        out = np.maximum(x, 0.0) + np.log1p(np.exp(-np.abs(x)))
    return np.where(np.isneginf(x), 0.0, out)


def sigmoid_value(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    e = np.exp(-np.abs(x))
    return np.where(x >= 0, 1.0 / (1.0 + e), e / (1.0 + e))


def softplus(a) -> Var:
    a = as_var(a)
    av = a.value
    return Var(softplus_value(av), ((a, lambda g: g * sigmoid_value(av)),))


def maximum(a, b) -> Var:
    a, b = as_var(a), as_var(b)
    av, bv = a.value, b.value
    pick_b = bv > av
    return Var(
        np.where(pick_b, bv, av),
        (
            (a, lambda g: _unbroadcast(np.where(pick_b, 0.0, g), av.shape)),
            (b, lambda g: _unbroadcast(np.where(pick_b, g, 0.0), bv.shape)),
        ),
    )


def minimum(a, b) -> Var:
    a, b = as_var(a), as_var(b)
    av, bv = a.value, b.value
    pick_b = bv < av
    return Var(
        np.where(pick_b, bv, av),
        (
            (a, lambda g: _unbroadcast(np.where(pick_b, 0.0, g), av.shape)),
            (b, lambda g: _unbroadcast(np.where(pick_b, g, 0.0), bv.shape)),
        ),
    )


def logsumexp_value(values: np.ndarray, axis: int = 0) -> np.ndarray:
    m = np.max(values, axis=axis, keepdims=True)
    m_safe = np.where(np.isfinite(m), m, 0.0)
    with np.errstate(divide="ignore"):
        out = np.log(np.sum(np.exp(values - m_safe), axis=axis, keepdims=True)) + m_safe
    out = np.where(np.isposinf(m), np.inf, out)
    return np.squeeze(out, axis=axis)


def logsumexp(terms: Sequence) -> Var:
    """log(sum_i exp(t_i)) over broadcast-compatible terms, max-shifted."""
    terms = [as_var(t) for t in terms]
    if len(terms) == 1:
        return terms[0]
    values = [t.value for t in terms]
    m = values[0]
    for v in values[1:]:
        m = np.maximum(m, v)
    m_safe = np.where(np.isfinite(m), m, 0.0)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        exps = [np.exp(v - m_safe) for v in values]
        total_exp = exps[0]
        for e in exps[1:]:
            total_exp = total_exp + e
        out = np.where(np.isposinf(m), np.inf, np.log(total_exp) + m_safe)
        finite = np.isfinite(out)
        inv = np.where(finite, 1.0 / np.where(finite, total_exp, 1.0), 0.0)

    parents = []
    for t, e in zip(terms, exps):
        w = np.where(finite, e * inv, 0.0)
        parents.append((t, lambda g, w=w, s=t.shape: _unbroadcast(g * w, s)))
    return Var(out, tuple(parents))


def _toposort(out: Var) -> list[Var]:
    order: list[Var] = []
    seen: set[int] = set()
    stack: list[tuple[Var, bool]] = [(out, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
            continue
        if id(node) in seen:
            continue
        seen.add(id(node))
        stack.append((node, True))
        for parent, _ in node.parents:
            if id(parent) not in seen:
                stack.append((parent, False))
    return order


def backward(out: Var, seed=None) -> dict[int, np.ndarray]:
    """Adjoints of every node reachable from ``out``, keyed by ``id(node)``."""
    grads: dict[int, np.ndarray] = {
        id(out): np.ones(out.shape) if seed is None else np.asarray(seed, dtype=float)
    }
    for node in reversed(_toposort(out)):
        g = grads.get(id(node))
        if g is None:
            continue
        for parent, vjp in node.parents:
            contrib = vjp(g)
            key = id(parent)
            if key in grads:
                grads[key] = grads[key] + contrib
            else:
                grads[key] = contrib
    return grads


def grad(out: Var, wrt: Iterable[Var], seed=None) -> list[np.ndarray]:
    grads = backward(out, seed)
    return [grads.get(id(v), np.zeros(v.shape)) for v in wrt]

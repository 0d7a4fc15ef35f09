from __future__ import annotations

import numpy as np
import pytest

from scalelaw import autodiff as ad

from oracles import central_difference

UNARY = [
    (ad.exp, lambda v: v),
    (ad.log, lambda v: np.abs(v) + 0.5),
    (ad.log1p, lambda v: np.abs(v)),
    (ad.expm1, lambda v: v),
    (ad.square, lambda v: v),
    (ad.absolute, lambda v: v + np.sign(v) * 0.1),
    (ad.softplus, lambda v: 5 * v),
    (lambda a: ad.power(a, 1.7), lambda v: np.abs(v) + 0.5),
    (ad.neg, lambda v: v),
    (ad.total, lambda v: v),
    (ad.mean, lambda v: v),
]


@pytest.mark.parametrize("op,domain", UNARY)
def test_unary_gradients_match_central_differences(op, domain):
    rng = np.random.default_rng(0)
    v0 = domain(rng.normal(size=6))

    def f(v):
        return float(ad.total(op(ad.Var(v))).value)

    x = ad.Var(v0)
    (g,) = ad.grad(ad.total(op(x)), [x])
    np.testing.assert_allclose(g, central_difference(f, v0), rtol=1e-6, atol=1e-8)


@pytest.mark.parametrize("op", [ad.add, ad.sub, ad.mul, ad.div, ad.maximum, ad.minimum])
def test_binary_gradients_with_broadcasting(op):
    rng = np.random.default_rng(1)
    a0 = rng.normal(size=(4, 3))
    b0 = rng.normal(size=(3,)) + 3.0

    def f(flat):
        a, b = flat[:12].reshape(4, 3), flat[12:]
        return float(op(ad.Var(a), ad.Var(b)).value.sum())

    a, b = ad.Var(a0), ad.Var(b0)
    ga, gb = ad.grad(ad.total(op(a, b)), [a, b])
    fd = central_difference(f, np.concatenate([a0.ravel(), b0]))
    np.testing.assert_allclose(np.concatenate([ga.ravel(), gb]), fd, rtol=1e-6, atol=1e-8)


def test_matmul_and_take():
    rng = np.random.default_rng(2)
    A0, w0 = rng.normal(size=(5, 3)), rng.normal(size=3)
    A, w = ad.Var(A0), ad.Var(w0)
    out = ad.total(ad.square(A @ w)) + ad.take(w, 1) * 3.0
    gA, gw = ad.grad(out, [A, w])
    np.testing.assert_allclose(gA, 2 * np.outer(A0 @ w0, w0))
    np.testing.assert_allclose(gw, 2 * A0.T @ (A0 @ w0) + np.array([0, 3.0, 0]))


def test_logsumexp_value_and_gradient():
    rng = np.random.default_rng(3)
    terms0 = [rng.normal(size=4) for _ in range(3)]
    vars_ = [ad.Var(t) for t in terms0]
    out = ad.logsumexp(vars_)
    np.testing.assert_allclose(out.value, np.log(sum(np.exp(t) for t in terms0)), rtol=1e-15)
    grads = ad.grad(ad.total(out), vars_)
    softmax = np.exp(np.stack(terms0)) / np.exp(np.stack(terms0)).sum(0)
    np.testing.assert_allclose(np.stack(grads), softmax, rtol=1e-14)


def test_logsumexp_handles_negative_infinity_and_large_values():
    a = ad.Var(np.array([-np.inf, 800.0, -np.inf]))
    b = ad.Var(np.array([0.0, 800.0, -np.inf]))
    out = ad.logsumexp([a, b])
    assert out.value[0] == 0.0
    assert out.value[1] == pytest.approx(800 + np.log(2), rel=1e-15)
    assert out.value[2] == -np.inf
    ga, gb = ad.grad(ad.total(out), [a, b])
    np.testing.assert_array_equal(ga, [0.0, 0.5, 0.0])
    np.testing.assert_array_equal(gb, [1.0, 0.5, 0.0])


def test_softplus_is_exact_in_the_tails():
    assert ad.softplus_value(np.array(-np.inf)) == 0.0
    assert ad.softplus_value(np.array(1000.0)) == 1000.0
    assert ad.softplus_value(np.array(-50.0)) == pytest.approx(np.exp(-50.0), rel=1e-15)
    np.testing.assert_allclose(ad.sigmoid_value(np.array([-800.0, 0.0, 800.0])), [0.0, 0.5, 1.0])


def test_ties_send_the_adjoint_to_the_first_argument():
    a, b = ad.Var(np.array([1.0])), ad.Var(np.array([1.0]))
    assert [g[0] for g in ad.grad(ad.total(ad.maximum(a, b)), [a, b])] == [1.0, 0.0]
    assert [g[0] for g in ad.grad(ad.total(ad.minimum(a, b)), [a, b])] == [1.0, 0.0]


def test_shared_subexpressions_accumulate():
    x = ad.Var(np.array([2.0]))
    y = x * x
    out = y + y * x
    (g,) = ad.grad(ad.total(out), [x])
    assert g[0] == pytest.approx(2 * 2.0 + 3 * 4.0)


def test_unreachable_variables_get_zero_gradient():
    x, z = ad.Var(np.ones(2)), ad.Var(np.ones(3))
    gx, gz = ad.grad(ad.total(x), [x, z])
    np.testing.assert_array_equal(gz, np.zeros(3))

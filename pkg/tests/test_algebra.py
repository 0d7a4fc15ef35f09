from __future__ import annotations

import math

import mpmath as mp
import numpy as np
import pytest

from scalelaw.algebra import (
    AdditivePair,
    TangentPlane,
    additive_to_single_break,
    single_break_to_additive,
    tangent_hyperplane,
)
from scalelaw.errors import DomainError, NotRepresentableError
from scalelaw.forms import Break, FormSpec, MbnslParams, ParamSet, grad_form, log_eval_mbnsl

import draws


def _pair(rng, m):
    return AdditivePair(rng.uniform(-3, 3), tuple(rng.uniform(-1, 1.5, m)), rng.uniform(-3, 3), tuple(rng.uniform(-1, 1.5, m)))


def _literal_pair(p, x):
    b, g = mp.e ** mp.mpf(p.log_b), mp.e ** mp.mpf(p.log_g)
    first, second = b, g
    for xi, c, h in zip(x, p.c0, p.h):
        first *= mp.mpf(xi) ** (-mp.mpf(c))
        second *= mp.mpf(xi) ** mp.mpf(h)
    return first + second


def test_worked_conversion():
    p = AdditivePair(0.0, (0.5,), math.log(0.01), (1.0,))
    k = additive_to_single_break(p)
    (b,) = k.breaks
    assert b.sharpness == -1.0
    assert b.exponents == (1.5,)
    assert math.exp(b.log_location) == pytest.approx(100.0, rel=1e-14)
    back = single_break_to_additive(k)
    assert back.log_b == 0.0 and back.c0 == (0.5,) and back.h == (1.0,)
    assert math.exp(back.log_g) == pytest.approx(0.01, rel=1e-14)


def test_constant_second_term_gives_zero_break_exponents():
    k = additive_to_single_break(AdditivePair(0.3, (0.5, 1.25), -1.0, (-0.5, -1.25)))
    assert k.breaks[0].exponents == (0.0, 0.0)


def test_pair_and_kernel_agree_pointwise():
    rng = np.random.default_rng(0)
    for _ in range(50):
        m = int(rng.integers(1, 4))
        p = _pair(rng, m)
        k = additive_to_single_break(p)
        lx = rng.uniform(-5, 5, (50, m))
        kernel_vals = np.exp(log_eval_mbnsl(k, lx))
        exact = [_literal_pair(p, np.exp(row)) for row in lx]
        for v, e in zip(kernel_vals, exact):
            assert abs((mp.mpf(float(v)) - e) / e) <= 1e-12
        np.testing.assert_allclose(np.exp(p.log_eval(lx)), kernel_vals, rtol=1e-12)


def test_round_trip_is_exact_on_offset_and_initial_exponents():
    rng = np.random.default_rng(1)
    for _ in range(100):
        p = _pair(rng, int(rng.integers(1, 4)))
        back = single_break_to_additive(additive_to_single_break(p))
        assert back.log_b == p.log_b
        assert back.c0 == p.c0
        # log_g and h pass through one subtraction and its inverse; that is exact up to a few ulps.
        assert back.log_g == pytest.approx(p.log_g, rel=1e-15, abs=4 * np.spacing(abs(p.log_b) + abs(p.log_g)))
        np.testing.assert_allclose(back.h, p.h, rtol=0, atol=4 * np.spacing(2.5))


def test_kernel_round_trip_through_pair():
    rng = np.random.default_rng(2)
    for _ in range(50):
        m = int(rng.integers(1, 4))
        k = MbnslParams(0, tuple(range(m)), rng.uniform(-2, 2), tuple(rng.uniform(-1, 1, m)),
                        (Break(tuple(rng.uniform(0, 2, m)), rng.uniform(-3, 3), -1.0),))
        again = additive_to_single_break(single_break_to_additive(k))
        assert again.log_offset == k.log_offset and again.init_exponents == k.init_exponents
        np.testing.assert_allclose(again.breaks[0].exponents, k.breaks[0].exponents, atol=1e-15)
        assert again.breaks[0].log_location == pytest.approx(k.breaks[0].log_location, abs=1e-15)


def test_not_representable():
    with pytest.raises(NotRepresentableError):
        single_break_to_additive(MbnslParams(0, (0,), 0.0, (1.0,), (Break((2.0,), 0.0, 1.0),)))
    with pytest.raises(NotRepresentableError):
        single_break_to_additive(MbnslParams(0, (0,), 0.0, (1.0,)))
    two = (Break((2.0,), 0.0, -1.0), Break((1.0,), 1.0, -1.0))
    with pytest.raises(NotRepresentableError):
        single_break_to_additive(MbnslParams(0, (0,), 0.0, (1.0,), two))


def test_tangent_of_power_law_is_itself():
    k = MbnslParams(0, (0, 1), 0.4, (0.3, -0.2))
    for x in ([1.0, 1.0], [5.0, 0.1]):
        t = tangent_hyperplane(k, x)
        np.testing.assert_allclose(t.w_c, (-0.3, 0.2), rtol=0, atol=1e-15)
        assert t.log_wb == pytest.approx(0.4, abs=1e-14)


def test_tangent_far_before_break_reduces_to_initial_slope():
    k = MbnslParams(0, (0,), 0.0, (0.5,), (Break((1.0,), math.log(100), 0.5),))
    t = tangent_hyperplane(k, [100 * 1e-6])
    assert t.w_c[0] == pytest.approx(-0.5, abs=1e-8)


def test_tangent_matches_value_and_gradient():
    rng = np.random.default_rng(3)
    for _ in range(100):
        m = int(rng.integers(1, 4))
        k = draws.kernel(rng, 0, tuple(range(m)), int(rng.integers(0, 3)))
        x = draws.x(rng, m)
        t = tangent_hyperplane(k, x)
        lx = np.log(x)
        assert t.log_eval(lx) == pytest.approx(log_eval_mbnsl(k, lx), rel=1e-14, abs=1e-14)
        spec = FormSpec("a1", m, break_count=k.n_breaks)
        _, g_x = grad_form(spec, ParamSet({0: k}, {}), x)
        slope = g_x * x / math.exp(log_eval_mbnsl(k, lx))
        np.testing.assert_allclose(t.w_c, slope, rtol=1e-10, atol=1e-12)


def test_tangent_error_is_second_order():
    rng = np.random.default_rng(4)
    for _ in range(30):
        m = int(rng.integers(1, 4))
        k = draws.kernel(rng, 0, tuple(range(m)), int(rng.integers(1, 3)))
        x = draws.x(rng, m, -1, 1)
        t = tangent_hyperplane(k, x)
        i = int(rng.integers(m))

        def gap(delta):
            xd = x.copy()
            xd[i] *= 1 + delta
            return abs(log_eval_mbnsl(k, np.log(xd)) - t.log_eval(np.log(xd)))

        g3, g4 = gap(1e-3), gap(1e-4)
        if g3 < 1e-13:
            continue  # locally flat direction; the ratio is pure roundoff
        assert 95 <= g3 / g4 <= 105


def test_sum_of_tangents_matches_sum_to_first_order():
    rng = np.random.default_rng(5)
    k1 = draws.kernel(rng, 0, (0, 1), 2)
    k2 = draws.kernel(rng, 1, (0, 1), 1)
    x = draws.x(rng, 2, -1, 1)
    t1, t2 = tangent_hyperplane(k1, x), tangent_hyperplane(k2, x)
    lx = np.log(x)

    def total(v, lx_):
        return math.exp(v[0](lx_)) + math.exp(v[1](lx_))

    exact = (lambda l: log_eval_mbnsl(k1, l), lambda l: log_eval_mbnsl(k2, l))
    approx = (t1.log_eval, t2.log_eval)
    assert total(approx, lx) == pytest.approx(total(exact, lx), rel=1e-14)
    for d in (1e-3, 1e-4):
        step = lx + d
        assert abs(total(approx, step) - total(exact, step)) <= 10 * d * d * total(exact, lx)


def test_tangent_domain_errors():
    k = MbnslParams(0, (0,), 0.0, (0.5,))
    with pytest.raises(DomainError):
        tangent_hyperplane(k, [0.0])
    assert isinstance(tangent_hyperplane(k, [2.0]), TangentPlane)

import math

import numpy as np
import pytest

from fhspectrum.specfun import (
    JacobiParams,
    QuadratureError,
    build_quadrature,
    gauss_jacobi,
    generalized_binomial,
    jacobi_deriv,
    jacobi_eval,
    jacobi_inner,
)


def _closed_form(n, a, b, x):
    if n == 0:
        return np.ones_like(np.asarray(x, dtype=float))
    if n == 1:
        return 0.5 * (a - b) + 0.5 * (a + b + 2.0) * np.asarray(x)
    return (
        (a + b + 3.0) * (a + b + 4.0) * x * x
        + 2.0 * (a - b) * (a + b + 3.0) * x
        + (a - b) ** 2
        - (a + b + 4.0)
    ) / 8.0


def test_low_degree_closed_forms():
    rng = np.random.default_rng(3)
    for _ in range(100):
        a = float(rng.uniform(-0.9, 5.0))
        b = float(rng.uniform(-0.9, 5.0))
        x = float(rng.uniform(-1.0, 1.0))
        for n in (0, 1, 2):
            got = jacobi_eval(JacobiParams(n, a, b), x)
            want = float(_closed_form(n, a, b, x))
            assert abs(got - want) <= 1e-13 * max(1.0, abs(want))


def test_linear_value_at_origin():
    assert jacobi_eval(JacobiParams(1, 2.0, 1.0), 0.0) == 0.5


def test_right_endpoint_is_binomial():
    """P_n(1) collapses to a generalized binomial coefficient."""
    rng = np.random.default_rng(14)
    for _ in range(30):
        a = float(rng.uniform(-0.9, 4.0)) + 0.123  # keep it off the integers
        b = float(rng.uniform(-0.9, 4.0))
        for n in range(6):
            got = jacobi_eval(JacobiParams(n, a, b), 1.0)
            want = generalized_binomial(n + a, n)
            assert abs(got - want) <= 1e-12 * max(1.0, abs(want))


def test_generalized_binomial_integer_cases():
    assert generalized_binomial(5.0, 2) == pytest.approx(math.comb(5, 2), rel=1e-14)
    assert generalized_binomial(7.0, 0) == pytest.approx(1.0, rel=1e-15)


def test_parameter_validation():
    with pytest.raises(ValueError):
        JacobiParams(-1, 0.0, 0.0)
    with pytest.raises(ValueError):
        JacobiParams(2, -1.0, 0.0)
    with pytest.raises(ValueError):
        JacobiParams(2, 0.0, -1.5)


def test_array_evaluation_matches_scalar():
    jp = JacobiParams(4, 1.3, 0.4)
    xs = np.linspace(-1.0, 1.0, 11)
    arr = jacobi_eval(jp, xs)
    for x, v in zip(xs, arr):
        assert v == jacobi_eval(jp, float(x))


def test_derivative_identity():
    # degree lowering: d/dx P_n = (n+a+b+1)/2 * P_{n-1} with raised weights
    rng = np.random.default_rng(21)
    for _ in range(20):
        a = float(rng.uniform(-0.5, 3.0))
        b = float(rng.uniform(-0.5, 3.0))
        x = float(rng.uniform(-0.95, 0.95))
        n = int(rng.integers(1, 6))
        h = 1e-6
        jp = JacobiParams(n, a, b)
        fd = (jacobi_eval(jp, x + h) - jacobi_eval(jp, x - h)) / (2.0 * h)
        assert abs(jacobi_deriv(jp, x) - fd) < 5e-6 * max(1.0, abs(fd))
    assert jacobi_deriv(JacobiParams(0, 1.0, 2.0), 0.3) == 0.0


def test_orthogonality():
    assert abs(jacobi_inner(JacobiParams(4, 1.2, 0.8), JacobiParams(2, 1.2, 0.8))) < 1e-10
    assert abs(jacobi_inner(JacobiParams(1, 0.0, 0.0), JacobiParams(3, 0.0, 0.0))) < 1e-10


def test_legendre_norms():
    assert jacobi_inner(JacobiParams(0, 0.0, 0.0), JacobiParams(0, 0.0, 0.0)) == pytest.approx(2.0, rel=1e-13)
    assert jacobi_inner(JacobiParams(1, 0.0, 0.0), JacobiParams(1, 0.0, 0.0)) == pytest.approx(2.0 / 3.0, rel=1e-13)
    assert jacobi_inner(JacobiParams(3, 0.7, 1.9), JacobiParams(3, 0.7, 1.9)) > 0.0


def test_quadrature_kills_odd_powers():
    rule = build_quadrature(2)
    assert abs(rule.integrate(lambda x: x**3)) < 1e-15


def test_quadrature_exact_quartic():
    rule = build_quadrature(3)
    assert rule.integrate(lambda x: x**4) == pytest.approx(0.4, abs=1e-14)


def test_quadrature_weights_sum_to_length():
    assert math.fsum(build_quadrature(7).weights) == pytest.approx(2.0, abs=1e-13)
    assert math.fsum(build_quadrature(5, interval=(0.0, 3.0)).weights) == pytest.approx(3.0, abs=1e-13)


def test_quadrature_degree_of_exactness():
    """Order-k rules integrate random polynomials up to degree 2k-1 exactly."""
    rng = np.random.default_rng(8)
    for order in (2, 4, 7):
        coeffs = rng.uniform(-2.0, 2.0, size=2 * order)
        poly = np.polynomial.Polynomial(coeffs)
        exact = poly.integ()(1.0) - poly.integ()(-1.0)
        got = build_quadrature(order).integrate(poly)
        assert abs(got - exact) < 1e-12 * max(1.0, abs(exact))


def test_quadrature_converged_beyond_order_ten():
    a = build_quadrature(12, interval=(0.0, 1.0)).integrate(np.exp)
    b = build_quadrature(24, interval=(0.0, 1.0)).integrate(np.exp)
    assert abs(a - b) < 1e-14
    assert a == pytest.approx(math.e - 1.0, rel=1e-14)


def test_quadrature_order_validation():
    with pytest.raises(ValueError):
        build_quadrature(1)
    with pytest.raises(ValueError):
        gauss_jacobi(0, 1.0, 1.0)


def test_weighted_rule_matches_plain_on_flat_weight():
    # a = b = 0 reduces the weighted rule to plain Gauss-Legendre
    flat = gauss_jacobi(6, 0.0, 0.0)
    plain = build_quadrature(6)
    assert np.allclose(np.sort(flat.nodes), np.sort(plain.nodes), atol=1e-13)


def test_underresolved_explicit_rule_is_refused():
    jp = JacobiParams(4, 2.5, 2.5)
    with pytest.raises(QuadratureError):
        jacobi_inner(jp, jp, rule=build_quadrature(3))

"""Jacobi polynomials with real parameters and Gauss quadrature rules.

The recurrence is written out by hand (ascending in degree) because the
wavefunction shapes need arbitrary real a, b > -1; the quadrature nodes come
from numpy/scipy.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lgamma

import numpy as np
from scipy.special import roots_jacobi


class QuadratureError(RuntimeError):
    """A rule failed its convergence check."""


@dataclass(frozen=True)
class JacobiParams:
    """Degree n >= 0 and exponents a, b > -1 of P_n^(a,b)."""

    n: int
    a: float
    b: float

    def __post_init__(self) -> None:
        if self.n < 0 or self.n != int(self.n):
            raise ValueError("degree n must be a non-negative integer")
        if self.a <= -1.0 or self.b <= -1.0:
            raise ValueError("Jacobi exponents must satisfy a > -1 and b > -1")


def jacobi_eval(jp: JacobiParams, x):
    """P_n^(a,b)(x) by the standard three-term recurrence, ascending in n.

    Stable for a, b > -1 on [-1, 1]; accepts scalars or arrays.
    """
    a, b = jp.a, jp.b
    xs = np.asarray(x, dtype=float)
    p_prev = np.ones_like(xs)
    if jp.n == 0:
        return float(p_prev) if p_prev.ndim == 0 else p_prev
    p_cur = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * xs
    for m in range(2, jp.n + 1):
        c1 = 2.0 * m * (m + a + b) * (2.0 * m + a + b - 2.0)
        c2 = 2.0 * m + a + b - 1.0
        c3 = (2.0 * m + a + b) * (2.0 * m + a + b - 2.0)
        c4 = a * a - b * b
        c5 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * (2.0 * m + a + b)
        p_next = (c2 * (c3 * xs + c4) * p_cur - c5 * p_prev) / c1
        p_prev, p_cur = p_cur, p_next
    return float(p_cur) if p_cur.ndim == 0 else p_cur


def jacobi_deriv(jp: JacobiParams, x):
    """d/dx P_n^(a,b)(x) via the degree-lowering identity."""
    if jp.n == 0:
        xs = np.asarray(x, dtype=float)
        zero = np.zeros_like(xs)
        return float(zero) if zero.ndim == 0 else zero
    shifted = JacobiParams(jp.n - 1, jp.a + 1.0, jp.b + 1.0)
    return 0.5 * (jp.n + jp.a + jp.b + 1.0) * jacobi_eval(shifted, x)


def generalized_binomial(top: float, n: int) -> float:
    """binomial(top, n) for real top > n - 1, through log-gamma."""
    return float(np.exp(lgamma(top + 1.0) - lgamma(top - n + 1.0) - lgamma(n + 1.0)))


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes/weights of a fixed rule; integrate() sums w_i f(x_i)."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int

    def integrate(self, fn) -> float:
        return float(np.dot(self.weights, fn(self.nodes)))


def build_quadrature(order: int, interval: tuple[float, float] = (-1.0, 1.0)) -> QuadratureRule:
    """Gauss-Legendre rule with `order` points mapped onto `interval`.

    Exact for polynomials up to degree 2*order - 1; weights sum to the
    interval length.
    """
    if order < 2:
        raise ValueError("quadrature order must be at least 2")
    lo, hi = interval
    if not hi > lo:
        raise ValueError("interval must satisfy hi > lo")
    x, w = np.polynomial.legendre.leggauss(order)
    half = 0.5 * (hi - lo)
    return QuadratureRule(nodes=half * (x + 1.0) + lo, weights=half * w, order=order)


def gauss_jacobi(order: int, a: float, b: float) -> QuadratureRule:
    """Rule for integrals (1-x)^a (1+x)^b f(x) dx over [-1, 1]; the weight
    function is folded into the weights, so pass the bare f."""
    if order < 1:
        raise ValueError("quadrature order must be at least 1")
    if a <= -1.0 or b <= -1.0:
        raise ValueError("Gauss-Jacobi needs a > -1 and b > -1")
    x, w = roots_jacobi(order, a, b)
    return QuadratureRule(nodes=x, weights=w, order=order)


def jacobi_inner(jp1: JacobiParams, jp2: JacobiParams, rule: QuadratureRule | None = None) -> float:
    """Weighted inner product of P_n1 and P_n2 under (1-x)^a (1+x)^b.

    Both polynomials must share (a, b).  With the default rule the integrand
    handed to the quadrature is a polynomial, so the result is exact to
    roundoff; an explicitly supplied (e.g. Gauss-Legendre) rule is checked by
    doubling its order and must agree with itself.
    """
    if (jp1.a, jp1.b) != (jp2.a, jp2.b):
        raise ValueError("inner product requires matching Jacobi exponents")
    a, b = jp1.a, jp1.b

    def product(x):
        return jacobi_eval(jp1, x) * jacobi_eval(jp2, x)

    if rule is None:
        gj = gauss_jacobi(jp1.n + jp2.n + 2, a, b)
        return gj.integrate(product)

    def weighted(x):
        return (1.0 - x) ** a * (1.0 + x) ** b * product(x)

    value = rule.integrate(weighted)
    check = build_quadrature(2 * rule.order, (-1.0, 1.0)).integrate(weighted)
    if abs(value - check) > 1e-9 * max(1.0, abs(value)):
        raise QuadratureError(
            f"inner product not converged at order {rule.order}: "
            f"{value:.12g} vs {check:.12g} at doubled order"
        )
    return value

"""Closed-form momentum spectrum and eigenstates of the time-dependent
screened Kratzer-Hellmann family.

Everything here is exact for the *approximated* potential (1/t replaced by
u(t) = alpha/(1 - e^{-alpha t})).  With A = 2 m c^2 / (hbar c)^2 and
1/eta = 1/2 + sqrt(1/4 + A V2), the quantized momenta are

    P_n c = alpha V1 - (alpha^2 / A) R_n^2,
    R_n   = (D + n (n + 2/eta) + 1/eta) / (2 (n + 1/eta)),
    D     = (A / alpha) (V0 + V1 + alpha V2),

A momentum is marked valid when its envelope rate is real and positive,
i.e. alpha V1 - P_n c > 0 (equivalently R_n != 0), which is what the
decaying ansatz needs in order to exist at all.  The *sign* of R_n is kept
separately: the solvable-basis construction ties the envelope exponent to
-R_n, so only R_n < 0 states solve the transformed equation with a decaying
envelope and are cross-checked against the numerical oracle; R_n > 0
entries are formula values on the unverified branch and are flagged as
such, never silently mixed into comparisons.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .potentials import PotentialKind, PotentialParams
from .quantities import UnitSystem, kinetic_coefficients
from .specfun import JacobiParams, QuadratureError, gauss_jacobi, jacobi_eval

_ALPHA_ZERO_KINDS = (PotentialKind.KRATZER, PotentialKind.COULOMB)


class SpectralConditionError(ValueError):
    """The parameters violate a solvability precondition of the spectrum."""


@dataclass(frozen=True)
class MomentumSolution:
    """One quantized momentum.

    momentum  P_n, energy/c
    gamma1    positive envelope rate sqrt(A (alpha V1 - P_n c)) / alpha,
              equal to |ratio|; None for the alpha = 0 reductions
    inv_eta   1/eta, the edge exponent of the eigenstate at t -> 0
    ratio     signed R_n; only ratio < 0 lies on the oracle-verified branch
    valid     alpha V1 - P_n c > 0: the envelope rate is real and positive
    """

    n: int
    momentum: float
    gamma1: float | None
    inv_eta: float
    ratio: float | None
    valid: bool


@dataclass(frozen=True)
class WavefunctionSpec:
    """Shape parameters of psi_n(t) = norm * e^{-decay t}
    (1 - e^{-alpha t})^{edge} P_n^{(jacobi_a, jacobi_b)}(1 - 2 e^{-alpha t})."""

    n: int
    decay: float
    edge: float
    jacobi_a: float
    jacobi_b: float
    alpha: float
    norm: float | None = None


def inv_eta(p: PotentialParams, us: UnitSystem, mu: float) -> float:
    """1/eta = 1/2 + sqrt(1/4 + A V2); requires 1/4 + A V2 >= 0."""
    big_a, _ = kinetic_coefficients(us, mu)
    disc = 0.25 + big_a * p.V2
    if disc < 0.0:
        raise SpectralConditionError(
            f"inverse-square term too attractive: 2 m c^2 V2 / hbar^2 + 1/4 = {disc:.6g} < 0"
        )
    return 0.5 + math.sqrt(disc)


def _check_level(n: int) -> None:
    if n < 0 or n != int(n):
        raise ValueError("level index n must be a non-negative integer")


def momentum_eigenvalue(p: PotentialParams, us: UnitSystem, mu: float, n: int) -> MomentumSolution:
    """Quantized momentum of level n (energy/c).

    alpha > 0 uses the general formula above; the alpha = 0 reductions
    (Kratzer, Coulomb) use its alpha -> 0 limit
    P_n c = -m c^2 V0^2 / (2 hbar^2 (n + 1/eta)^2).
    """
    _check_level(n)
    big_a, _ = kinetic_coefficients(us, mu)
    ie = inv_eta(p, us, mu)

    if p.alpha > 0.0:
        alpha = p.alpha
        d_strength = (big_a / alpha) * (p.V0 + p.V1 + alpha * p.V2)
        ratio = (d_strength + n * (n + 2.0 * ie) + ie) / (2.0 * (n + ie))
        momentum = alpha * p.V1 - (alpha * alpha / big_a) * ratio * ratio
        gamma1 = math.sqrt(big_a * (alpha * p.V1 - momentum)) / alpha
        return MomentumSolution(
            n=n,
            momentum=momentum,
            gamma1=gamma1,
            inv_eta=ie,
            ratio=ratio,
            valid=alpha * p.V1 - momentum > 0.0,
        )

    if p.kind not in _ALPHA_ZERO_KINDS:
        raise ValueError(f"{p.kind.value} spectrum needs alpha > 0")
    momentum = -(mu * us.mass_scale) * p.V0 * p.V0 / (
        2.0 * us.hbar_c * us.hbar_c * (n + ie) * (n + ie)
    )
    return MomentumSolution(
        n=n, momentum=momentum, gamma1=None, inv_eta=ie, ratio=None, valid=momentum < 0.0
    )


def special_case_eigenvalue(
    kind: PotentialKind, p: PotentialParams, us: UnitSystem, mu: float, n: int
) -> MomentumSolution:
    """Reduction formulas, written independently as a regression surface.

    Must agree with momentum_eigenvalue on constrained parameters to 1e-15
    relative (they share no simplification shortcuts).
    """
    _check_level(n)
    if kind is PotentialKind.SKHP:
        raise ValueError("SKHP is the general case; use momentum_eigenvalue")
    if p.kind is not kind:
        raise ValueError(f"parameters are tagged {p.kind.value}, not {kind.value}")
    big_a, _ = kinetic_coefficients(us, mu)
    alpha = p.alpha

    if kind is PotentialKind.HELLMANN:
        ratio = ((big_a / alpha) * (p.V0 + p.V1) + n * (n + 2.0) + 1.0) / (2.0 * (n + 1.0))
        momentum = alpha * p.V1 - (alpha * alpha / big_a) * ratio * ratio
        return _with_branch(n, 1.0, ratio, momentum, big_a, alpha, p.V1)

    if kind is PotentialKind.SCREENED_KRATZER:
        ie = inv_eta(p, us, mu)
        ratio = ((big_a / alpha) * (p.V0 + alpha * p.V2) + n * (n + 2.0 * ie) + ie) / (
            2.0 * (n + ie)
        )
        momentum = -(alpha * alpha / big_a) * ratio * ratio
        return _with_branch(n, ie, ratio, momentum, big_a, alpha, 0.0)

    if kind is PotentialKind.SCREENED_COULOMB:
        ratio = ((big_a / alpha) * p.V0 + n * (n + 2.0) + 1.0) / (2.0 * (n + 1.0))
        momentum = -(alpha * alpha / big_a) * ratio * ratio
        return _with_branch(n, 1.0, ratio, momentum, big_a, alpha, 0.0)

    if kind is PotentialKind.KRATZER:
        ie = inv_eta(p, us, mu)
        momentum = -big_a * (p.V0 / (2.0 * (n + ie))) ** 2
        return MomentumSolution(n, momentum, None, ie, None, momentum < 0.0)

    # Coulomb
    momentum = -big_a * (p.V0 / (2.0 * (n + 1.0))) ** 2
    return MomentumSolution(n, momentum, None, 1.0, None, momentum < 0.0)


def _with_branch(
    n: int, ie: float, ratio: float, momentum: float, big_a: float, alpha: float, v1: float
) -> MomentumSolution:
    gamma1 = math.sqrt(big_a * (alpha * v1 - momentum)) / alpha
    return MomentumSolution(n, momentum, gamma1, ie, ratio, alpha * v1 - momentum > 0.0)


def max_valid_n(p: PotentialParams, us: UnitSystem, mu: float, n_cap: int = 200) -> int | None:
    """Largest n before the quantization ratio changes sign, scanning from 0.

    The closed form keeps producing numbers past the level where the ratio
    flips sign, but those belong to the other solution branch; the scan
    stops just below the flip.  A well whose ratio never flips (including
    the alpha = 0 wells, which hold infinitely many states) caps at n_cap,
    so a return equal to n_cap means "at least n_cap".  Returns None when
    n = 0 is already invalid (zero envelope rate, or a repulsive alpha = 0
    well).
    """
    if p.alpha == 0.0:
        momentum_eigenvalue(p, us, mu, 0)  # surface precondition errors
        return n_cap if p.V0 < 0.0 else None
    ground = momentum_eigenvalue(p, us, mu, 0)
    if not ground.valid or ground.ratio == 0.0:
        return None
    first_negative = ground.ratio < 0.0
    last = 0
    for n in range(1, n_cap + 1):
        sol = momentum_eigenvalue(p, us, mu, n)
        if not sol.valid or (sol.ratio < 0.0) != first_negative:
            break
        last = n
    return last


def branch_sign(p: PotentialParams, sol: MomentumSolution) -> str:
    """'-' on the oracle-verified branch, '+' otherwise, '0' at the cusp.

    For alpha > 0 this is the sign of the quantization ratio.  The alpha = 0
    reductions are limits in which |ratio| diverges while its sign settles to
    the sign of V0, so that is what is reported for them.
    """
    key = sol.ratio if sol.ratio is not None else p.V0
    if key < 0.0:
        return "-"
    return "0" if key == 0.0 else "+"


def wavefunction_spec(p: PotentialParams, us: UnitSystem, mu: float, n: int) -> WavefunctionSpec:
    """Eigenstate shape for a valid level; norm is left unset (see normalize).

    Raises for alpha = 0 (eigenvalues only there) and for a level whose
    envelope rate vanishes (nothing to normalize).  Levels with ratio > 0
    do get a spec — the decaying-envelope profile with rate |ratio| — but
    only ratio < 0 profiles solve the transformed equation (see module
    docstring), so residual checks are meaningful on that branch alone.
    """
    if p.alpha <= 0.0:
        raise ValueError("closed-form eigenstates are provided for alpha > 0 only")
    sol = momentum_eigenvalue(p, us, mu, n)
    if not sol.valid:
        raise SpectralConditionError(
            f"level n={n} has alpha V1 - P c = 0: zero envelope rate, "
            "no normalizable profile"
        )
    gamma1 = sol.gamma1
    return WavefunctionSpec(
        n=n,
        decay=p.alpha * gamma1,
        edge=sol.inv_eta,
        jacobi_a=2.0 * gamma1,
        jacobi_b=2.0 * sol.inv_eta - 1.0,
        alpha=p.alpha,
    )


def evaluate_wavefunction(w: WavefunctionSpec, t):
    """psi_n(t) for t > 0 (scalar or array); unnormalized when norm is None."""
    arr = np.asarray(t, dtype=float)
    if np.any(arr <= 0.0):
        raise ValueError("coordinate t must be positive")
    s = np.exp(-w.alpha * arr)
    one_minus_s = -np.expm1(-w.alpha * arr)
    jp = JacobiParams(w.n, w.jacobi_a, w.jacobi_b)
    scale = 1.0 if w.norm is None else w.norm
    out = scale * np.exp(-w.decay * arr) * one_minus_s**w.edge * jacobi_eval(jp, 1.0 - 2.0 * s)
    return float(out) if out.ndim == 0 else out


def normalize(w: WavefunctionSpec, order: int | None = None) -> float:
    """Normalization constant B_n with integral psi^2 dt = 1 over (0, inf).

    Substituting s = e^{-alpha t} turns the integral into a Jacobi-weighted
    polynomial moment, evaluated with a Gauss-Jacobi rule (exact for the
    polynomial part); the result is checked against a doubled-order rule.
    """
    gamma1 = w.decay / w.alpha
    wa = 2.0 * gamma1 - 1.0
    wb = 2.0 * w.edge
    jp = JacobiParams(w.n, w.jacobi_a, w.jacobi_b)

    def moment(points: int) -> float:
        rule = gauss_jacobi(points, wa, wb)
        vals = jacobi_eval(jp, rule.nodes)
        return float(np.dot(rule.weights, vals * vals))

    points = order if order is not None else w.n + 6
    coarse = moment(points)
    fine = moment(2 * points)
    if not (math.isfinite(fine) and fine > 0.0):
        raise QuadratureError(f"norm integral degenerate: {fine!r}")
    if abs(coarse - fine) > 1e-10 * abs(fine):
        raise QuadratureError(
            f"norm integral not converged: {coarse:.15g} at {points} points vs "
            f"{fine:.15g} at {2 * points}"
        )
    integral = 2.0 ** (-2.0 * gamma1 - 2.0 * w.edge) / w.alpha * fine
    return 1.0 / math.sqrt(integral)


def normalized_spec(w: WavefunctionSpec, order: int | None = None) -> WavefunctionSpec:
    """Copy of w with norm filled in."""
    return replace(w, norm=normalize(w, order=order))


def s_domain_coefficients(
    p: PotentialParams, us: UnitSystem, mu: float, momentum: float
) -> tuple[float, float, float]:
    """(gamma1^2, gamma2, gamma3) of the s = e^{-alpha t} equation.

    Satisfies gamma1^2 - gamma2 - gamma3 = A V2 identically.  gamma3 is the
    coefficient that multiplies +s in the numerator polynomial
    -gamma1^2 + gamma3 s + gamma2 s^2 of the transformed equation.
    """
    if p.alpha <= 0.0:
        raise ValueError("s-domain form requires alpha > 0")
    big_a, _ = kinetic_coefficients(us, mu)
    asq = p.alpha * p.alpha
    g1sq = big_a * (p.alpha * p.V1 - momentum) / asq
    g2 = big_a * (p.alpha * p.V0 + momentum) / asq
    g3 = -big_a * (p.alpha * p.V0 - p.alpha * p.V1 + asq * p.V2 + 2.0 * momentum) / asq
    return g1sq, g2, g3

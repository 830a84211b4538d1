"""The screened Kratzer-Hellmann potential family and its reductions.

The general form is

    V(t) = (V0/t + (V1/t) e^{alpha t} + V2/t^2) e^{-alpha t}
         = (V0/t + V2/t^2) e^{-alpha t} + V1/t

(the second line is an exact rewrite and is how the code evaluates it).
The closed-form spectrum applies to the approximated potential obtained by
replacing every 1/t with u(t) = alpha/(1 - e^{-alpha t}).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np


class PotentialKind(enum.Enum):
    SKHP = "skhp"
    HELLMANN = "hellmann"
    SCREENED_KRATZER = "screened-kratzer"
    KRATZER = "kratzer"
    SCREENED_COULOMB = "screened-coulomb"
    COULOMB = "coulomb"


# constraints a reduction imposes on (V1, V2, alpha); None means "free"
_KIND_CONSTRAINTS: dict[PotentialKind, dict[str, float | None]] = {
    PotentialKind.SKHP: {"V1": None, "V2": None, "alpha": None},
    PotentialKind.HELLMANN: {"V1": None, "V2": 0.0, "alpha": None},
    PotentialKind.SCREENED_KRATZER: {"V1": 0.0, "V2": None, "alpha": None},
    PotentialKind.KRATZER: {"V1": 0.0, "V2": None, "alpha": 0.0},
    PotentialKind.SCREENED_COULOMB: {"V1": 0.0, "V2": 0.0, "alpha": None},
    PotentialKind.COULOMB: {"V1": 0.0, "V2": 0.0, "alpha": 0.0},
}


@dataclass(frozen=True)
class PotentialParams:
    """Strengths (energy*tu for V0/V1, energy*tu^2 for V2) and screening rate
    alpha (1/tu) of one member of the family."""

    V0: float
    V1: float = 0.0
    V2: float = 0.0
    alpha: float = 0.0
    kind: PotentialKind = field(default=PotentialKind.SKHP)

    def __post_init__(self) -> None:
        if self.alpha < 0.0:
            raise ValueError("screening rate alpha must be >= 0")
        for name, required in _KIND_CONSTRAINTS[self.kind].items():
            if required is not None and getattr(self, name) != required:
                raise ValueError(
                    f"{self.kind.value} reduction requires {name} = {required:g}, "
                    f"got {getattr(self, name):g}"
                )


def make_special_case(
    kind: PotentialKind,
    V0: float = 0.0,
    V1: float = 0.0,
    V2: float = 0.0,
    alpha: float = 0.0,
) -> PotentialParams:
    """Construct a reduction, enforcing its parameter constraints."""
    return PotentialParams(V0=V0, V1=V1, V2=V2, alpha=alpha, kind=kind)


def _check_positive_t(t):
    arr = np.asarray(t, dtype=float)
    if np.any(arr <= 0.0):
        raise ValueError("coordinate t must be positive")
    return arr


def screening_inverse(alpha: float, t):
    """u(t) = alpha/(1 - e^{-alpha t}), the screened stand-in for 1/t.

    Uses expm1 so the small-(alpha*t) regime keeps full precision, where
    u -> 1/t + alpha/2.  Requires alpha > 0.
    """
    arr = _check_positive_t(t)
    if alpha <= 0.0:
        raise ValueError("screening_inverse needs alpha > 0")
    return alpha / (-np.expm1(-alpha * arr))


def evaluate_potential(p: PotentialParams, t):
    """Exact potential at t (scalar or array); t must be positive."""
    arr = _check_positive_t(t)
    inv_t = 1.0 / arr
    screened = (p.V0 + p.V2 * inv_t) * inv_t * np.exp(-p.alpha * arr)
    out = screened + p.V1 * inv_t
    return out if out.ndim else float(out)


def evaluate_approx_potential(p: PotentialParams, t):
    """Potential with 1/t -> u(t); the spectrum module is exact for this one.

    alpha = 0 has no approximation to apply: use evaluate_potential instead
    (this raises to keep the two surfaces distinct).
    """
    if p.alpha <= 0.0:
        raise ValueError(
            "approximated potential is defined for alpha > 0; "
            "use evaluate_potential for the alpha = 0 reductions"
        )
    arr = _check_positive_t(t)
    u = screening_inverse(p.alpha, arr)
    screened = (p.V0 + p.V2 * u) * u * np.exp(-p.alpha * arr)
    out = screened + p.V1 * u
    return out if out.ndim else float(out)


def spectrum_threshold(p: PotentialParams) -> float:
    """Continuum edge of the approximated potential: alpha*V1 (0 for alpha=0).

    Bound states sit strictly below this value; the exact potential shares
    the same edge only when V1 = 0.
    """
    return p.alpha * p.V1


def sample_potential(
    p: PotentialParams,
    t_min: float,
    t_max: float,
    count: int,
    approx: bool = False,
) -> tuple[np.ndarray, np.ndarray]:
    """Uniform (t, V(t)) samples over [t_min, t_max], CSV-ready."""
    if not (0.0 < t_min < t_max):
        raise ValueError("need 0 < t_min < t_max")
    if count < 2:
        raise ValueError("need at least two sample points")
    t = np.linspace(t_min, t_max, count)
    values = evaluate_approx_potential(p, t) if approx else evaluate_potential(p, t)
    return t, values

"""Unit systems, kinetic coefficients and the diatomic molecule catalog.

Momenta are quoted as energy/c throughout; time is the coordinate, so the
only dimensional inputs are hbar*c (energy * time-unit) and the rest energy
assigned to one mass unit.
"""
from __future__ import annotations

from dataclasses import dataclass

from .potentials import PotentialKind, PotentialParams

# hbar*c in eV * tu, with the time unit tu playing the role usually taken
# by the angstrom.  Overridable through UnitSystem for other conventions.
HBARC_EV_TU = 1973.269
# rest energy of one atomic mass unit in eV
AMU_EV = 931.494061e6


@dataclass(frozen=True)
class UnitSystem:
    """Dimensional constants of a calculation.

    hbar_c      hbar*c, energy * tu
    mass_scale  rest energy (m*c^2) carried by one unit of reduced mass
    c_unit      True when momenta are reported as energy/c (the default
                convention everywhere in this package)
    """

    hbar_c: float
    mass_scale: float
    c_unit: bool = True


def natural_units() -> UnitSystem:
    """hbar = m = c = 1: the desk-scale system used for verification."""
    return UnitSystem(hbar_c=1.0, mass_scale=1.0)


def molecular_units(hbar_c: float = HBARC_EV_TU, mass_scale: float = AMU_EV) -> UnitSystem:
    """eV-based system with reduced masses given in amu."""
    return UnitSystem(hbar_c=hbar_c, mass_scale=mass_scale)


def kinetic_coefficients(us: UnitSystem, mu: float) -> tuple[float, float]:
    """Return (A, kappa) with A = 2*m*c^2/(hbar*c)^2 and kappa = 1/A.

    A multiplies (V - c*P) in the second-order form of the wave equation;
    kappa is the coefficient of the second derivative.  A*kappa == 1 exactly.
    """
    if mu <= 0.0:
        raise ValueError("reduced mass must be positive")
    big_a = 2.0 * (mu * us.mass_scale) / (us.hbar_c * us.hbar_c)
    return big_a, 1.0 / big_a


@dataclass(frozen=True)
class MoleculeSpec:
    """Diatomic molecule: dissociation energy (eV), equilibrium coordinate (tu),
    reduced mass (amu)."""

    name: str
    D_e: float
    t_e: float
    mu: float


_CATALOG = (
    MoleculeSpec("TiH", D_e=2.05, t_e=1.781, mu=0.987371),
    MoleculeSpec("ScN", D_e=4.56, t_e=1.768, mu=10.682771),
    MoleculeSpec("H2", D_e=4.7446, t_e=0.7416, mu=0.50391),
    MoleculeSpec("CuLi", D_e=1.74, t_e=2.310, mu=6.259494),
    MoleculeSpec("I2", D_e=1.58179, t_e=2.6620, mu=63.452235),
)


def molecule_catalog() -> tuple[MoleculeSpec, ...]:
    """The five fitted diatomics shipped with the package."""
    return _CATALOG


def molecule_by_name(name: str) -> MoleculeSpec:
    """Case-insensitive catalog lookup; raises KeyError with the known names."""
    folded = name.strip().lower()
    for mol in _CATALOG:
        if mol.name.lower() == folded:
            return mol
    known = ", ".join(m.name for m in _CATALOG)
    raise KeyError(f"unknown molecule {name!r}; catalog has: {known}")


def kratzer_params_from_molecule(mol: MoleculeSpec) -> PotentialParams:
    """Map (D_e, t_e) onto the unscreened Kratzer well.

    V0 = -2*D_e*t_e (attractive), V2 = D_e*t_e**2, V1 = 0, alpha = 0, so the
    minimum of V0/t + V2/t^2 sits at t_e with depth -D_e.
    """
    return PotentialParams(
        V0=-2.0 * mol.D_e * mol.t_e,
        V1=0.0,
        V2=mol.D_e * mol.t_e * mol.t_e,
        alpha=0.0,
        kind=PotentialKind.KRATZER,
    )

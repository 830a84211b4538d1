"""Quantized momentum spectra of time-coordinate wave equations with
screened Kratzer-Hellmann potentials: closed forms, eigenstates, and the
independent numerical solvers used to validate them."""

from .analytic import (
    MomentumSolution,
    SpectralConditionError,
    WavefunctionSpec,
    branch_sign,
    evaluate_wavefunction,
    inv_eta,
    max_valid_n,
    momentum_eigenvalue,
    normalize,
    normalized_spec,
    s_domain_coefficients,
    special_case_eigenvalue,
    wavefunction_spec,
)
from .oracle import (
    BracketError,
    GridSpec,
    OracleResult,
    RichardsonResult,
    ShootResult,
    chebyshev_points,
    default_grid,
    fd_eigenvalues,
    fd_eigenvalues_extrapolated,
    grid_for_domain,
    numerov_shoot,
    ode_residual_s_domain,
    richardson_extrapolate,
    sample_valid_cases,
    shooting_eigenvalue,
)
from .potentials import (
    PotentialKind,
    PotentialParams,
    evaluate_approx_potential,
    evaluate_potential,
    make_special_case,
    sample_potential,
    screening_inverse,
    spectrum_threshold,
)
from .quantities import (
    AMU_EV,
    HBARC_EV_TU,
    MoleculeSpec,
    UnitSystem,
    kinetic_coefficients,
    kratzer_params_from_molecule,
    molecular_units,
    molecule_by_name,
    molecule_catalog,
    natural_units,
)
from .specfun import (
    JacobiParams,
    QuadratureError,
    QuadratureRule,
    build_quadrature,
    gauss_jacobi,
    generalized_binomial,
    jacobi_deriv,
    jacobi_eval,
    jacobi_inner,
)

__version__ = "0.1.0"

__all__ = [
    "AMU_EV",
    "BracketError",
    "GridSpec",
    "HBARC_EV_TU",
    "JacobiParams",
    "MoleculeSpec",
    "MomentumSolution",
    "OracleResult",
    "PotentialKind",
    "PotentialParams",
    "QuadratureError",
    "QuadratureRule",
    "RichardsonResult",
    "ShootResult",
    "SpectralConditionError",
    "UnitSystem",
    "WavefunctionSpec",
    "branch_sign",
    "build_quadrature",
    "chebyshev_points",
    "default_grid",
    "evaluate_approx_potential",
    "evaluate_potential",
    "evaluate_wavefunction",
    "fd_eigenvalues",
    "fd_eigenvalues_extrapolated",
    "gauss_jacobi",
    "generalized_binomial",
    "grid_for_domain",
    "inv_eta",
    "jacobi_deriv",
    "jacobi_eval",
    "jacobi_inner",
    "kinetic_coefficients",
    "kratzer_params_from_molecule",
    "make_special_case",
    "max_valid_n",
    "molecular_units",
    "molecule_by_name",
    "molecule_catalog",
    "momentum_eigenvalue",
    "natural_units",
    "normalize",
    "normalized_spec",
    "numerov_shoot",
    "ode_residual_s_domain",
    "richardson_extrapolate",
    "s_domain_coefficients",
    "sample_potential",
    "sample_valid_cases",
    "screening_inverse",
    "shooting_eigenvalue",
    "special_case_eigenvalue",
    "spectrum_threshold",
    "wavefunction_spec",
]

"""Shared randomized cross-method sweep, computed once per test run.

The oracle tests and the acceptance suite both need the same expensive
comparison: for a fixed set of sampled potentials, every bound level on
the quantized branch evaluated three ways (closed form, matrix, shooting).
The rows are cached at module level so the cost is paid once per process.
"""

from __future__ import annotations

from dataclasses import dataclass

from fhspectrum.analytic import momentum_eigenvalue
from fhspectrum.oracle import (
    default_grid,
    fd_eigenvalues_extrapolated,
    sample_valid_cases,
    shooting_eigenvalue,
)
from fhspectrum.potentials import PotentialParams
from fhspectrum.quantities import natural_units

SEED = 2024
CASES = 20
MAX_LEVELS = 3


@dataclass(frozen=True)
class ComparisonRow:
    params: PotentialParams
    n: int
    p_analytic: float
    p_matrix: float
    p_shooting: float


_ROWS: list[ComparisonRow] | None = None


def comparison_rows() -> list[ComparisonRow]:
    global _ROWS
    if _ROWS is None:
        _ROWS = _compute()
    return _ROWS


def _compute() -> list[ComparisonRow]:
    us = natural_units()
    rows: list[ComparisonRow] = []
    for p in sample_valid_cases(SEED, CASES, us):
        sols = []
        for n in range(MAX_LEVELS):
            sol = momentum_eigenvalue(p, us, 1.0, n)
            if sol.ratio >= 0.0:
                break
            sols.append(sol)
        fd = fd_eigenvalues_extrapolated(p, us, 1.0, count=len(sols))
        for sol in sols:
            if sol.n >= len(fd.eigenvalues):
                break
            shot = shooting_eigenvalue(p, us, 1.0, sol.n)
            rows.append(
                ComparisonRow(p, sol.n, sol.momentum, fd.eigenvalues[sol.n], shot)
            )
    return rows

"""Command-line front end.

Five subcommands: ``eigenvalues`` (momentum spectra for explicit parameters
or a catalog molecule), ``wavefunction`` (sampled eigenstate profile),
``potential-curve`` (sampled potential), ``verify`` (random cross-checks of
the closed forms against the numerical solver), and ``table`` (regenerated
momentum tables for the molecule catalog, with optional deltas against the
bundled reference digits).

Every report lands as CSV; when the output goes to a file a PNG figure with
the same stem is rendered next to it (suppress with --no-figure).  Exit
codes: 0 success, 1 usage/configuration error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import plotting
from .analytic import (
    SpectralConditionError,
    branch_sign,
    evaluate_wavefunction,
    momentum_eigenvalue,
    normalized_spec,
    wavefunction_spec,
)
from .oracle import (
    BracketError,
    default_grid,
    fd_eigenvalues_extrapolated,
    grid_for_domain,
    sample_valid_cases,
    shooting_eigenvalue,
)
from .potentials import (
    PotentialKind,
    PotentialParams,
    evaluate_approx_potential,
    sample_potential,
)
from .quantities import (
    MoleculeSpec,
    UnitSystem,
    kratzer_params_from_molecule,
    molecule_by_name,
    molecule_catalog,
    molecular_units,
    natural_units,
)
from .refdata import REFERENCE_ALPHAS, caption_params, reference_momentum
from .specfun import QuadratureError


class ConfigError(ValueError):
    """A config file line could not be parsed."""


class UsageError(ValueError):
    """Bad command-line input detected before any computation."""


@dataclass(frozen=True)
class RunConfig:
    """Merged defaults <- config file <- explicit flags for one run."""

    units: str = "natural"
    hbar_c: float | None = None
    mass_scale: float | None = None
    mu: float | None = None
    V0: float = 0.0
    V1: float = 0.0
    V2: float = 0.0
    alphas: tuple[float, ...] = ()
    kind: str | None = None
    molecule: str | None = None
    n_lo: int = 0
    n_hi: int = 3
    output: str | None = None
    grid_points: int = 4000
    t_max: float | None = None
    tolerance: float = 1e-5


def _parse_levels(text: str) -> tuple[int, int]:
    part = text.split("..")
    try:
        if len(part) == 1:
            lo = hi = int(part[0])
        elif len(part) == 2:
            lo, hi = int(part[0]), int(part[1])
        else:
            raise ValueError
    except ValueError:
        raise UsageError(f"level range {text!r} is not N or N..M") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"level range {text!r} needs 0 <= first <= last")
    return lo, hi


def _parse_alpha_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"bad screening-rate list {text!r}") from None


# key -> (RunConfig field(s), parser, serializer); n covers n_lo/n_hi jointly.
_CONFIG_KEYS = {
    "units": ("units", str, str),
    "hbar_c": ("hbar_c", float, repr),
    "mass_scale": ("mass_scale", float, repr),
    "mu": ("mu", float, repr),
    "V0": ("V0", float, repr),
    "V1": ("V1", float, repr),
    "V2": ("V2", float, repr),
    "alpha": ("alphas", _parse_alpha_list, lambda v: ", ".join(repr(a) for a in v)),
    "kind": ("kind", str, str),
    "molecule": ("molecule", str, str),
    "n": (("n_lo", "n_hi"), _parse_levels, lambda v: f"{v[0]}..{v[1]}"),
    "output": ("output", str, str),
    "grid_points": ("grid_points", int, str),
    "t_max": ("t_max", float, repr),
    "tolerance": ("tolerance", float, repr),
}


def parse_config(text: str) -> RunConfig:
    """Parse `key = value` lines (# comments) into a RunConfig."""
    cfg = RunConfig()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        field_name, parser, _ = _CONFIG_KEYS[key]
        try:
            parsed = parser(value)
        except (ValueError, UsageError) as exc:
            raise ConfigError(f"line {lineno}: {exc}") from None
        if isinstance(field_name, tuple):
            cfg = replace(cfg, **dict(zip(field_name, parsed)))
        else:
            cfg = replace(cfg, **{field_name: parsed})
    if cfg.units not in ("natural", "molecular"):
        raise ConfigError(f"units must be natural or molecular, got {cfg.units!r}")
    if cfg.kind is not None:
        try:
            PotentialKind(cfg.kind)
        except ValueError:
            raise ConfigError(
                f"kind must be one of {[k.value for k in PotentialKind]}, got {cfg.kind!r}"
            ) from None
    return cfg


def emit_config(cfg: RunConfig) -> str:
    """Config text that parse_config maps back to cfg (None fields omitted)."""
    lines = ["# fhspectrum run configuration"]
    for key, (field_name, _, serialize) in _CONFIG_KEYS.items():
        if isinstance(field_name, tuple):
            value = tuple(getattr(cfg, f) for f in field_name)
        else:
            value = getattr(cfg, field_name)
            if value is None:
                continue
            if key == "alpha" and not value:
                continue
        lines.append(f"{key} = {serialize(value)}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class TableRow:
    """One emitted spectrum row; None oracle/delta cells print empty."""

    molecule: str
    alpha: float
    n: int
    p_analytic: float
    p_oracle: float | None
    valid: bool
    branch: str
    delta_vs_paper: float | None = None


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def emit_csv(rows: list[TableRow], with_delta: bool = False) -> str:
    """Rows as CSV text: 9 significant digits, LF endings."""
    header = "molecule,alpha,n,P_analytic,P_oracle,valid,branch"
    if with_delta:
        header += ",delta_vs_paper"
    out = [header]
    for r in rows:
        cells = [
            r.molecule,
            _fmt(r.alpha),
            str(r.n),
            _fmt(r.p_analytic),
            "" if r.p_oracle is None else _fmt(r.p_oracle),
            "true" if r.valid else "false",
            r.branch,
        ]
        if with_delta:
            cells.append("" if r.delta_vs_paper is None else _fmt(r.delta_vs_paper))
        out.append(",".join(cells))
    return "\n".join(out) + "\n"


def emit_xy_csv(header: str, xs, ys) -> str:
    out = [header]
    out.extend(f"{_fmt(float(x))},{_fmt(float(y))}" for x, y in zip(xs, ys))
    return "\n".join(out) + "\n"


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so run() owns exit codes."""

    def error(self, message: str):  # noqa: D102
        raise UsageError(message)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", metavar="FILE", help="read key = value defaults first")
    sub.add_argument("--natural", dest="units", action="store_const", const="natural",
                     help="natural units: hbar*c = 1, mass scale 1 (default)")
    sub.add_argument("--molecular", dest="units", action="store_const", const="molecular",
                     help="molecular units: hbar*c in eV*tu, masses in amu")
    sub.add_argument("--hbar-c", type=float, dest="hbar_c", help="override hbar*c")
    sub.add_argument("--mass-scale", type=float, dest="mass_scale",
                     help="override the mass unit (eV per mass unit)")
    sub.add_argument("--mu", type=float, help="reduced mass (mass units)")
    sub.add_argument("--output", metavar="CSV", help="write CSV here (default stdout)")
    sub.add_argument("--no-figure", action="store_true",
                     help="skip the PNG rendered next to --output")


def _add_potential(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--V0", type=float, help="Coulomb-term strength")
    sub.add_argument("--V1", type=float, help="unscreened (Hellmann) term strength")
    sub.add_argument("--V2", type=float, help="inverse-square term strength")
    sub.add_argument("--alpha", help="screening rate(s), comma- or space-separated")
    sub.add_argument("--kind", choices=[k.value for k in PotentialKind],
                     help="potential family (default skhp, or the molecule mapping)")
    sub.add_argument("--molecule", help="catalog molecule; uses its Kratzer parameters")


def build_parser() -> _Parser:
    parser = _Parser(prog="fhspectrum", description=__doc__.split("\n\n")[0])
    commands = parser.add_subparsers(dest="command", required=True)

    eig = commands.add_parser("eigenvalues", help="quantized momentum spectrum")
    _add_common(eig)
    _add_potential(eig)
    eig.add_argument("--n", help="level range N or N..M (default 0..3)")
    eig.add_argument("--oracle", action="store_true",
                     help="add the numerically solved momenta (bound branch only)")
    eig.add_argument("--grid-points", type=int, dest="grid_points")
    eig.add_argument("--t-max", type=float, dest="t_max", help="oracle domain end")

    wav = commands.add_parser("wavefunction", help="sampled eigenstate psi_n(t)")
    _add_common(wav)
    _add_potential(wav)
    wav.add_argument("--n", help="level (default 0)")
    wav.add_argument("--samples", type=int, default=400)
    wav.add_argument("--t-max", type=float, dest="t_max", help="sampling end")
    wav.add_argument("--raw", action="store_true", help="skip normalization")

    pot = commands.add_parser("potential-curve", help="sampled V(t)")
    _add_common(pot)
    _add_potential(pot)
    pot.add_argument("--samples", type=int, default=400)
    pot.add_argument("--t-min", type=float, dest="t_min")
    pot.add_argument("--t-max", type=float, dest="t_max")
    pot.add_argument("--approx", action="store_true",
                     help="sample the exponential-form approximation instead")

    ver = commands.add_parser("verify", help="random analytic-vs-numeric cross-checks")
    ver.add_argument("--seed", type=int, default=7)
    ver.add_argument("--cases", type=int, default=20)
    ver.add_argument("--tol", type=float, default=1e-5, help="relative tolerance")
    ver.add_argument("--levels", type=int, default=3, help="levels per case (from n=0)")
    ver.add_argument("--grid-points", type=int, dest="grid_points", default=3000)
    ver.add_argument("--shooting", action="store_true",
                     help="also run the shooting route on each ground state")

    tab = commands.add_parser("table", help="regenerate a molecule momentum table")
    _add_common(tab)
    tab.add_argument("--which", required=True,
                     choices=["skp", "hellmann", "skhp", "kratzer"])
    tab.add_argument("--molecules", default="all",
                     help="'all' or comma-separated catalog names")
    tab.add_argument("--params", choices=["caption", "molecule"], default="caption",
                     help="caption strengths or molecule-derived Kratzer strengths")
    tab.add_argument("--alphas", help="screening rates (default 0.001,0.01,0.1,1.0)")
    tab.add_argument("--n", help="level range (default 0..3)")
    tab.add_argument("--oracle", action="store_true",
                     help="add numerically solved momenta (slow at molecular scales)")
    tab.add_argument("--no-reference", action="store_true",
                     help="drop the delta_vs_paper column")
    tab.add_argument("--grid-points", type=int, dest="grid_points")
    tab.add_argument("--t-max", type=float, dest="t_max")
    return parser


def _merge_config(args: argparse.Namespace) -> RunConfig:
    if getattr(args, "config", None):
        cfg = parse_config(Path(args.config).read_text())
    else:
        cfg = RunConfig()
    updates: dict[str, object] = {}
    for name in ("units", "hbar_c", "mass_scale", "mu", "V0", "V1", "V2",
                 "kind", "molecule", "output", "grid_points", "t_max"):
        value = getattr(args, name, None)
        if value is not None:
            updates[name] = value
    if getattr(args, "alpha", None) is not None:
        updates["alphas"] = _parse_alpha_list(args.alpha)
    if getattr(args, "n", None) is not None:
        updates["n_lo"], updates["n_hi"] = _parse_levels(args.n)
    if getattr(args, "tol", None) is not None:
        updates["tolerance"] = args.tol
    return replace(cfg, **updates)


def _resolve_units(cfg: RunConfig) -> UnitSystem:
    if cfg.units == "molecular":
        base = molecular_units()
    else:
        base = natural_units()
    overrides = {}
    if cfg.hbar_c is not None:
        overrides["hbar_c"] = cfg.hbar_c
    if cfg.mass_scale is not None:
        overrides["mass_scale"] = cfg.mass_scale
    return replace(base, **overrides) if overrides else base


def _resolve_potential(cfg: RunConfig, alpha: float) -> tuple[PotentialParams, float, str]:
    """(params, reduced mass, row label) for one screening rate."""
    if cfg.molecule is not None:
        if cfg.kind is not None:
            raise UsageError("--molecule already fixes the potential; drop --kind")
        try:
            mol = molecule_by_name(cfg.molecule)
        except KeyError as exc:
            raise UsageError(str(exc)) from None
        base = kratzer_params_from_molecule(mol)
        kind = PotentialKind.KRATZER if alpha == 0.0 else PotentialKind.SCREENED_KRATZER
        p = PotentialParams(V0=base.V0, V1=0.0, V2=base.V2, alpha=alpha, kind=kind)
        return p, cfg.mu if cfg.mu is not None else mol.mu, mol.name
    try:
        kind = PotentialKind(cfg.kind) if cfg.kind is not None else PotentialKind.SKHP
    except ValueError:
        raise UsageError(f"unknown potential kind {cfg.kind!r}") from None
    try:
        p = PotentialParams(V0=cfg.V0, V1=cfg.V1, V2=cfg.V2, alpha=alpha, kind=kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return p, cfg.mu if cfg.mu is not None else 1.0, "custom"


def _default_alphas(cfg: RunConfig) -> tuple[float, ...]:
    if cfg.alphas:
        return cfg.alphas
    if cfg.molecule is not None or cfg.kind in ("kratzer", "coulomb"):
        return (0.0,)
    raise UsageError("no screening rate given; pass --alpha (0 only for kratzer/coulomb)")


def _oracle_grid(cfg: RunConfig, p, us, mu, n_highest: int):
    points = cfg.grid_points
    if cfg.t_max is not None:
        return grid_for_domain(cfg.t_max, points)
    return default_grid(p, us, mu, n_highest=n_highest, points=points)


def _figure_target(cfg: RunConfig, no_figure: bool) -> Path | None:
    if cfg.output is None or no_figure:
        return None
    return plotting.figure_path(cfg.output)


def _cmd_eigenvalues(args: argparse.Namespace) -> int:
    cfg = _merge_config(args)
    alphas = _default_alphas(cfg)
    us = _resolve_units(cfg)
    rows: list[TableRow] = []
    for alpha in alphas:
        p, mu, label = _resolve_potential(cfg, alpha)
        oracle_vals: tuple[float, ...] = ()
        if args.oracle:
            grid = _oracle_grid(cfg, p, us, mu, cfg.n_hi)
            oracle_vals = fd_eigenvalues_extrapolated(
                p, us, mu, count=cfg.n_hi + 1, grid=grid
            ).eigenvalues
        for n in range(cfg.n_lo, cfg.n_hi + 1):
            sol = momentum_eigenvalue(p, us, mu, n)
            branch = branch_sign(p, sol)
            p_oracle = None
            if args.oracle and branch == "-" and n < len(oracle_vals):
                p_oracle = oracle_vals[n]
            rows.append(
                TableRow(label, alpha, n, sol.momentum, p_oracle, sol.valid, branch)
            )
    _write_text(cfg.output, emit_csv(rows))
    fig = _figure_target(cfg, args.no_figure)
    if fig is not None:
        if len(alphas) == 1:
            plotting.save_spectrum(
                fig,
                [r.n for r in rows],
                [r.p_analytic for r in rows],
                f"{rows[0].molecule}: momentum levels, alpha={alphas[0]:g}",
            )
        else:
            plotting.save_table_trends(
                fig,
                [(r.molecule, r.alpha, r.n, r.p_analytic) for r in rows],
                "momentum levels",
            )
    return 0


def _cmd_wavefunction(args: argparse.Namespace) -> int:
    cfg = _merge_config(args)
    alphas = _default_alphas(cfg)
    if len(alphas) != 1:
        raise UsageError("wavefunction takes exactly one --alpha")
    us = _resolve_units(cfg)
    p, mu, label = _resolve_potential(cfg, alphas[0])
    n = cfg.n_lo if args.n is not None else 0
    if args.n is not None and cfg.n_lo != cfg.n_hi:
        raise UsageError("wavefunction takes a single level, not a range")
    spec = wavefunction_spec(p, us, mu, n)
    if not args.raw:
        spec = normalized_spec(spec)
    t_end = cfg.t_max if cfg.t_max is not None else 12.0 / spec.decay
    if args.samples < 2:
        raise UsageError("need at least 2 samples")
    t = np.linspace(t_end / args.samples, t_end, args.samples)
    psi = evaluate_wavefunction(spec, t)
    _write_text(cfg.output, emit_xy_csv("t,psi", t, psi))
    fig = _figure_target(cfg, args.no_figure)
    if fig is not None:
        plotting.save_wavefunction(
            fig, t, psi, n, f"{label}: eigenstate n={n}, alpha={p.alpha:g}"
        )
    return 0


def _cmd_potential_curve(args: argparse.Namespace) -> int:
    cfg = _merge_config(args)
    alphas = _default_alphas(cfg)
    if len(alphas) != 1:
        raise UsageError("potential-curve takes exactly one --alpha")
    us = _resolve_units(cfg)
    p, _, label = _resolve_potential(cfg, alphas[0])
    if cfg.molecule is not None:
        mol = molecule_by_name(cfg.molecule)
        t_lo, t_hi = 0.3 * mol.t_e, 6.0 * mol.t_e
    else:
        t_hi = 20.0 / p.alpha if p.alpha > 0.0 else 10.0
        t_lo = 0.02 * t_hi
    if args.t_min is not None:
        t_lo = args.t_min
    if cfg.t_max is not None:
        t_hi = cfg.t_max
    if args.approx:
        t = np.linspace(t_lo, t_hi, args.samples)
        v = evaluate_approx_potential(p, t)
    else:
        t, v = sample_potential(p, t_lo, t_hi, args.samples)
    _write_text(cfg.output, emit_xy_csv("t,V", t, v))
    fig = _figure_target(cfg, args.no_figure)
    if fig is not None:
        plotting.save_potential_curve(
            fig, t, v, f"{label}: {p.kind.value} potential, alpha={p.alpha:g}"
        )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    us = natural_units()
    mu = 1.0
    cases = sample_valid_cases(args.seed, args.cases, us, mu)
    worst = 0.0
    failures = 0
    for i, p in enumerate(cases):
        levels = []
        for n in range(args.levels):
            sol = momentum_eigenvalue(p, us, mu, n)
            if sol.ratio is None or sol.ratio >= 0.0:
                break
            levels.append(sol)
        grid = default_grid(p, us, mu, n_highest=len(levels) - 1, points=args.grid_points)
        numeric = fd_eigenvalues_extrapolated(
            p, us, mu, count=len(levels), grid=grid
        ).eigenvalues
        for sol in levels:
            if sol.n >= len(numeric):
                failures += 1
                print(f"case {i:02d} n={sol.n}: no numeric state below the edge — FAIL")
                continue
            rel = abs(sol.momentum - numeric[sol.n]) / abs(numeric[sol.n])
            worst = max(worst, rel)
            status = "ok" if rel < args.tol else "FAIL"
            if status == "FAIL":
                failures += 1
            print(
                f"case {i:02d} V0={p.V0:+.3f} V1={p.V1:+.3f} V2={p.V2:.3f} "
                f"alpha={p.alpha:.3f} n={sol.n}: analytic={sol.momentum:+.9g} "
                f"numeric={numeric[sol.n]:+.9g} rel={rel:.2e} {status}"
            )
        if args.shooting:
            shot = shooting_eigenvalue(p, us, mu, 0, grid=grid)
            sol0 = levels[0]
            rel = abs(sol0.momentum - shot) / abs(shot)
            worst = max(worst, rel)
            status = "ok" if rel < args.tol else "FAIL"
            if status == "FAIL":
                failures += 1
            print(f"case {i:02d} shooting n=0: {shot:+.9g} rel={rel:.2e} {status}")
    print(f"{len(cases)} cases, worst relative deviation {worst:.2e}")
    if failures:
        print(f"{failures} comparison(s) beyond tolerance {args.tol:g}")
        return 2
    return 0


def _table_molecules(selector: str) -> list[MoleculeSpec]:
    if selector == "all":
        return list(molecule_catalog())
    out = []
    for name in selector.split(","):
        try:
            out.append(molecule_by_name(name.strip()))
        except KeyError as exc:
            raise UsageError(str(exc)) from None
    return out


def _table_params(which: str, params_mode: str, mol: MoleculeSpec, alpha: float) -> PotentialParams:
    if which == "kratzer":
        if params_mode == "caption":
            raise UsageError("kratzer tables have no caption strengths; use --params molecule")
        return kratzer_params_from_molecule(mol)
    if params_mode == "molecule":
        if which == "hellmann":
            raise UsageError("hellmann has no molecule-derived strengths (V2 = 0)")
        base = kratzer_params_from_molecule(mol)
        v1 = 5.0 if which == "skhp" else 0.0
        kind = PotentialKind.SKHP if which == "skhp" else PotentialKind.SCREENED_KRATZER
        return PotentialParams(V0=base.V0, V1=v1, V2=base.V2, alpha=alpha, kind=kind)
    return caption_params(which, alpha)


def _cmd_table(args: argparse.Namespace) -> int:
    if args.units is None:
        args.units = "molecular"
    cfg = _merge_config(args)
    us = _resolve_units(cfg)
    molecules = _table_molecules(args.molecules)
    if args.which == "kratzer":
        alphas: tuple[float, ...] = (0.0,)
    elif args.alphas is not None:
        alphas = _parse_alpha_list(args.alphas)
    else:
        alphas = REFERENCE_ALPHAS
    n_lo, n_hi = cfg.n_lo, cfg.n_hi
    with_delta = not args.no_reference and args.which != "kratzer" and args.params == "caption"

    rows: list[TableRow] = []
    for mol in molecules:
        mu = cfg.mu if cfg.mu is not None else mol.mu
        for alpha in alphas:
            p = _table_params(args.which, args.params, mol, alpha)
            oracle_vals: tuple[float, ...] = ()
            if args.oracle:
                grid = _oracle_grid(cfg, p, us, mu, n_hi)
                oracle_vals = fd_eigenvalues_extrapolated(
                    p, us, mu, count=n_hi + 1, grid=grid
                ).eigenvalues
            for n in range(n_lo, n_hi + 1):
                sol = momentum_eigenvalue(p, us, mu, n)
                branch = branch_sign(p, sol)
                p_oracle = None
                if args.oracle and branch == "-" and n < len(oracle_vals):
                    p_oracle = oracle_vals[n]
                delta = None
                if with_delta:
                    ref = reference_momentum(args.which, mol.name, alpha, n)
                    if ref is not None:
                        delta = sol.momentum - ref
                rows.append(
                    TableRow(mol.name, alpha, n, sol.momentum, p_oracle,
                             sol.valid, branch, delta)
                )
    _write_text(cfg.output, emit_csv(rows, with_delta=with_delta))
    fig = _figure_target(cfg, args.no_figure)
    if fig is not None:
        plotting.save_table_trends(
            fig,
            [(r.molecule, r.alpha, r.n, r.p_analytic) for r in rows],
            f"{args.which} momentum table ({args.params} strengths)",
        )
    return 0


_COMMANDS = {
    "eigenvalues": _cmd_eigenvalues,
    "wavefunction": _cmd_wavefunction,
    "potential-curve": _cmd_potential_curve,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def run(argv: list[str]) -> int:
    """Dispatch argv; returns the process exit code instead of raising."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, ConfigError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (SpectralConditionError, QuadratureError, BracketError, ValueError) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else list(argv))


if __name__ == "__main__":
    sys.exit(main())

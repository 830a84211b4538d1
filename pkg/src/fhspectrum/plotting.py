"""Figure rendering for the CLI report paths.

Every figure is written next to the delimited output with the same stem, so
a run leaves a CSV that downstream tooling can parse and a PNG a human can
look at.  Rendering is file-only (Agg); nothing here opens a window.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_DPI = 150


def figure_path(csv_path: str | Path) -> Path:
    return Path(csv_path).with_suffix(".png")


def save_potential_curve(path: str | Path, t, v, label: str) -> Path:
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(t, v, lw=1.5)
    ax.axhline(0.0, color="gray", lw=0.6)
    ax.set_xlabel("t")
    ax.set_ylabel("V(t)")
    ax.set_title(label)
    out = Path(path)
    fig.savefig(out, dpi=_DPI, bbox_inches="tight")
    plt.close(fig)
    return out


def save_wavefunction(path: str | Path, t, psi, n: int, label: str) -> Path:
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(t, psi, lw=1.5)
    ax.axhline(0.0, color="gray", lw=0.6)
    ax.set_xlabel("t")
    ax.set_ylabel(rf"$\psi_{{{n}}}(t)$")
    ax.set_title(label)
    out = Path(path)
    fig.savefig(out, dpi=_DPI, bbox_inches="tight")
    plt.close(fig)
    return out


def save_spectrum(path: str | Path, levels: Sequence[int], momenta: Sequence[float], label: str) -> Path:
    """Momentum levels drawn as horizontal bars over the quantum number."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for n, p in zip(levels, momenta):
        ax.hlines(p, n - 0.3, n + 0.3, lw=2.0)
    ax.axhline(0.0, color="gray", lw=0.6)
    ax.set_xticks(list(levels))
    ax.set_xlabel("n")
    ax.set_ylabel("P (energy/c)")
    ax.set_title(label)
    out = Path(path)
    fig.savefig(out, dpi=_DPI, bbox_inches="tight")
    plt.close(fig)
    return out


def save_table_trends(
    path: str | Path,
    rows: Sequence[tuple[str, float, int, float]],
    label: str,
) -> Path:
    """Per-molecule panels of P_n against n, one line per screening rate.

    ``rows`` are (molecule, alpha, n, momentum) in any order.
    """
    molecules: list[str] = []
    for name, _, _, _ in rows:
        if name not in molecules:
            molecules.append(name)
    fig, axes = plt.subplots(
        1, len(molecules), figsize=(2.8 * len(molecules), 3.2), sharex=True
    )
    if len(molecules) == 1:
        axes = [axes]
    for ax, name in zip(axes, molecules):
        alphas: list[float] = []
        for mol, alpha, _, _ in rows:
            if mol == name and alpha not in alphas:
                alphas.append(alpha)
        for alpha in alphas:
            pts = sorted(
                (n, p) for mol, a, n, p in rows if mol == name and a == alpha
            )
            ax.plot(
                [n for n, _ in pts],
                [p for _, p in pts],
                marker="o",
                ms=3,
                lw=1.0,
                label=f"α={alpha:g}",
            )
        ax.axhline(0.0, color="gray", lw=0.5)
        ax.set_title(name)
        ax.set_xlabel("n")
    axes[0].set_ylabel("P (energy/c)")
    axes[-1].legend(fontsize=7, loc="best")
    fig.suptitle(label)
    out = Path(path)
    fig.savefig(out, dpi=_DPI, bbox_inches="tight")
    plt.close(fig)
    return out

"""Headless figure rendering for the analysis reports.

Everything draws through the Agg backend and goes straight to a file;
each function returns the path it wrote so callers can list the files
next to the delimited output.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def balance_figure(counts: dict[int, int], path: str | Path) -> Path:
    """Bar chart of letter occurrences, diamonds excluded."""
    path = Path(path)
    letters = sorted(counts)
    fig, ax = plt.subplots(figsize=(4.0, 3.0))
    ax.bar([str(c) for c in letters], [counts[c] for c in letters], color="#4878d0")
    ax.set_xlabel("letter")
    ax.set_ylabel("occurrences")
    ax.set_title("letter balance")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def run_table_figure(
    table: dict[tuple[int, int], Fraction],
    target: dict[int, Fraction] | None,
    path: str | Path,
) -> Path:
    """Expected run counts per letter and run length.

    A target value per run length, when given, is drawn as a dashed
    step so deviations from the ideal profile stand out.
    """
    path = Path(path)
    letters = sorted({letter for letter, _ in table})
    lengths = sorted({r for _, r in table})
    fig, ax = plt.subplots(figsize=(5.0, 3.2))
    width = 0.8 / max(len(letters), 1)
    for k, letter in enumerate(letters):
        xs = [r + (k - (len(letters) - 1) / 2) * width for r in lengths]
        ys = [float(table[letter, r]) for r in lengths]
        ax.bar(xs, ys, width=width, label=f"letter {letter}")
    if target:
        xs = sorted(target)
        ax.plot(
            xs,
            [float(target[r]) for r in xs],
            color="black",
            linestyle="--",
            marker="o",
            markersize=3,
            label="target",
        )
    ax.set_xticks(lengths)
    ax.set_xlabel("run length")
    ax.set_ylabel("expected count")
    ax.set_title("run profile")
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def autocorrelation_figure(values: dict[int, int | None], path: str | Path) -> Path:
    """Autocorrelation by shift; irrational values render as gaps at zero."""
    path = Path(path)
    taus = sorted(values)
    fig, ax = plt.subplots(figsize=(6.0, 3.0))
    known = [(t, values[t]) for t in taus if values[t] is not None]
    if known:
        ax.plot([t for t, _ in known], [v for _, v in known], ".", color="#4878d0")
    gaps = [t for t in taus if values[t] is None]
    if gaps:
        ax.plot(gaps, [0] * len(gaps), "x", color="#d65f5f", label="irrational")
        ax.legend(fontsize="small")
    ax.axhline(-1, color="black", linestyle="--", linewidth=0.8)
    ax.set_xlabel("shift")
    ax.set_ylabel("autocorrelation")
    ax.set_title("autocorrelation sweep")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def curtain_growth_figure(thresholds: dict[int, int], path: str | Path) -> Path:
    """Step plot of the curtain threshold D(n) against the frame length."""
    path = Path(path)
    ns = sorted(thresholds)
    fig, ax = plt.subplots(figsize=(5.0, 3.2))
    ax.step(ns, [thresholds[n] for n in ns], where="mid", color="#4878d0")
    ax.plot(ns, [thresholds[n] for n in ns], ".", color="#4878d0")
    ax.set_xlabel("frame length n")
    ax.set_ylabel("D(n)")
    ax.set_title("curtain threshold growth")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path

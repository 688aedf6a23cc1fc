"""Rendering of accuracy-vs-depth sweep figures from CSV rows."""

from __future__ import annotations

from typing import Iterable

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .serialize import SweepRow


def plot_sweep(rows: Iterable[SweepRow], path: str) -> None:
    """One accuracy-vs-Toffoli curve per (function, n), largest error on a log axis."""
    rows = sorted(rows, key=lambda r: (r.function, r.n, r.toffoli))
    series: dict[tuple[str, int], list[SweepRow]] = {}
    for row in rows:
        series.setdefault((row.function, row.n), []).append(row)

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for (function, n), points in series.items():
        ax.plot(
            [p.toffoli for p in points],
            [p.max_error for p in points],
            marker="o",
            label=f"{function}, n={n}",
        )
    ax.set_xlabel("Toffoli count")
    ax.set_ylabel("largest absolute error")
    ax.set_yscale("log")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)

"""File reports for the sampling commands: delimited data plus a figure.

matplotlib is imported lazily with the Agg backend so that report-free
use of the package never touches it.
"""

from __future__ import annotations

import csv
import os
from typing import Dict, List, Sequence, Tuple

from .estimates import FuzzSummary


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def write_fuzz_report(summary: FuzzSummary, out_dir: str) -> Dict[str, str]:
    """Write per-trial rows and a bound-versus-actual scatter plot."""
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, "fuzz_estimates.csv")
    with open(csv_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(
            ["trial", "ring", "case", "f", "g", "p", "lower_bound", "actual_degree", "satisfied"]
        )
        for t, record in enumerate(summary.records):
            writer.writerow(
                [
                    t,
                    summary.ring,
                    record.case,
                    record.f,
                    record.g,
                    record.p,
                    str(record.lower_bound),
                    record.actual_degree,
                    record.satisfied,
                ]
            )
    plt = _pyplot()
    bounds = [float(r.lower_bound) for r in summary.records]
    actuals = [float(r.actual_degree) for r in summary.records]
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.scatter(bounds, actuals, s=12, alpha=0.5, label="trials")
    top = max(bounds + actuals, default=1.0)
    ax.plot([0, top], [0, top], linestyle="--", color="gray", label="bound = actual")
    ax.set_xlabel("lower bound")
    ax.set_ylabel("actual degree")
    ax.set_title(f"degree estimates, {summary.ring} ring, {summary.completed} trials")
    ax.legend()
    plot_path = os.path.join(out_dir, "fuzz_estimates.png")
    fig.savefig(plot_path, dpi=120)
    plt.close(fig)
    return {"csv_path": csv_path, "plot_path": plot_path}


def write_growth_report(
    series: Sequence[Tuple[int, int]],
    lower_bounds: Sequence[int],
    ring: str,
    out_dir: str,
) -> Dict[str, str]:
    """Write iterate degrees next to their predicted floor, and plot both."""
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, "growth.csv")
    with open(csv_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["k", "degree", "lower_bound"])
        for (k, degree), floor in zip(series, lower_bounds):
            writer.writerow([k, degree, floor])
    plt = _pyplot()
    ks = [k for k, _ in series]
    degrees = [d for _, d in series]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ks, degrees, marker="o", label="iterate degree")
    ax.plot(ks, list(lower_bounds), linestyle="--", color="gray", label="floor")
    ax.set_xlabel("iterate")
    ax.set_ylabel("degree")
    ax.set_title(f"iterate growth, {ring} ring")
    ax.legend()
    plot_path = os.path.join(out_dir, "growth.png")
    fig.savefig(plot_path, dpi=120)
    plt.close(fig)
    return {"csv_path": csv_path, "plot_path": plot_path}

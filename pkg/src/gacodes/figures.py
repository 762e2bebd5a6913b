"""Optional matplotlib renderings of reports, written to files next to the
text/JSON output when the CLI is asked for them."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .abelian import IndicatorData
from .codes import CodeReport
from .dimensions import DimensionReport


def save_indicator_figure(ind: IndicatorData, path: str) -> None:
    """The change-of-basis matrix A and the indicator D as annotated grids."""
    fig, axes = plt.subplots(1, 2, figsize=(2 + ind.group.order * 1.1, 2 + ind.group.order * 0.55))
    for ax, matrix, title in (
        (axes[0], ind.a_matrix, "A (idempotent columns)"),
        (axes[1], ind.d_matrix, "D = A$^{-1}$ (indicator)"),
    ):
        ax.set_axis_off()
        ax.set_title(title)
        table = ax.table(cellText=matrix.literal_rows(), loc="center", cellLoc="center")
        table.scale(1, 1.4)
    fig.suptitle(f"{ind.group.name}, {ind.splitting.ext!r}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_dimension_figure(report: DimensionReport, path: str) -> None:
    """Bound intervals, candidate dimensions, and the exact dimension on a
    number line."""
    rows = list(report.bounds)
    fig, ax = plt.subplots(figsize=(7, 1.2 + 0.5 * (len(rows) + 2)))
    for y, bound in enumerate(rows):
        ax.hlines(y, bound.lower, bound.upper, lw=4, color="tab:blue", alpha=0.6)
        label = bound.tag + (f" ({bound.divisor} | dim)" if bound.divisor else "")
        ax.annotate(label, (bound.lower, y + 0.12), fontsize=8)
    y_cand = len(rows)
    if report.congruence is not None:
        ax.plot(
            report.congruence.candidates,
            [y_cand] * len(report.congruence.candidates),
            "s",
            color="tab:orange",
            label="congruence candidates",
        )
    ax.plot(report.candidates, [y_cand + 1] * len(report.candidates), "o",
            color="tab:green", label="combined candidates")
    ax.axvline(report.dim_exact, color="tab:red", ls="--", label=f"dim = {report.dim_exact}")
    ax.set_yticks([])
    ax.set_xlabel("dimension")
    ax.set_xlim(0, report.group_order + 1)
    ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_code_figure(report: CodeReport, path: str) -> None:
    """[n, k, d] bars against the Singleton line n - k + 1."""
    fig, ax = plt.subplots(figsize=(5, 3))
    labels = ["n", "k", "d" if report.d is not None else "d (bound)"]
    values = [report.n, report.k, report.d if report.d is not None else report.d_upper]
    ax.bar(labels, values, color=["tab:gray", "tab:blue", "tab:green"])
    singleton = report.n - report.k + 1
    ax.axhline(singleton, color="tab:red", ls="--", label=f"Singleton d $\\leq$ {singleton}")
    for bound in report.distance_bounds:
        if bound.kind == "upper" and not bound.conditional_on:
            ax.axhline(bound.value, color="tab:orange", ls=":", alpha=0.7)
    flags = [name for name, on in (("MDS", report.mds), ("ECD", report.ecd)) if on]
    ax.set_title(" ".join(flags) if flags else "code parameters")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)

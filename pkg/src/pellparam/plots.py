"""Figure rendering for survey reports.

Matplotlib is imported lazily with the Agg backend so the CLI stays
headless and pays the import cost only when figures are requested.
"""

from __future__ import annotations

from pathlib import Path

from .analysis import SurveyRow

_FIGSIZE = (8, 5)
_DPI = 150
_RESIDUE_COLORS = {1: "#d62728", 2: "#1f77b4", 3: "#2ca02c"}


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_survey_figures(rows: list[SurveyRow], outdir: str | Path) -> list[Path]:
    """Write the survey figures as PNG files and return their paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    plt = _pyplot()
    return [
        _index_scatter(plt, rows, outdir / "survey_index.png"),
        _degree_bars(plt, rows, outdir / "survey_degrees.png"),
    ]


def _index_scatter(plt, rows: list[SurveyRow], path: Path) -> Path:
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    for residue in (1, 2, 3):
        xs = [r.n for r in rows if r.residue_mod_4 == residue]
        ys = [r.index for r in rows if r.residue_mod_4 == residue]
        if xs:
            ax.scatter(
                xs,
                ys,
                s=14,
                color=_RESIDUE_COLORS[residue],
                label=f"n = {residue} (mod 4)",
            )
    ax.set_xlabel("n (square-free)")
    ax.set_ylabel("unit group index")
    ax.set_yticks(sorted({r.index for r in rows}))
    ax.set_title("Index of the solution subgroup in the norm-1 unit group")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path


def _degree_bars(plt, rows: list[SurveyRow], path: Path) -> Path:
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    degrees = sorted({max(r.feasible) for r in rows})
    width = 0.8 / 3
    for i, residue in enumerate((1, 2, 3)):
        counts = [
            sum(
                1
                for r in rows
                if r.residue_mod_4 == residue and max(r.feasible) == deg
            )
            for deg in degrees
        ]
        ax.bar(
            [x + (i - 1) * width for x in range(len(degrees))],
            counts,
            width=width,
            color=_RESIDUE_COLORS[residue],
            label=f"n = {residue} (mod 4)",
        )
    ax.set_xticks(range(len(degrees)))
    ax.set_xticklabels(str(d) for d in degrees)
    ax.set_xlabel("largest feasible degree")
    ax.set_ylabel("count of surveyed n")
    ax.set_title("Largest feasible parametric degree by residue class")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path

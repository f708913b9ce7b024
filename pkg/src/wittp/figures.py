"""Matplotlib rendering for the report path.

Figures are written next to the delimited report output.  Rendering is
headless (Agg) and takes precomputed data from harness.figure_payload, so
this module stays free of the math itself.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "figure.figsize": (7.0, 4.2),
    "figure.dpi": 110,
    "savefig.dpi": 150,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "axes.labelsize": 10,
    "axes.titlesize": 11,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "legend.fontsize": 8,
}


def _save(fig, path: Path) -> Path:
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def d_value_figure(dvalues, path: Path) -> Path:
    """Weights d(J) over partitions of p - 1, one marker series per prime."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        offset = 0
        ticks, labels = [], []
        for series in dvalues:
            xs = list(range(offset, offset + len(series["rows"])))
            ys = [math.log10(value) if value > 1 else 0.0 for _, value in series["rows"]]
            ax.plot(xs, ys, "o", ms=4, label=f"p = {series['p']}")
            ticks.extend(xs)
            labels.extend(name for name, _ in series["rows"])
            offset += len(series["rows"]) + 2
        ax.set_xticks(ticks)
        ax.set_xticklabels(labels, rotation=90, fontsize=5)
        ax.set_ylabel("log10 d(J)")
        ax.set_title("d(J) over partitions of p-1 (every value is 1 mod p)")
        ax.legend()
        return _save(fig, path)


def word_coefficient_figure(t2, path: Path) -> Path:
    """Side-by-side integer coefficients of the two word expansions."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        xs = range(len(t2["labels"]))
        width = 0.38
        ax.bar([x - width / 2 for x in xs], t2["word"], width, label="(Df)^(p-1)")
        ax.bar([x + width / 2 for x in xs], t2["leibniz"], width, label="D^(p-1) f^(p-1)")
        for x, (a, b) in enumerate(zip(t2["word"], t2["leibniz"])):
            ax.annotate(
                f"{a}+{b}={a + b}",
                (x, max(a, b)),
                textcoords="offset points",
                xytext=(0, 4),
                ha="center",
                fontsize=7,
            )
        ax.set_xticks(list(xs))
        ax.set_xticklabels(t2["labels"], fontsize=8)
        ax.set_ylabel("integer coefficient")
        ax.set_title(f"Word expansions at p = {t2['p']}: column sums vanish mod {t2['p']}")
        ax.legend()
        return _save(fig, path)


def c_distribution_figure(cdist, path: Path) -> Path:
    """How often each constant C(f) occurs across the whole quotient ring."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        variants = list(cdist["counts"])
        values = sorted({v for counts in cdist["counts"].values() for v in counts})
        width = 0.8 / max(len(variants), 1)
        for k, variant in enumerate(variants):
            counts = cdist["counts"][variant]
            xs = [v + (k - (len(variants) - 1) / 2) * width for v in values]
            ax.bar(xs, [counts.get(v, 0) for v in values], width, label=variant)
        ax.set_xticks(values)
        ax.set_xlabel("C(f)")
        ax.set_ylabel("number of f")
        ax.set_title(f"Distribution of C(f) over all f, p = {cdist['p']}")
        ax.legend()
        return _save(fig, path)


def render_report_figures(payload: dict, outdir: Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    return [
        d_value_figure(payload["dvalues"], outdir / "d_values.png"),
        word_coefficient_figure(payload["t2"], outdir / "word_coefficients.png"),
        c_distribution_figure(payload["cdist"], outdir / "c_distribution.png"),
    ]

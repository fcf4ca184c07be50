"""Report artifacts: delimited claim results plus rendered figures.

Given a verification report, writes report.json and results.csv to a
directory together with a small set of matplotlib figures: the tightness
ratio curves, the homomorphism matrix, and a catalog gallery.
"""

from __future__ import annotations

import csv
import math
from fractions import Fraction
from pathlib import Path

from . import catalog
from .graph import WeightedGraph, weighted_min_degree_ratio
from .homomorphism import verify_hom_diagram
from .registry import Report

_TIGHTNESS_PROFILES = {
    "H2plus": (Fraction(5, 9), lambda e: (2, e, 2, 1, 1, 2, e, 1)),
    "T0": (Fraction(7, 13), lambda e: (4, e, e, 1, 1, e, e, 1, 3, 3)),
    "H1plusplus": (Fraction(8, 15), lambda e: (5, e, 3, 2, e, 3, e, 1, 1)),
}


def _matplotlib():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_tightness_figure(path: Path) -> None:
    plt = _matplotlib()
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    epsilons = [Fraction(1, 10**j) for j in range(1, 8)]
    for name, (limit, weights) in _TIGHTNESS_PROFILES.items():
        g = catalog.named(name)
        ratios = [
            float(weighted_min_degree_ratio(WeightedGraph(g, weights(e)))) for e in epsilons
        ]
        xs = [float(e) for e in epsilons]
        line = ax.plot(xs, ratios, marker="o", label=f"{name} blow-up")[0]
        ax.axhline(float(limit), color=line.get_color(), linestyle=":", linewidth=1)
        ax.annotate(
            f"{limit.numerator}/{limit.denominator}",
            (xs[-1], float(limit)),
            textcoords="offset points",
            xytext=(4, 3),
            fontsize=8,
            color=line.get_color(),
        )
    ax.set_xscale("log")
    ax.invert_xaxis()
    ax.set_xlabel("class weight of the tiny vertices")
    ax.set_ylabel("min degree / vertex count")
    ax.set_title("Tightness blow-ups approach their exact limits")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_hom_matrix_figure(path: Path) -> None:
    plt = _matplotlib()
    names = list(catalog.DIAGRAM_NAMES)
    report = verify_hom_diagram(
        [(n, catalog.named(n)) for n in names], list(catalog.DIAGRAM_ARROWS)
    )
    grid = [
        [1.0 if report.matrix[(a, b)] is not None else 0.0 for b in names] for a in names
    ]
    fig, ax = plt.subplots(figsize=(5.4, 5.0))
    ax.imshow(grid, cmap="Greens", vmin=0, vmax=1.4)
    ax.set_xticks(range(len(names)), names, rotation=45, ha="right", fontsize=8)
    ax.set_yticks(range(len(names)), names, fontsize=8)
    for i in range(len(names)):
        for j in range(len(names)):
            ax.text(
                j, i, "hom" if grid[i][j] else "-",
                ha="center", va="center", fontsize=7,
                color="black" if grid[i][j] else "lightgray",
            )
    ax.set_xlabel("target")
    ax.set_ylabel("source")
    ax.set_title("Homomorphism matrix of the named graphs")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_catalog_figure(path: Path) -> None:
    plt = _matplotlib()
    names = list(catalog.ZOO_NAMES)
    fig, axes = plt.subplots(2, 4, figsize=(11, 6))
    for ax, name in zip(axes.flat, names):
        g = catalog.named(name)
        outer = min(g.n, 7)
        pos = {}
        for v in range(outer):
            angle = math.pi / 2 + 2 * math.pi * v / outer
            pos[v] = (math.cos(angle), math.sin(angle))
        extras = range(outer, g.n)
        for i, v in enumerate(extras):
            count = max(len(list(extras)), 1)
            angle = math.pi / 2 + 2 * math.pi * i / count
            radius = 0.35 if len(list(extras)) > 1 else 0.0
            pos[v] = (radius * math.cos(angle), radius * math.sin(angle))
        for u, v in g.edges():
            ax.plot(
                [pos[u][0], pos[v][0]], [pos[u][1], pos[v][1]],
                color="steelblue", linewidth=1, zorder=1,
            )
        ax.scatter(
            [pos[v][0] for v in range(g.n)],
            [pos[v][1] for v in range(g.n)],
            s=40, color="darkorange", zorder=2,
        )
        ax.set_title(f"{name}  ({g.n} vertices, {g.edge_count} edges)", fontsize=9)
        ax.set_aspect("equal")
        ax.axis("off")
    fig.suptitle("Named graph catalog", fontsize=12)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_results_csv(report: Report, path: Path) -> None:
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["id", "verdict", "millis", "citation"])
        for result in report.results:
            writer.writerow([result.id, result.verdict, result.millis, result.citation])


def write_artifacts(report: Report, outdir: str | Path) -> list[Path]:
    """Write report.json, results.csv and the figures; returns written paths."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    figures = out / "figures"
    figures.mkdir(exist_ok=True)
    written = []

    json_path = out / "report.json"
    json_path.write_text(report.to_json() + "\n")
    written.append(json_path)

    csv_path = out / "results.csv"
    write_results_csv(report, csv_path)
    written.append(csv_path)

    for name, renderer in (
        ("tightness_ratios.png", render_tightness_figure),
        ("hom_matrix.png", render_hom_matrix_figure),
        ("catalog.png", render_catalog_figure),
    ):
        target = figures / name
        renderer(target)
        written.append(target)
    return written

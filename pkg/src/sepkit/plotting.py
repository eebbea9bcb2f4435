"""Figure rendering: standalone SVG scatter and sequence plots from CSV.

matplotlib's SVG backend embeds glyphs as paths (no external references);
a fixed hash salt plus stripped date metadata makes the byte output
deterministic for a given build.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.rcParams["svg.hashsalt"] = "sepkit"

from matplotlib.figure import Figure  # noqa: E402

from .errors import InputError
from .reporting import read_csv

__all__ = ["PlotSpec", "render_plot"]


@dataclass(frozen=True)
class PlotSpec:
    csv_path: str
    x: str
    y: str
    out_path: str
    title: str | None = None
    radius: float = 3.0
    xlim: tuple[float, float] | None = None
    ylim: tuple[float, float] | None = None
    line: bool = False


def _column(rows, header, name) -> list[float]:
    if name not in header:
        raise InputError(f"column {name!r} not in CSV header {header}")
    out = []
    for row in rows:
        cell = row[name]
        try:
            out.append(float(cell))
        except ValueError as exc:
            raise InputError(f"non-numeric cell {cell!r} in column {name!r}") from exc
    return out


def render_plot(spec: PlotSpec) -> None:
    _, header, rows = read_csv(spec.csv_path)
    if spec.x not in header:
        raise InputError(f"column {spec.x!r} not in CSV header {header}")
    if spec.y not in header:
        raise InputError(f"column {spec.y!r} not in CSV header {header}")

    fig = Figure(figsize=(6.0, 4.5))
    ax = fig.add_subplot(111)
    if rows:
        xs = _column(rows, header, spec.x)
        ys = _column(rows, header, spec.y)
        if spec.line:
            ax.plot(xs, ys, linewidth=1.2)
        else:
            ax.scatter(xs, ys, s=spec.radius**2, alpha=0.7, edgecolors="none")
    else:
        print(f"warning: {spec.csv_path} has no data rows; writing empty axes",
              file=sys.stderr)
    ax.set_xlabel(spec.x)
    ax.set_ylabel(spec.y)
    if spec.title:
        ax.set_title(spec.title)
    if spec.xlim:
        ax.set_xlim(*spec.xlim)
    if spec.ylim:
        ax.set_ylim(*spec.ylim)
    fig.savefig(
        Path(spec.out_path), format="svg", metadata={"Date": None}
    )

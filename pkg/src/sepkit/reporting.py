"""CSV output for ensembles and scans.

Files are UTF-8 with LF newlines. Comment lines prefixed '#' carry run
metadata (seed, burn-in, subsample, acceptance rate, build); the header
row and every value are rendered deterministically so a seeded run is
byte-reproducible.
"""

from __future__ import annotations

import io
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from . import __version__
from .errors import InputError
from .experiments import EnsembleRecord, ScanPoint

__all__ = [
    "ENSEMBLE_HEADER",
    "render_ensemble_csv",
    "write_ensemble_csv",
    "render_scan_csv",
    "write_scan_csv",
    "read_csv",
]

ENSEMBLE_HEADER = "index,seed,chain,n,m,graph6,cws,facets"


def _fmt_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{float(x):.10g}"


def _metadata_lines(metadata: Mapping[str, object] | None) -> list[str]:
    lines = [f"# build=sepkit-{__version__}"]
    if metadata:
        for key, value in metadata.items():
            lines.append(f"# {key}={value}")
    return lines


def render_ensemble_csv(
    records: Sequence[EnsembleRecord], metadata: Mapping[str, object] | None = None
) -> str:
    out = io.StringIO()
    for line in _metadata_lines(metadata):
        out.write(line + "\n")
    out.write(ENSEMBLE_HEADER + "\n")
    for r in records:
        seed = "" if r.seed is None else str(r.seed)
        out.write(
            f"{r.index},{seed},{r.chain},{r.n},{r.m},{r.graph6},"
            f"{_fmt_fraction(r.cws)},{r.facets}\n"
        )
    return out.getvalue()


def write_ensemble_csv(
    records: Sequence[EnsembleRecord],
    path: str | Path,
    metadata: Mapping[str, object] | None = None,
) -> None:
    Path(path).write_text(render_ensemble_csv(records, metadata), encoding="utf-8")


def render_scan_csv(
    points: Sequence[ScanPoint], metadata: Mapping[str, object] | None = None
) -> str:
    out = io.StringIO()
    for line in _metadata_lines(metadata):
        out.write(line + "\n")
    out.write("step,fraction\n")
    for p in points:
        out.write(f"{p.step},{_fmt_fraction(p.fraction)}\n")
    return out.getvalue()


def write_scan_csv(
    points: Sequence[ScanPoint],
    path: str | Path,
    metadata: Mapping[str, object] | None = None,
) -> None:
    Path(path).write_text(render_scan_csv(points, metadata), encoding="utf-8")


def read_csv(path: str | Path) -> tuple[dict[str, str], list[str], list[dict[str, str]]]:
    """Read a CSV written by this package.

    Returns (metadata, header columns, rows as column->string dicts).
    """
    metadata: dict[str, str] = {}
    header: list[str] | None = None
    rows: list[dict[str, str]] = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" in body:
                key, _, value = body.partition("=")
                metadata[key.strip()] = value.strip()
            continue
        cells = line.split(",")
        if header is None:
            header = cells
            continue
        if len(cells) != len(header):
            raise InputError(f"row has {len(cells)} cells, header has {len(header)}")
        rows.append(dict(zip(header, cells)))
    if header is None:
        raise InputError(f"{path}: no header row found")
    return metadata, header, rows

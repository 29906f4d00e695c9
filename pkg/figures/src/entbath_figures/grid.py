"""Strict loader for ``axis1,axis2,value`` sweep CSV files.

A valid file has exactly that header, one ``x1,x2,value`` row per grid cell,
finite axis coordinates, and a complete rectangular cell set (every (x1, x2)
pair exactly once).  Values may be ``inf`` to mark survival times of states
that stay entangled at all finite times.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

HEADER = "axis1,axis2,value"


@dataclass(frozen=True)
class Grid:
    x: np.ndarray  # axis1 values, ascending
    y: np.ndarray  # axis2 values, ascending
    z: np.ndarray  # z[i, j] = value at (x[i], y[j])

    @property
    def has_infinite(self) -> bool:
        return bool(np.any(np.isinf(self.z)))


def load_grid(path: str) -> Grid:
    """Parse and validate a sweep CSV; raises ValueError on any defect."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ValueError(f"cannot read {path!r}: {exc}") from exc

    if not lines:
        raise ValueError(f"{path!r} is empty")
    if lines[0] != HEADER:
        raise ValueError(f"{path!r}: first line must be {HEADER!r}, got {lines[0]!r}")
    if len(lines) < 2:
        raise ValueError(f"{path!r} has a header but no data rows")

    triples: list[tuple[float, float, float]] = []
    for ln, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 3:
            raise ValueError(f"{path!r} line {ln}: expected 3 fields, got {len(parts)}")
        try:
            x1, x2, v = (float(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"{path!r} line {ln}: non-numeric field: {exc}") from exc
        if not (math.isfinite(x1) and math.isfinite(x2)):
            raise ValueError(f"{path!r} line {ln}: axis coordinates must be finite")
        if math.isnan(v):
            raise ValueError(f"{path!r} line {ln}: value is NaN")
        triples.append((x1, x2, v))

    xs = np.array(sorted({t[0] for t in triples}))
    ys = np.array(sorted({t[1] for t in triples}))
    if len(triples) != len(xs) * len(ys):
        raise ValueError(
            f"{path!r}: {len(triples)} cells do not tile a {len(xs)}x{len(ys)} grid"
        )
    ix = {v: i for i, v in enumerate(xs)}
    iy = {v: j for j, v in enumerate(ys)}
    z = np.full((len(xs), len(ys)), np.nan)
    for x1, x2, v in triples:
        i, j = ix[x1], iy[x2]
        if not np.isnan(z[i, j]):
            raise ValueError(f"{path!r}: duplicate cell at ({x1}, {x2})")
        z[i, j] = v
    return Grid(x=xs, y=ys, z=z)

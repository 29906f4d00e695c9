"""Parameter-grid engine, figure presets, and CSV emission.

Sweeps evaluate either the logarithmic negativity E_N (grids with a time
axis) or the survival time t_s (grids without one) over two parameter axes
drawn from {t, r, c_th, n}, with the remaining parameters fixed.  All sweeps
use the symmetric-state model n1 = n2 = n at lam = m = omega = 1, matching
the bundled presets:

    fig1a: E_N over (t, r),    squeezed vacuum, c_th = 2
    fig1b: E_N over (t, c_th), squeezed vacuum, r = 2
    fig2a: t_s over (r, c_th), n = 1
    fig2b: t_s over (r, n),    c_th = 2

Survival-time cells are 0 where the state is never entangled and the token
``inf`` where it stays entangled for all finite times (c_th = 1); E_N cells
are 0 wherever the state is separable.  Cells are independent pure
evaluations, so serial and parallel runs produce byte-identical CSV.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import __version__
from .dynamics import BathParams, DriftConvention, propagate
from .entanglement import log_negativity
from .states import SqueezedThermalSpec, squeezed_thermal
from .survival import SurvivalKind, survival_time_symmetric

__all__ = [
    "PRESET_NAMES",
    "SweepAxis",
    "SweepConfig",
    "SweepGrid",
    "read_csv",
    "run_sweep",
    "write_csv",
]

AXIS_NAMES = ("t", "r", "c_th", "n")
PRESET_NAMES = ("fig1a", "fig1b", "fig2a", "fig2b", "custom")

DEFAULT_STEPS = 101


@dataclass(frozen=True)
class SweepAxis:
    name: str
    min: float
    max: float
    steps: int = DEFAULT_STEPS

    def __post_init__(self):
        if self.name not in AXIS_NAMES:
            raise ValueError(f"axis name must be one of {AXIS_NAMES}, got {self.name!r}")
        if not self.min < self.max:
            raise ValueError(f"axis {self.name}: min must be < max")
        if self.steps < 2:
            raise ValueError(f"axis {self.name}: steps must be >= 2")

    def values(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.steps)


_PRESET_DEFS = {
    "fig1a": dict(
        axis1=("t", 0.0, 1.5),
        axis2=("r", 0.0, 2.0),
        fixed={"n": 0.0, "c_th": 2.0},
    ),
    "fig1b": dict(
        axis1=("t", 0.0, 1.5),
        axis2=("c_th", 1.0, 4.0),
        fixed={"r": 2.0, "n": 0.0},
    ),
    "fig2a": dict(
        axis1=("r", 0.0, 3.0),
        axis2=("c_th", 1.0, 4.0),
        fixed={"n": 1.0},
    ),
    "fig2b": dict(
        axis1=("r", 0.0, 3.0),
        axis2=("n", 0.0, 3.0),
        fixed={"c_th": 2.0},
    ),
}


@dataclass(frozen=True)
class SweepConfig:
    """Two sweep axes plus fixed values binding every model parameter once."""

    axis1: SweepAxis
    axis2: SweepAxis
    fixed: Mapping[str, float] = field(default_factory=dict)
    preset: str = "custom"
    drift_convention: DriftConvention = DriftConvention.OMEGA_SQUARED
    output_path: str = "-"

    def __post_init__(self):
        if self.preset not in PRESET_NAMES:
            raise ValueError(f"preset must be one of {PRESET_NAMES}, got {self.preset!r}")
        axis_names = (self.axis1.name, self.axis2.name)
        if axis_names[0] == axis_names[1]:
            raise ValueError(f"axis names must be distinct, both are {axis_names[0]!r}")
        bound = list(axis_names) + list(self.fixed)
        required = set(AXIS_NAMES) if "t" in axis_names else {"r", "c_th", "n"}
        for name in bound:
            if name not in AXIS_NAMES:
                raise ValueError(f"unknown parameter {name!r}")
            if bound.count(name) > 1:
                raise ValueError(f"parameter {name!r} is bound more than once")
            if name not in required:
                raise ValueError(
                    f"parameter {name!r} has no role in this sweep (survival-time "
                    "grids have no time axis)"
                )
        missing = required - set(bound)
        if missing:
            raise ValueError(f"unbound parameters: {sorted(missing)}")
        for name, value in self.fixed.items():
            _validate_param(name, value)

    @property
    def kind(self) -> str:
        """"en" for negativity grids (time axis present), "ts" for survival grids."""
        return "en" if "t" in (self.axis1.name, self.axis2.name) else "ts"

    @classmethod
    def from_preset(
        cls,
        name: str,
        steps: int | None = None,
        drift_convention: DriftConvention = DriftConvention.OMEGA_SQUARED,
        output_path: str = "-",
    ) -> "SweepConfig":
        if name not in _PRESET_DEFS:
            raise ValueError(f"unknown preset {name!r}; choose from {sorted(_PRESET_DEFS)}")
        spec = _PRESET_DEFS[name]
        n_steps = DEFAULT_STEPS if steps is None else steps
        ax1 = SweepAxis(*spec["axis1"], steps=n_steps)
        ax2 = SweepAxis(*spec["axis2"], steps=n_steps)
        return cls(
            axis1=ax1,
            axis2=ax2,
            fixed=dict(spec["fixed"]),
            preset=name,
            drift_convention=drift_convention,
            output_path=output_path,
        )

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "SweepConfig":
        """Build from a JSON object mirroring the field names."""
        preset = data.get("preset", "custom")
        if preset != "custom" and "axis1" not in data:
            cfg = cls.from_preset(
                preset,
                steps=data.get("steps"),
                drift_convention=DriftConvention(data.get("drift_convention", "omega2")),
                output_path=data.get("output_path", "-"),
            )
            return cfg
        axes = {}
        for key in ("axis1", "axis2"):
            if key not in data:
                raise ValueError(f"sweep config is missing {key!r}")
            spec = data[key]
            axes[key] = SweepAxis(
                name=spec["name"],
                min=float(spec["min"]),
                max=float(spec["max"]),
                steps=int(spec.get("steps", DEFAULT_STEPS)),
            )
        return cls(
            axis1=axes["axis1"],
            axis2=axes["axis2"],
            fixed={k: float(v) for k, v in data.get("fixed", {}).items()},
            preset=preset,
            drift_convention=DriftConvention(data.get("drift_convention", "omega2")),
            output_path=data.get("output_path", "-"),
        )


def _validate_param(name: str, value: float) -> None:
    if name in ("t", "r", "n") and value < 0:
        raise ValueError(f"parameter {name} must be non-negative, got {value}")
    if name == "c_th" and value < 1:
        raise ValueError(f"parameter c_th must be >= 1, got {value}")


@dataclass(frozen=True, eq=False)
class SweepGrid:
    """Row-major grid of values over (axis1, axis2) plus resolved metadata."""

    axis1_values: np.ndarray
    axis2_values: np.ndarray
    values: np.ndarray
    metadata: dict

    def __post_init__(self):
        if self.values.shape != (len(self.axis1_values), len(self.axis2_values)):
            raise ValueError("grid dimensions are inconsistent with the axes")


def _en_cell(t: float, r: float, c_th: float, n: float, conv: DriftConvention) -> float:
    sigma0 = squeezed_thermal(SqueezedThermalSpec(n, n, r))
    p = BathParams.symmetric(c_th=c_th)
    return log_negativity(propagate(sigma0, p, t, conv))


def _ts_cell(r: float, c_th: float, n: float) -> float:
    result = survival_time_symmetric(n, r, c_th)
    if result.kind is SurvivalKind.FINITE_DEATH:
        return result.t_s
    if result.kind is SurvivalKind.ENTANGLED_FOR_ALL_FINITE_TIMES:
        return float("inf")
    return 0.0


def run_sweep(cfg: SweepConfig, workers: int = 1) -> SweepGrid:
    """Evaluate the grid; cells are independent, so any worker count gives
    identical output."""
    a1 = cfg.axis1.values()
    a2 = cfg.axis2.values()
    kind = cfg.kind
    conv = cfg.drift_convention

    def cell(x1: float, x2: float) -> float:
        bound = dict(cfg.fixed)
        bound[cfg.axis1.name] = float(x1)
        bound[cfg.axis2.name] = float(x2)
        if kind == "en":
            return _en_cell(bound["t"], bound["r"], bound["c_th"], bound["n"], conv)
        return _ts_cell(bound["r"], bound["c_th"], bound["n"])

    def row(x1: float) -> list[float]:
        return [cell(x1, x2) for x2 in a2]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, a1))
    else:
        rows = [row(x1) for x1 in a1]
    values = np.array(rows, dtype=float)

    if kind == "en":
        bad = ~np.isfinite(values)
    else:
        bad = np.isnan(values) | (values == -np.inf)
    if np.any(bad):
        i, j = np.argwhere(bad)[0]
        raise RuntimeError(
            f"non-finite {kind} value {values[i, j]} at grid cell "
            f"({cfg.axis1.name}={a1[i]}, {cfg.axis2.name}={a2[j]})"
        )

    metadata = {
        "version": __version__,
        "preset": cfg.preset,
        "kind": kind,
        "axis1": {"name": cfg.axis1.name, "min": cfg.axis1.min, "max": cfg.axis1.max, "steps": cfg.axis1.steps},
        "axis2": {"name": cfg.axis2.name, "min": cfg.axis2.min, "max": cfg.axis2.max, "steps": cfg.axis2.steps},
        "fixed": dict(cfg.fixed),
        "drift_convention": cfg.drift_convention.value,
        "model": {"lam": 1.0, "m": 1.0, "omega": 1.0, "n1_equals_n2": True},
        # equal frequencies and thermal parameters always admit a common bath T
        "temperature_consistent": True,
    }
    return SweepGrid(axis1_values=a1, axis2_values=a2, values=values, metadata=metadata)


def _format(x: float) -> str:
    # 17 significant digits round-trip doubles exactly; inf prints as 'inf'
    return f"{x:.17g}"


def write_csv(grid: SweepGrid, path: str) -> None:
    """Write the grid as ``axis1,axis2,value`` rows (UTF-8, LF, one row per cell).

    ``path`` of "-" writes to standard output.  Infinite survival times are
    written as the literal token ``inf``.
    """
    lines = ["axis1,axis2,value"]
    for i, x1 in enumerate(grid.axis1_values):
        for j, x2 in enumerate(grid.axis2_values):
            lines.append(f"{_format(x1)},{_format(x2)},{_format(grid.values[i, j])}")
    data = "\n".join(lines) + "\n"
    if path == "-":
        sys.stdout.write(data)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(data)
    except OSError as exc:
        raise OSError(f"failed to write sweep CSV to {path!r}: {exc}") from exc


def read_csv(path: str) -> SweepGrid:
    """Read a grid written by ``write_csv``; finite values round-trip exactly."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise OSError(f"failed to read sweep CSV from {path!r}: {exc}") from exc
    if not lines or lines[0] != "axis1,axis2,value":
        raise ValueError(f"{path!r} is not a sweep CSV (missing axis1,axis2,value header)")
    triples = []
    for ln, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 3:
            raise ValueError(f"{path!r} line {ln}: expected 3 fields, got {len(parts)}")
        triples.append(tuple(float(x) for x in parts))
    a1 = sorted({t[0] for t in triples})
    a2 = sorted({t[1] for t in triples})
    if len(triples) != len(a1) * len(a2):
        raise ValueError(f"{path!r}: grid is not rectangular")
    index1 = {x: i for i, x in enumerate(a1)}
    index2 = {x: j for j, x in enumerate(a2)}
    values = np.full((len(a1), len(a2)), np.nan)
    for x1, x2, v in triples:
        values[index1[x1], index2[x2]] = v
    return SweepGrid(
        axis1_values=np.array(a1),
        axis2_values=np.array(a2),
        values=values,
        metadata={"source": path},
    )


def write_metadata(grid: SweepGrid, path: str) -> None:
    """Write the resolved configuration metadata as JSON."""
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(grid.metadata, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        raise OSError(f"failed to write sweep metadata to {path!r}: {exc}") from exc

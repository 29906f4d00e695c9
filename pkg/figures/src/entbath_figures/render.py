"""3-D surface rendering of sweep grids."""

from __future__ import annotations

from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .grid import Grid, load_grid

KIND_LABELS = {"en": "E_N", "ts": "t_s"}
INFINITE_POLICIES = ("clip", "hole")


@dataclass(frozen=True)
class FigureSpec:
    """What to render and how to treat infinite cells.

    ``infinite_policy`` "clip" replaces inf by ``clip_value`` (or the largest
    finite cell when unset); "hole" leaves those cells out of the surface.
    """

    input_csv: str
    output_image: str
    kind: str = "en"
    xlabel: str = "axis1"
    ylabel: str = "axis2"
    title: str = ""
    infinite_policy: str = "clip"
    clip_value: float | None = None

    def __post_init__(self):
        if self.kind not in KIND_LABELS:
            raise ValueError(f"kind must be one of {sorted(KIND_LABELS)}, got {self.kind!r}")
        if self.infinite_policy not in INFINITE_POLICIES:
            raise ValueError(
                f"infinite policy must be one of {INFINITE_POLICIES}, got {self.infinite_policy!r}"
            )


def resolve_surface(grid: Grid, spec: FigureSpec) -> np.ndarray:
    """Apply the infinite-cell policy; the input grid is left untouched."""
    z = grid.z.copy()
    infinite = np.isinf(z)
    if not infinite.any():
        return z
    if spec.infinite_policy == "hole":
        z[infinite] = np.nan
        return z
    if spec.clip_value is not None:
        ceiling = spec.clip_value
    else:
        finite = z[~infinite]
        if finite.size == 0:
            raise ValueError("grid has no finite cells; pass an explicit clip value")
        ceiling = float(np.max(finite))
    z[infinite] = ceiling
    return z


def render_surface(spec: FigureSpec) -> str:
    """Render the grid as a surface plot and write ``spec.output_image``."""
    grid = load_grid(spec.input_csv)
    z = resolve_surface(grid, spec)

    x_mesh, y_mesh = np.meshgrid(grid.x, grid.y, indexing="ij")
    fig = plt.figure(figsize=(7.0, 5.5))
    ax = fig.add_subplot(projection="3d")
    surf = ax.plot_surface(
        x_mesh, y_mesh, z, cmap="viridis", linewidth=0, antialiased=True
    )
    ax.set_xlabel(spec.xlabel)
    ax.set_ylabel(spec.ylabel)
    ax.set_zlabel(KIND_LABELS[spec.kind])
    if spec.title:
        ax.set_title(spec.title)
    fig.colorbar(surf, shrink=0.6, pad=0.1)
    try:
        fig.savefig(spec.output_image, dpi=150, bbox_inches="tight")
    finally:
        plt.close(fig)
    return spec.output_image

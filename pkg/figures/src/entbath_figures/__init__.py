"""Surface plots of negativity / survival-time sweep grids from CSV."""

__version__ = "0.1.0"

from .grid import Grid, load_grid
from .render import FigureSpec, render_surface, resolve_surface

__all__ = ["FigureSpec", "Grid", "load_grid", "render_surface", "resolve_surface"]

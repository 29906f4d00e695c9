"""Logarithmic negativity, separability, and negativity traces.

The entanglement measure is E_N = max(0, -log2(2 nu_pt)) where nu_pt is the
smaller symplectic eigenvalue of the partial transpose.  It vanishes exactly
on the separability boundary 2 nu_pt = 1 and is positive iff the state is
entangled.  A variant that applies the logarithm to 2 nu_pt^2 instead
(``log_negativity_squared_argument``) is kept for diagnostics only: it
evaluates to 1 on the vacuum and does not vanish at the boundary, so it is
not a faithful entanglement measure and nothing in the package uses it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .covariance import as_covariance, is_physical, pt_min_symplectic
from .dynamics import BathParams, DriftConvention, trajectory
from .states import SqueezedThermalSpec, squeezed_thermal

__all__ = [
    "NegativityTrace",
    "is_separable",
    "log_negativity",
    "log_negativity_squared_argument",
    "negativity_trace",
    "symmetric_pt_min",
    "symmetric_separability_gap",
]

SEPARABILITY_TOL = 1e-12


def _checked_pt_min(sigma) -> float:
    sigma = as_covariance(sigma)
    if not is_physical(sigma):
        raise ValueError("covariance matrix is not physical")
    return pt_min_symplectic(sigma)


def log_negativity(sigma) -> float:
    """E_N = max(0, -log2(2 nu_pt)); zero iff the state is PPT-separable."""
    nu = _checked_pt_min(sigma)
    if nu <= 0.0:
        raise ValueError("partial-transpose eigenvalue collapsed to zero")
    return max(0.0, -float(np.log2(2.0 * nu)))


def log_negativity_squared_argument(sigma) -> float:
    """Diagnostic variant -log2(2 nu_pt^2); see the module docstring."""
    nu = _checked_pt_min(sigma)
    if nu <= 0.0:
        raise ValueError("partial-transpose eigenvalue collapsed to zero")
    return -float(np.log2(2.0 * nu * nu))


def is_separable(sigma) -> bool:
    """PPT criterion; the boundary nu_pt = 1/2 counts as separable."""
    return _checked_pt_min(sigma) >= 0.5 - SEPARABILITY_TOL


@dataclass(frozen=True, eq=False)
class NegativityTrace:
    """E_N sampled along a trajectory, with the generating configuration."""

    times: np.ndarray
    values: np.ndarray
    params: BathParams
    initial: "SqueezedThermalSpec | np.ndarray"
    convention: DriftConvention = DriftConvention.OMEGA_SQUARED

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if times.shape != values.shape or times.ndim != 1:
            raise ValueError("times and values must be 1-d arrays of equal length")
        if times.size and times[0] < 0:
            raise ValueError("times must be non-negative")
        if np.any(np.diff(times) <= 0):
            raise ValueError("times must be strictly increasing")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)


def negativity_trace(
    initial,
    p: BathParams,
    t_grid,
    conv: DriftConvention = DriftConvention.OMEGA_SQUARED,
) -> NegativityTrace:
    """E_N(t) on a strictly increasing grid, from a spec or a raw matrix."""
    if isinstance(initial, SqueezedThermalSpec):
        sigma0 = squeezed_thermal(initial)
    else:
        sigma0 = as_covariance(initial)
    sigmas = trajectory(sigma0, p, t_grid, conv)
    nus = pt_min_symplectic(sigmas)
    values = np.maximum(0.0, -np.log2(2.0 * nus))
    return NegativityTrace(
        times=np.asarray(t_grid, dtype=float),
        values=values,
        params=p,
        initial=initial,
        convention=conv,
    )


def symmetric_pt_min(n: float, r: float, c_th: float, times, lam: float = 1.0) -> np.ndarray:
    """Closed-form nu_pt(t) for a symmetric state (n1 = n2 = n) at omega = m = 1.

    nu_pt(t) = e^{-2 lam t} ((n + 1/2) e^{-2r} - c_th/2) + c_th/2.
    """
    return 0.5 * (symmetric_separability_gap(n, r, c_th, times, lam) + 1.0)


def symmetric_separability_gap(
    n: float, r: float, c_th: float, times, lam: float = 1.0
) -> np.ndarray:
    """Closed-form 2 nu_pt(t) - 1 for the symmetric case at omega = m = 1.

    Written in deviation form,
        gap(t) = e^{-2 lam t} ((2n + 1) e^{-2r} - c_th) + (c_th - 1),
    so the sign of the gap stays meaningful even when the decaying term is
    smaller than the rounding of nu_pt itself (relevant at c_th = 1, where
    the gap approaches zero from below without ever crossing).
    """
    times = np.asarray(times, dtype=float)
    return np.exp(-2.0 * lam * times) * ((2.0 * n + 1.0) * np.exp(-2.0 * r) - c_th) + (
        c_th - 1.0
    )

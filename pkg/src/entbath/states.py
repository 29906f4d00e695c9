"""Initial Gaussian states: two-mode squeezed thermal states and thermal products."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SqueezedThermalSpec",
    "entanglement_threshold",
    "squeezed_thermal",
    "thermal",
]


@dataclass(frozen=True)
class SqueezedThermalSpec:
    """Mean photon numbers of the two modes and the two-mode squeezing parameter.

    Photon numbers are distribution means and may be any non-negative real.
    Only r >= 0 is accepted: a negative r merely flips the sign pattern of the
    cross block, and admitting it would invite silent sign-convention mixups.
    """

    n1: float
    n2: float
    r: float

    def __post_init__(self):
        if self.n1 < 0 or self.n2 < 0:
            raise ValueError("mean photon numbers must be non-negative")
        if self.r < 0:
            raise ValueError("squeezing parameter must be non-negative")


def squeezed_thermal(spec: SqueezedThermalSpec) -> np.ndarray:
    """Covariance matrix of a two-mode squeezed thermal state.

    sigma = [[a I2, diag(c, -c)], [diag(c, -c), b I2]] with
    a = n1 cosh^2 r + n2 sinh^2 r + cosh(2r)/2,
    b = n1 sinh^2 r + n2 cosh^2 r + cosh(2r)/2,
    c = (n1 + n2 + 1) sinh(2r)/2.
    """
    n1, n2, r = spec.n1, spec.n2, spec.r
    ch, sh = np.cosh(r), np.sinh(r)
    a = n1 * ch * ch + n2 * sh * sh + 0.5 * np.cosh(2.0 * r)
    b = n1 * sh * sh + n2 * ch * ch + 0.5 * np.cosh(2.0 * r)
    c = 0.5 * (n1 + n2 + 1.0) * np.sinh(2.0 * r)
    return np.array(
        [
            [a, 0.0, c, 0.0],
            [0.0, a, 0.0, -c],
            [c, 0.0, b, 0.0],
            [0.0, -c, 0.0, b],
        ]
    )


def thermal(n1: float, n2: float) -> np.ndarray:
    """Covariance matrix of a product of two thermal states, diag(n_i + 1/2)."""
    if n1 < 0 or n2 < 0:
        raise ValueError("mean photon numbers must be non-negative")
    return np.diag([n1 + 0.5, n1 + 0.5, n2 + 0.5, n2 + 0.5])


def entanglement_threshold(n1: float, n2: float) -> float:
    """Squeezing threshold r_s above which the squeezed thermal state is entangled.

    cosh^2 r_s = (n1 + 1)(n2 + 1) / (n1 + n2 + 1); the state with squeezing r
    is entangled iff r > r_s.  Zero whenever either mode is at vacuum (n = 0).
    """
    if n1 < 0 or n2 < 0:
        raise ValueError("mean photon numbers must be non-negative")
    ratio = (n1 + 1.0) * (n2 + 1.0) / (n1 + n2 + 1.0)
    # ratio >= 1 analytically; rounding can dip just below at n1*n2 = 0
    return float(np.arccosh(np.sqrt(max(ratio, 1.0))))

"""Shared generators and brute-force oracles for the test suite.

Everything here is deliberately independent of the package's analytic
formulas: symplectic spectra come from eigenvalues of i*Omega*sigma, random
physical states from an explicit Williamson construction with a random
symplectic conjugation, and matrix exponentials from scipy's
scaling-and-squaring implementation.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import expm

from entbath.covariance import OMEGA

# partial transposition of mode 2 = momentum flip of mode 2
PT_FLIP = np.diag([1.0, 1.0, 1.0, -1.0])


def random_symplectic(rng: np.random.Generator, scale: float = 0.4) -> np.ndarray:
    """exp(Omega H) with H symmetric is symplectic."""
    h = rng.normal(size=(4, 4)) * scale
    h = 0.5 * (h + h.T)
    return expm(OMEGA @ h)


def random_local_symplectic(rng: np.random.Generator, squeeze: float = 0.8) -> np.ndarray:
    """Direct sum of two single-mode rotation/squeeze/rotation factors."""
    out = np.zeros((4, 4))
    for k in (0, 2):
        theta1, theta2 = rng.uniform(0.0, 2.0 * np.pi, size=2)
        z = rng.uniform(-squeeze, squeeze)
        rot1 = np.array([[np.cos(theta1), np.sin(theta1)], [-np.sin(theta1), np.cos(theta1)]])
        rot2 = np.array([[np.cos(theta2), np.sin(theta2)], [-np.sin(theta2), np.cos(theta2)]])
        out[k : k + 2, k : k + 2] = rot1 @ np.diag([np.exp(z), np.exp(-z)]) @ rot2
    return out


def random_physical_sigma(
    rng: np.random.Generator, nu_min: float = 0.5, nu_max: float = 3.0
) -> np.ndarray:
    """S diag(nu1, nu1, nu2, nu2) S^T for random symplectic S (Williamson form)."""
    nu1, nu2 = rng.uniform(nu_min, nu_max, size=2)
    d = np.diag([nu1, nu1, nu2, nu2])
    s = random_symplectic(rng)
    sigma = s @ d @ s.T
    return 0.5 * (sigma + sigma.T)


def brute_force_symplectic_eigs(sigma: np.ndarray) -> tuple[float, float]:
    """|eigenvalues of i Omega sigma| come in two degenerate pairs (nu-, nu+)."""
    ev = np.sort(np.abs(np.linalg.eigvals(1j * OMEGA @ sigma)))
    return 0.5 * (ev[0] + ev[1]), 0.5 * (ev[2] + ev[3])


def brute_force_pt_min(sigma: np.ndarray) -> float:
    """Smaller symplectic eigenvalue of the momentum-flipped (PT) matrix."""
    return brute_force_symplectic_eigs(PT_FLIP @ sigma @ PT_FLIP)[0]

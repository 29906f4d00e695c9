"""Symplectic linear algebra for two-mode Gaussian covariance matrices.

Conventions used throughout the package: canonical ordering
(q_x, p_x, q_y, p_y), natural units hbar = k = 1, vacuum covariance
matrix I/2.  A state is physical iff its smaller symplectic eigenvalue
is at least 1/2.

The determinant-based formulas below accept either a single 4x4 matrix
or a stack of matrices with shape (..., 4, 4) and broadcast over the
leading axes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "OMEGA",
    "BlockForm",
    "SymplecticSpectrum",
    "as_covariance",
    "block_decompose",
    "is_physical",
    "pt_min_symplectic",
    "swap_modes",
    "symplectic_eigenvalues",
    "vacuum",
]

# Symplectic form for two modes in (q_x, p_x, q_y, p_y) ordering.
OMEGA = np.array(
    [
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0, 0.0],
    ]
)
OMEGA.setflags(write=False)

# Discriminants below zero by more than this (relative to the magnitude of
# the terms that were cancelled against each other) are treated as corrupted
# input; smaller negatives are rounding noise from boundary or degenerate
# states (pure states, symmetric squeezed thermal states, states exactly at
# the separability threshold) and are clamped to zero.
DISCRIMINANT_TOL = 1e-12

# Default slack on the Heisenberg bound nu_minus >= 1/2.  The physicality
# predicate is evaluated in linear invariant form (no square roots), so it
# does not inherit the sqrt(eps) splitting that the eigenvalues themselves
# pick up on degenerate spectra, and the tolerance can stay tight.
PHYSICALITY_TOL = 1e-9


def vacuum() -> np.ndarray:
    """Covariance matrix of the two-mode vacuum, I/2."""
    return 0.5 * np.eye(4)


def as_covariance(entries, atol: float = 1e-8) -> np.ndarray:
    """Ingest a 4x4 covariance matrix: validate, symmetrize, return a copy.

    Rejects wrong shapes, non-finite entries and asymmetry beyond ``atol``.
    Asymmetry within ``atol`` is averaged away so downstream code can rely
    on exact symmetry.
    """
    sigma = np.array(entries, dtype=float)
    if sigma.shape != (4, 4):
        raise ValueError(f"covariance matrix must be 4x4, got shape {sigma.shape}")
    if not np.all(np.isfinite(sigma)):
        raise ValueError("covariance matrix has non-finite entries")
    if np.max(np.abs(sigma - sigma.T)) > atol:
        raise ValueError("covariance matrix is not symmetric within tolerance")
    return 0.5 * (sigma + sigma.T)


@dataclass(frozen=True)
class BlockForm:
    """2x2 blocks of a two-mode covariance matrix [[a, c], [c^T, b]]."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def reassemble(self) -> np.ndarray:
        return np.block([[self.a, self.c], [self.c.T, self.b]])


@dataclass(frozen=True)
class SymplecticSpectrum:
    """The two symplectic eigenvalues of a two-mode state, sorted ascending."""

    nu_minus: float
    nu_plus: float


def block_decompose(sigma) -> BlockForm:
    """Split a symmetric 4x4 covariance matrix into mode and cross blocks."""
    sigma = np.asarray(sigma, dtype=float)
    return BlockForm(
        a=sigma[0:2, 0:2].copy(),
        b=sigma[2:4, 2:4].copy(),
        c=sigma[0:2, 2:4].copy(),
    )


def swap_modes(sigma) -> np.ndarray:
    """Exchange the two modes, (q_x, p_x) <-> (q_y, p_y)."""
    sigma = np.asarray(sigma, dtype=float)
    perm = [2, 3, 0, 1]
    return sigma[perm][:, perm].copy()


def _det2(block):
    return block[..., 0, 0] * block[..., 1, 1] - block[..., 0, 1] * block[..., 1, 0]


def _invariants(sigma):
    """det A, det B, det C and det sigma, broadcast over stacked matrices."""
    sigma = np.asarray(sigma, dtype=float)
    det_a = _det2(sigma[..., 0:2, 0:2])
    det_b = _det2(sigma[..., 2:4, 2:4])
    det_c = _det2(sigma[..., 0:2, 2:4])
    det_sigma = np.linalg.det(sigma)
    return det_a, det_b, det_c, det_sigma


def _noise_scale(det_a, det_b, det_c, det_sigma):
    """Magnitude of the terms cancelled when forming the discriminants."""
    mags = np.abs(det_a) + np.abs(det_b) + 2.0 * np.abs(det_c)
    return np.maximum(mags * mags + 4.0 * np.abs(det_sigma), 1.0)


def _clamp_tiny_negative(x, scale, what: str):
    x = np.asarray(x, dtype=float)
    if np.any(x < -DISCRIMINANT_TOL * scale):
        raise ValueError(
            f"{what} is negative beyond rounding tolerance "
            f"(min {float(np.min(x)):.3e}); the matrix is not a valid covariance matrix"
        )
    return np.maximum(x, 0.0)


def symplectic_eigenvalues(sigma) -> SymplecticSpectrum:
    """Symplectic eigenvalues (nu_minus, nu_plus) of a two-mode state.

    Uses nu^2 = (Delta +/- sqrt(Delta^2 - 4 det sigma)) / 2 with
    Delta = det A + det B + 2 det C.  The minus branch is evaluated in
    conjugate form, 2 det sigma / (Delta + sqrt(...)), which stays accurate
    when the two eigenvalues differ by orders of magnitude.
    """
    det_a, det_b, det_c, det_sigma = _invariants(sigma)
    scale = _noise_scale(det_a, det_b, det_c, det_sigma)
    delta = det_a + det_b + 2.0 * det_c
    disc = _clamp_tiny_negative(
        delta * delta - 4.0 * det_sigma, scale, "symplectic discriminant"
    )
    root = np.sqrt(disc)
    denom = delta + root
    if denom <= 0.0:
        raise ValueError("matrix has no positive symplectic spectrum")
    det_sigma = _clamp_tiny_negative(det_sigma, scale, "determinant")
    nu_minus = float(np.sqrt(2.0 * det_sigma / denom))
    nu_plus = float(np.sqrt(0.5 * denom))
    return SymplecticSpectrum(nu_minus=nu_minus, nu_plus=nu_plus)


def pt_min_symplectic(sigma):
    """Smaller symplectic eigenvalue of the partially transposed state.

    Partial transposition flips the momentum of one mode, which turns
    det C into -det C in the symplectic invariants; hence
    nu_pt^2 = Delta_pt/2 - sqrt(Delta_pt^2/4 - det sigma) with
    Delta_pt = det A + det B - 2 det C.  Evaluated in conjugate form for
    accuracy.  The state is PPT-separable iff the result is >= 1/2.

    Accepts a stack (..., 4, 4) and returns an array of matching shape.
    """
    det_a, det_b, det_c, det_sigma = _invariants(sigma)
    scale = _noise_scale(det_a, det_b, det_c, det_sigma)
    delta_pt = det_a + det_b - 2.0 * det_c
    disc = _clamp_tiny_negative(
        0.25 * delta_pt * delta_pt - det_sigma, scale, "partial-transpose discriminant"
    )
    denom = 0.5 * delta_pt + np.sqrt(disc)
    if np.any(denom <= 0.0):
        raise ValueError("partial transpose has no positive symplectic spectrum")
    nu_sq = _clamp_tiny_negative(
        det_sigma / denom, np.maximum(scale / denom, 1.0), "partial-transpose eigenvalue"
    )
    out = np.sqrt(nu_sq)
    return float(out) if out.ndim == 0 else out


def is_physical(sigma, tol: float = PHYSICALITY_TOL) -> bool:
    """True iff nu_minus >= 1/2 - tol (Heisenberg constraint).

    Total on symmetric input: matrices whose symplectic spectrum is not
    real and positive are reported as non-physical rather than raising.

    Evaluated in linear invariant form, nu_minus >= 1/2 being equivalent
    (for a candidate with positive variances and a real spectrum) to

        Delta >= 1/2   and   Delta - 4 det sigma <= 1/4,

    which avoids the square-root noise amplification that makes the
    eigenvalues themselves unreliable near degenerate spectra; boundary
    states (pure, or exactly at nu_minus = 1/2) are classified correctly
    up to rounding of the invariants, tracked by a scale-aware slack.
    """
    sigma = np.asarray(sigma, dtype=float)
    if np.any(np.diagonal(sigma) <= 0.0):
        return False
    det_a, det_b, det_c, det_sigma = _invariants(sigma)
    scale = float(_noise_scale(det_a, det_b, det_c, det_sigma))
    slack = DISCRIMINANT_TOL * scale
    delta = det_a + det_b + 2.0 * det_c
    if det_sigma < -slack:
        return False
    if delta * delta - 4.0 * det_sigma < -slack:
        return False
    if delta < 0.5 - 2.0 * tol - slack:
        return False
    # nu_minus = 1/2 - d maps to Delta - 4 det sigma - 1/4 ~ d (4 nu_plus^2 - 1)
    # and nu_plus^2 <= Delta, so tol * 4 Delta bounds the allowed excess
    return bool(delta - 4.0 * det_sigma - 0.25 <= tol * 4.0 * max(delta, 1.0) + slack)

"""Dissipative covariance dynamics of two independent modes in a thermal bath.

The second moments evolve as

    sigma(t) = M(t) (sigma(0) - sigma_inf) M(t)^T + sigma_inf,
    M(t) = exp(Y t),

where the drift matrix Y is block-diagonal over the two modes (the modes do
not interact) and sigma_inf is the Gibbs covariance fixed by the bath
temperature.  The diffusion matrix is the unique one that makes sigma_inf
stationary, D = -(Y sigma_inf + sigma_inf Y^T).

M(t) is computed in closed form per 2x2 block; a fixed-step Runge-Kutta
integrator of the equivalent ODE d sigma/dt = Y sigma + sigma Y^T + D is
provided as an independent numerical oracle.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .covariance import as_covariance, is_physical

__all__ = [
    "BathParams",
    "DriftConvention",
    "diffusion_matrix",
    "drift_matrix",
    "gibbs_covariance",
    "implied_temperature",
    "integrate_oracle",
    "propagate",
    "propagator",
    "thermal_coth",
    "trajectory",
]


class DriftConvention(enum.Enum):
    """Choice of the restoring coefficient in each single-mode drift block.

    OMEGA_SQUARED uses -m omega^2 (the force of a harmonic oscillator of
    frequency omega); OMEGA_LINEAR uses -m omega, which is retained purely
    for numerical comparison of the two variants.  They coincide at
    m = omega = 1.
    """

    OMEGA_SQUARED = "omega2"
    OMEGA_LINEAR = "literal"


def thermal_coth(omega: float, temperature: float) -> float:
    """Thermal parameter coth(omega / (2 T)) with hbar = k = 1; 1.0 at T = 0."""
    if omega <= 0:
        raise ValueError("frequency must be positive")
    if temperature < 0:
        raise ValueError("temperature must be non-negative")
    if temperature == 0:
        return 1.0
    return 1.0 / math.tanh(omega / (2.0 * temperature))


def implied_temperature(omega: float, c_th: float) -> float:
    """Bath temperature that produces the thermal parameter c_th at frequency omega."""
    if c_th < 1:
        raise ValueError("thermal parameter must be >= 1")
    if c_th == 1.0:
        return 0.0
    return omega / (2.0 * math.atanh(1.0 / c_th))


@dataclass(frozen=True)
class BathParams:
    """Dissipation constant, mass, mode frequencies and thermal parameters.

    c_th_i = coth(omega_i / (2 T)) in hbar = k = 1 units; c_th = 1 means a
    zero-temperature bath.  The two thermal parameters may be set
    independently; ``temperature_consistent`` reports whether they can arise
    from a single bath temperature.
    """

    lam: float = 1.0
    m: float = 1.0
    omega1: float = 1.0
    omega2: float = 1.0
    c_th1: float = 2.0
    c_th2: float = 2.0

    def __post_init__(self):
        for name in ("lam", "m", "omega1", "omega2"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.c_th1 < 1 or self.c_th2 < 1:
            raise ValueError("thermal parameters c_th must be >= 1")

    @classmethod
    def symmetric(cls, c_th: float = 2.0, omega: float = 1.0, lam: float = 1.0, m: float = 1.0) -> "BathParams":
        """Equal frequencies and thermal parameters for both modes."""
        return cls(lam=lam, m=m, omega1=omega, omega2=omega, c_th1=c_th, c_th2=c_th)

    @classmethod
    def from_temperature(
        cls,
        temperature: float,
        omega1: float = 1.0,
        omega2: float = 1.0,
        lam: float = 1.0,
        m: float = 1.0,
    ) -> "BathParams":
        """Derive per-mode thermal parameters from one bath temperature."""
        return cls(
            lam=lam,
            m=m,
            omega1=omega1,
            omega2=omega2,
            c_th1=thermal_coth(omega1, temperature),
            c_th2=thermal_coth(omega2, temperature),
        )

    def implied_temperatures(self) -> tuple[float, float]:
        return (
            implied_temperature(self.omega1, self.c_th1),
            implied_temperature(self.omega2, self.c_th2),
        )

    @property
    def temperature_consistent(self) -> bool:
        """Whether (c_th1, c_th2) correspond to a common bath temperature."""
        t1, t2 = self.implied_temperatures()
        return math.isclose(t1, t2, rel_tol=1e-9, abs_tol=1e-12)

    @property
    def zero_temperature(self) -> bool:
        return self.c_th1 == 1.0 and self.c_th2 == 1.0


def _restoring_coefficients(p: BathParams, conv: DriftConvention) -> tuple[float, float]:
    """Lower-left entries g_i of the two drift blocks [[-lam, 1/m], [g_i, -lam]]."""
    if conv is DriftConvention.OMEGA_SQUARED:
        return (-p.m * p.omega1**2, -p.m * p.omega2**2)
    return (-p.m * p.omega1, -p.m * p.omega2)


def drift_matrix(p: BathParams, conv: DriftConvention = DriftConvention.OMEGA_SQUARED) -> np.ndarray:
    """Block-diagonal drift matrix Y of the covariance ODE."""
    g1, g2 = _restoring_coefficients(p, conv)
    inv_m = 1.0 / p.m
    y = np.zeros((4, 4))
    y[0, 0] = y[1, 1] = y[2, 2] = y[3, 3] = -p.lam
    y[0, 1] = y[2, 3] = inv_m
    y[1, 0] = g1
    y[3, 2] = g2
    return y


def gibbs_covariance(p: BathParams) -> np.ndarray:
    """Asymptotic (Gibbs) covariance: diag(c_i/(2 m w_i), m w_i c_i/2) per mode."""
    return np.diag(
        [
            p.c_th1 / (2.0 * p.m * p.omega1),
            p.m * p.omega1 * p.c_th1 / 2.0,
            p.c_th2 / (2.0 * p.m * p.omega2),
            p.m * p.omega2 * p.c_th2 / 2.0,
        ]
    )


def _block_propagators(p: BathParams, conv: DriftConvention, times: np.ndarray) -> np.ndarray:
    """Closed-form exp(Y t) over a vector of times; shape (len(times), 4, 4).

    Each block is exp(-lam t) [cos(w t) I + sin(w t)/w K] with
    K = [[0, 1/m], [g, 0]] and w = sqrt(-g/m), since K^2 = -w^2 I.
    """
    times = np.asarray(times, dtype=float)
    out = np.zeros(times.shape + (4, 4))
    decay = np.exp(-p.lam * times)
    for offset, g in zip((0, 2), _restoring_coefficients(p, conv)):
        w = math.sqrt(-g / p.m)
        cos_wt = np.cos(w * times)
        sin_wt = np.sin(w * times)
        out[..., offset, offset] = decay * cos_wt
        out[..., offset + 1, offset + 1] = decay * cos_wt
        out[..., offset, offset + 1] = decay * sin_wt / (p.m * w)
        out[..., offset + 1, offset] = decay * sin_wt * g / w
    return out


def propagator(p: BathParams, t: float, conv: DriftConvention = DriftConvention.OMEGA_SQUARED) -> np.ndarray:
    """Closed-form M(t) = exp(Y t) for t >= 0."""
    if t < 0:
        raise ValueError("time must be non-negative")
    return _block_propagators(p, conv, np.float64(t))


def _evolve(sigma0: np.ndarray, sigma_inf: np.ndarray, ms: np.ndarray) -> np.ndarray:
    """M (sigma0 - sigma_inf) M^T + sigma_inf over stacked propagators."""
    dev = sigma0 - sigma_inf
    out = np.einsum("...ij,jk,...lk->...il", ms, dev, ms) + sigma_inf
    return 0.5 * (out + np.swapaxes(out, -1, -2))


def propagate(
    sigma0,
    p: BathParams,
    t: float,
    conv: DriftConvention = DriftConvention.OMEGA_SQUARED,
) -> np.ndarray:
    """Covariance matrix at time t evolved from a physical sigma0."""
    sigma0 = as_covariance(sigma0)
    if not is_physical(sigma0):
        raise ValueError("initial covariance matrix is not physical")
    if t < 0:
        raise ValueError("time must be non-negative")
    return _evolve(sigma0, gibbs_covariance(p), propagator(p, t, conv))


def trajectory(
    sigma0,
    p: BathParams,
    times,
    conv: DriftConvention = DriftConvention.OMEGA_SQUARED,
) -> np.ndarray:
    """sigma(t) stacked over a grid of times; shape (len(times), 4, 4).

    Identical model to ``propagate`` but validates the initial state once,
    which makes dense scans (root finding, sweeps) cheap.
    """
    sigma0 = as_covariance(sigma0)
    if not is_physical(sigma0):
        raise ValueError("initial covariance matrix is not physical")
    times = np.asarray(times, dtype=float)
    if times.ndim != 1:
        raise ValueError("times must be one-dimensional")
    if times.size and float(np.min(times)) < 0:
        raise ValueError("times must be non-negative")
    return _evolve(sigma0, gibbs_covariance(p), _block_propagators(p, conv, times))


def diffusion_matrix(p: BathParams, conv: DriftConvention = DriftConvention.OMEGA_SQUARED) -> np.ndarray:
    """Diffusion matrix fixed by stationarity: D = -(Y sigma_inf + sigma_inf Y^T)."""
    y = drift_matrix(p, conv)
    si = gibbs_covariance(p)
    d = -(y @ si + si @ y.T)
    return 0.5 * (d + d.T)


def integrate_oracle(
    sigma0,
    p: BathParams,
    t: float,
    dt: float,
    conv: DriftConvention = DriftConvention.OMEGA_SQUARED,
) -> np.ndarray:
    """Fixed-step classical RK4 integration of d sigma/dt = Y sigma + sigma Y^T + D.

    Independent of the closed-form propagator; agreement is O(dt^4).  Takes
    floor(t/dt) full steps plus one shortened final step for any remainder,
    so the result is deterministic for a given (t, dt).
    """
    sigma = as_covariance(sigma0)
    if dt <= 0:
        raise ValueError("step size dt must be positive")
    if t < 0:
        raise ValueError("time must be non-negative")
    if t == 0:
        return sigma

    y = drift_matrix(p, conv)
    yt = y.T
    d = diffusion_matrix(p, conv)

    def rhs(s):
        return y @ s + s @ yt + d

    def step(s, h):
        k1 = rhs(s)
        k2 = rhs(s + (0.5 * h) * k1)
        k3 = rhs(s + (0.5 * h) * k2)
        k4 = rhs(s + h * k3)
        return s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    n_full = int(math.floor(t / dt + 1e-12))
    for _ in range(n_full):
        sigma = step(sigma, dt)
    remainder = t - n_full * dt
    if remainder > 1e-12 * max(t, dt):
        sigma = step(sigma, remainder)
    return 0.5 * (sigma + sigma.T)

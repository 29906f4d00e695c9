"""Built-in numerical cross-checks wired to the ``check`` CLI subcommand.

Every check pits two independent computation routes against each other:
the closed-form propagator against fixed-step RK4 integration, the
closed-form survival times against bisection on the propagated trajectory,
and the frequency-dependent survival form against the symmetric one where
they must coincide.
"""

from __future__ import annotations

import numpy as np

from .dynamics import (
    BathParams,
    DriftConvention,
    diffusion_matrix,
    drift_matrix,
    gibbs_covariance,
    integrate_oracle,
    propagate,
)
from .states import SqueezedThermalSpec, squeezed_thermal
from .survival import SurvivalKind, survival_time_frequency, survival_time_numeric, survival_time_symmetric

__all__ = ["CheckFailure", "run_checks"]


class CheckFailure(Exception):
    pass


def _check_propagator_vs_rk4(results):
    cases = [
        (BathParams.symmetric(c_th=2.0), DriftConvention.OMEGA_SQUARED, 0.0, 0.0, 1.0),
        (BathParams.symmetric(c_th=1.5, omega=0.8, lam=0.9), DriftConvention.OMEGA_SQUARED, 1.0, 0.5, 1.2),
        (BathParams.symmetric(c_th=2.0, omega=1.3), DriftConvention.OMEGA_LINEAR, 0.5, 0.0, 0.8),
    ]
    for p, conv, n, extra_n, r in cases:
        sigma0 = squeezed_thermal(SqueezedThermalSpec(n, n + extra_n, r))
        for t in (0.5, 1.0, 2.0):
            closed = propagate(sigma0, p, t, conv)
            rk4 = integrate_oracle(sigma0, p, t, dt=1e-3, conv=conv)
            err = float(np.max(np.abs(closed - rk4)))
            results.append(
                (
                    f"propagator vs RK4  conv={conv.value} c_th={p.c_th1} omega={p.omega1} t={t}",
                    err < 1e-8,
                    f"max|diff|={err:.3e} (tol 1e-8)",
                )
            )


def _check_gibbs_fixed_point(results):
    for conv in DriftConvention:
        p = BathParams.symmetric(c_th=3.0, omega=1.2, lam=0.7)
        si = gibbs_covariance(p)
        drift_err = float(np.max(np.abs(propagate(si, p, 5.0, conv) - si)))
        y = drift_matrix(p, conv)
        d = diffusion_matrix(p, conv)
        identity_err = float(np.max(np.abs(y @ si + si @ y.T + d)))
        results.append(
            (
                f"Gibbs state stationary  conv={conv.value}",
                drift_err < 1e-12 and identity_err < 1e-12,
                f"propagate drift={drift_err:.3e}, Y si + si Y^T + D ={identity_err:.3e} (tol 1e-12)",
            )
        )


def _check_survival_closed_vs_bisection(results):
    for n, r, c_th in [(0.0, 1.0, 2.0), (1.0, 1.0, 2.0), (0.5, 1.5, 4.0)]:
        closed = survival_time_symmetric(n, r, c_th)
        numeric = survival_time_numeric(
            squeezed_thermal(SqueezedThermalSpec(n, n, r)), BathParams.symmetric(c_th=c_th)
        )
        ok = (
            closed.kind is SurvivalKind.FINITE_DEATH
            and numeric.kind is SurvivalKind.FINITE_DEATH
            and abs(closed.t_s - numeric.t_s) < 1e-8
        )
        detail = (
            f"closed={closed.t_s!r} numeric={numeric.t_s!r} (tol 1e-8)"
            if ok or closed.t_s is not None
            else f"kinds {closed.kind.value}/{numeric.kind.value}"
        )
        results.append((f"survival closed form vs bisection  n={n} r={r} c_th={c_th}", ok, detail))


def _check_frequency_form_reduction(results):
    for r in (0.7, 1.0, 2.0):
        a = survival_time_frequency(r, 1.0)
        b = survival_time_symmetric(1.0, r, 2.0)
        err = abs(a.t_s - b.t_s)
        results.append(
            (
                f"frequency form reduces at omega=1  r={r}",
                err < 1e-12,
                f"|diff|={err:.3e} (tol 1e-12)",
            )
        )


def run_checks(verbose: bool = True) -> bool:
    """Run all cross-checks; print one [PASS]/[FAIL] line each; True iff all pass."""
    results: list[tuple[str, bool, str]] = []
    _check_propagator_vs_rk4(results)
    _check_gibbs_fixed_point(results)
    _check_survival_closed_vs_bisection(results)
    _check_frequency_form_reduction(results)

    all_ok = True
    for name, ok, detail in results:
        all_ok &= ok
        if verbose:
            tag = "PASS" if ok else "FAIL"
            print(f"[{tag}] {name}  {detail}")
    if verbose:
        n_ok = sum(1 for _, ok, _ in results if ok)
        print(f"{n_ok}/{len(results)} checks passed")
    return all_ok

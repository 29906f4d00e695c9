"""Two bosonic modes in a thermal bath: covariance dynamics, Gaussian
entanglement, and survival times of entanglement."""

__version__ = "0.1.0"

from .covariance import (
    OMEGA,
    BlockForm,
    SymplecticSpectrum,
    as_covariance,
    block_decompose,
    is_physical,
    pt_min_symplectic,
    swap_modes,
    symplectic_eigenvalues,
    vacuum,
)
from .dynamics import (
    BathParams,
    DriftConvention,
    diffusion_matrix,
    drift_matrix,
    gibbs_covariance,
    integrate_oracle,
    propagate,
    propagator,
    thermal_coth,
    trajectory,
)
from .entanglement import (
    NegativityTrace,
    is_separable,
    log_negativity,
    log_negativity_squared_argument,
    negativity_trace,
    symmetric_pt_min,
    symmetric_separability_gap,
)
from .states import (
    SqueezedThermalSpec,
    entanglement_threshold,
    squeezed_thermal,
    thermal,
)
from .survival import (
    SurvivalKind,
    SurvivalResult,
    survival_time_frequency,
    survival_time_numeric,
    survival_time_symmetric,
)
from .sweep import (
    SweepAxis,
    SweepConfig,
    SweepGrid,
    read_csv,
    run_sweep,
    write_csv,
)

__all__ = [
    "OMEGA",
    "BathParams",
    "BlockForm",
    "DriftConvention",
    "NegativityTrace",
    "SqueezedThermalSpec",
    "SurvivalKind",
    "SurvivalResult",
    "SweepAxis",
    "SweepConfig",
    "SweepGrid",
    "SymplecticSpectrum",
    "as_covariance",
    "block_decompose",
    "diffusion_matrix",
    "drift_matrix",
    "entanglement_threshold",
    "gibbs_covariance",
    "integrate_oracle",
    "is_physical",
    "is_separable",
    "log_negativity",
    "log_negativity_squared_argument",
    "negativity_trace",
    "propagate",
    "propagator",
    "pt_min_symplectic",
    "read_csv",
    "run_sweep",
    "squeezed_thermal",
    "swap_modes",
    "symmetric_pt_min",
    "symmetric_separability_gap",
    "symplectic_eigenvalues",
    "survival_time_frequency",
    "survival_time_numeric",
    "survival_time_symmetric",
    "thermal",
    "thermal_coth",
    "trajectory",
    "vacuum",
    "write_csv",
]

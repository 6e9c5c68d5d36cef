"""Entanglement production of operators on multipartite spaces.

Core quantity: the production measure eps(A) = log(||A|| / ||A_x||), the
log-ratio of an operator's Hilbert-Schmidt norm to that of its non-entangling
counterpart built from single-factor partial traces.  Specialized machinery
covers evolution operators of two-spin-1/2 Hamiltonians, including exact
closed forms for the longitudinal (Ising-type) model that double as an
oracle for the generic numerical pipeline.
"""

from .ising import (
    MAX_DENOMINATOR,
    RATIONAL_TOL,
    SINGULAR_DEN_TOL,
    Periodicity,
    PeriodicityClassification,
    SingularityFamily,
    SingularitySpec,
    classify_periodicity,
    epsilon_ising,
    epsilon_zero_field,
    ising_evolution_closed,
    ising_partial_norm_sq,
    ising_trace_sq,
    singularity_times,
)
from .linalg import (
    HERMITIAN_ATOL,
    EigenDecomposition,
    NonHermitianInputError,
    dagger,
    evolution_operator,
    hermitian_eig,
    hs_norm,
    is_hermitian,
    kron,
    matmul,
    trace,
)
from .measure import (
    ZERO_TRACE_RTOL,
    MeasureResult,
    ZeroTraceError,
    entanglement_probability,
    evolution_measure_series,
    nonentangling_counterpart,
    production_measure,
    production_measure_from_counterpart,
)
from .short_time import ShortTimeData, epsilon_quadratic, short_time_data
from .spin import (
    TWO_SPINS,
    SpinModelParams,
    heisenberg_hamiltonian,
    ising_hamiltonian,
    multimode_operator,
    spin_half_ops,
)
from .tensor import (
    MultipartiteOperator,
    StateVector,
    TensorSpace,
    embed_local,
    partial_trace,
    product_state,
)

__version__ = "0.1.0"

__all__ = [
    "EigenDecomposition",
    "HERMITIAN_ATOL",
    "MAX_DENOMINATOR",
    "MeasureResult",
    "MultipartiteOperator",
    "NonHermitianInputError",
    "Periodicity",
    "PeriodicityClassification",
    "RATIONAL_TOL",
    "SINGULAR_DEN_TOL",
    "ShortTimeData",
    "SingularityFamily",
    "SingularitySpec",
    "SpinModelParams",
    "StateVector",
    "TWO_SPINS",
    "TensorSpace",
    "ZERO_TRACE_RTOL",
    "ZeroTraceError",
    "classify_periodicity",
    "dagger",
    "embed_local",
    "entanglement_probability",
    "epsilon_ising",
    "epsilon_quadratic",
    "epsilon_zero_field",
    "evolution_measure_series",
    "evolution_operator",
    "heisenberg_hamiltonian",
    "hermitian_eig",
    "hs_norm",
    "is_hermitian",
    "ising_evolution_closed",
    "ising_hamiltonian",
    "ising_partial_norm_sq",
    "ising_trace_sq",
    "kron",
    "matmul",
    "multimode_operator",
    "nonentangling_counterpart",
    "partial_trace",
    "product_state",
    "production_measure",
    "production_measure_from_counterpart",
    "short_time_data",
    "singularity_times",
    "spin_half_ops",
    "trace",
]

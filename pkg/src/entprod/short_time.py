"""Leading small-t behavior of the evolution measure for bipartite Hamiltonians.

Expanding the partial traces of exp(-i H t) to second order gives the
counterpart-norm decay ||U_x(t)||^2 = M1 M2 - mu t^2 with

    D1  = M2 * Tr_2 H^2 - (Tr_2 H)^2        (operator on factor 1)
    D2  = M1 * Tr_1 H^2 - (Tr_1 H)^2        (operator on factor 2)
    D12 = M1 M2 * Tr H^2 - (Tr H)^2         (scalar)
    mu  = (M1 Tr D1 + M2 Tr D2 - D12) / (M1 M2),

from which eps(t) = mu t^2 / (2 M1 M2 ln b) + O(t^4) in log base b.  Note the
1/(M1 M2): the naive normalization eps = mu t^2 / 2 overstates the measure by
exactly that factor, as expanding 0.5*log(M1 M2 / ||U_x||^2) shows; the
coefficient stored here is the one the exact measure actually converges to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import NonHermitianInputError, is_hermitian
from .tensor import MultipartiteOperator, partial_trace


@dataclass(frozen=True)
class ShortTimeData:
    """Second-order expansion data; ``coeff`` multiplies t^2 in the measure."""

    delta1: MultipartiteOperator
    delta2: MultipartiteOperator
    delta12: float
    mu: float
    coeff: float
    log_base: float


def short_time_data(
    hamiltonian: MultipartiteOperator, log_base: float = 2.0
) -> ShortTimeData:
    """Expansion data of the measure of exp(-i H t) around t = 0."""
    if hamiltonian.space.nfactors != 2:
        raise ValueError(
            f"short-time expansion is bipartite only, got {hamiltonian.space.nfactors} factors"
        )
    if log_base <= 1.0:
        raise ValueError(f"log base must exceed 1, got {log_base}")
    hmat = hamiltonian.matrix
    if not is_hermitian(hmat):
        raise NonHermitianInputError("Hamiltonian must be Hermitian")
    m1, m2 = hamiltonian.space.dims
    hsq = MultipartiteOperator(hamiltonian.space, hmat @ hmat)

    tr2_h = partial_trace(hamiltonian, 0)   # traces over factor 2, lives on factor 1
    tr2_hsq = partial_trace(hsq, 0)
    tr1_h = partial_trace(hamiltonian, 1)
    tr1_hsq = partial_trace(hsq, 1)

    d1 = m2 * tr2_hsq.matrix - tr2_h.matrix @ tr2_h.matrix
    d2 = m1 * tr1_hsq.matrix - tr1_h.matrix @ tr1_h.matrix
    d12 = (m1 * m2 * np.trace(hsq.matrix) - np.trace(hmat) ** 2).real

    mu = float((m1 * np.trace(d1) + m2 * np.trace(d2)).real - d12) / (m1 * m2)
    coeff = mu / (2.0 * m1 * m2 * math.log(log_base))
    return ShortTimeData(
        delta1=MultipartiteOperator(tr2_h.space, d1),
        delta2=MultipartiteOperator(tr1_h.space, d2),
        delta12=float(d12),
        mu=mu,
        coeff=coeff,
        log_base=log_base,
    )


def epsilon_quadratic(data: ShortTimeData, t: float) -> float:
    """Quadratic approximation coeff * t^2, valid for t << 1/sqrt(mu)."""
    return data.coeff * t * t

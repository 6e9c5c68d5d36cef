"""Entanglement production measure of operators on factorized spaces.

For an operator A with nonzero trace on a space with factors (M_1, ..., M_N),
its non-entangling counterpart is

    A_x = (A_1 (x) ... (x) A_N) / (Tr A)^(N-1),

where A_i is the partial trace of A onto factor i; A_x has the same trace as
A and is the product operator the measure compares against.  The production
measure is the log-ratio of Hilbert-Schmidt norms

    eps(A) = log( ||A|| / ||A_x|| )
           = log( ||A|| * |Tr A|^(N-1) / prod_i ||A_i|| ),

zero exactly when A is itself non-entangling (e.g. any product operator with
nonzero factor traces), and undefined when Tr A vanishes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .linalg import hermitian_eig, hs_norm, kron
from .tensor import MultipartiteOperator, StateVector, _partial_trace_stack, partial_trace

# |Tr A| below this fraction of ||A|| means the counterpart (and the measure)
# is undefined for A.
ZERO_TRACE_RTOL = 1e-12

# Allowed disagreement between the direct log-ratio and the one recomputed
# from a materialized counterpart, used by the cross-check path.
CROSS_CHECK_TOL = 1e-10


class ZeroTraceError(ValueError):
    """The operator's trace is (numerically) zero, so the measure is undefined."""


@dataclass(frozen=True)
class MeasureResult:
    """Production measure of one operator, with the norms behind it.

    ``epsilon`` equals log(norm_full / norm_counterpart) in base ``log_base``;
    ``norm_counterpart`` is the Hilbert-Schmidt norm of the non-entangling
    counterpart (never materialized on this path).
    """

    epsilon: float
    log_base: float
    norm_full: float
    norm_counterpart: float
    trace_full: complex


def _checked_trace(op: MultipartiteOperator) -> tuple[complex, float]:
    tr = complex(np.trace(op.matrix))
    norm = hs_norm(op.matrix)
    if abs(tr) <= ZERO_TRACE_RTOL * norm:
        raise ZeroTraceError(
            f"|Tr A| = {abs(tr):.3e} <= {ZERO_TRACE_RTOL:.0e} * ||A|| = "
            f"{ZERO_TRACE_RTOL * norm:.3e}; measure undefined"
        )
    return tr, norm


def nonentangling_counterpart(op: MultipartiteOperator) -> MultipartiteOperator:
    """Materialize (A_1 (x) ... (x) A_N) / (Tr A)^(N-1); same trace as A."""
    tr, _ = _checked_trace(op)
    n = op.space.nfactors
    factors = [partial_trace(op, i).matrix for i in range(n)]
    joint = reduce(kron, factors) / tr ** (n - 1)
    return MultipartiteOperator(op.space, joint)


def production_measure(
    op: MultipartiteOperator,
    log_base: float = 2.0,
    cross_check: bool = False,
) -> MeasureResult:
    """Production measure of ``op``, computed from norms and the trace directly.

    The log-ratio is evaluated without building the counterpart; with
    ``cross_check`` the counterpart is also materialized and the two routes
    are required to agree within ``CROSS_CHECK_TOL``.
    """
    if log_base <= 1.0:
        raise ValueError(f"log base must exceed 1, got {log_base}")
    tr, norm_full = _checked_trace(op)
    n = op.space.nfactors
    log_counterpart = -(n - 1) * math.log(abs(tr))
    for i in range(n):
        log_counterpart += math.log(hs_norm(partial_trace(op, i).matrix))
    epsilon = (math.log(norm_full) - log_counterpart) / math.log(log_base)
    result = MeasureResult(
        epsilon=epsilon,
        log_base=log_base,
        norm_full=norm_full,
        norm_counterpart=math.exp(log_counterpart),
        trace_full=tr,
    )
    if cross_check:
        other = production_measure_from_counterpart(op, log_base)
        if abs(other.epsilon - epsilon) > CROSS_CHECK_TOL:
            raise RuntimeError(
                f"direct measure {epsilon!r} and counterpart-based measure "
                f"{other.epsilon!r} disagree beyond {CROSS_CHECK_TOL:.0e}"
            )
    return result


def production_measure_from_counterpart(
    op: MultipartiteOperator, log_base: float = 2.0
) -> MeasureResult:
    """Same measure, via the materialized counterpart's norm (debug route)."""
    if log_base <= 1.0:
        raise ValueError(f"log base must exceed 1, got {log_base}")
    tr, norm_full = _checked_trace(op)
    norm_counterpart = hs_norm(nonentangling_counterpart(op).matrix)
    epsilon = math.log(norm_full / norm_counterpart) / math.log(log_base)
    return MeasureResult(
        epsilon=epsilon,
        log_base=log_base,
        norm_full=norm_full,
        norm_counterpart=norm_counterpart,
        trace_full=tr,
    )


def evolution_measure_series(
    hamiltonian: MultipartiteOperator,
    times,
    log_base: float = 2.0,
) -> list[tuple[float, float]]:
    """Production measure of exp(-i H t) on a time grid.

    Returns (t, eps) pairs in grid order; each value equals what
    :func:`production_measure` would give for the propagator at that time.
    Grid points where the trace of the evolution operator vanishes (so the
    counterpart is undefined) are reported as ``math.inf`` rather than raised:
    for the models studied here those divergences carry meaning.

    The whole grid shares one eigendecomposition and the propagators and
    partial traces are evaluated batched, so dense grids are cheap.
    """
    if log_base <= 1.0:
        raise ValueError(f"log base must exceed 1, got {log_base}")
    eig = hermitian_eig(hamiltonian.matrix)
    space = hamiltonian.space
    ts = np.asarray([float(t) for t in times], dtype=float)
    if ts.size == 0:
        return []
    v = eig.eigenvectors
    phases = np.exp(-1j * ts[:, None] * eig.eigenvalues[None, :])
    props = np.einsum("ij,tj,kj->tik", v, phases, v.conj(), optimize=True)

    norm_full = np.linalg.norm(props.reshape(ts.size, -1), axis=1)
    traces = np.einsum("tii->t", props)
    undefined = np.abs(traces) <= ZERO_TRACE_RTOL * norm_full

    n = space.nfactors
    with np.errstate(divide="ignore", invalid="ignore"):
        log_counterpart = -(n - 1) * np.log(np.abs(traces))
        for i in range(n):
            reduced = _partial_trace_stack(props, space.dims, i)
            log_counterpart += np.log(np.linalg.norm(reduced.reshape(ts.size, -1), axis=1))
        eps = (np.log(norm_full) - log_counterpart) / math.log(log_base)
    eps[undefined] = math.inf
    return list(zip(ts.tolist(), eps.tolist()))


def entanglement_probability(
    hamiltonian: MultipartiteOperator, psi0: StateVector, t: float
) -> float:
    """Return probability |<psi0| exp(-i H t) |psi0>|^2."""
    if psi0.space.total_dim != hamiltonian.space.total_dim:
        raise ValueError(
            f"state dimension {psi0.space.total_dim} does not match "
            f"operator dimension {hamiltonian.space.total_dim}"
        )
    u = hermitian_eig(hamiltonian.matrix).propagator(float(t))
    amp = np.vdot(psi0.amplitudes, u @ psi0.amplitudes)
    return float(abs(amp) ** 2)

"""Multipartite bookkeeping: factorized spaces, partial traces, local embeddings.

The joint space of subsystems with dimensions (M_1, ..., M_N) is ordered in
Kronecker convention: the first factor carries the outermost (slowest) index,
so a joint basis index decomposes as n = sum_i n_i * stride_i with
stride_i = M_{i+1} * ... * M_N.  All index arithmetic below relies on this.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

from .linalg import as_matrix, kron


@dataclass(frozen=True)
class TensorSpace:
    """Ordered subsystem dimensions (M_1, ..., M_N) of a tensor-product space."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        dims = tuple(int(d) for d in self.dims)
        if len(dims) < 1:
            raise ValueError("a tensor space needs at least one factor")
        if any(d < 1 for d in dims):
            raise ValueError(f"subsystem dimensions must be >= 1, got {dims}")
        object.__setattr__(self, "dims", dims)

    @property
    def nfactors(self) -> int:
        return len(self.dims)

    @property
    def total_dim(self) -> int:
        return math.prod(self.dims)

    def stride(self, i: int) -> int:
        """Flattened-index stride of factor i (product of the dims to its right)."""
        return math.prod(self.dims[i + 1:])


@dataclass(frozen=True)
class MultipartiteOperator:
    """A square matrix together with the factorization of the space it acts on."""

    space: TensorSpace
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = as_matrix(self.matrix)
        d = self.space.total_dim
        if m.shape != (d, d):
            raise ValueError(
                f"matrix shape {m.shape} does not match space dimension {d}"
            )
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class StateVector:
    """A ket on a factorized space, stored as a flat amplitude vector."""

    space: TensorSpace
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if a.shape[0] != self.space.total_dim:
            raise ValueError(
                f"{a.shape[0]} amplitudes for a space of dimension {self.space.total_dim}"
            )
        if not np.isfinite(a).all():
            raise ValueError("amplitudes must be finite")
        object.__setattr__(self, "amplitudes", a)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, atol: float = 1e-12) -> bool:
        return abs(self.norm() - 1.0) <= atol


@lru_cache(maxsize=None)
def _gather_rows(dims: tuple[int, ...], keep: int) -> np.ndarray:
    """Index table for the partial trace keeping factor ``keep``.

    rows[a, k] is the flattened joint index whose kept-factor digit is ``a``
    and whose complement digits are enumerated by ``k``; the reduced entry is
    B[a, b] = sum_k A[rows[a, k], rows[b, k]].
    """
    strides = [math.prod(dims[j + 1:]) for j in range(len(dims))]
    offsets = np.zeros(1, dtype=np.intp)
    for j, (d, s) in enumerate(zip(dims, strides)):
        if j == keep:
            continue
        offsets = (offsets[:, None] + np.arange(d, dtype=np.intp) * s).reshape(-1)
    kept = np.arange(dims[keep], dtype=np.intp) * strides[keep]
    table = kept[:, None] + offsets[None, :]
    table.setflags(write=False)
    return table


def partial_trace(op: MultipartiteOperator, keep: int) -> MultipartiteOperator:
    """Trace out every factor except ``keep``, returning an operator on that factor."""
    dims = op.space.dims
    if not 0 <= keep < len(dims):
        raise IndexError(f"keep index {keep} out of range for {len(dims)} factors")
    rows = _gather_rows(dims, keep)
    reduced = op.matrix[rows[:, None, :], rows[None, :, :]].sum(axis=2)
    return MultipartiteOperator(TensorSpace((dims[keep],)), reduced)


def _partial_trace_stack(stack: np.ndarray, dims: tuple[int, ...], keep: int) -> np.ndarray:
    """Partial trace of a (T, D, D) stack of operators, batched over T."""
    rows = _gather_rows(dims, keep)
    return stack[:, rows[:, None, :], rows[None, :, :]].sum(axis=3)


def embed_local(local, space: TensorSpace, at: int) -> MultipartiteOperator:
    """Extend a single-factor operator to the full space with identities elsewhere."""
    local = as_matrix(local)
    if not 0 <= at < space.nfactors:
        raise IndexError(f"factor index {at} out of range for {space.nfactors} factors")
    d = space.dims[at]
    if local.shape != (d, d):
        raise ValueError(f"local operator shape {local.shape} does not match factor dim {d}")
    factors = [np.eye(m, dtype=np.complex128) for m in space.dims]
    factors[at] = local
    return MultipartiteOperator(space, reduce(kron, factors))


def product_state(factors, strict: bool = True, atol: float = 1e-12) -> StateVector:
    """Kronecker product of single-factor kets, in factor order.

    With ``strict`` each factor must be normalized to ``atol``; the joint
    state then inherits unit norm.
    """
    factors = list(factors)
    if not factors:
        raise ValueError("product_state needs at least one factor")
    dims = []
    joint = np.ones(1, dtype=np.complex128)
    for f in factors:
        a = np.asarray(f, dtype=np.complex128).reshape(-1)
        if strict and abs(np.linalg.norm(a) - 1.0) > atol:
            raise ValueError(f"factor with norm {np.linalg.norm(a)!r} is not normalized")
        dims.append(a.shape[0])
        joint = np.kron(joint, a)
    return StateVector(TensorSpace(tuple(dims)), joint)

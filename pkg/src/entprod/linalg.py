"""Dense complex matrix helpers: products, norms, Hermitian spectra, propagators.

Everything here operates on small dense ``numpy`` matrices (desk scale,
dimensions up to a few thousand at most).  All functions are pure and never
mutate their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Absolute per-entry asymmetry above which a matrix is rejected as non-Hermitian.
HERMITIAN_ATOL = 1e-10


class NonHermitianInputError(ValueError):
    """An operation that needs a Hermitian matrix received a non-Hermitian one."""


def as_matrix(a) -> np.ndarray:
    """Coerce to a 2-D complex128 array, rejecting NaN/Inf entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got array of shape {m.shape}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"matrix must be non-empty, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix entries must be finite")
    return m


def matmul(a, b) -> np.ndarray:
    """Matrix product a @ b with an explicit inner-dimension check."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"incompatible shapes for product: {a.shape} @ {b.shape}")
    return a @ b


def kron(a, b) -> np.ndarray:
    """Kronecker product; the left factor indexes the outer (slower) block."""
    return np.kron(as_matrix(a), as_matrix(b))


def trace(a) -> complex:
    """Trace of a square matrix."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"trace requires a square matrix, got shape {a.shape}")
    return complex(np.trace(a))


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def hs_norm(a) -> float:
    """Hilbert-Schmidt (Frobenius) norm sqrt(Tr(a^dag a)) = sqrt(sum |a_ij|^2)."""
    return float(np.linalg.norm(as_matrix(a)))


def is_hermitian(a, atol: float = HERMITIAN_ATOL) -> bool:
    """True when max |a - a^dag| <= atol entrywise (square matrices only)."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        return False
    return float(np.max(np.abs(a - a.conj().T))) <= atol


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral data of a Hermitian matrix: H = V diag(w) V^dag, w ascending."""

    eigenvalues: np.ndarray   # real, ascending
    eigenvectors: np.ndarray  # unitary, columns are eigenvectors

    def reconstruct(self) -> np.ndarray:
        """V diag(w) V^dag."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    def propagator(self, t: float) -> np.ndarray:
        """Unitary exp(-i H t) built from the stored spectrum."""
        v = self.eigenvectors
        phases = np.exp(-1j * self.eigenvalues * t)
        return (v * phases) @ v.conj().T


def hermitian_eig(h, atol: float = HERMITIAN_ATOL) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises :class:`NonHermitianInputError` when the entrywise asymmetry
    exceeds ``atol``.  The input is symmetrized before diagonalization so the
    returned eigenvector matrix is unitary to machine precision.
    """
    h = as_matrix(h)
    if h.shape[0] != h.shape[1]:
        raise NonHermitianInputError(f"matrix of shape {h.shape} is not square")
    asym = float(np.max(np.abs(h - h.conj().T)))
    if asym > atol:
        raise NonHermitianInputError(f"entrywise asymmetry {asym:.3e} exceeds {atol:.1e}")
    w, v = np.linalg.eigh(0.5 * (h + h.conj().T))
    return EigenDecomposition(eigenvalues=w, eigenvectors=v)


def evolution_operator(h, t: float, atol: float = HERMITIAN_ATOL) -> np.ndarray:
    """Unitary exp(-i H t) for Hermitian H, via eigendecomposition."""
    return hermitian_eig(h, atol=atol).propagator(t)

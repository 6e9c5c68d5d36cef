"""Shared test helpers: deterministic random matrices and independent oracles.

The oracles here deliberately avoid the library's own code paths (brute-force
loops, plainly transcribed closed forms) so that comparisons are two-route.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from entprod import MultipartiteOperator, TensorSpace


def rng(seed: int = 0) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_complex(gen: np.random.Generator, shape) -> np.ndarray:
    return gen.standard_normal(shape) + 1j * gen.standard_normal(shape)


def random_hermitian(gen: np.random.Generator, dim: int) -> np.ndarray:
    a = random_complex(gen, (dim, dim))
    return 0.5 * (a + a.conj().T)


def random_unitary(gen: np.random.Generator, dim: int) -> np.ndarray:
    q, r = np.linalg.qr(random_complex(gen, (dim, dim)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_operator(gen: np.random.Generator, dims: tuple[int, ...]) -> MultipartiteOperator:
    d = math.prod(dims)
    return MultipartiteOperator(TensorSpace(dims), random_complex(gen, (d, d)))


def ptrace_bruteforce_bipartite(mat: np.ndarray, dims: tuple[int, int], keep: int) -> np.ndarray:
    """Partial trace of a bipartite operator by an explicit double loop."""
    m1, m2 = dims
    if keep == 0:
        out = np.zeros((m1, m1), dtype=complex)
        for a in range(m1):
            for b in range(m1):
                for c in range(m2):
                    out[a, b] += mat[a * m2 + c, b * m2 + c]
        return out
    out = np.zeros((m2, m2), dtype=complex)
    for a in range(m2):
        for b in range(m2):
            for c in range(m1):
                out[a, b] += mat[c * m2 + a, c * m2 + b]
    return out


def ising_diagonal(h: float, J: float) -> list[float]:
    """Diagonal of the longitudinal two-spin Hamiltonian, enumerated directly."""
    return [-h * (m1 + m2) + 2.0 * J * m1 * m2 for m1 in (0.5, -0.5) for m2 in (0.5, -0.5)]


def ising_trace_closed(h: float, J: float, t: float) -> complex:
    """Tr U(t) transcribed from the closed form: 2(1+c)cos(Jt/2) + 2i(1-c)sin(Jt/2)."""
    c = math.cos(h * t)
    return 2.0 * (1.0 + c) * math.cos(0.5 * J * t) + 2j * (1.0 - c) * math.sin(0.5 * J * t)


def epsilon_ising_plain(h: float, J: float, t: float, log_base: float = 2.0) -> float:
    """Measure from the printed closed form, without any rearrangement."""
    c = math.cos(h * t)
    g = math.cos(J * t)
    return math.log(math.sqrt(1.0 + c * c + 2.0 * c * g) / (1.0 + c * g)) / math.log(log_base)


def evolution_diag(diag: list[float], t: float) -> np.ndarray:
    """exp(-i H t) for a diagonal Hamiltonian, from scalar phases."""
    return np.diag([cmath.exp(-1j * e * t) for e in diag])

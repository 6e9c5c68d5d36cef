"""Spin-1/2 operators and the two-spin model Hamiltonians.

Basis convention, fixed package-wide: index 0 is spin up (m = +1/2), index 1
is spin down (m = -1/2), and the first spin is the outer Kronecker factor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensor import MultipartiteOperator, TensorSpace

_SX = np.array([[0.0, 0.5], [0.5, 0.0]], dtype=np.complex128)
_SY = np.array([[0.0, -0.5j], [0.5j, 0.0]], dtype=np.complex128)
_SZ = np.array([[0.5, 0.0], [0.0, -0.5]], dtype=np.complex128)
_SP = _SX + 1j * _SY  # |down> -> |up>
_SM = _SX - 1j * _SY
for _m in (_SX, _SY, _SZ, _SP, _SM):
    _m.setflags(write=False)

TWO_SPINS = TensorSpace((2, 2))


def spin_half_ops() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """(Sx, Sy, Sz, S+, S-) for a single spin 1/2; S^a = sigma^a / 2."""
    return _SX, _SY, _SZ, _SP, _SM


@dataclass(frozen=True)
class SpinModelParams:
    """Two-spin couplings: Zeeman field h, longitudinal J, transverse J1.

    All in the same energy units (hbar = 1); any signs are allowed.
    """

    h: float = 0.0
    J: float = 0.0
    J1: float = 0.0

    def __post_init__(self) -> None:
        for name in ("h", "J", "J1"):
            v = float(getattr(self, name))
            if not np.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, v)


def heisenberg_hamiltonian(p: SpinModelParams) -> MultipartiteOperator:
    """Two-spin anisotropic Heisenberg Hamiltonian on the (2, 2) space.

    H = -h (Sz (x) 1 + 1 (x) Sz) + J1 (S+ (x) S- + S- (x) S+) + 2 J Sz (x) Sz,
    with the standard ladder operators S+- = Sx +- i Sy, so the transverse
    part equals 2 J1 (Sx (x) Sx + Sy (x) Sy).  This is the normalization under
    which Tr H^2 = 2 h^2 + J^2 + 2 J1^2 and the short-time measure grows as
    (J^2 + 2 J1^2) t^2 / 8.  Traceless and Hermitian by construction.
    """
    eye = np.eye(2, dtype=np.complex128)
    zeeman = -p.h * (np.kron(_SZ, eye) + np.kron(eye, _SZ))
    interaction = p.J1 * (np.kron(_SP, _SM) + np.kron(_SM, _SP)) + 2.0 * p.J * np.kron(_SZ, _SZ)
    return MultipartiteOperator(TWO_SPINS, zeeman + interaction)


def ising_hamiltonian(h: float, J: float) -> MultipartiteOperator:
    """Longitudinal-only two-spin Hamiltonian, diagonal in the product basis.

    Diagonal entries are -h (m1 + m2) + 2 J m1 m2 over m = +-1/2 in Kronecker
    order; equals the Heisenberg Hamiltonian with J1 = 0.
    """
    ms = (0.5, -0.5)
    diag = [-h * (m1 + m2) + 2.0 * J * m1 * m2 for m1 in ms for m2 in ms]
    return MultipartiteOperator(TWO_SPINS, np.diag(np.asarray(diag, dtype=np.complex128)))


def multimode_operator(modes: int, amplitude: complex = 1.0) -> MultipartiteOperator:
    """The maximally entangling multimode operator C sum_{mn} |mm><nn|.

    Acts on two factors of equal dimension ``modes``; it maps every product
    state onto (a multiple of) the maximally entangled state sum_m |mm>.
    """
    m = int(modes)
    if m < 2:
        raise ValueError(f"need at least 2 modes, got {modes}")
    c = complex(amplitude)
    if c == 0:
        raise ValueError("amplitude must be nonzero")
    diag_pairs = np.arange(m) * m + np.arange(m)
    mat = np.zeros((m * m, m * m), dtype=np.complex128)
    mat[np.ix_(diag_pairs, diag_pairs)] = c
    return MultipartiteOperator(TensorSpace((m, m)), mat)

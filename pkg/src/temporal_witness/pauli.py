"""Dense Pauli algebra on one to three qubits.

Subsystem ordering conventions:

* hybrid probe/mediator space (4x4): ``Q (x) M``, probe first;
* circuit register (8x8): ``M (x) Q (x) A``, matching the circuit wire order.

Matrices are plain ``complex128`` numpy arrays. Module-level constants are
read-only so they can be shared freely.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .tolerances import DEFAULT

MAX_DIM = 8

_PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
for _m in _PAULI.values():
    _m.setflags(write=False)


def _frozen(m: np.ndarray) -> np.ndarray:
    m.setflags(write=False)
    return m


def pauli(axis: str) -> np.ndarray:
    """Return the 2x2 Pauli matrix for ``axis`` in {"I", "X", "Y", "Z"}."""
    try:
        return _PAULI[axis.upper()].copy()
    except KeyError:
        raise ValueError(f"unknown Pauli axis {axis!r}") from None


def tensor(*ops: np.ndarray) -> np.ndarray:
    """Kronecker product, leftmost factor is the first subsystem."""
    if not ops:
        raise ValueError("tensor needs at least one factor")
    dim = int(np.prod([op.shape[0] for op in ops]))
    if dim > MAX_DIM:
        raise ValueError(f"tensor product dimension {dim} exceeds {MAX_DIM}")
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        out = np.kron(out, op)
    return out


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch {a.shape} vs {b.shape}")
    return a @ b - b @ a


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch {a.shape} vs {b.shape}")
    return a @ b + b @ a


def hermiticity_error(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T)))


def unitarity_error(m: np.ndarray) -> float:
    return float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))


def is_hermitian(m: np.ndarray, tol: float = DEFAULT.hermitian) -> bool:
    return hermiticity_error(m) < tol


def is_unitary(m: np.ndarray, tol: float = DEFAULT.unitary) -> bool:
    return unitarity_error(m) < tol


def hermitian_expm(h: np.ndarray, t: float) -> np.ndarray:
    """``exp(-i h t)`` for Hermitian ``h`` via its eigendecomposition."""
    if not is_hermitian(h):
        raise ValueError(
            f"matrix is not Hermitian (max |h - h^dag| = {hermiticity_error(h):.3e})"
        )
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * w * t)) @ v.conj().T


def propagators(h: np.ndarray, times) -> np.ndarray:
    """Stack of ``exp(-i h t)`` for every ``t`` in ``times``, shape (n, d, d).

    One eigendecomposition is shared by all times.
    """
    if not is_hermitian(h):
        raise ValueError(
            f"matrix is not Hermitian (max |h - h^dag| = {hermiticity_error(h):.3e})"
        )
    times = np.atleast_1d(np.asarray(times, dtype=float))
    w, v = np.linalg.eigh(h)
    phases = np.exp(-1j * np.multiply.outer(times, w))
    return np.einsum("ij,nj,kj->nik", v, phases, v.conj())


class Descriptor(NamedTuple):
    """A generator of one subsystem's observable algebra on the hybrid space."""

    subsystem: str  # "Q" or "M"
    axis: str  # "X", "Y" or "Z"

    @property
    def matrix(self) -> np.ndarray:
        return descriptor(self.subsystem, self.axis)


def descriptor(subsystem: str, axis: str) -> np.ndarray:
    """``sigma_axis (x) I`` for the probe, ``I (x) sigma_axis`` for the mediator."""
    subsystem, axis = subsystem.upper(), axis.upper()
    if axis not in ("X", "Y", "Z"):
        raise ValueError(f"descriptor axis must be X, Y or Z, got {axis!r}")
    if subsystem == "Q":
        return tensor(_PAULI[axis], _PAULI["I"])
    if subsystem == "M":
        return tensor(_PAULI["I"], _PAULI[axis])
    raise ValueError(f"subsystem must be 'Q' or 'M', got {subsystem!r}")


I2 = _PAULI["I"]
SX, SY, SZ = _PAULI["X"], _PAULI["Y"], _PAULI["Z"]
I4 = _frozen(np.eye(4, dtype=complex))
QX = _frozen(descriptor("Q", "X"))
QY = _frozen(descriptor("Q", "Y"))
QZ = _frozen(descriptor("Q", "Z"))
MX = _frozen(descriptor("M", "X"))
MY = _frozen(descriptor("M", "Y"))
MZ = _frozen(descriptor("M", "Z"))

# Q<->M exchange on the two-qubit space; reorders Q(x)M operators to M(x)Q.
SWAP = _frozen(
    np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    )
)

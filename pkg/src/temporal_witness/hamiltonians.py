"""Energy-conserving Hamiltonians for the probe/mediator pair.

The conserved global observable is the equal-weight total z component
``Sigma_z = q_z^Q + q_z^M``. A weighted total ``a q_z^Q + b q_z^M`` with
``a != b`` does not commute with the flip-flop terms (``f``, ``g``) of the
quantum-mediator Hamiltonian, so only the equal-weight combination is
conserved by every Hamiltonian built here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np

from .pauli import I4, MX, MY, MZ, QX, QY, QZ, commutator

SIGMA_Z_TOTAL = QZ + MZ
SIGMA_Z_TOTAL.setflags(write=False)

# Pauli strings multiplying f and g.
FLIP_FLOP = QX @ MX + QY @ MY
CHIRAL_FLIP_FLOP = QX @ MY - QY @ MX
ZZ = QZ @ MZ
for _m in (FLIP_FLOP, CHIRAL_FLIP_FLOP, ZZ):
    _m.setflags(write=False)


@dataclass(frozen=True)
class HamiltonianParams:
    """Coefficients of the hybrid Hamiltonian (hbar = 1).

    ``a``, ``b``, ``c`` are the classical couplings, ``f`` and ``g`` the
    mediator flip-flop couplings and ``r`` an identity offset.
    """

    a: float = 0.0
    b: float = 0.0
    c: float = 0.0
    f: float = 0.0
    g: float = 0.0
    r: float = 0.0

    def __post_init__(self):
        for fld in fields(self):
            value = float(getattr(self, fld.name))
            if not math.isfinite(value):
                raise ValueError(f"parameter {fld.name} must be finite, got {value}")
            object.__setattr__(self, fld.name, value)

    @property
    def is_classical(self) -> bool:
        return self.f == 0.0 and self.g == 0.0

    def replace(self, **changes) -> "HamiltonianParams":
        return HamiltonianParams(**{**self.as_dict(), **changes})

    def as_dict(self) -> dict:
        return {fld.name: getattr(self, fld.name) for fld in fields(self)}


def build_hcm(p: HamiltonianParams) -> np.ndarray:
    """Classical-mediator Hamiltonian ``a qz^Q + b qz^M + c qz^Q qz^M + r``."""
    if not p.is_classical:
        raise ValueError(
            f"classical Hamiltonian requires f = g = 0, got f={p.f}, g={p.g}"
        )
    return p.a * QZ + p.b * MZ + p.c * ZZ + p.r * I4


def build_hqm(p: HamiltonianParams) -> np.ndarray:
    """Most general Sigma_z-conserving two-qubit Hamiltonian."""
    return (
        p.a * QZ
        + p.b * MZ
        + p.c * ZZ
        + p.f * FLIP_FLOP
        + p.g * CHIRAL_FLIP_FLOP
        + p.r * I4
    )


def conserved_observable() -> np.ndarray:
    return SIGMA_Z_TOTAL.copy()


def check_conservation(h: np.ndarray) -> float:
    """Largest entry magnitude of ``[h, Sigma_z]``; zero for conserving ``h``."""
    return float(np.max(np.abs(commutator(h, SIGMA_Z_TOTAL))))

"""Density-matrix emulation of the three-qubit ancilla-recorded protocol.

Register order is ``(M, Q, A)``: mediator, probe, ancilla. A protocol run:

1. prepare ``rho = R|0><0|R^dag (x) I/2 (x) |0><0|`` with ``R`` a
   ``theta_phi`` rotation on the mediator;
2. record the first probe measurement on the ancilla (CNOT Q->A, wrapped in
   Hadamards on Q for the X basis);
3. apply the mixing unitary ``exp(-i H_QM t)`` to (M, Q);
4. record the second measurement the same way;
5. read out ``<sigma_z^A>``, the parity of the two recorded outcomes.

The spectrometer's 90-degree excitation and integration are not modelled;
``<sigma_z^A>`` is what the normalised integrals estimate.

Damping is phenomenological: each of the three recorded pulses (first
measurement, mixing, second measurement) multiplies the read-out signal by
``damping``. An X-basis measurement counts as one pulse. All four basis
combinations therefore get the same factor ``damping**3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .bell import Basis, MediatorState, combine
from .hamiltonians import HamiltonianParams, build_hqm
from .pauli import I2, SWAP, SX, SY, SZ, hermitian_expm, tensor
from .tolerances import DEFAULT

REGISTER = ("M", "Q", "A")
DAMPED_PULSES = 3

# Fixed by the undamped t = 0, (Z, Z) run, which reads exactly +1.
READOUT_NORMALIZATION = 1.0

_P0 = np.diag([1.0, 0.0]).astype(complex)
_P1 = np.diag([0.0, 1.0]).astype(complex)
_HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2.0)
_ZA = tensor(I2, I2, SZ)


def _index(qubit: str) -> int:
    try:
        return REGISTER.index(qubit.upper())
    except ValueError:
        raise ValueError(f"unknown qubit {qubit!r}; register is {REGISTER}") from None


def lift(op: np.ndarray, target: str) -> np.ndarray:
    """Embed a single-qubit operator on ``target`` into the 8x8 register."""
    factors = [I2, I2, I2]
    factors[_index(target)] = op
    return tensor(*factors)


def rotation_matrix(theta: float, phi: float) -> np.ndarray:
    """``exp(-i theta/2 (cos(phi) X + sin(phi) Y))``."""
    axis = math.cos(phi) * SX + math.sin(phi) * SY
    return math.cos(theta / 2.0) * I2 - 1j * math.sin(theta / 2.0) * axis


def cnot_matrix(control: str, target: str) -> np.ndarray:
    if _index(control) == _index(target):
        raise ValueError("control and target must differ")
    f0, f1 = [I2, I2, I2], [I2, I2, I2]
    f0[_index(control)] = _P0
    f1[_index(control)] = _P1
    f1[_index(target)] = SX
    return tensor(*f0) + tensor(*f1)


def mixing_matrix(p: HamiltonianParams, t: float) -> np.ndarray:
    """``exp(-i H_QM t)`` on (M, Q), identity on A.

    ``H_QM`` is defined on Q (x) M, so it is reordered with a swap first.
    """
    u_qm = hermitian_expm(build_hqm(p), t)
    return tensor(SWAP @ u_qm @ SWAP, I2)


@dataclass(frozen=True)
class GateOp:
    kind: str  # "rotation", "hadamard", "cnot" or "mixing"
    target: Optional[str] = None
    control: Optional[str] = None
    theta: float = 0.0
    phi: float = 0.0
    params: Optional[HamiltonianParams] = None
    t: float = 0.0

    @classmethod
    def rotation(cls, theta: float, phi: float, target: str = "M") -> "GateOp":
        return cls("rotation", target=target, theta=theta, phi=phi)

    @classmethod
    def hadamard(cls, target: str) -> "GateOp":
        return cls("hadamard", target=target)

    @classmethod
    def cnot(cls, control: str, target: str) -> "GateOp":
        return cls("cnot", target=target, control=control)

    @classmethod
    def mixing(cls, params: HamiltonianParams, t: float) -> "GateOp":
        return cls("mixing", params=params, t=t)

    @property
    def matrix(self) -> np.ndarray:
        if self.kind == "rotation":
            return lift(rotation_matrix(self.theta, self.phi), self.target)
        if self.kind == "hadamard":
            return lift(_HADAMARD, self.target)
        if self.kind == "cnot":
            return cnot_matrix(self.control, self.target)
        if self.kind == "mixing":
            return mixing_matrix(self.params, self.t)
        raise ValueError(f"unknown gate kind {self.kind!r}")


@dataclass(frozen=True)
class ThreeQubitState:
    rho: np.ndarray
    signal: float = 1.0  # accumulated damping factor applied at read-out

    def validity_errors(self) -> dict:
        """Deviations from a valid density matrix: Hermiticity, trace, negativity."""
        rho = self.rho
        herm = float(np.max(np.abs(rho - rho.conj().T)))
        trace = abs(complex(np.trace(rho)) - 1.0)
        min_eig = float(np.min(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))))
        return {"hermitian": herm, "trace": trace, "negativity": max(0.0, -min_eig)}

    def is_valid(self, tol=DEFAULT) -> bool:
        err = self.validity_errors()
        return (
            err["hermitian"] < tol.hermitian
            and err["trace"] < tol.hermitian
            and err["negativity"] < tol.psd
        )


def mediator_density(theta: float = 0.0, phi: float = 0.0) -> np.ndarray:
    r = rotation_matrix(theta, phi)
    return r @ _P0 @ r.conj().T


def prep_state(theta: float = 0.0, phi: float = 0.0) -> MediatorState:
    """Bloch vector of ``R_phi(theta)|0>``; 90 degrees about x gives ``beta = -1``."""
    rho = mediator_density(theta, phi)
    bloch = [float(np.trace(rho @ s).real) for s in (SX, SY, SZ)]
    norm = math.sqrt(sum(b * b for b in bloch))
    if norm > 1.0:
        bloch = [b / norm for b in bloch]
    return MediatorState(*bloch)


def prepare_initial(theta: float = 0.0, phi: float = 0.0) -> ThreeQubitState:
    rho = tensor(mediator_density(theta, phi), I2 / 2.0, _P0)
    return ThreeQubitState(rho)


def apply_gate(state: ThreeQubitState, gate: GateOp, damping: float = 1.0) -> ThreeQubitState:
    u = gate.matrix
    return ThreeQubitState(u @ state.rho @ u.conj().T, state.signal * damping)


def readout(state: ThreeQubitState) -> float:
    """Normalised ancilla polarisation ``<sigma_z^A>``."""
    value = float(np.trace(_ZA @ state.rho).real)
    return READOUT_NORMALIZATION * state.signal * value


@dataclass(frozen=True)
class ProtocolSpec:
    first_basis: Basis
    second_basis: Basis
    params: HamiltonianParams = field(default_factory=HamiltonianParams)
    t: float = 0.0
    prep: tuple = (0.0, 0.0)  # (theta, phi) of the mediator rotation
    damping: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "first_basis", Basis(self.first_basis))
        object.__setattr__(self, "second_basis", Basis(self.second_basis))
        if not 0.0 <= self.damping <= 1.0:
            raise ValueError(f"damping must lie in [0, 1], got {self.damping}")


def measurement_gates(basis: Basis) -> list[tuple[GateOp, bool]]:
    """Gates recording a probe measurement on the ancilla, with damped flags."""
    record = GateOp.cnot("Q", "A")
    if Basis(basis) is Basis.Z:
        return [(record, True)]
    h = GateOp.hadamard("Q")
    return [(h, False), (record, True), (h, False)]


def protocol_gates(spec: ProtocolSpec) -> list[tuple[GateOp, bool]]:
    return (
        measurement_gates(spec.first_basis)
        + [(GateOp.mixing(spec.params, spec.t), True)]
        + measurement_gates(spec.second_basis)
    )


def run_protocol(spec: ProtocolSpec) -> float:
    """Ancilla-recorded two-time correlator for one basis combination."""
    state = prepare_initial(*spec.prep)
    for gate, damped in protocol_gates(spec):
        state = apply_gate(state, gate, spec.damping if damped else 1.0)
    return readout(state)


def circuit_correlators(params: HamiltonianParams, t: float, prep=(0.0, 0.0), damping: float = 1.0) -> dict:
    return {
        (first, second): run_protocol(ProtocolSpec(first, second, params, t, tuple(prep), damping))
        for first in Basis
        for second in Basis
    }


def bell_from_circuit(params: HamiltonianParams, t: float, prep=(0.0, 0.0), damping: float = 1.0) -> float:
    """Temporal Bell quantity assembled offline from the four basis runs."""
    e = circuit_correlators(params, t, prep, damping)
    return float(
        combine(e[Basis.Z, Basis.Z], e[Basis.Z, Basis.X], e[Basis.X, Basis.Z], e[Basis.X, Basis.X])
    )


CIRCUIT_HEADER = ("t", "E_zz", "E_zx", "E_xz", "E_xx", "B")


def circuit_rows(params: HamiltonianParams, times, prep=(0.0, 0.0), damping: float = 1.0) -> list[tuple]:
    rows = []
    for t in np.asarray(times, dtype=float):
        e = circuit_correlators(params, float(t), prep, damping)
        zz, zx, xz, xx = (e[Basis.Z, Basis.Z], e[Basis.Z, Basis.X], e[Basis.X, Basis.Z], e[Basis.X, Basis.X])
        rows.append((float(t), zz, zx, xz, xx, float(combine(zz, zx, xz, xx))))
    return rows

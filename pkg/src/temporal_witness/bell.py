"""Temporal correlators and the temporal Bell (CHSH-form) quantity.

The probe measures ``A1 = q_z^Q`` and ``A2 = q_x^Q`` at ``t0 = 0`` and their
Heisenberg-evolved counterparts ``B1``, ``B2`` at ``t``. With the probe
maximally mixed, the two-time correlator is

    E(A, B) = Re 1/2 Tr[A B (I (x) rho_M)].

The real part is the symmetrised sequential-measurement correlator; ``AB`` is
not Hermitian in general. The absolute value is applied once, to the signed
four-term combination.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .hamiltonians import HamiltonianParams, build_hqm
from .heisenberg import (
    OmegaParams,
    qx_closed_form_series,
    qz_closed_form_series,
    sin_over,
)
from .pauli import I2, QX, QZ, SX, SY, SZ, tensor
from .tolerances import DEFAULT


class Basis(str, enum.Enum):
    Z = "z"
    X = "x"


PROBE_OBSERVABLES = {Basis.Z: QZ, Basis.X: QX}


@dataclass(frozen=True)
class MediatorState:
    """Bloch-vector parametrisation ``rho_M = (I + alpha X + beta Y + gamma Z)/2``."""

    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, float(getattr(self, name)))
        norm2 = self.alpha**2 + self.beta**2 + self.gamma**2
        if not math.isfinite(norm2) or norm2 > 1.0 + DEFAULT.hermitian:
            raise ValueError(f"Bloch vector length^2 {norm2} exceeds 1")

    @property
    def matrix(self) -> np.ndarray:
        return 0.5 * (I2 + self.alpha * SX + self.beta * SY + self.gamma * SZ)

    @property
    def is_classical(self) -> bool:
        """Diagonal in the conserved (z) basis."""
        return self.alpha == 0.0 and self.beta == 0.0

    @classmethod
    def from_label(cls, label: str) -> "MediatorState":
        try:
            return cls(*STATE_LABELS[label.lower()])
        except KeyError:
            raise ValueError(
                f"unknown state {label!r}; choose from {sorted(STATE_LABELS)}"
            ) from None


STATE_LABELS = {
    "z+": (0.0, 0.0, 1.0),
    "z-": (0.0, 0.0, -1.0),
    "y+": (0.0, 1.0, 0.0),
    "y-": (0.0, -1.0, 0.0),
    "x+": (1.0, 0.0, 0.0),
    "x-": (-1.0, 0.0, 0.0),
    "mixed": (0.0, 0.0, 0.0),
}


@dataclass(frozen=True)
class BellTrace:
    params: HamiltonianParams
    state: MediatorState
    times: np.ndarray
    values: np.ndarray
    max_value: float
    argmax_t: float

    @classmethod
    def from_values(cls, params, state, times, values) -> "BellTrace":
        times = np.asarray(times, dtype=float)
        values = np.asarray(values, dtype=float)
        i = int(np.argmax(values))
        return cls(params, state, times, values, float(values[i]), float(times[i]))


def correlator(a: np.ndarray, b: np.ndarray, state: MediatorState):
    """``Re 1/2 Tr[A B (I (x) rho_M)]``; ``b`` may be a stack of shape (n, 4, 4)."""
    weight = tensor(I2, state.matrix)
    value = 0.5 * np.einsum("ij,...jk,ki->...", a, b, weight).real
    return float(value) if np.ndim(value) == 0 else value


class _Conjugator:
    """Caches the eigendecomposition of ``H_QM`` for repeated time evaluations."""

    def __init__(self, p: HamiltonianParams):
        self.w, self.v = np.linalg.eigh(build_hqm(p))
        vd = self.v.conj().T
        # descriptors in the energy eigenbasis
        self.qz, self.qx = vd @ QZ @ self.v, vd @ QX @ self.v

    def __call__(self, times):
        times = np.atleast_1d(np.asarray(times, dtype=float))
        # e^{iHt} A e^{-iHt} has eigenbasis entries A_jk e^{i(w_j - w_k)t}
        phase = np.exp(1j * np.multiply.outer(times, np.subtract.outer(self.w, self.w)))
        v, vd = self.v, self.v.conj().T
        return v @ (phase * self.qz) @ vd, v @ (phase * self.qx) @ vd


def _evolved_pair(p, times, method):
    if method == "numeric":
        return _Conjugator(p)(times)
    if method == "closed_form":
        return qz_closed_form_series(p, times), qx_closed_form_series(p, times)
    raise ValueError(f"unknown evolution method {method!r}")


def correlator_table(p: HamiltonianParams, state: MediatorState, times, method="numeric"):
    """The four correlators ``E(A_i, B_j)`` keyed by basis pair, each shape (n,)."""
    b1, b2 = _evolved_pair(p, times, method)
    evolved = {Basis.Z: b1, Basis.X: b2}
    return {
        (first, second): np.atleast_1d(correlator(PROBE_OBSERVABLES[first], evolved[second], state))
        for first in Basis
        for second in Basis
    }


def combine(e_zz, e_zx, e_xz, e_xx):
    """``|E(A1,B1) - E(A1,B2) + E(A2,B1) + E(A2,B2)|``."""
    return np.abs(e_zz - e_zx + e_xz + e_xx)


def bell_series(p: HamiltonianParams, state: MediatorState, times, method="numeric") -> np.ndarray:
    e = correlator_table(p, state, times, method)
    return combine(
        e[Basis.Z, Basis.Z], e[Basis.Z, Basis.X], e[Basis.X, Basis.Z], e[Basis.X, Basis.X]
    )


def bell_function(p: HamiltonianParams, state: MediatorState, method="numeric"):
    """``t -> B(t)`` with per-parameter set-up done once (used by optimisers)."""
    if method != "numeric":
        return lambda t: bell_quantity(p, state, t, method)
    evolve = _Conjugator(p)
    weight = tensor(I2, state.matrix)

    def fun(t):
        b1, b2 = evolve(t)
        e = [
            0.5 * np.einsum("ij,njk,ki->n", a, b, weight).real[0]
            for a in (QZ, QX)
            for b in (b1, b2)
        ]
        return float(combine(*e))

    return fun


def bell_quantity(p: HamiltonianParams, state: MediatorState, t: float, method="numeric") -> float:
    """Temporal Bell quantity at a single time.

    ``method="numeric"`` (default) evolves by exact conjugation;
    ``method="closed_form"`` uses the analytic descriptors.
    """
    return float(bell_series(p, state, [t], method)[0])


def bell_trace(p: HamiltonianParams, state: MediatorState, times, method="numeric") -> BellTrace:
    return BellTrace.from_values(p, state, times, bell_series(p, state, times, method))


# --- closed forms -----------------------------------------------------------


def _out(value, t):
    return float(value) if np.ndim(t) == 0 else value


def closed_form_classical(p: HamiltonianParams, t, gamma: float = 0.0):
    """Bell quantity for a classical mediator (``f = g = 0``).

    With ``gamma = 0`` (mediator state with no z polarisation) this is
    ``|2 + cos(2(a-c)t) + cos(2(a+c)t)| / 2``. For a z-polarised mediator the
    two cosines are weighted by ``(1 -+ gamma)/2``. Independent of ``b``,
    ``alpha`` and ``beta``.
    """
    if not p.is_classical:
        raise ValueError(f"classical closed form requires f = g = 0, got f={p.f}, g={p.g}")
    t = np.asarray(t, dtype=float)
    value = np.abs(
        1.0
        + 0.5 * (1.0 + gamma) * np.cos(2.0 * (p.a + p.c) * t)
        + 0.5 * (1.0 - gamma) * np.cos(2.0 * (p.a - p.c) * t)
    )
    return _out(value, t)


def signed_eigenstate(p: HamiltonianParams, sign: int, t):
    """Signed (pre absolute value) Bell sum for ``rho_M = (I +- q_z^M)/2``."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    t = np.asarray(t, dtype=float)
    om = OmegaParams.from_params(p)
    s = sin_over(om.omega, t)
    cos_w = np.cos(om.omega * t)
    phase = (om.sum_ab + sign * 2.0 * p.c) * t
    coupling = p.f**2 + p.g**2
    value = (
        np.cos(phase) * cos_w
        + 1.0 - 4.0 * coupling * s**2
        - om.detuning * np.sin(phase) * s
    )
    return _out(value, t)


def closed_form_eigenstate(p: HamiltonianParams, sign: int, t):
    """Bell quantity ``B^{+-}`` for a mediator in a ``q_z^M`` eigenstate.

    Never exceeds 2: the first and last terms combine to at most
    ``sqrt(1-x) + 1 - x`` with ``x = 4(f^2+g^2) sin^2(Wt)/W^2``.
    """
    return _out(np.abs(signed_eigenstate(p, sign, t)), t)


def closed_form_mixed(p: HamiltonianParams, t):
    """``(B^+ + B^-)/2``.

    Equals the Bell quantity of the maximally mixed mediator only where the two
    signed sums share a sign, see :func:`mixed_sign_compatible`.
    """
    return _out(
        0.5 * (closed_form_eigenstate(p, 1, t) + closed_form_eigenstate(p, -1, t)), t
    )


def mixed_sign_compatible(p: HamiltonianParams, t):
    return np.asarray(signed_eigenstate(p, 1, t)) * np.asarray(signed_eigenstate(p, -1, t)) >= 0.0


def closed_form_general(p: HamiltonianParams, state: MediatorState, t):
    """Bell quantity for arbitrary couplings and mediator Bloch vector."""
    t = np.asarray(t, dtype=float)
    om = OmegaParams.from_params(p)
    al, be, ga = state.alpha, state.beta, state.gamma
    d = om.detuning
    s = sin_over(om.omega, t)
    cos_w = np.cos(om.omega * t)
    up = (om.sum_ab + 2.0 * p.c) * t
    down = (om.sum_ab - 2.0 * p.c) * t
    ab_t = om.sum_ab * t
    in_phase = al * p.f + be * p.g
    quadrature = be * p.f - al * p.g

    value = (
        -2.0 * np.cos(2.0 * p.c * t) * s
        * (np.sin(ab_t) * in_phase + np.cos(ab_t) * quadrature)
        + 0.5 * (
            d * ((ga - 1.0) * np.sin(down) - (ga + 1.0) * np.sin(up)) * s
            + (ga + 1.0) * np.cos(up) * cos_w
            - (ga - 1.0) * np.cos(down) * cos_w
        )
        + 2.0 * d * in_phase * s**2
        - 2.0 * quadrature * s * cos_w
        + 1.0 - 4.0 * (p.f**2 + p.g**2) * s**2
    )
    return _out(np.abs(value), t)

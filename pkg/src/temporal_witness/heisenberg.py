"""Heisenberg-picture evolution of the probe descriptors ``q_z^Q`` and ``q_x^Q``.

Two independent routes are provided:

* :func:`evolve_numeric` conjugates by the exact propagator,
  ``B = e^{iHt} A e^{-iHt}``; this is the reference;
* :func:`closed_form_qz` / :func:`closed_form_qx` assemble the evolved
  operator as a sum of Pauli strings with analytic coefficients.

The closed forms use ``sin(W t)/W = t sinc(W t)``-style rewrites, so they are
finite and smooth on the degenerate manifold ``W = 0`` (a = b, f = g = 0)
without any branching.

Derivation sketch for ``q_x^Q(t)``: the Hamiltonian is block diagonal in the
conserved-Sigma_z sectors. ``|00>`` and ``|11>`` are eigenstates with
energies ``a+b+c`` and ``-a-b+c``; on ``{|01>, |10>}`` it acts as
``-c + (a-b) tau_z + 2f tau_x - 2g tau_y``. Writing
``q_x^Q = sum_m (|0m><1m| + h.c.)`` and conjugating each piece gives four
complex amplitudes, each carrying a phase ``(a+b +- 2c) t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hamiltonians import CHIRAL_FLIP_FLOP, FLIP_FLOP, HamiltonianParams, build_hqm
from .pauli import MX, MY, MZ, QX, QY, QZ, Descriptor, propagators

_BASES = {"qz": QZ, "qx": QX}


@dataclass(frozen=True)
class OmegaParams:
    omega: float
    sum_ab: float
    detuning: float

    @classmethod
    def from_params(cls, p: HamiltonianParams) -> "OmegaParams":
        detuning = p.a - p.b
        return cls(
            omega=math.sqrt(detuning**2 + 4.0 * (p.f**2 + p.g**2)),
            sum_ab=p.a + p.b,
            detuning=detuning,
        )


@dataclass(frozen=True)
class EvolvedObservable:
    base: str
    time: float
    matrix: np.ndarray
    method: str  # "closed_form" or "numeric"


def sin_over(omega: float, t):
    """``sin(omega t) / omega`` with the ``omega -> 0`` limit ``t``."""
    t = np.asarray(t, dtype=float)
    return t * np.sinc(omega * t / np.pi)


def _resolve_base(base) -> tuple[str, np.ndarray]:
    if isinstance(base, str):
        key = base.lower()
        if key not in _BASES:
            raise ValueError(f"unknown base observable {base!r}; use 'qz' or 'qx'")
        return key, _BASES[key]
    if isinstance(base, Descriptor):
        return f"q{base.axis.lower()}^{base.subsystem}", base.matrix
    return "custom", np.asarray(base, dtype=complex)


def evolve_numeric_series(base, p: HamiltonianParams, times) -> np.ndarray:
    """``U(t)^dag base U(t)`` for every time, shape (n, 4, 4)."""
    _, a = _resolve_base(base)
    u = propagators(build_hqm(p), times)
    return np.einsum("nji,jk,nkl->nil", u.conj(), a, u)


def evolve_numeric(base, p: HamiltonianParams, t: float) -> EvolvedObservable:
    """Reference Heisenberg evolution by conjugation with ``exp(-i H t)``."""
    label, _ = _resolve_base(base)
    m = evolve_numeric_series(base, p, [t])[0]
    return EvolvedObservable(label, float(t), m, "numeric")


def _combine(coeffs, strings) -> np.ndarray:
    coeffs = np.stack(np.broadcast_arrays(*coeffs), -1)
    return np.einsum("...k,kij->...ij", coeffs, np.stack(strings))


def qz_closed_form_series(p: HamiltonianParams, times) -> np.ndarray:
    times = np.atleast_1d(np.asarray(times, dtype=float))
    om = OmegaParams.from_params(p)
    coupling = p.f**2 + p.g**2
    s = sin_over(om.omega, times)
    cos_w = np.cos(om.omega * times)
    transfer = 4.0 * coupling * s**2
    chiral = -2.0 * p.f * s * cos_w + 2.0 * om.detuning * p.g * s**2
    flip = 2.0 * p.g * s * cos_w + 2.0 * om.detuning * p.f * s**2
    return _combine(
        [1.0 - transfer, transfer, chiral, flip],
        [QZ, MZ, CHIRAL_FLIP_FLOP, FLIP_FLOP],
    )


def qx_closed_form_series(p: HamiltonianParams, times) -> np.ndarray:
    times = np.atleast_1d(np.asarray(times, dtype=float))
    om = OmegaParams.from_params(p)
    s = sin_over(om.omega, times)
    cos_w = np.cos(om.omega * times)
    up = np.exp(1j * (om.sum_ab + 2.0 * p.c) * times)
    down = np.exp(1j * (om.sum_ab - 2.0 * p.c) * times)
    # probe flip with mediator in |0> / |1>
    rot = cos_w + 1j * om.detuning * s
    z_up, z_down = up * rot, down * rot
    # mediator flip with probe in |0> / |1>
    hop = (-2.0 * p.g - 2.0j * p.f) * s
    w_up, w_down = up * hop, -down * hop

    qx_mz, qy_mz = QX @ MZ, QY @ MZ
    qz_mx, qz_my = QZ @ MX, QZ @ MY
    return 0.5 * _combine(
        [
            z_up.real, -z_up.imag, z_down.real, -z_down.imag,
            w_up.real, -w_up.imag, w_down.real, -w_down.imag,
        ],
        [
            QX + qx_mz, QY + qy_mz, QX - qx_mz, QY - qy_mz,
            MX + qz_mx, MY + qz_my, MX - qz_mx, MY - qz_my,
        ],
    )


def closed_form_qz(p: HamiltonianParams, t: float) -> EvolvedObservable:
    """Analytic ``q_z^Q(t)``.

    Coefficients on ``q_z^Q``, ``q_z^M``, ``q_x^Q q_y^M - q_y^Q q_x^M`` and
    ``q_x^Q q_x^M + q_y^Q q_y^M``; population transfer is governed by
    ``4(f^2+g^2) sin^2(W t) / W^2`` with ``W^2 = (a-b)^2 + 4(f^2+g^2)``.
    """
    return EvolvedObservable("qz", float(t), qz_closed_form_series(p, [t])[0], "closed_form")


def closed_form_qx(p: HamiltonianParams, t: float) -> EvolvedObservable:
    return EvolvedObservable("qx", float(t), qx_closed_form_series(p, [t])[0], "closed_form")

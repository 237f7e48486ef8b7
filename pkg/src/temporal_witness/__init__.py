"""Temporal Bell witnesses of non-classicality for a qubit probe and a mediator.

A probe qubit Q interacts with a mediator M under a Hamiltonian that conserves
``q_z^Q + q_z^M``. Two-time correlations measured on Q alone can violate the
temporal CHSH bound B <= 2 only if M is quantum and starts in a state that
does not commute with the conserved quantity.
"""

__version__ = "0.1.0"

from .bell import (
    Basis,
    BellTrace,
    MediatorState,
    bell_quantity,
    bell_series,
    closed_form_classical,
    closed_form_eigenstate,
    closed_form_general,
    closed_form_mixed,
    correlator,
)
from .circuit import ProtocolSpec, bell_from_circuit, run_protocol
from .hamiltonians import HamiltonianParams, build_hcm, build_hqm, check_conservation
from .heisenberg import closed_form_qx, closed_form_qz, evolve_numeric
from .sweep import SweepConfig, max_over_time, run_sweep, trace_curve

__all__ = [
    "Basis", "BellTrace", "MediatorState", "bell_quantity", "bell_series",
    "closed_form_classical", "closed_form_eigenstate", "closed_form_general",
    "closed_form_mixed", "correlator", "ProtocolSpec", "bell_from_circuit",
    "run_protocol", "HamiltonianParams", "build_hcm", "build_hqm",
    "check_conservation", "closed_form_qx", "closed_form_qz", "evolve_numeric",
    "SweepConfig", "max_over_time", "run_sweep", "trace_curve",
]

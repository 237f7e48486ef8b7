"""Ancilla-recorded correlators on a three-qubit density matrix.

Each correlator needs its own run: record the first probe observable on the
ancilla with a CNOT, let Q and M mix, record the second one, read <Z_A>.
Four runs are combined offline into B. With M prepared in |0> the curve never
crosses 2; after a 90 degree x rotation it does.
"""

import math

import numpy as np

from temporal_witness.scenarios import FIG4_PRESETS
from temporal_witness.circuit import bell_from_circuit, circuit_rows

times = np.linspace(0, 2 * math.pi, 200)
for name, preset in FIG4_PRESETS.items():
    rows = circuit_rows(preset.params, times, preset.prep)
    b = np.array([r[-1] for r in rows])
    print(f"{name:18s} max B {b.max():.4f} at t={times[b.argmax()]:.3f}")

# Damping each recorded pulse by lam scales every correlator by lam**3.
preset = FIG4_PRESETS["fig4b-quantumH"]
t_peak = float(times[b.argmax()])
for lam in (1.0, 0.95, 0.9):
    value = bell_from_circuit(preset.params, t_peak, preset.prep, lam)
    print(f"lambda={lam:4.2f}  B(t={t_peak:.3f}) = {value:.4f}")

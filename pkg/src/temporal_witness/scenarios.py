"""Named parameter presets for the reproduced scenarios."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bell import MediatorState
from .circuit import prep_state
from .hamiltonians import HamiltonianParams

# Contour scan: a = b = 0, c = 1, mediator in the +y eigenstate.
CONTOUR_PARAMS = HamiltonianParams(a=0.0, b=0.0, c=1.0)
CONTOUR_STATE = MediatorState(beta=1.0)

ROTATE_90_X = (math.pi / 2.0, 0.0)
NO_ROTATION = (0.0, 0.0)


@dataclass(frozen=True)
class CircuitPreset:
    """Mixing Hamiltonian plus the mediator preparation rotation ``(theta, phi)``."""

    params: HamiltonianParams
    prep: tuple

    @property
    def state(self) -> MediatorState:
        return prep_state(*self.prep)


# Mixing Hamiltonians have a = b = g = 0, c = 1; f = 0 mimics a classical
# mediator, f = 1 a quantum one. "a" presets start M in |0>, "b" presets
# rotate it by 90 degrees about x first.
FIG4_PRESETS = {
    "fig4a-classicalH": CircuitPreset(HamiltonianParams(c=1.0, f=0.0), NO_ROTATION),
    "fig4a-quantumH": CircuitPreset(HamiltonianParams(c=1.0, f=1.0), NO_ROTATION),
    "fig4b-classicalH": CircuitPreset(HamiltonianParams(c=1.0, f=0.0), ROTATE_90_X),
    "fig4b-quantumH": CircuitPreset(HamiltonianParams(c=1.0, f=1.0), ROTATE_90_X),
}


def fig4_preset(name: str) -> CircuitPreset:
    try:
        return FIG4_PRESETS[name]
    except KeyError:
        raise ValueError(
            f"unknown preset {name!r}; choose from {sorted(FIG4_PRESETS)}"
        ) from None

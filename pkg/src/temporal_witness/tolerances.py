"""Numerical tolerances shared by the library, the CLI verifier and the tests."""

from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Tolerances:
    hermitian: float = 1e-12
    unitary: float = 1e-10
    equivalence: float = 1e-9
    conservation: float = 1e-13
    bound: float = 1e-9
    anchor: float = 1e-12
    psd: float = 1e-10

    @classmethod
    def uniform(cls, value: float) -> "Tolerances":
        """Every tolerance set to ``value`` (used to force verifier failures)."""
        return cls(**{f.name: value for f in fields(cls)})


DEFAULT = Tolerances()

CLASSICAL_BOUND = 2.0
TSIRELSON_BOUND = 2.0 * 2.0**0.5

"""Randomised property suites: closed form vs numeric, bounds, conservation.

Every suite draws its inputs from a generator seeded by ``(seed, suite name)``,
so a suite's draws do not depend on which other suites run.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import asdict, dataclass

import numpy as np

from .bell import (
    PROBE_OBSERVABLES,
    Basis,
    MediatorState,
    bell_quantity,
    closed_form_classical,
    closed_form_eigenstate,
    closed_form_general,
    correlator,
)
from .circuit import ProtocolSpec, prep_state, run_protocol
from .hamiltonians import HamiltonianParams, build_hqm, check_conservation
from .heisenberg import closed_form_qx, closed_form_qz, evolve_numeric
from .pauli import hermitian_expm
from .tolerances import CLASSICAL_BOUND, DEFAULT, TSIRELSON_BOUND, Tolerances

PARAM_SCALE = 2.0
T_RANGE = (0.0, 2.0 * math.pi)


def random_params(rng, scale=PARAM_SCALE, classical=False) -> HamiltonianParams:
    a, b, c, f, g, r = rng.uniform(-scale, scale, 6)
    if classical:
        f = g = 0.0
    return HamiltonianParams(a, b, c, f, g, r)


def random_state(rng, classical=False) -> MediatorState:
    """Bloch vector inside the unit ball; one draw in four is pure."""
    if classical:
        kind = rng.integers(4)
        gamma = (-1.0, 0.0, 1.0)[kind] if kind < 3 else rng.uniform(-1.0, 1.0)
        return MediatorState(gamma=gamma)
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    if rng.integers(4):
        v *= rng.uniform() ** (1.0 / 3.0)
    return MediatorState(*v)


def random_time(rng) -> float:
    return float(rng.uniform(*T_RANGE))


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    max_error: float
    tolerance: float
    draws: int

    def as_dict(self) -> dict:
        return asdict(self)


def _rng(seed: int, name: str):
    return np.random.default_rng([seed, zlib.crc32(name.encode())])


def _result(name, errors, tol) -> SuiteResult:
    worst = float(np.max(errors)) if len(errors) else 0.0
    return SuiteResult(name, bool(worst <= tol), worst, tol, len(errors))


def suite_conservation(seed, draws, tol: Tolerances = DEFAULT):
    rng = _rng(seed, "conservation")
    errs = [check_conservation(build_hqm(random_params(rng))) for _ in range(draws)]
    return _result("conservation", errs, tol.conservation)


def suite_propagator_group(seed, draws, tol: Tolerances = DEFAULT):
    rng = _rng(seed, "propagator_group")
    errs = []
    for _ in range(draws):
        m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        h = 0.5 * (m + m.conj().T)
        s, t = rng.uniform(-10, 10, 2)
        lhs = hermitian_expm(h, s) @ hermitian_expm(h, t)
        errs.append(np.max(np.abs(lhs - hermitian_expm(h, s + t))))
    return _result("propagator_group", errs, tol.unitary)


def suite_descriptor_closed_forms(seed, draws, tol: Tolerances = DEFAULT):
    rng = _rng(seed, "descriptor_closed_forms")
    errs = []
    for _ in range(draws):
        p, t = random_params(rng), random_time(rng)
        errs.append(np.max(np.abs(closed_form_qz(p, t).matrix - evolve_numeric("qz", p, t).matrix)))
        errs.append(np.max(np.abs(closed_form_qx(p, t).matrix - evolve_numeric("qx", p, t).matrix)))
    return _result("descriptor_closed_forms", errs, tol.equivalence)


def suite_general_closed_form(seed, draws, tol: Tolerances = DEFAULT):
    rng = _rng(seed, "general_closed_form")
    errs = []
    for _ in range(draws):
        p, st, t = random_params(rng), random_state(rng), random_time(rng)
        errs.append(abs(closed_form_general(p, st, t) - bell_quantity(p, st, t)))
    return _result("general_closed_form", errs, tol.equivalence)


def suite_eigenstate_closed_form(seed, draws, tol: Tolerances = DEFAULT):
    rng = _rng(seed, "eigenstate_closed_form")
    errs = []
    for _ in range(draws):
        p, t = random_params(rng), random_time(rng)
        sign = int(rng.choice([-1, 1]))
        st = MediatorState(gamma=sign)
        errs.append(abs(closed_form_eigenstate(p, sign, t) - bell_quantity(p, st, t)))
    return _result("eigenstate_closed_form", errs, tol.equivalence)


def suite_classical_closed_form(seed, draws, tol: Tolerances = DEFAULT):
    rng = _rng(seed, "classical_closed_form")
    errs = []
    for _ in range(draws):
        p, t = random_params(rng, classical=True), random_time(rng)
        st = random_state(rng)
        errs.append(abs(closed_form_classical(p, t, st.gamma) - bell_quantity(p, st, t)))
    return _result("classical_closed_form", errs, tol.equivalence)


def suite_classical_mediator_bound(seed, draws, tol: Tolerances = DEFAULT):
    rng = _rng(seed, "classical_mediator_bound")
    excess = [
        max(0.0, bell_quantity(random_params(rng, classical=True), random_state(rng), random_time(rng)) - CLASSICAL_BOUND)
        for _ in range(draws)
    ]
    return _result("classical_mediator_bound", excess, tol.bound)


def suite_classical_state_bound(seed, draws, tol: Tolerances = DEFAULT):
    rng = _rng(seed, "classical_state_bound")
    excess = [
        max(0.0, bell_quantity(random_params(rng), random_state(rng, classical=True), random_time(rng)) - CLASSICAL_BOUND)
        for _ in range(draws)
    ]
    return _result("classical_state_bound", excess, tol.bound)


def suite_tsirelson(seed, draws, tol: Tolerances = DEFAULT):
    rng = _rng(seed, "tsirelson")
    excess = [
        max(0.0, bell_quantity(random_params(rng), random_state(rng), random_time(rng)) - TSIRELSON_BOUND)
        for _ in range(draws)
    ]
    return _result("tsirelson", excess, tol.bound)


def suite_offset_invariance(seed, draws, tol: Tolerances = DEFAULT):
    rng = _rng(seed, "offset_invariance")
    errs = []
    for _ in range(draws):
        p, st, t = random_params(rng), random_state(rng), random_time(rng)
        shifted = p.replace(r=float(rng.uniform(-10, 10)))
        errs.append(abs(bell_quantity(p, st, t) - bell_quantity(shifted, st, t)))
    return _result("offset_invariance", errs, tol.anchor)


def suite_initial_anchor(seed, draws, tol: Tolerances = DEFAULT):
    rng = _rng(seed, "initial_anchor")
    errs = [abs(bell_quantity(random_params(rng), random_state(rng), 0.0) - 2.0) for _ in range(draws)]
    return _result("initial_anchor", errs, tol.anchor)


def suite_circuit_equivalence(seed, draws, tol: Tolerances = DEFAULT):
    rng = _rng(seed, "circuit_equivalence")
    errs = []
    for _ in range(draws):
        p, t = random_params(rng), random_time(rng)
        prep = (float(rng.uniform(0, math.pi)), float(rng.uniform(0, 2 * math.pi)))
        first, second = Basis(rng.choice(["z", "x"])), Basis(rng.choice(["z", "x"]))
        circ = run_protocol(ProtocolSpec(first, second, p, t, prep))
        evolved = evolve_numeric("q" + second.value, p, t).matrix
        errs.append(abs(circ - correlator(PROBE_OBSERVABLES[first], evolved, prep_state(*prep))))
    return _result("circuit_equivalence", errs, tol.equivalence)


SUITES = {
    "conservation": suite_conservation,
    "propagator_group": suite_propagator_group,
    "descriptor_closed_forms": suite_descriptor_closed_forms,
    "general_closed_form": suite_general_closed_form,
    "eigenstate_closed_form": suite_eigenstate_closed_form,
    "classical_closed_form": suite_classical_closed_form,
    "classical_mediator_bound": suite_classical_mediator_bound,
    "classical_state_bound": suite_classical_state_bound,
    "tsirelson": suite_tsirelson,
    "offset_invariance": suite_offset_invariance,
    "initial_anchor": suite_initial_anchor,
    "circuit_equivalence": suite_circuit_equivalence,
}


def run_all(seed: int = 0, draws: int = 200, tol: Tolerances = DEFAULT, names=None) -> list[SuiteResult]:
    names = list(SUITES) if names is None else list(names)
    return [SUITES[name](seed, draws, tol) for name in names]

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from temporal_witness.bell import (
    STATE_LABELS, MediatorState, bell_quantity, bell_series, bell_trace,
    closed_form_classical, closed_form_eigenstate, closed_form_general,
    closed_form_mixed, correlator, mixed_sign_compatible, signed_eigenstate,
)
from temporal_witness.hamiltonians import HamiltonianParams
from temporal_witness.heisenberg import evolve_numeric
from temporal_witness.pauli import QX, QZ
from temporal_witness.tolerances import TSIRELSON_BOUND
from temporal_witness.verify import random_params, random_state

coef = st.floats(-2, 2)
time = st.floats(0, 2 * np.pi)


@st.composite
def states(draw, classical=False):
    if classical:
        return MediatorState(gamma=draw(st.floats(-1, 1)))
    v = np.array([draw(st.floats(-1, 1)) for _ in range(3)])
    n = np.linalg.norm(v)
    if n > 1:
        v = v / n
    return MediatorState(*v)


def params(classical=False):
    fg = st.just(0.0) if classical else coef
    return st.builds(HamiltonianParams, coef, coef, coef, fg, fg, coef)


# --- mediator state ------------------------------------------------------------


def test_state_matrix_properties(rng):
    for _ in range(50):
        s = random_state(rng)
        m = s.matrix
        assert np.trace(m).real == pytest.approx(1.0)
        assert np.max(np.abs(m - m.conj().T)) < 1e-15
        assert np.min(np.linalg.eigvalsh(m)) > -1e-12


def test_state_rejects_long_bloch_vector():
    with pytest.raises(ValueError):
        MediatorState(0.8, 0.8, 0.0)


@pytest.mark.parametrize("label", sorted(STATE_LABELS))
def test_state_labels(label):
    s = MediatorState.from_label(label)
    assert s.is_classical == (label in ("z+", "z-", "mixed"))


# --- correlator ------------------------------------------------------------------


def test_correlator_same_observable_is_one(rng):
    for _ in range(10):
        assert correlator(QZ, QZ, random_state(rng)) == pytest.approx(1.0, abs=1e-15)


def test_correlator_orthogonal_is_zero(rng):
    for _ in range(10):
        assert correlator(QZ, QX, random_state(rng)) == pytest.approx(0.0, abs=1e-15)


def test_correlator_classical_mediator_reference():
    p, t, s = HamiltonianParams(c=1), np.pi / 4, MediatorState(gamma=1)
    # q_z^Q is static under f = g = 0 ...
    assert correlator(QZ, evolve_numeric("qz", p, t).matrix, s) == pytest.approx(1.0)
    # ... while q_x^Q precesses at 2c: E(qx, qx(t)) = cos(2t)
    assert correlator(QX, evolve_numeric("qx", p, t).matrix, s) == pytest.approx(0.0, abs=1e-15)
    for t in (0.2, 1.1, 2.9):
        e = correlator(QX, evolve_numeric("qx", p, t).matrix, s)
        assert e == pytest.approx(np.cos(2 * t), abs=1e-12)


def test_correlator_linear_in_state(rng):
    for _ in range(20):
        p, t = random_params(rng), rng.uniform(0, 6)
        b = evolve_numeric("qx", p, t).matrix
        s1, s2, lam = random_state(rng), random_state(rng), rng.uniform()
        mix = MediatorState(*(lam * np.array([s1.alpha, s1.beta, s1.gamma])
                              + (1 - lam) * np.array([s2.alpha, s2.beta, s2.gamma])))
        for a in (QZ, QX):
            lhs = correlator(a, b, mix)
            rhs = lam * correlator(a, b, s1) + (1 - lam) * correlator(a, b, s2)
            assert lhs == pytest.approx(rhs, abs=1e-12)


# --- Bell quantity --------------------------------------------------------------


def test_bell_at_zero_time(rng):
    for _ in range(50):
        assert abs(bell_quantity(random_params(rng), random_state(rng), 0.0) - 2.0) < 1e-12


def test_bell_classical_mediator_matches_closed_form(rng):
    for _ in range(100):
        p = random_params(rng, classical=True)
        s, t = random_state(rng), rng.uniform(0, 2 * np.pi)
        b = bell_quantity(p, s, t)
        assert b == pytest.approx(closed_form_classical(p, t, s.gamma), abs=1e-9)
        assert b <= 2 + 1e-9
        if s.gamma == 0.0:
            assert b == pytest.approx(closed_form_classical(p, t), abs=1e-9)


def test_bell_violation_reference_point():
    p, s = HamiltonianParams(c=1, f=1), MediatorState(beta=1)
    values = bell_series(p, s, np.linspace(0, 2 * np.pi, 629))
    assert values.max() > 2.4


def test_numeric_and_closed_form_backends_agree(rng):
    for _ in range(50):
        p, s, t = random_params(rng), random_state(rng), rng.uniform(0, 2 * np.pi)
        assert bell_quantity(p, s, t, "closed_form") == pytest.approx(bell_quantity(p, s, t), abs=1e-9)


def test_unknown_method():
    with pytest.raises(ValueError):
        bell_quantity(HamiltonianParams(), MediatorState(), 1.0, "trotter")


@settings(max_examples=300, deadline=None)
@given(params(classical=True), states(), time)
def test_classical_mediator_bound(p, s, t):
    assert bell_quantity(p, s, t) <= 2 + 1e-9


@settings(max_examples=300, deadline=None)
@given(params(), states(classical=True), time)
def test_classical_state_bound(p, s, t):
    assert bell_quantity(p, s, t) <= 2 + 1e-9


@settings(max_examples=300, deadline=None)
@given(params(), states(), time)
def test_tsirelson_ceiling(p, s, t):
    assert 0 <= bell_quantity(p, s, t) <= TSIRELSON_BOUND + 1e-9


@settings(max_examples=100, deadline=None)
@given(params(), states(), time, st.floats(-50, 50))
def test_offset_invariance(p, s, t, r):
    assert abs(bell_quantity(p, s, t) - bell_quantity(p.replace(r=r), s, t)) < 1e-12


def test_bell_trace_metadata():
    p, s = HamiltonianParams(c=1, f=1), MediatorState(beta=1)
    times = np.linspace(0, 3, 31)
    tr = bell_trace(p, s, times)
    assert tr.max_value == tr.values.max()
    assert tr.argmax_t in tr.times


# --- closed forms -------------------------------------------------------------


def test_classical_closed_form_examples():
    p = HamiltonianParams(a=0.6, c=0.6)
    assert closed_form_classical(p, 0.0) == 2.0
    for t in np.linspace(0, 5, 21):
        assert closed_form_classical(p, t) == pytest.approx(0.5 * abs(3 + np.cos(4 * 0.6 * t)))
        assert closed_form_classical(p, t) <= 2


def test_classical_closed_form_rejects_quantum_params():
    with pytest.raises(ValueError):
        closed_form_classical(HamiltonianParams(g=1), 0.3)


def test_eigenstate_closed_form_at_zero(rng):
    p = random_params(rng)
    assert closed_form_eigenstate(p, 1, 0.0) == 2.0
    assert closed_form_eigenstate(p, -1, 0.0) == 2.0


@pytest.mark.parametrize("sign", [1, -1])
def test_eigenstate_closed_form_reduces_to_classical(sign, rng):
    for _ in range(30):
        p, t = random_params(rng, classical=True), rng.uniform(0, 6)
        expected = bell_quantity(p, MediatorState(gamma=sign), t)
        assert closed_form_eigenstate(p, sign, t) == pytest.approx(expected, abs=1e-9)
        assert closed_form_eigenstate(p, sign, t) == pytest.approx(closed_form_classical(p, t, sign), abs=1e-12)


@settings(max_examples=300, deadline=None)
@given(params(), time, st.sampled_from([1, -1]))
def test_eigenstate_closed_form_matches_pipeline(p, t, sign):
    value = closed_form_eigenstate(p, sign, t)
    assert abs(value - bell_quantity(p, MediatorState(gamma=sign), t)) < 1e-9
    assert value <= 2 + 1e-9


def test_eigenstate_closed_form_bad_sign():
    with pytest.raises(ValueError):
        closed_form_eigenstate(HamiltonianParams(), 0, 1.0)


def test_eigenstate_printed_denominator_variant():
    # the (a-b) sin sin term divided by omega^2 instead of omega disagrees
    p, t = HamiltonianParams(a=1.5, b=-0.5, c=0.3, f=0.4), 0.9
    om2 = (p.a - p.b) ** 2 + 4 * (p.f**2 + p.g**2)
    phase = (p.a + p.b + 2 * p.c) * t
    unrooted = abs(
        np.cos(phase) * np.cos(np.sqrt(om2) * t)
        + ((p.a - p.b) ** 2 + 4 * p.f**2 * np.cos(np.sqrt(om2) * t) ** 2) / om2
        - (p.a - p.b) * np.sin(phase) * np.sin(np.sqrt(om2) * t) / om2
    )
    reference = bell_quantity(p, MediatorState(gamma=1), t)
    assert closed_form_eigenstate(p, 1, t) == pytest.approx(reference, abs=1e-12)
    assert abs(unrooted - reference) > 1e-3


def test_mixed_closed_form_at_zero(rng):
    assert closed_form_mixed(random_params(rng), 0.0) == 2.0


def test_mixed_closed_form_where_signs_agree(rng):
    seen_disagreement = False
    for _ in range(500):
        p, t = random_params(rng), rng.uniform(0, 2 * np.pi)
        reference = bell_quantity(p, MediatorState(), t)
        if mixed_sign_compatible(p, t):
            assert closed_form_mixed(p, t) == pytest.approx(reference, abs=1e-9)
        else:
            seen_disagreement = True
            plus, minus = signed_eigenstate(p, 1, t), signed_eigenstate(p, -1, t)
            assert reference == pytest.approx(abs(plus + minus) / 2, abs=1e-9)
    # the absolute-value identity genuinely fails on part of parameter space
    assert seen_disagreement


def test_mixed_closed_form_classical_bound(rng):
    for _ in range(200):
        p, t = random_params(rng, classical=True), rng.uniform(0, 2 * np.pi)
        assert closed_form_mixed(p, t) <= 2 + 1e-12


@settings(max_examples=300, deadline=None)
@given(params(), states(), time)
def test_general_closed_form_matches_pipeline(p, s, t):
    assert abs(closed_form_general(p, s, t) - bell_quantity(p, s, t)) < 1e-9


@pytest.mark.parametrize("sign", [1, -1])
def test_general_reduces_to_eigenstate(sign, rng):
    for _ in range(50):
        p, t = random_params(rng), rng.uniform(0, 6)
        s = MediatorState(gamma=sign)
        assert closed_form_general(p, s, t) == pytest.approx(closed_form_eigenstate(p, sign, t), abs=1e-9)


def test_general_classical_mediator_bound(rng):
    for _ in range(300):
        p, s, t = random_params(rng, classical=True), random_state(rng), rng.uniform(0, 6)
        value = closed_form_general(p, s, t)
        assert value <= 2 + 1e-9
        assert value == pytest.approx(closed_form_classical(p, t, s.gamma), abs=1e-9)


def test_closed_forms_vectorise():
    p, s = HamiltonianParams(a=0.2, c=1, f=0.5, g=-0.3), MediatorState(beta=1)
    times = np.linspace(0, 4, 9)
    vec = closed_form_general(p, s, times)
    assert np.allclose(vec, [closed_form_general(p, s, t) for t in times], atol=1e-15)
    assert np.allclose(vec, bell_series(p, s, times), atol=1e-12)

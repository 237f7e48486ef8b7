import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from temporal_witness.hamiltonians import HamiltonianParams
from temporal_witness.heisenberg import (
    OmegaParams, closed_form_qx, closed_form_qz, evolve_numeric, sin_over,
)
from temporal_witness.pauli import I4, MZ, QX, QY, QZ

coef = st.floats(-2, 2)
time = st.floats(0, 2 * np.pi)


def random_params(rng):
    return HamiltonianParams(*rng.uniform(-2, 2, 6))


def test_numeric_at_zero_time(rng):
    p = random_params(rng)
    assert np.max(np.abs(evolve_numeric("qz", p, 0.0).matrix - QZ)) < 1e-12
    assert np.max(np.abs(evolve_numeric("qx", p, 0.0).matrix - QX)) < 1e-12


def test_numeric_classical_qz_is_static(rng):
    for t in rng.uniform(0, 10, 5):
        p = HamiltonianParams(a=0.4, b=-1.3, c=0.9, r=0.2)
        assert np.max(np.abs(evolve_numeric("qz", p, t).matrix - QZ)) < 1e-12


def test_numeric_vs_closed_form_reference_point():
    p = HamiltonianParams(c=1, f=1)
    t = np.pi / 4
    assert np.max(np.abs(evolve_numeric("qz", p, t).matrix - closed_form_qz(p, t).matrix)) < 1e-10


def test_closed_forms_at_zero_time(rng):
    p = random_params(rng)
    assert np.array_equal(closed_form_qz(p, 0.0).matrix, QZ)
    assert np.array_equal(closed_form_qx(p, 0.0).matrix, QX)


def test_qz_static_when_commuting():
    p = HamiltonianParams(a=0.8, b=0.8, c=1.5)
    for t in (0.3, 1.7, 5.2):
        assert np.max(np.abs(closed_form_qz(p, t).matrix - QZ)) < 1e-15


@pytest.mark.parametrize("t", [0.1, 0.9, 2.3, 4.0])
def test_qx_pure_zz_coupling(t):
    p = HamiltonianParams(c=1)
    expected = np.cos(2 * t) * QX - np.sin(2 * t) * QY @ MZ
    assert np.max(np.abs(closed_form_qx(p, t).matrix - expected)) < 1e-14
    assert np.max(np.abs(evolve_numeric("qx", p, t).matrix - expected)) < 1e-12


@settings(max_examples=300, deadline=None)
@given(coef, coef, coef, coef, coef, coef, time)
def test_closed_forms_match_numeric(a, b, c, f, g, r, t):
    p = HamiltonianParams(a, b, c, f, g, r)
    for closed, label in ((closed_form_qz, "qz"), (closed_form_qx, "qx")):
        err = np.max(np.abs(closed(p, t).matrix - evolve_numeric(label, p, t).matrix))
        assert err < 1e-9


def test_evolved_descriptors_are_involutions(rng):
    for _ in range(50):
        p, t = random_params(rng), rng.uniform(0, 2 * np.pi)
        for m in (closed_form_qz(p, t).matrix, closed_form_qx(p, t).matrix):
            assert np.max(np.abs(m @ m - I4)) < 1e-9
            assert np.max(np.abs(m - m.conj().T)) < 1e-12
            assert np.all(np.abs(np.linalg.eigvalsh(m)) <= 1 + 1e-9)


def test_total_z_is_conserved(rng):
    for _ in range(20):
        p = random_params(rng)
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        rho = np.outer(v, v.conj()) / np.vdot(v, v)
        values = []
        for t in np.linspace(0, 5, 11):
            total = evolve_numeric("qz", p, t).matrix + evolve_numeric(MZ, p, t).matrix
            assert np.max(np.abs(total - (QZ + MZ))) < 1e-9
            values.append(np.trace(total @ rho).real)
        assert np.ptp(values) < 1e-9


def test_degenerate_limit_is_continuous():
    t = 1.3
    base = HamiltonianParams(a=0.7, b=0.7, c=0.4)
    near = base.replace(f=0.5e-8)  # omega = 1e-8
    assert OmegaParams.from_params(near).omega == pytest.approx(1e-8)
    for closed in (closed_form_qz, closed_form_qx):
        assert np.max(np.abs(closed(near, t).matrix - closed(base, t).matrix)) < 1e-6


def test_sin_over_limit():
    assert sin_over(0.0, 2.5) == pytest.approx(2.5)
    assert sin_over(1e-12, 2.5) == pytest.approx(2.5)
    assert sin_over(3.0, 0.4) == pytest.approx(np.sin(1.2) / 3.0)


def test_omega_identity(rng):
    for _ in range(20):
        p = random_params(rng)
        om = OmegaParams.from_params(p)
        assert om.omega**2 == pytest.approx(om.detuning**2 + 4 * (p.f**2 + p.g**2), abs=1e-12)
        assert om.sum_ab == pytest.approx(p.a + p.b)


def test_unknown_base_label():
    with pytest.raises(ValueError):
        evolve_numeric("qy", HamiltonianParams(), 0.1)

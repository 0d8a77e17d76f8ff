import importlib

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qutrit_teleport.channels import ChannelKind, ChannelSpec, three_qutrit_kraus
from qutrit_teleport.closed_form import FormulaKey, closed_form_fidelity, reconciled_fidelity
from qutrit_teleport.hypergraph import (
    OMEGA,
    PLUS,
    StateParams,
    canonical_hypergraphs,
    get_hypergraph,
    hypergraph_state,
    input_state,
)
from qutrit_teleport.tensor import ket
from qutrit_teleport.teleport import corrections, measurement_basis, teleport, teleport_fidelity

teleport_module = importlib.import_module("qutrit_teleport.teleport")


def vector_oracle(params, h, spec):
    """Fidelity from pure-state branches: no density matrices, no partial traces."""
    phi = input_state(params).amplitudes
    psi_h = hypergraph_state(get_hypergraph(h)).amplitudes
    total = 0.0
    for k in three_qutrit_kraus(spec).operators:
        branch = k @ psi_h
        joint = np.kron(phi, branch).reshape(27, 3)
        for psi, lam in zip(measurement_basis().kets, corrections()):
            bob = lam @ (psi.conj() @ joint)
            total += abs(np.vdot(phi, bob)) ** 2
    return total


def test_basis_orthonormal():
    kets = measurement_basis().kets
    gram = np.array([[np.vdot(a, b) for b in kets] for a in kets])
    assert np.abs(gram - np.eye(4)).max() < 1e-12


def test_projectors():
    ps = measurement_basis().projectors
    for i, m in enumerate(ps):
        assert np.abs(m @ m - m).max() < 1e-12
        assert np.abs(m - m.conj().T).max() < 1e-12
        for j, n in enumerate(ps):
            if i != j:
                assert np.abs(m @ n).max() < 1e-12
    # four projectors do not resolve the identity on 27 dimensions
    assert abs(np.trace(sum(ps)) - 4) < 1e-12


def test_m4_on_012():
    m4 = measurement_basis().projectors[3]
    v = m4 @ ket(0, 1, 2)
    psi4 = (ket(0, 1, 2) + OMEGA * ket(1, 2, 0) + OMEGA**2 * ket(2, 0, 1)) / np.sqrt(3)
    expected = psi4 * np.vdot(psi4, ket(0, 1, 2))
    assert np.abs(v - expected).max() < 1e-12


def test_corrections_unitary():
    for u in corrections():
        assert np.abs(u.conj().T @ u - np.eye(3)).max() < 1e-14


def test_outcome_structure():
    out = teleport(PLUS, 5, ChannelSpec(ChannelKind.DEPOLARIZING, p=0.3))
    assert len(out.probabilities) == 4
    assert min(out.probabilities) >= -1e-12
    assert sum(out.probabilities) <= 1 + 1e-10
    for p, rho, f in zip(out.probabilities, out.conditional_states, out.conditional_fidelities):
        if p > 1e-10:
            assert abs(np.trace(rho.matrix) - 1) < 1e-10
            rho.validate()
            assert -1e-10 <= f <= 1 + 1e-10
    manual = sum(p * f for p, f in zip(out.probabilities, out.conditional_fidelities))
    assert abs(manual - out.fidelity) < 1e-15
    reversed_sum = sum(p * f for p, f in zip(out.probabilities[::-1], out.conditional_fidelities[::-1]))
    assert abs(reversed_sum - out.fidelity) < 1e-15


def test_low_probability_outcomes_dropped(monkeypatch):
    # raise the cut-off so that the rarest outcome (P = 1/54) falls below it
    monkeypatch.setattr(teleport_module, "MIN_PROBABILITY", 0.02)
    out = teleport(StateParams(np.pi / 4, np.pi / 2), 1, ChannelSpec(ChannelKind.QUTRIT_FLIP))
    dropped = [i for i, p in enumerate(out.probabilities) if p <= 0.02]
    assert dropped == [3]
    kept = sum(p * f for p, f in zip(out.probabilities, out.conditional_fidelities) if f is not None)
    assert out.fidelity == kept
    for i in dropped:
        assert out.conditional_states[i] is None and out.conditional_fidelities[i] is None


@pytest.mark.parametrize("h", range(1, 6))
def test_matches_vector_oracle(h):
    rng = np.random.default_rng(h)
    for kind in [ChannelKind.QUTRIT_FLIP, ChannelKind.AD_MARKOV, ChannelKind.DEPHASING_MARKOV]:
        t1, t2 = rng.uniform(-3, 3, 2)
        spec = ChannelSpec(kind, p=rng.uniform())
        params = StateParams(t1, t2)
        assert abs(teleport_fidelity(params, h, spec) - vector_oracle(params, h, spec)) < 1e-12


def test_noiseless_channels_agree():
    rng = np.random.default_rng(11)
    for h in canonical_hypergraphs():
        params = StateParams(*rng.uniform(-3, 3, 2))
        vals = [teleport_fidelity(params, h, ChannelSpec(k)) for k in ChannelKind]
        assert max(vals) - min(vals) < 1e-12


def test_depolarizing_example_against_closed_form():
    key = FormulaKey(ChannelKind.DEPOLARIZING, 2)
    sim = teleport_fidelity(StateParams(0.7, 0.3), 2, ChannelSpec(ChannelKind.DEPOLARIZING, p=0.4))
    assert abs(sim - reconciled_fidelity(key, 0.7, 0.3, 0.4)) < 1e-9
    # the printed expression is ten times the protocol value
    assert abs(closed_form_fidelity(key, 0.7, 0.3, 0.4) - 10 * sim) < 1e-9


def test_plus_h5_flip_linear():
    # the simulated protocol gives (69 - 19 p) / 729 for this configuration
    for p in (0.0, 0.25, 1.0):
        f = teleport_fidelity(PLUS, 5, ChannelSpec(ChannelKind.QUTRIT_FLIP, p=p))
        assert abs(f - (69 - 19 * p) / 729) < 1e-12


@settings(max_examples=15, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 3), st.integers(1, 5), st.floats(0, 1))
def test_fidelity_bounds(t1, t2, h, p):
    out = teleport(StateParams(t1, t2), h, ChannelSpec(ChannelKind.DEPOLARIZING, p=p))
    assert -1e-12 <= out.fidelity <= sum(out.probabilities) + 1e-10

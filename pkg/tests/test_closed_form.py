import numpy as np
import pytest

from qutrit_teleport.channels import ChannelKind, ChannelSpec, kappa_p, lambda_t
from qutrit_teleport.closed_form import (
    FORMULAS,
    KNOWN_DEVIATIONS,
    FormulaKey,
    closed_form_fidelity,
    formula_catalog,
    reconciled_fidelity,
)
from qutrit_teleport.errors import DomainError, ParameterError, UnsupportedCombinationError
from qutrit_teleport.hypergraph import PLUS, StateParams
from qutrit_teleport.teleport import teleport_fidelity


def test_catalog_complete():
    cat = formula_catalog()
    assert len(cat) == 40
    keys = {e.key for e in cat}
    assert len(keys) == 40
    assert FormulaKey(ChannelKind.QUTRIT_FLIP, 1) in keys
    assert FormulaKey(ChannelKind.DEPOLARIZATION_NONMARKOV, 5) in keys
    assert len(FORMULAS) == 30


def test_catalog_delegation():
    by_key = {e.key: e for e in formula_catalog()}
    e = by_key[FormulaKey("ad-nonmarkov", 3)]
    assert e.substitution == "p = lambda(t)" and e.source.startswith("ad-markov")
    e = by_key[FormulaKey("dephasing-nonmarkov", 2)]
    assert e.substitution == "p = kappa(p)" and e.source.startswith("dephasing-markov")


def test_delegated_keys_substitute():
    t, p = 1.7, 0.3
    a = closed_form_fidelity(FormulaKey("ad-nonmarkov", 4), 0.4, 1.1, t)
    b = closed_form_fidelity(FormulaKey("ad-markov", 4), 0.4, 1.1, lambda_t(t))
    assert a == b
    a = closed_form_fidelity(FormulaKey("dephasing-nonmarkov", 4), 0.4, 1.1, (p, 0.5, 100.0))
    b = closed_form_fidelity(FormulaKey("dephasing-markov", 4), 0.4, 1.1, kappa_p(p))
    assert a == b


def test_errors():
    with pytest.raises(UnsupportedCombinationError):
        closed_form_fidelity(FormulaKey("qutrit-flip", 6), 0, 0, 0.1)
    with pytest.raises(DomainError):
        closed_form_fidelity(FormulaKey("ad-markov", 1), 0, 0, 1.5)
    with pytest.raises(DomainError):
        closed_form_fidelity(FormulaKey("depolarizing", 1), 0, 0, (0.1, 0.2, 0.3))
    with pytest.raises(ParameterError):
        closed_form_fidelity(FormulaKey("dephasing-nonmarkov", 1), 0, 0, 0.8)


def test_flip_affine_in_p():
    rng = np.random.default_rng(5)
    for i in range(1, 6):
        key = FormulaKey("qutrit-flip", i)
        t1, t2 = rng.uniform(-3, 3, 2)
        f0, fh, f1 = (closed_form_fidelity(key, t1, t2, p) for p in (0, 0.5, 1))
        assert abs(fh - (f0 + f1) / 2) < 1e-12


def test_printed_plus_h5_flip():
    # printed expression at the PLUS state reduces to 10 (69 - 19 p) / 729
    key = FormulaKey("qutrit-flip", 5)
    for p in (0.0, 0.5, 1.0):
        f = closed_form_fidelity(key, PLUS.theta1, PLUS.theta2, p)
        assert abs(f - 10 * (69 - 19 * p) / 729) < 1e-12


def test_known_deviation_ratios_reproduce():
    rng = np.random.default_rng(9)
    assert len(KNOWN_DEVIATIONS) == 36
    for entry in formula_catalog():
        key = entry.key
        ratio = KNOWN_DEVIATIONS.get(key, 1.0)
        t1, t2 = rng.uniform(-3, 3, 2)
        if key.channel_kind is ChannelKind.AD_NONMARKOV:
            spec, param = ChannelSpec(key.channel_kind, t=1.3), 1.3
        else:
            spec, param = ChannelSpec(key.channel_kind, p=0.3), 0.3
        sim = teleport_fidelity(StateParams(t1, t2), key.hypergraph_index, spec)
        assert abs(closed_form_fidelity(key, t1, t2, param) - ratio * sim) < 1e-9
        assert abs(reconciled_fidelity(key, t1, t2, param) - sim) < 1e-10


def test_exact_keys():
    exact = {FormulaKey(k, i) for k in ("ad-markov", "ad-nonmarkov") for i in (1, 2)}
    assert exact.isdisjoint(KNOWN_DEVIATIONS)


def test_absolute_value_terms_literal():
    # |9 - 8p| is smooth on [0, 1]; the depolarizing expressions are polynomial there
    key = FormulaKey("depolarizing", 3)
    ps = np.linspace(0, 1, 9)
    vals = [closed_form_fidelity(key, 1.1, 0.4, p) for p in ps]
    coef = np.polyfit(ps, vals, 2)
    assert np.abs(np.polyval(coef, ps) - vals).max() < 1e-12

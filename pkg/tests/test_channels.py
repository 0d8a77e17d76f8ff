import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qutrit_teleport.channels import (
    I3,
    OMEGA,
    ChannelKind,
    ChannelSpec,
    KrausSet,
    apply_channel,
    kappa_p,
    kappa_raw,
    lambda_t,
    lift_three_qutrit,
    single_qutrit_kraus,
    three_qutrit_kraus,
    weyl,
)
from qutrit_teleport.errors import (
    DimensionError,
    LiftingError,
    NumericalError,
    ParameterError,
)
from qutrit_teleport.hypergraph import get_hypergraph, hypergraph_state
from qutrit_teleport.tensor import DensityMatrix

# 50-digit mpmath evaluations of the same closed forms, rounded to double
LAMBDA_ORACLE = {0.25: 0.26101123770402418, 1.0: 0.94588216179506132, 3.0: 0.94763861774838676}
KAPPA_ORACLE = {0.1: 0.055885111117446577, 0.3: 0.20059841879535691}

P_GRID = np.linspace(0, 1, 11)
MARKOV = [
    ChannelKind.QUTRIT_FLIP,
    ChannelKind.QUTRIT_PHASE_FLIP,
    ChannelKind.DEPOLARIZING,
    ChannelKind.AD_MARKOV,
    ChannelKind.DEPHASING_MARKOV,
    ChannelKind.DEPOLARIZATION_NONMARKOV,
]
SIZES = {
    ChannelKind.QUTRIT_FLIP: 3,
    ChannelKind.QUTRIT_PHASE_FLIP: 3,
    ChannelKind.DEPOLARIZING: 9,
    ChannelKind.AD_MARKOV: 3,
    ChannelKind.AD_NONMARKOV: 3,
    ChannelKind.DEPHASING_MARKOV: 9,
    ChannelKind.DEPHASING_NONMARKOV: 9,
    ChannelKind.DEPOLARIZATION_NONMARKOV: 9,
}


def test_weyl_examples():
    assert np.abs(weyl(0, 0) - I3).max() == 0
    assert np.abs(weyl(1, 0) - np.diag([1, OMEGA, OMEGA**2])).max() < 1e-15
    w22 = np.array([[0, 0, 1], [OMEGA**2, 0, 0], [0, OMEGA, 0]])
    assert np.abs(weyl(2, 2) - w22).max() < 1e-15
    assert np.abs(weyl(0, 1) - np.roll(I3, 1, axis=1)).max() == 0


@pytest.mark.parametrize("r", range(3))
@pytest.mark.parametrize("s", range(3))
def test_weyl_unitary(r, s):
    w = weyl(r, s)
    assert np.abs(w.conj().T @ w - I3).max() < 1e-14


def test_weyl_bad_index():
    with pytest.raises(ParameterError):
        weyl(3, 0)


def test_lambda_oracle_values():
    for t, val in LAMBDA_ORACLE.items():
        assert abs(lambda_t(t, 1, 10) - val) < 1e-12
    assert lambda_t(0) == 0


def test_lambda_critical_damping_limit():
    # l = 0 exactly when g = 2 gamma; neighbouring values must agree
    at = lambda_t(1.3, 2.0, 1.0)
    near = lambda_t(1.3, 2.0, 1.0 - 1e-9)
    assert abs(at - near) < 1e-7
    assert abs(at - (1 - np.exp(-2.6) * (1 + 1.3) ** 2)) < 1e-14


def test_lambda_overdamped_is_monotone():
    vals = [lambda_t(t, 5.0, 1.0) for t in np.linspace(0, 5, 60)]
    assert np.all(np.diff(vals) >= 0)


def test_lambda_rejects_negative():
    with pytest.raises(ParameterError):
        lambda_t(-1)


def test_kappa_values():
    assert kappa_p(0) == 0
    assert kappa_p(0.5) == 0.5
    for p, val in KAPPA_ORACLE.items():
        assert abs(kappa_p(p) - val) < 1e-12


def test_kappa_out_of_range():
    assert kappa_raw(0.8) > 1
    with pytest.raises(ParameterError):
        kappa_p(0.8)
    with pytest.raises(ParameterError):
        ChannelSpec(ChannelKind.DEPHASING_NONMARKOV, p=0.8)


def test_kappa_singular():
    # 1 + eta (1 - 2p) = 0 at p = 1, eta = 1
    with pytest.raises(ParameterError):
        kappa_p(1.0, eta=1.0, beta=3.0)


def test_spec_validation():
    with pytest.raises(ParameterError):
        ChannelSpec(ChannelKind.QUTRIT_FLIP, p=1.5)
    with pytest.raises(ParameterError):
        ChannelSpec(ChannelKind.AD_NONMARKOV, t=-0.1)
    with pytest.raises(ParameterError):
        ChannelSpec("no-such-channel")
    assert ChannelSpec("ad-markov", p=0.2).kind is ChannelKind.AD_MARKOV


@pytest.mark.parametrize("kind", list(ChannelKind), ids=lambda k: k.value)
def test_family_sizes_and_normalization(kind):
    base = single_qutrit_kraus(ChannelSpec(kind, p=0.3, t=0.7))
    assert len(base) == SIZES[kind]
    assert np.abs(base.completeness() - I3 / 3).max() < 1e-12


def test_flip_noiseless():
    ops = single_qutrit_kraus(ChannelSpec(ChannelKind.QUTRIT_FLIP)).operators
    assert np.abs(ops[0] - I3 / np.sqrt(3)).max() < 1e-15
    assert np.abs(ops[1]).max() == 0 and np.abs(ops[2]).max() == 0


def test_amplitude_damping_full():
    ops = single_qutrit_kraus(ChannelSpec(ChannelKind.AD_MARKOV, p=1)).operators
    s = 1 / np.sqrt(3)
    assert np.abs(ops[0] - s * np.diag([1, 0, 0])).max() < 1e-15
    assert abs(ops[1][0, 1] - s) < 1e-15 and abs(ops[2][0, 2] - s) < 1e-15


def test_ad_nonmarkov_is_ad_at_lambda():
    t = 0.6
    lam = lambda_t(t)
    a = single_qutrit_kraus(ChannelSpec(ChannelKind.AD_NONMARKOV, t=t))
    b = single_qutrit_kraus(ChannelSpec(ChannelKind.AD_MARKOV, p=lam))
    for x, y in zip(a.operators, b.operators):
        assert np.abs(x - y).max() == 0


def test_dephasing_nonmarkov_eta_zero():
    for p in P_GRID:
        a = single_qutrit_kraus(ChannelSpec(ChannelKind.DEPHASING_NONMARKOV, p=p, eta=0))
        b = single_qutrit_kraus(ChannelSpec(ChannelKind.DEPHASING_MARKOV, p=p))
        for x, y in zip(a.operators, b.operators):
            assert np.abs(x - y).max() < 1e-15


def test_lift_of_scaled_identity():
    lifted = lift_three_qutrit(KrausSet((I3 / np.sqrt(3),), 3, total=1 / 3))
    assert len(lifted) == 3
    for k in lifted.operators:
        assert np.abs(k - np.eye(27) / np.sqrt(3)).max() < 1e-15


def test_lift_placement():
    base = single_qutrit_kraus(ChannelSpec(ChannelKind.QUTRIT_FLIP, p=0.4))
    lifted = lift_three_qutrit(base)
    assert len(lifted) == 9
    k = base.operators[1]
    assert np.abs(lifted.operators[1] - np.kron(k, np.eye(9))).max() == 0
    assert np.abs(lifted.operators[4] - np.kron(np.kron(I3, k), I3)).max() == 0
    assert np.abs(lifted.operators[7] - np.kron(np.eye(9), k)).max() == 0


def test_lift_rejects_unit_family():
    with pytest.raises(LiftingError):
        lift_three_qutrit(KrausSet((I3,), 3))


def test_kraus_set_completeness_enforced():
    with pytest.raises(NumericalError):
        KrausSet((0.9 * I3,), 3)
    with pytest.raises(DimensionError):
        KrausSet((np.eye(2),), 3)


@pytest.mark.parametrize("kind", MARKOV, ids=lambda k: k.value)
def test_lifted_completeness_grid(kind):
    for p in P_GRID:
        assert three_qutrit_kraus(ChannelSpec(kind, p=p)).completeness_error() < 1e-12


def test_nonmarkov_completeness_grids():
    for t in np.arange(0, 5.01, 0.25):
        assert three_qutrit_kraus(ChannelSpec(ChannelKind.AD_NONMARKOV, t=t)).completeness_error() < 1e-12
    for p in P_GRID:
        try:
            spec = ChannelSpec(ChannelKind.DEPHASING_NONMARKOV, p=p)
        except ParameterError:
            continue
        assert three_qutrit_kraus(spec).completeness_error() < 1e-12


def brute_force_apply(rho, ops):
    n = rho.shape[0]
    out = np.zeros((n, n), dtype=complex)
    for k in ops:
        kd = k.conj().T
        for i in range(n):
            for j in range(n):
                acc = 0
                for a in range(n):
                    if k[i, a] == 0:
                        continue
                    for b in range(n):
                        acc += k[i, a] * rho[a, b] * kd[b, j]
                out[i, j] += acc
    return out


def test_apply_channel_matches_loop_oracle():
    rho = hypergraph_state(get_hypergraph(1)).density_matrix()
    kraus = three_qutrit_kraus(ChannelSpec(ChannelKind.QUTRIT_FLIP, p=0.5))
    out = apply_channel(rho, kraus)
    assert np.abs(out.matrix - brute_force_apply(rho.matrix, kraus.operators)).max() < 1e-14
    assert abs(np.trace(out.matrix) - 1) < 1e-10
    out.validate()


def test_apply_noiseless_is_identity():
    rho = hypergraph_state(get_hypergraph(5)).density_matrix()
    out = apply_channel(rho, three_qutrit_kraus(ChannelSpec(ChannelKind.QUTRIT_FLIP, p=0)))
    assert np.abs(out.matrix - rho.matrix).max() < 1e-12


def test_apply_dimension_mismatch():
    rho = DensityMatrix(I3 / 3, ("a",))
    with pytest.raises(DimensionError):
        apply_channel(rho, three_qutrit_kraus(ChannelSpec(ChannelKind.DEPOLARIZING, p=0.1)))


@settings(max_examples=20, deadline=None)
@given(
    st.sampled_from(MARKOV),
    st.floats(0, 1),
    st.floats(-3, 3),
    st.integers(0, 2**32 - 1),
)
def test_apply_channel_linear(kind, p, c, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(27, 27)) + 1j * rng.normal(size=(27, 27))
    b = rng.normal(size=(27, 27)) + 1j * rng.normal(size=(27, 27))
    a, b = a + a.conj().T, b + b.conj().T
    kraus = three_qutrit_kraus(ChannelSpec(kind, p=p))
    labels = ("0", "1", "2")

    def ch(m):
        return apply_channel(DensityMatrix(m, labels, normalized=False), kraus).matrix

    lhs = ch(a + c * b)
    rhs = ch(a) + c * ch(b)
    assert np.abs(lhs - rhs).max() < 1e-11
    assert abs(np.trace(ch(a)) - np.trace(a)) < 1e-10

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qutrit_teleport.errors import DimensionError, LabelError, NumericalError, ShapeError
from qutrit_teleport.tensor import (
    MAX_DIM,
    DensityMatrix,
    PureState,
    dagger,
    expectation,
    fidelity_pure_mixed,
    ket,
    kron,
    partial_trace,
    trace,
)


def random_state(rng, n):
    v = rng.normal(size=3**n) + 1j * rng.normal(size=3**n)
    return v / np.linalg.norm(v)


def random_rho(rng, n, rank=3):
    vs = [random_state(rng, n) for _ in range(rank)]
    w = rng.uniform(size=rank)
    w /= w.sum()
    return sum(wi * np.outer(v, v.conj()) for wi, v in zip(w, vs))


def test_kron_matches_numpy():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    b = rng.normal(size=(9, 9))
    assert np.abs(kron(a, b) - np.kron(a, b)).max() < 1e-15


def test_kron_size_limit():
    big = np.eye(3**4)
    kron(big, big)  # exactly at the limit
    with pytest.raises(DimensionError):
        kron(big, np.eye(3**5))
    assert MAX_DIM == 3**8


def test_dagger_and_trace():
    m = np.array([[1, 2j], [3, 4 - 1j]])
    assert np.abs(dagger(m) - np.array([[1, 3], [-2j, 4 + 1j]])).max() == 0
    assert trace(m) == 5 - 1j
    with pytest.raises(ShapeError):
        trace(np.ones((2, 3)))


def test_nan_rejected():
    with pytest.raises(NumericalError):
        kron(np.array([[np.nan]]), np.eye(3))


def test_pure_state_validation():
    with pytest.raises(NumericalError):
        PureState(np.array([1, 1, 0]), ("a",))
    with pytest.raises(DimensionError):
        PureState(np.array([1, 0]), ("a",))
    with pytest.raises(LabelError):
        PureState(ket(0, 0), ("a", "a"))
    s = PureState(ket(1), ("a",))
    with pytest.raises(ValueError):
        s.amplitudes[0] = 1


def test_density_matrix_checks():
    with pytest.raises(NumericalError):
        DensityMatrix(np.diag([0.5, 0.5, 0.5]), ("a",))
    with pytest.raises(NumericalError):
        DensityMatrix(np.diag([0.5, 0.5, 0]) + np.eye(3, k=1) * 0.1, ("a",))
    DensityMatrix(np.diag([0.5, 0.5, 0.5]), ("a",), normalized=False)
    with pytest.raises(NumericalError):
        DensityMatrix(np.diag([1.5, -0.5, 0]), ("a",)).validate()


def test_partial_trace_product_state():
    rng = np.random.default_rng(1)
    ra, rb = random_rho(rng, 1), random_rho(rng, 2)
    rho = DensityMatrix(np.kron(ra, rb), ("a", "b", "c"))
    assert np.abs(partial_trace(rho, {"b", "c"}).matrix - ra).max() < 1e-14
    assert np.abs(partial_trace(rho, {"a"}).matrix - rb).max() < 1e-14
    assert partial_trace(rho, set()) is rho


def test_partial_trace_middle_register():
    rng = np.random.default_rng(2)
    r1, r2, r3 = (random_rho(rng, 1) for _ in range(3))
    rho = DensityMatrix(np.kron(np.kron(r1, r2), r3), ("x", "y", "z"))
    red = partial_trace(rho, {"y"})
    assert red.labels == ("x", "z")
    assert np.abs(red.matrix - np.kron(r1, r3)).max() < 1e-14


def test_partial_trace_against_loop_oracle():
    rng = np.random.default_rng(3)
    m = random_rho(rng, 4)
    rho = DensityMatrix(m, ("a", "0", "1", "2"))
    t = m.reshape([3] * 8)
    oracle = np.zeros((3, 3), dtype=complex)
    for i in range(3):
        for j in range(3):
            for a in range(3):
                for b in range(3):
                    for c in range(3):
                        oracle[i, j] += t[a, b, c, i, a, b, c, j]
    got = partial_trace(rho, {"a", "0", "1"}).matrix
    assert np.abs(got - oracle).max() < 1e-14


def test_partial_trace_bad_labels():
    rho = DensityMatrix(np.eye(9) / 9, ("a", "b"))
    with pytest.raises(LabelError):
        partial_trace(rho, {"q"})
    with pytest.raises(LabelError):
        partial_trace(rho, {"a", "b"})


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sets(st.sampled_from("abc"), max_size=2))
def test_partial_trace_keeps_trace(seed, discard):
    rho = DensityMatrix(random_rho(np.random.default_rng(seed), 3), ("a", "b", "c"))
    red = partial_trace(rho, discard)
    assert abs(np.trace(red.matrix) - 1) < 1e-12
    red.validate()


def test_fidelity_pure_mixed():
    phi = PureState(ket(0), ("a",))
    assert fidelity_pure_mixed(phi, phi.density_matrix()) == pytest.approx(1.0)
    mixed = DensityMatrix(np.eye(3) / 3, ("a",))
    assert abs(expectation(phi, mixed) - 1 / 3) < 1e-15
    assert abs(fidelity_pure_mixed(phi, mixed) - np.sqrt(1 / 3)) < 1e-15
    with pytest.raises(DimensionError):
        expectation(phi, DensityMatrix(np.eye(9) / 9, ("a", "b")))

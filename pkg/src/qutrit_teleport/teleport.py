"""Teleporting one qutrit through a noisy three-qutrit hypergraph state.

Registers are ordered ``(a, 0, 1, 2)``: ``a`` holds the input state, qutrits
0 and 1 of the resource go to Alice, and qutrit 2 goes to Bob. Alice projects
``(a, 0, 1)`` onto one of four states ``psi_l``; Bob applies the matching
correction ``Lambda_l`` to his qutrit.

The four ``psi_l`` span only a 4-dimensional subspace of the 27-dimensional
measurement space, so the outcome probabilities do not sum to one and the
aggregate fidelity ``F = sum_l P_l F_l`` is *not* renormalized.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import ChannelSpec, apply_channel, three_qutrit_kraus
from .hypergraph import Hypergraph, StateParams, get_hypergraph, hypergraph_state, input_state
from .tensor import D, DensityMatrix, expectation, ket, kron, partial_trace

OMEGA = np.exp(2j * np.pi / 3)
MIN_PROBABILITY = 1e-14

ALICE = ("a", "0", "1")
BOB = ("2",)


def _psi(kets, phases) -> np.ndarray:
    v = sum(ph * ket(*k) for k, ph in zip(kets, phases))
    return v / np.sqrt(3)


_GHZ = [(0, 0, 0), (1, 1, 1), (2, 2, 2)]
_SHIFT = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
_FLAT = [1, 1, 1]
_PHASED = [1, OMEGA, OMEGA**2]

MEASUREMENT_KETS = (
    _psi(_GHZ, _FLAT),
    _psi(_GHZ, _PHASED),
    _psi(_SHIFT, _FLAT),
    _psi(_SHIFT, _PHASED),
)

CORRECTIONS = (
    np.eye(3, dtype=complex),
    np.diag([1, -1, 1]).astype(complex),
    np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]], dtype=complex),
    np.array([[0, -1, 0], [1, 0, 0], [0, 0, 1]], dtype=complex),
)


@dataclass(frozen=True)
class MeasurementBasis:
    """Rank-one projectors |psi_l><psi_l| on Alice's three qutrits."""

    kets: tuple[np.ndarray, ...]

    @property
    def projectors(self) -> tuple[np.ndarray, ...]:
        return tuple(np.outer(v, v.conj()) for v in self.kets)

    def __len__(self):
        return len(self.kets)


def measurement_basis() -> MeasurementBasis:
    return MeasurementBasis(MEASUREMENT_KETS)


def corrections() -> tuple[np.ndarray, ...]:
    return CORRECTIONS


@dataclass(frozen=True)
class TeleportOutcome:
    probabilities: tuple[float, ...]
    conditional_states: tuple[DensityMatrix | None, ...]
    conditional_fidelities: tuple[float | None, ...]
    aggregate: float

    @property
    def fidelity(self) -> float:
        return self.aggregate


def noisy_resource(h: Hypergraph, channel: ChannelSpec) -> DensityMatrix:
    rho = hypergraph_state(h).density_matrix()
    return apply_channel(rho, three_qutrit_kraus(channel))


def teleport(params: StateParams, hypergraph: Hypergraph | int | str, channel: ChannelSpec) -> TeleportOutcome:
    if not isinstance(hypergraph, Hypergraph):
        hypergraph = get_hypergraph(hypergraph)
    phi = input_state(params)
    rho = phi.density_matrix().tensor(noisy_resource(hypergraph, channel))

    probs, states, fids = [], [], []
    for m, lam in zip(measurement_basis().projectors, CORRECTIONS):
        proj = kron(m, np.eye(D))
        post = DensityMatrix(proj @ rho.matrix @ proj, rho.labels, normalized=False)
        rho_b = partial_trace(post, ALICE)
        p = max(float(np.trace(rho_b.matrix).real), 0.0)
        probs.append(p)
        if p <= MIN_PROBABILITY:
            states.append(None)
            fids.append(None)
            continue
        corrected = lam @ (rho_b.matrix / p) @ lam.conj().T
        out = DensityMatrix((corrected + corrected.conj().T) / 2, BOB)
        states.append(out)
        fids.append(expectation(phi, out))

    total = sum(p * f for p, f in zip(probs, fids) if f is not None)
    return TeleportOutcome(tuple(probs), tuple(states), tuple(fids), float(total))


def teleport_fidelity(params: StateParams, hypergraph, channel: ChannelSpec) -> float:
    return teleport(params, hypergraph, channel).aggregate

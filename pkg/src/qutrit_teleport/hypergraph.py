"""Three-vertex qutrit hypergraph states.

A hypergraph state starts from |+++> and picks up a phase from one
generalized controlled-Z gate per hyperedge. On qutrits these gates are
*not* symmetric under exchanging vertices: for the edge ``(c, t)`` the basis
ket is multiplied by ``omega**q_t`` only when ``q_c == 2``, so ``(0, 1)`` and
``(1, 0)`` are different gates. Hyperedges are therefore stored as ordered
tuples whose last entry is the target.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import numpy as np

from .errors import ArityError, LabelError, ParameterError
from .tensor import D, PureState

OMEGA = np.exp(2j * np.pi / 3)
AMPLITUDE = 1 / np.sqrt(27)

VERTICES = (0, 1, 2)
REGISTER_LABELS = ("0", "1", "2")


class GateKind(Enum):
    Z3 = 1
    CZ3 = 2
    CCZ3 = 3


@dataclass(frozen=True)
class GateSpec:
    """A diagonal phase gate; ``targets`` lists controls first, target last."""

    kind: GateKind
    targets: tuple[int, ...]

    def __post_init__(self):
        targets = tuple(int(v) for v in self.targets)
        if len(targets) != self.kind.value:
            raise ArityError(f"{self.kind.name} acts on {self.kind.value} vertices, got {targets}")
        if len(set(targets)) != len(targets):
            raise ArityError(f"repeated vertex in {targets}")
        for v in targets:
            if v not in VERTICES:
                raise ArityError(f"vertex {v} is not one of {VERTICES}")
        object.__setattr__(self, "targets", targets)

    @property
    def controls(self) -> tuple[int, ...]:
        return self.targets[:-1]

    @property
    def target(self) -> int:
        return self.targets[-1]


_KIND_BY_ARITY = {1: GateKind.Z3, 2: GateKind.CZ3, 3: GateKind.CCZ3}


@dataclass(frozen=True)
class Hypergraph:
    """Loop-free hypergraph on vertices {0, 1, 2}.

    Each hyperedge is an ordered tuple of 2 or 3 distinct vertices. Repeating
    the exact same tuple has no effect (it collapses to one edge).
    """

    hyperedges: tuple[tuple[int, ...], ...] = ()
    name: str = ""

    def __post_init__(self):
        seen: list[tuple[int, ...]] = []
        for edge in self.hyperedges:
            edge = tuple(int(v) for v in edge)
            if len(edge) == 1:
                raise ArityError(f"loops are not allowed: {edge}")
            if len(edge) not in (2, 3):
                raise ArityError(f"hyperedge must have 2 or 3 vertices, got {edge}")
            GateSpec(_KIND_BY_ARITY[len(edge)], edge)
            if edge not in seen:
                seen.append(edge)
        object.__setattr__(self, "hyperedges", tuple(seen))

    @property
    def vertices(self) -> tuple[int, ...]:
        return VERTICES

    def gates(self) -> list[GateSpec]:
        return [GateSpec(_KIND_BY_ARITY[len(e)], e) for e in self.hyperedges]


@dataclass(frozen=True)
class StateParams:
    """Angles of the input qutrit cos(t1)|0> + sin(t1)cos(t2)|1> + sin(t1)sin(t2)|2>."""

    theta1: float
    theta2: float

    def __post_init__(self):
        for name in ("theta1", "theta2"):
            v = float(getattr(self, name))
            if not np.isfinite(v):
                raise ParameterError(f"{name} must be finite, got {v}")
            object.__setattr__(self, name, v)

    @classmethod
    def linked(cls, theta2: float) -> "StateParams":
        """The one-parameter family with theta1 = 3 * theta2."""
        return cls(3.0 * theta2, theta2)


PLUS = StateParams(float(np.arcsin(np.sqrt(2 / 3))), np.pi / 4)
ZERO_TWO = StateParams(np.pi / 4, np.pi / 2)
ZERO = StateParams(0.0, np.pi / 2)

PRESETS = {"plus": PLUS, "zero2": ZERO_TWO, "zero": ZERO}


def input_state(params: StateParams) -> PureState:
    t1, t2 = params.theta1, params.theta2
    amp = np.array([np.cos(t1), np.sin(t1) * np.cos(t2), np.sin(t1) * np.sin(t2)])
    return PureState(amp, ("a",))


def _digits(n: int) -> np.ndarray:
    """Rows of base-3 digits for every basis index of ``n`` qutrits."""
    return np.array(list(itertools.product(range(D), repeat=n)))


def gate_phases(spec: GateSpec, num_qutrits: int = 3) -> np.ndarray:
    """Diagonal of ``gate_matrix`` as a vector of length 3**num_qutrits."""
    if max(spec.targets) >= num_qutrits:
        raise ArityError(f"gate on {spec.targets} does not fit {num_qutrits} qutrits")
    q = _digits(num_qutrits)
    active = np.ones(len(q), dtype=bool)
    for c in spec.controls:
        active &= q[:, c] == 2
    return np.where(active, OMEGA ** q[:, spec.target], 1.0 + 0j)


def gate_matrix(spec: GateSpec, num_qutrits: int = 3) -> np.ndarray:
    return np.diag(gate_phases(spec, num_qutrits))


def apply_gates(gates: Iterable[GateSpec], amplitudes=None) -> np.ndarray:
    """Apply diagonal gates, in the given order, to |+++> (or ``amplitudes``)."""
    if amplitudes is None:
        amp = np.full(D**3, AMPLITUDE, dtype=complex)
    else:
        amp = np.array(amplitudes, dtype=complex)
    for g in gates:
        amp = gate_matrix(g) @ amp
    return amp


def hypergraph_state(h: Hypergraph) -> PureState:
    return PureState(apply_gates(h.gates()), REGISTER_LABELS)


CANONICAL_EDGES = {
    1: ((0, 1, 2),),
    2: ((0, 1), (1, 2)),
    3: ((0, 1), (1, 2), (2, 0)),
    4: ((0, 1), (1, 2), (0, 1, 2)),
    5: ((0, 1), (1, 2), (2, 0), (0, 1, 2)),
}


def canonical_hypergraphs() -> list[Hypergraph]:
    """H1..H5 in order; ``canonical_hypergraphs()[i - 1]`` is ``H{i}``."""
    return [Hypergraph(edges, f"H{i}") for i, edges in CANONICAL_EDGES.items()]


def get_hypergraph(key: int | str) -> Hypergraph:
    """Look up a canonical hypergraph by index 1-5 or by name "H1".."H5"."""
    if isinstance(key, str):
        s = key.strip().upper()
        if not (s.startswith("H") and s[1:].isdigit()):
            raise LabelError(f"unknown hypergraph name {key!r}")
        key = int(s[1:])
    if key not in CANONICAL_EDGES:
        raise LabelError(f"hypergraph index must be 1..5, got {key}")
    return Hypergraph(CANONICAL_EDGES[key], f"H{key}")

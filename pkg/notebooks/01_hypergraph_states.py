"""
Qutrit hypergraph states
========================

Build the five three-vertex hypergraph states and look at their phases.
"""

import numpy as np

from qutrit_teleport import GateKind, GateSpec, canonical_hypergraphs, gate_matrix, hypergraph_state

omega = np.exp(2j * np.pi / 3)

# every amplitude is omega**k / sqrt(27); print k for the basis kets that
# picked up a phase
for h in canonical_hypergraphs():
    amp = hypergraph_state(h).amplitudes * np.sqrt(27)
    k = np.rint(np.angle(amp) / (2 * np.pi / 3)).astype(int) % 3
    phased = {np.base_repr(i, 3).zfill(3): int(k[i]) for i in np.flatnonzero(k)}
    print(h.name, list(h.hyperedges))
    print("   ", phased)

# %%
# On qutrits the controlled-Z gate cares which vertex is the control.
# Swap control and target and the phase on |2 1 0> moves.
a = gate_matrix(GateSpec(GateKind.CZ3, (0, 1)))
b = gate_matrix(GateSpec(GateKind.CZ3, (1, 0)))
i = 9 * 2 + 3 * 1
print("CZ(0->1) on |210>:", np.round(a[i, i], 3))
print("CZ(1->0) on |210>:", np.round(b[i, i], 3))

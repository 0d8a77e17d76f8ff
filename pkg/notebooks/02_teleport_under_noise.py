"""
Teleportation fidelity under qutrit flip noise
==============================================

Send |+> = (|0> + |1> + |2>)/sqrt(3) through each hypergraph resource while
the flip probability p grows, then repeat with |0>.
"""

import numpy as np

from qutrit_teleport import PLUS, ZERO, ChannelSpec, teleport, teleport_fidelity

ps = np.linspace(0, 1, 6)

# F is tiny in absolute terms: only 4 of the 27 measurement outcomes are
# kept, and F is not renormalized by their total probability. Scaling by 729
# makes the rational structure visible.
print("p      " + "  ".join(f"H{i:<5d}" for i in range(1, 6)))
for p in ps:
    spec = ChannelSpec("qutrit-flip", p=p)
    row = [729 * teleport_fidelity(PLUS, i, spec) for i in range(1, 6)]
    print(f"{p:4.1f}   " + "  ".join(f"{x:6.2f}" for x in row))

# %%
# Per-outcome view for H5 at p = 0.5
out = teleport(PLUS, 5, ChannelSpec("qutrit-flip", p=0.5))
for l, (P, F) in enumerate(zip(out.probabilities, out.conditional_fidelities), 1):
    print(f"outcome {l}: P = {P:.4f}, F_l = {F:.4f}")
print("sum P =", round(sum(out.probabilities), 6), " F =", round(out.fidelity, 6))

# %%
# With |0> as input every hypergraph performs the same
spec = ChannelSpec("depolarizing", p=0.3)
print([round(teleport_fidelity(ZERO, i, spec), 12) for i in range(1, 6)])

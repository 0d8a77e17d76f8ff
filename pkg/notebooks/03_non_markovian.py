"""
Non-Markovian noise parameters
==============================

The non-Markovian amplitude damping channel runs on lambda(t), and the
non-Markovian dephasing channel runs on kappa(p). Both oscillate.
"""

import numpy as np

from qutrit_teleport import ChannelSpec, ParameterError, StateParams, teleport_fidelity
from qutrit_teleport.channels import kappa_raw, lambda_t

ts = np.linspace(0, 5, 11)
lam = np.array([lambda_t(t, g=1, gamma=10) for t in ts])
print("t      ", np.round(ts, 2))
print("lambda ", np.round(lam, 3))

# %%
# kappa exceeds 1 on parts of [0, 1] with eta = 0.5, beta = 100; the channel
# refuses those points
ps = np.linspace(0, 1, 11)
print("p      ", np.round(ps, 2))
print("kappa  ", np.round([kappa_raw(p, 0.5, 100) for p in ps], 3))

state = StateParams(np.pi / 3, np.pi / 5)
for p in ps:
    try:
        spec = ChannelSpec("dephasing-nonmarkov", p=p)
    except ParameterError as exc:
        print(f"p = {p:.1f}: {exc}")
        continue
    print(f"p = {p:.1f}: F_H1 = {teleport_fidelity(state, 1, spec):.5f}")

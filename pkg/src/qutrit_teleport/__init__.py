"""Qutrit teleportation through noisy three-qutrit hypergraph states."""

from .channels import (
    ChannelKind,
    ChannelSpec,
    KrausSet,
    apply_channel,
    kappa_p,
    lambda_t,
    lift_three_qutrit,
    single_qutrit_kraus,
    three_qutrit_kraus,
    weyl,
)
from .closed_form import (
    KNOWN_DEVIATIONS,
    FormulaKey,
    closed_form_fidelity,
    formula_catalog,
    reconciled_fidelity,
)
from .errors import *  # noqa: F401,F403
from .hypergraph import (
    PLUS,
    PRESETS,
    ZERO,
    ZERO_TWO,
    GateKind,
    GateSpec,
    Hypergraph,
    StateParams,
    canonical_hypergraphs,
    gate_matrix,
    get_hypergraph,
    hypergraph_state,
    input_state,
)
from .tensor import (
    DensityMatrix,
    PureState,
    dagger,
    fidelity_pure_mixed,
    kron,
    partial_trace,
    trace,
)
from .teleport import (
    TeleportOutcome,
    corrections,
    measurement_basis,
    teleport,
    teleport_fidelity,
)

__version__ = "0.1.0"

"""Weyl operators and qutrit noise channels in Kraus form.

Every single-qutrit family below is normalized so that sum(K^dag K) = I/3.
:func:`lift_three_qutrit` then places each operator on one of the three sites
of a 27-dimensional register, which yields a trace preserving channel that
applies the noise to exactly one (uniformly chosen) qutrit.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionError, LiftingError, NumericalError, ParameterError
from .tensor import ALGEBRA_TOL, D, DensityMatrix, kron_all

OMEGA = np.exp(2j * np.pi / 3)
I3 = np.eye(D, dtype=complex)

DEFAULT_G = 1.0
DEFAULT_GAMMA = 10.0
DEFAULT_ETA = 0.5
DEFAULT_BETA = 100.0


def weyl(r: int, s: int) -> np.ndarray:
    """W_{r,s} = sum_i omega^(i r) |i><i+s mod 3|."""
    if r not in range(D) or s not in range(D):
        raise ParameterError(f"Weyl index ({r}, {s}) out of range")
    w = np.zeros((D, D), dtype=complex)
    for i in range(D):
        w[i, (i + s) % D] = OMEGA ** (i * r)
    return w


NONIDENTITY_WEYL = [(r, s) for r in range(D) for s in range(D) if (r, s) != (0, 0)]


def lambda_t(t: float, g: float = DEFAULT_G, gamma: float = DEFAULT_GAMMA) -> float:
    """Effective damping strength of the non-Markovian amplitude damping channel.

    Evaluated with complex arithmetic so the oscillating regime
    (g**2 < 2*gamma*g, imaginary l) needs no separate branch.
    """
    for name, v in (("t", t), ("g", g), ("gamma", gamma)):
        if not np.isfinite(v) or v < 0:
            raise ParameterError(f"{name} must be a finite value >= 0, got {v}")
    l = cmath.sqrt(g * g - 2 * gamma * g)
    if l == 0:
        ratio_sinh = g * t / 2
    else:
        ratio_sinh = (g / l) * cmath.sinh(l * t / 2)
    val = 1 - cmath.exp(-g * t) * (ratio_sinh + cmath.cosh(l * t / 2)) ** 2
    if abs(val.imag) > ALGEBRA_TOL:
        raise NumericalError(f"lambda(t) has imaginary part {val.imag:.3e}")
    lam = val.real
    if not -1e-9 <= lam <= 1 + 1e-9:
        raise ParameterError(f"lambda(t={t}) = {lam} lies outside [0, 1]")
    return min(max(lam, 0.0), 1.0)


def kappa_raw(p: float, eta: float = DEFAULT_ETA, beta: float = DEFAULT_BETA) -> float:
    """kappa(p) without the probability range check (for plotting its shape)."""
    den = 1 + eta * (1 - 2 * p)
    if abs(den) <= 1e-12:
        raise ParameterError(f"kappa(p) is singular at p={p}, eta={eta}")
    return float(p * (1 + eta * (1 - 2 * p) * np.sin(beta * p)) / den)


def kappa_p(p: float, eta: float = DEFAULT_ETA, beta: float = DEFAULT_BETA) -> float:
    """Effective mixing probability of the non-Markovian dephasing channel.

    With the default eta = 0.5, beta = 100 this exceeds 1 on parts of
    [0, 1] (for instance at p = 0.8), and such points raise ParameterError.
    """
    k = kappa_raw(p, eta, beta)
    if not 0.0 <= k <= 1.0:
        raise ParameterError(
            f"kappa(p={p}, eta={eta}, beta={beta}) = {k:.6g} is not a probability"
        )
    return k


class ChannelKind(Enum):
    QUTRIT_FLIP = "qutrit-flip"
    QUTRIT_PHASE_FLIP = "qutrit-phase-flip"
    DEPOLARIZING = "depolarizing"
    AD_MARKOV = "ad-markov"
    AD_NONMARKOV = "ad-nonmarkov"
    DEPHASING_MARKOV = "dephasing-markov"
    DEPHASING_NONMARKOV = "dephasing-nonmarkov"
    DEPOLARIZATION_NONMARKOV = "depolarization-nonmarkov"

    @classmethod
    def from_name(cls, name: str) -> "ChannelKind":
        try:
            return cls(name)
        except ValueError:
            names = ", ".join(k.value for k in cls)
            raise ParameterError(f"unknown channel {name!r}; choose from {names}") from None

    @property
    def param_name(self) -> str:
        return "t" if self is ChannelKind.AD_NONMARKOV else "p"


@dataclass(frozen=True)
class ChannelSpec:
    """A noise channel and its parameters.

    ``p`` is used by every kind except ``AD_NONMARKOV``, which is driven by the
    time ``t`` together with ``g`` and ``gamma``. ``eta`` and ``beta`` only
    matter for ``DEPHASING_NONMARKOV``.
    """

    kind: ChannelKind
    p: float = 0.0
    t: float = 0.0
    g: float = DEFAULT_G
    gamma: float = DEFAULT_GAMMA
    eta: float = DEFAULT_ETA
    beta: float = DEFAULT_BETA

    def __post_init__(self):
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", ChannelKind.from_name(self.kind))
        for name in ("p", "t", "g", "gamma", "eta", "beta"):
            v = float(getattr(self, name))
            if not np.isfinite(v) or v < 0:
                raise ParameterError(f"{name} must be a finite value >= 0, got {v}")
            object.__setattr__(self, name, v)
        if self.p > 1:
            raise ParameterError(f"p must lie in [0, 1], got {self.p}")
        # fail early on parameter combinations with no valid Kraus weights
        self.effective_p()

    @property
    def param(self) -> float:
        return self.t if self.kind is ChannelKind.AD_NONMARKOV else self.p

    def effective_p(self) -> float:
        """Mixing probability after any non-Markovian substitution."""
        if self.kind is ChannelKind.AD_NONMARKOV:
            return lambda_t(self.t, self.g, self.gamma)
        if self.kind is ChannelKind.DEPHASING_NONMARKOV:
            return kappa_p(self.p, self.eta, self.beta)
        return self.p


@dataclass(frozen=True)
class KrausSet:
    """Kraus operators with their expected completeness sum ``total * I``.

    Single-qutrit families use ``total = 1/3``; lifted and ordinary channels
    use 1.
    """

    operators: tuple[np.ndarray, ...]
    dim: int
    total: float = 1.0

    def __post_init__(self):
        ops = []
        for k in self.operators:
            k = np.array(k, dtype=complex)
            if k.shape != (self.dim, self.dim):
                raise DimensionError(f"Kraus operator has shape {k.shape}, expected {self.dim}x{self.dim}")
            k.setflags(write=False)
            ops.append(k)
        object.__setattr__(self, "operators", tuple(ops))
        err = self.completeness_error()
        if err > ALGEBRA_TOL:
            raise NumericalError(f"Kraus completeness violated by {err:.3e}")

    def __len__(self):
        return len(self.operators)

    def completeness(self) -> np.ndarray:
        return sum(k.conj().T @ k for k in self.operators)

    def completeness_error(self) -> float:
        return float(np.abs(self.completeness() - self.total * np.eye(self.dim)).max())


def _weyl_family(p_identity: float, p_each: float, indices) -> list[np.ndarray]:
    ops = [np.sqrt(p_identity) * I3]
    ops += [np.sqrt(p_each) * weyl(r, s) for r, s in indices]
    return ops


def _depolarizing(p: float) -> list[np.ndarray]:
    return _weyl_family((9 - 8 * p) / 27, p / 27, NONIDENTITY_WEYL)


def _dephasing(p: float) -> list[np.ndarray]:
    return _weyl_family((1 - p) / 3, p / 24, NONIDENTITY_WEYL)


def _amplitude_damping(p: float) -> list[np.ndarray]:
    k0 = np.diag([1.0, np.sqrt(1 - p), np.sqrt(1 - p)]).astype(complex)
    k1 = np.zeros((D, D), dtype=complex)
    k1[0, 1] = np.sqrt(p)
    k2 = np.zeros((D, D), dtype=complex)
    k2[0, 2] = np.sqrt(p)
    # the site weight 1/3 is folded in here so that every family sums to I/3
    return [k / np.sqrt(3) for k in (k0, k1, k2)]


def single_qutrit_kraus(spec: ChannelSpec) -> KrausSet:
    """The single-qutrit Kraus family of ``spec``, summing to I/3."""
    kind, p = spec.kind, spec.effective_p()
    if kind is ChannelKind.QUTRIT_FLIP:
        ops = _weyl_family((1 - p) / 3, p / 6, [(0, 1), (0, 2)])
    elif kind is ChannelKind.QUTRIT_PHASE_FLIP:
        ops = _weyl_family((1 - p) / 3, p / 6, [(1, 0), (2, 0)])
    elif kind is ChannelKind.DEPOLARIZING:
        ops = _depolarizing(p)
    elif kind in (ChannelKind.AD_MARKOV, ChannelKind.AD_NONMARKOV):
        ops = _amplitude_damping(p)
    elif kind in (ChannelKind.DEPHASING_MARKOV, ChannelKind.DEPHASING_NONMARKOV):
        ops = _dephasing(p)
    elif kind is ChannelKind.DEPOLARIZATION_NONMARKOV:
        ops = _depolarizing(p * (1 - p))
    else:  # pragma: no cover
        raise ParameterError(f"unhandled channel kind {kind}")
    return KrausSet(tuple(ops), D, total=1 / 3)


def lift_three_qutrit(base: KrausSet) -> KrausSet:
    """Place each base operator on each of three sites, identity elsewhere."""
    if base.dim != D:
        raise LiftingError(f"base Kraus set must act on one qutrit, got dim {base.dim}")
    err = float(np.abs(base.completeness() - I3 / 3).max())
    if err > ALGEBRA_TOL:
        raise LiftingError(f"base Kraus set must sum to I/3 (deviation {err:.3e})")
    lifted = []
    for site in range(3):
        for k in base.operators:
            factors = [I3, I3, I3]
            factors[site] = k
            lifted.append(kron_all(factors))
    return KrausSet(tuple(lifted), D**3)


def three_qutrit_kraus(spec: ChannelSpec) -> KrausSet:
    return lift_three_qutrit(single_qutrit_kraus(spec))


def apply_channel(rho: DensityMatrix, kraus: KrausSet) -> DensityMatrix:
    if rho.dim != kraus.dim:
        raise DimensionError(f"channel acts on dim {kraus.dim}, state has dim {rho.dim}")
    m = rho.matrix
    out = sum(k @ m @ k.conj().T for k in kraus.operators)
    # remove round-off asymmetry so the Hermiticity check stays tight
    out = (out + out.conj().T) / 2
    return DensityMatrix(out, rho.labels, normalized=rho.normalized)

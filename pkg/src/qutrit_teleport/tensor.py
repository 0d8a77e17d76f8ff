"""Dense complex linear algebra over registers of qutrits.

Operators are plain ``numpy`` complex arrays. States carry explicit register
labels so that partial traces can be requested by name rather than by
position, e.g. ``partial_trace(rho, {"a", "0", "1"})``.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, LabelError, NumericalError, ShapeError

D = 3
MAX_DIM = D**8

ALGEBRA_TOL = 1e-12
DRIFT_TOL = 1e-10


def _as_matrix(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2:
        raise ShapeError(f"expected a 2-d matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NumericalError("matrix contains NaN or Inf entries")
    return a


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex, copy=True)
    a.setflags(write=False)
    return a


def _check_labels(labels: Sequence[str], n: int) -> tuple[str, ...]:
    labels = tuple(str(x) for x in labels)
    if len(labels) != n:
        raise LabelError(f"{len(labels)} labels given for {n} qutrits")
    if len(set(labels)) != n:
        raise LabelError(f"register labels must be unique: {labels}")
    return labels


def _num_qutrits(dim: int) -> int:
    n = round(np.log(dim) / np.log(D))
    if n < 1 or D**n != dim:
        raise DimensionError(f"dimension {dim} is not a power of {D}")
    return n


@dataclass(frozen=True)
class PureState:
    """Normalized state vector over a labeled register of qutrits."""

    amplitudes: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex)
        if amp.ndim != 1:
            raise ShapeError(f"amplitudes must be 1-d, got shape {amp.shape}")
        n = _num_qutrits(amp.size)
        if not np.all(np.isfinite(amp)):
            raise NumericalError("amplitudes contain NaN or Inf")
        norm = np.vdot(amp, amp).real
        if abs(norm - 1.0) > ALGEBRA_TOL:
            raise NumericalError(f"state is not normalized: <psi|psi> = {norm!r}")
        object.__setattr__(self, "amplitudes", _frozen(amp))
        object.__setattr__(self, "labels", _check_labels(self.labels, n))

    @property
    def num_qutrits(self) -> int:
        return len(self.labels)

    def density_matrix(self) -> "DensityMatrix":
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()), self.labels)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian operator over a labeled qutrit register.

    ``normalized=False`` marks an intermediate, unnormalized operator (such as
    a post-measurement product before division by its probability); the unit
    trace check is skipped for those. Positivity is only checked by
    :meth:`validate`, since an eigendecomposition on every construction is
    wasted work inside sweeps.
    """

    matrix: np.ndarray
    labels: tuple[str, ...]
    normalized: bool = field(default=True)

    def __post_init__(self):
        m = _as_matrix(self.matrix)
        if m.shape[0] != m.shape[1]:
            raise ShapeError(f"density matrix must be square, got {m.shape}")
        n = _num_qutrits(m.shape[0])
        herm = np.abs(m - m.conj().T).max()
        if herm > ALGEBRA_TOL:
            raise NumericalError(f"matrix is not Hermitian (max deviation {herm:.3e})")
        if self.normalized:
            tr = np.trace(m)
            if abs(tr - 1.0) > DRIFT_TOL:
                raise NumericalError(f"trace is {tr!r}, expected 1")
        object.__setattr__(self, "matrix", _frozen(m))
        object.__setattr__(self, "labels", _check_labels(self.labels, n))

    @property
    def num_qutrits(self) -> int:
        return len(self.labels)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def validate(self) -> "DensityMatrix":
        """Check positivity; returns ``self`` so it can be chained."""
        lo = np.linalg.eigvalsh(self.matrix).min()
        if lo < -DRIFT_TOL:
            raise NumericalError(f"matrix is not PSD (min eigenvalue {lo:.3e})")
        return self

    def tensor(self, other: "DensityMatrix") -> "DensityMatrix":
        return DensityMatrix(
            kron(self.matrix, other.matrix),
            self.labels + other.labels,
            normalized=self.normalized and other.normalized,
        )

    def normalize(self) -> "DensityMatrix":
        tr = trace(self.matrix).real
        return DensityMatrix(self.matrix / tr, self.labels)


def ket(*digits: int) -> np.ndarray:
    """Computational basis vector |d0 d1 ...> as a complex array."""
    v = np.zeros(D ** len(digits), dtype=complex)
    idx = 0
    for d in digits:
        if not 0 <= d < D:
            raise ValueError(f"basis digit {d} out of range")
        idx = D * idx + d
    v[idx] = 1.0
    return v


def kron(a, b, max_dim: int = MAX_DIM) -> np.ndarray:
    a = _as_matrix(a)
    b = _as_matrix(b)
    rows, cols = a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]
    if max(rows, cols) > max_dim:
        raise DimensionError(f"kron result {rows}x{cols} exceeds limit {max_dim}")
    return np.kron(a, b)


def kron_all(mats: Iterable, max_dim: int = MAX_DIM) -> np.ndarray:
    mats = list(mats)
    out = _as_matrix(mats[0])
    for m in mats[1:]:
        out = kron(out, m, max_dim=max_dim)
    return out


def dagger(a) -> np.ndarray:
    return _as_matrix(a).conj().T


def trace(a) -> complex:
    a = _as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"trace of non-square matrix {a.shape}")
    return complex(np.trace(a))


def partial_trace(rho: DensityMatrix, discard: Iterable[str]) -> DensityMatrix:
    """Trace out the registers named in ``discard``.

    Works for any subset of label positions; the kept registers retain their
    original relative order. An empty ``discard`` returns ``rho`` unchanged.
    """
    discard = set(discard)
    unknown = discard - set(rho.labels)
    if unknown:
        raise LabelError(f"unknown register labels {sorted(unknown)}; have {rho.labels}")
    if not discard:
        return rho
    if discard == set(rho.labels):
        raise LabelError("cannot trace out every register")
    n = rho.num_qutrits
    letters = string.ascii_letters
    row = list(letters[:n])
    col = list(letters[n : 2 * n])
    keep = [i for i, lab in enumerate(rho.labels) if lab not in discard]
    for i, lab in enumerate(rho.labels):
        if lab in discard:
            col[i] = row[i]
    spec = "".join(row) + "".join(col) + "->" + "".join(row[i] for i in keep) + "".join(
        col[i] for i in keep
    )
    t = rho.matrix.reshape((D,) * (2 * n))
    dk = D ** len(keep)
    reduced = np.einsum(spec, t).reshape(dk, dk)
    return DensityMatrix(
        reduced, [rho.labels[i] for i in keep], normalized=rho.normalized
    )


def expectation(phi: PureState, rho: DensityMatrix) -> float:
    """<phi|rho|phi> as a real number (imaginary residue dropped)."""
    if phi.amplitudes.size != rho.dim:
        raise DimensionError(
            f"state dimension {phi.amplitudes.size} does not match operator {rho.dim}"
        )
    v = phi.amplitudes
    return float(np.vdot(v, rho.matrix @ v).real)


def fidelity_pure_mixed(phi: PureState, rho: DensityMatrix) -> float:
    """sqrt(<phi|rho|phi>), clamped to [0, 1] within ``DRIFT_TOL``."""
    ov = expectation(phi, rho)
    if ov < -DRIFT_TOL:
        raise NumericalError(f"<phi|rho|phi> = {ov:.3e} is negative; rho is not PSD")
    if ov > 1.0 + DRIFT_TOL:
        raise NumericalError(f"<phi|rho|phi> = {ov:.3e} exceeds 1")
    return float(np.sqrt(min(max(ov, 0.0), 1.0)))

"""Dense linear-operator arithmetic.

Everything downstream (envelopes, relative bounds, dichotomy detection)
is built on the four primitives here: the spectral operator norm, the
resolvent with a singularity guard, eigenvalue data, and the matrix
exponential. All routines are pure functions of their arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
import scipy.linalg as sla

from .config import DEFAULT_TOLS, Tolerances
from .errors import ArgumentError, ComputationError, RangeError, SingularityError

__all__ = [
    "LinearOperator",
    "SpectralData",
    "ScalarGrid",
    "op_norm",
    "resolvent",
    "resolvent_with_residual",
    "spectrum",
    "matrix_exponential",
    "shift_generator",
    "numerical_abscissa",
]


def _as_complex_matrix(entries) -> np.ndarray:
    m = np.array(entries, dtype=np.complex128, copy=True)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ArgumentError(f"operator entries must be a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ArgumentError("operator entries must be finite (no NaN/Inf)")
    m.setflags(write=False)
    return m


@dataclass(frozen=True, eq=False)
class LinearOperator:
    """Dense square complex matrix acting on C^dim.

    Entries are copied on construction, validated (square, finite) and
    frozen; instances are safe to share between threads.
    """

    entries: np.ndarray
    label: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "entries", _as_complex_matrix(self.entries))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return self.entries

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        self._check_compatible(other)
        return LinearOperator(self.entries + other.entries)

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        self._check_compatible(other)
        return LinearOperator(self.entries - other.entries)

    def __neg__(self) -> "LinearOperator":
        return LinearOperator(-self.entries)

    def __mul__(self, scalar: complex) -> "LinearOperator":
        return LinearOperator(self.entries * complex(scalar))

    __rmul__ = __mul__

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        self._check_compatible(other)
        return LinearOperator(self.entries @ other.entries)

    def apply(self, x: np.ndarray) -> np.ndarray:
        return self.entries @ np.asarray(x, dtype=np.complex128)

    def is_zero(self) -> bool:
        return not np.any(self.entries)

    def _check_compatible(self, other: "LinearOperator"):
        if not isinstance(other, LinearOperator):
            raise ArgumentError(f"expected LinearOperator, got {type(other).__name__}")
        if other.dim != self.dim:
            raise ArgumentError(f"dimension mismatch: {self.dim} vs {other.dim}")

    @classmethod
    def identity(cls, dim: int) -> "LinearOperator":
        return cls(np.eye(dim, dtype=np.complex128))

    @classmethod
    def zeros(cls, dim: int) -> "LinearOperator":
        return cls(np.zeros((dim, dim), dtype=np.complex128))

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"<LinearOperator{tag} dim={self.dim}>"


@dataclass(frozen=True)
class SpectralData:
    """Eigenvalues with multiplicity plus the two scalar summaries."""

    eigenvalues: tuple[complex, ...]
    spectral_abscissa: float
    spectral_radius: float


@dataclass(frozen=True)
class ScalarGrid:
    """Strictly increasing finite evaluation grid."""

    points: np.ndarray
    spacing_kind: str = "linear"
    _VALID = ("linear", "geometric")

    def __post_init__(self):
        pts = np.array(self.points, dtype=np.float64, copy=True)
        if pts.ndim != 1 or pts.size == 0:
            raise ArgumentError("grid must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(pts)):
            raise ArgumentError("grid points must be finite")
        if np.any(np.diff(pts) <= 0):
            raise ArgumentError("grid points must be strictly increasing")
        if self.spacing_kind not in self._VALID:
            raise ArgumentError(f"spacing_kind must be one of {self._VALID}")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return int(self.points.size)

    def __iter__(self) -> Iterable[float]:
        return iter(self.points)

    @classmethod
    def linear(cls, lo: float, hi: float, n: int) -> "ScalarGrid":
        return cls(np.linspace(lo, hi, n), "linear")

    @classmethod
    def geometric(cls, lo: float, hi: float, n: int) -> "ScalarGrid":
        if lo <= 0:
            raise ArgumentError("geometric grid needs lo > 0")
        return cls(np.geomspace(lo, hi, n), "geometric")

    @classmethod
    def geometric_offsets(cls, base: float, lo: float, hi: float, n: int) -> "ScalarGrid":
        """Points base + geomspace(lo, hi, n); geometric in the offset."""
        if lo <= 0:
            raise ArgumentError("geometric offsets need lo > 0")
        return cls(base + np.geomspace(lo, hi, n), "geometric")


def op_norm(a: LinearOperator) -> float:
    """Largest singular value (the operator norm induced by the
    Euclidean vector norm)."""
    if a.dim == 1:
        return abs(a.entries[0, 0])
    try:
        return float(np.linalg.norm(a.entries, 2))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - SVD on finite input
        raise ComputationError(f"SVD failed: {exc}") from exc


def _norm2(m: np.ndarray) -> float:
    if m.shape[0] == 1:
        return abs(m[0, 0])
    return float(np.linalg.norm(m, 2))


def spectrum(a: LinearOperator) -> SpectralData:
    """Eigenvalues (with multiplicity, sorted by real part then imaginary
    part), spectral abscissa and spectral radius."""
    try:
        eigs = np.linalg.eigvals(a.entries)
    except np.linalg.LinAlgError as exc:
        raise ComputationError(f"eigensolver did not converge: {exc}") from exc
    order = np.lexsort((eigs.imag, eigs.real))
    eigs = eigs[order]
    return SpectralData(
        eigenvalues=tuple(complex(z) for z in eigs),
        spectral_abscissa=float(eigs.real.max()),
        spectral_radius=float(np.abs(eigs).max()),
    )


def numerical_abscissa(a: LinearOperator) -> float:
    """Largest eigenvalue of the Hermitian part (A + A*)/2.

    This is the smallest w with ||exp(tA)|| <= e^{w t} for all t >= 0,
    so certifying an envelope at omega = numerical_abscissa(A) always
    yields M = 1.
    """
    h = (a.entries + a.entries.conj().T) / 2.0
    return float(np.linalg.eigvalsh(h)[-1].real)


def resolvent_with_residual(
    a: LinearOperator, lam: complex, tols: Tolerances = DEFAULT_TOLS
) -> tuple[LinearOperator, float]:
    """Resolvent (lam I - A)^{-1} together with its normwise residual.

    Refuses shifts within spectrum_guard * max(1, ||A||) of an
    eigenvalue instead of returning an ill-conditioned inverse.
    """
    lam = complex(lam)
    if not np.isfinite(lam.real) or not np.isfinite(lam.imag):
        raise ArgumentError("resolvent shift must be finite")
    spec = spectrum(a)
    dists = np.abs(np.asarray(spec.eigenvalues) - lam)
    i = int(np.argmin(dists))
    norm_a = op_norm(a)
    guard = tols.spectrum_guard * max(1.0, norm_a)
    if dists[i] < guard:
        raise SingularityError(
            f"shift {lam} is within {dists[i]:.3e} of eigenvalue "
            f"{spec.eigenvalues[i]} (guard {guard:.3e})",
            eigenvalue=spec.eigenvalues[i],
            distance=float(dists[i]),
        )
    e = lam * np.eye(a.dim, dtype=np.complex128) - a.entries
    try:
        x = sla.solve(e, np.eye(a.dim, dtype=np.complex128))
    except sla.LinAlgError as exc:
        raise SingularityError(f"(lam I - A) numerically singular at lam={lam}") from exc
    residual = _norm2(e @ x - np.eye(a.dim))
    scale = (abs(lam) + norm_a) * max(_norm2(x), np.finfo(float).tiny)
    if residual > tols.residual_tol * scale:
        raise ComputationError(
            f"resolvent residual {residual:.3e} exceeds {tols.residual_tol:.1e} * {scale:.3e}"
        )
    return LinearOperator(x), residual


def resolvent(a: LinearOperator, lam: complex, tols: Tolerances = DEFAULT_TOLS) -> LinearOperator:
    """Resolvent (lam I - A)^{-1}; see resolvent_with_residual."""
    return resolvent_with_residual(a, lam, tols)[0]


def matrix_exponential(a: LinearOperator, t: float, tols: Tolerances = DEFAULT_TOLS) -> LinearOperator:
    """exp(t A) by scaling and squaring with a Pade kernel.

    The kernel (scipy's expm) picks the Pade degree and the scaling
    power from a normwise backward-error bound at double precision,
    which meets the exp_tol target for any finite input that does not
    overflow. Negative t is allowed (used for backward dichotomy
    estimates); t = 0 returns the identity exactly.
    """
    t = float(t)
    if not np.isfinite(t):
        raise ArgumentError("time must be finite")
    if t == 0.0:
        return LinearOperator.identity(a.dim)
    with np.errstate(over="ignore", invalid="ignore"):
        m = sla.expm(t * a.entries)
    if not np.all(np.isfinite(m)):
        raise RangeError(f"exp({t} * A) overflows double precision (||tA|| = {abs(t) * op_norm(a):.3e})")
    return LinearOperator(m)


def _expm_norm(mat: np.ndarray, t: float) -> float:
    """||exp(t * mat)||, with +inf when the exponential overflows.

    Internal scan helper; the public matrix_exponential raises on
    overflow instead.
    """
    if t == 0.0:
        return 1.0
    with np.errstate(over="ignore", invalid="ignore"):
        m = sla.expm(t * mat)
    if not np.all(np.isfinite(m)):
        return np.inf
    return _norm2(m)


def shift_generator(a: LinearOperator, omega: float, label: str | None = None) -> LinearOperator:
    """A - omega * I, the generator of the rescaled semigroup
    e^{-omega t} exp(t A)."""
    omega = float(omega)
    if not np.isfinite(omega):
        raise ArgumentError("shift must be finite")
    return LinearOperator(a.entries - omega * np.eye(a.dim), label=label)

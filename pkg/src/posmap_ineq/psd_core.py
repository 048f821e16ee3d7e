"""Dense real-symmetric matrix algebra and numerical Loewner-order certification.

Every matrix in the package is a plain ``numpy.ndarray`` of shape ``(n, n)``.
Functions here accept anything ``numpy.asarray`` understands, including
:class:`PosDefMatrix`, and always symmetrize their input before use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np

from .errors import ComputationError, DimensionMismatchError, NotPositiveDefiniteError

DEFAULT_REL_TOL = 1e-9
BAND_SLACK = 1e-12
LITERAL_SYM_TOL = 1e-12

JACOBI_MAX_SWEEPS = 100
JACOBI_OFF_TOL = 1e-14


class Eigensystem(NamedTuple):
    """Ascending eigenvalues and the orthogonal matrix of column eigenvectors."""

    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self, fn=None) -> np.ndarray:
        """Return ``Q diag(fn(values)) Q^T`` (``fn`` defaults to the identity)."""
        vals = self.values if fn is None else fn(self.values)
        out = (self.vectors * vals) @ self.vectors.T
        return 0.5 * (out + out.T)


class LoewnerVerdict(NamedTuple):
    holds: bool
    margin: float
    rel_tol_used: float
    scale: float


def as_sym(X: Any) -> np.ndarray:
    """Coerce ``X`` to a finite, exactly symmetric float matrix.

    Scalars and 1-element inputs become ``1 x 1`` matrices.
    """
    arr = np.asarray(X, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("matrix has non-finite entries")
    return 0.5 * (arr + arr.T)


def _check_same_dim(A: np.ndarray, B: np.ndarray) -> None:
    if A.shape != B.shape:
        raise DimensionMismatchError(f"shape mismatch: {A.shape} vs {B.shape}")


# --------------------------------------------------------------------------
# eigensolvers
# --------------------------------------------------------------------------


def _off_diag_norm(a: np.ndarray) -> float:
    # direct sum; ||A||^2 - sum(diag^2) cancels down to sqrt(eps) accuracy
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_eigh(
    A: Any, max_sweeps: int = JACOBI_MAX_SWEEPS, tol: float = JACOBI_OFF_TOL
) -> Eigensystem:
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Sweeps over all off-diagonal pairs, annihilating each with a plane
    rotation, until the off-diagonal Frobenius mass drops below
    ``tol * ||A||_F``.

    Raises
    ------
    ComputationError
        If convergence is not reached within ``max_sweeps`` sweeps.
    """
    a = as_sym(A).copy()
    n = a.shape[0]
    v = np.eye(n)
    fro = np.linalg.norm(a)
    if fro == 0.0 or n == 1:
        return Eigensystem(np.diag(a).copy(), v)
    target = tol * fro
    for _ in range(max_sweeps):
        off = _off_diag_norm(a)
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap = a[p, :].copy()
                aq = a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        off = _off_diag_norm(a)
        if off > target:
            raise ComputationError(
                f"Jacobi iteration did not converge in {max_sweeps} sweeps (off={off:.3e})"
            )
    vals = np.diag(a).copy()
    order = np.argsort(vals, kind="stable")
    return Eigensystem(vals[order], v[:, order])


def eig_sym(A: Any, method: str = "lapack") -> Eigensystem:
    """Eigendecomposition ``A = Q diag(values) Q^T`` with ascending values.

    ``method="lapack"`` (default) uses ``numpy.linalg.eigh``;
    ``method="jacobi"`` uses :func:`jacobi_eigh`.
    """
    if isinstance(A, PosDefMatrix):
        if method == "lapack":
            return A.eig
        A = A.array
    if method == "jacobi":
        return jacobi_eigh(A)
    if method != "lapack":
        raise ValueError(f"unknown eigensolver {method!r}")
    a = as_sym(A)
    try:
        vals, vecs = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise ComputationError(str(exc)) from exc
    return Eigensystem(vals, vecs)


def eigvals_sym(A: Any) -> np.ndarray:
    if isinstance(A, PosDefMatrix):
        return A.eig.values
    return np.linalg.eigvalsh(as_sym(A))


# --------------------------------------------------------------------------
# positive definite carrier
# --------------------------------------------------------------------------


class PosDefMatrix:
    """A symmetric positive definite matrix with a cached eigensystem.

    Behaves like an array in numpy expressions (``np.asarray(P)`` works),
    but all arithmetic results are plain ndarrays.
    """

    __slots__ = ("_a", "_eig")

    def __init__(self, data: Any):
        if isinstance(data, PosDefMatrix):
            self._a, self._eig = data._a, data._eig
            return
        a = as_sym(data)
        eig = eig_sym(a)
        if eig.values[0] <= 0.0:
            raise NotPositiveDefiniteError(
                f"smallest eigenvalue {eig.values[0]:.6g} is not positive"
            )
        a.setflags(write=False)
        self._a = a
        self._eig = eig

    @property
    def array(self) -> np.ndarray:
        return self._a

    @property
    def eig(self) -> Eigensystem:
        return self._eig

    @property
    def dim(self) -> int:
        return self._a.shape[0]

    @property
    def min_eig(self) -> float:
        return float(self._eig.values[0])

    @property
    def max_eig(self) -> float:
        return float(self._eig.values[-1])

    def power(self, t: float) -> np.ndarray:
        return mat_power(self, t)

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._a
        return self._a.astype(dtype)

    def __repr__(self) -> str:
        return f"PosDefMatrix({self._a.tolist()!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PosDefMatrix):
            return NotImplemented
        return np.array_equal(self._a, other._a)

    __hash__ = None  # type: ignore[assignment]


def mat_power(A: Any, t: float) -> np.ndarray:
    """Fractional (possibly negative) power of a positive definite matrix.

    Raises
    ------
    NotPositiveDefiniteError
        If any eigenvalue is not strictly positive.
    """
    eig = eig_sym(A)
    if eig.values[0] <= 0.0:
        raise NotPositiveDefiniteError(
            f"mat_power needs a positive definite matrix (min eigenvalue {eig.values[0]:.6g})"
        )
    n = eig.values.shape[0]
    if t == 0:
        return np.eye(n)
    if t == 1:
        return as_sym(np.asarray(A))
    return eig.reconstruct(lambda lam: lam**t)


def inv_sym(A: Any) -> np.ndarray:
    return mat_power(A, -1.0)


def operator_norm(A: Any) -> float:
    """Largest absolute eigenvalue of a symmetric matrix."""
    vals = eigvals_sym(A)
    return float(max(abs(vals[0]), abs(vals[-1])))


def spectral_norm(X: Any) -> float:
    """Largest singular value of an arbitrary real square matrix.

    Computed as the square root of the top eigenvalue of ``X^T X``.
    """
    x = np.asarray(X, dtype=float)
    if x.ndim == 0:
        return abs(float(x))
    gram = x.T @ x
    return math.sqrt(max(float(eigvals_sym(gram)[-1]), 0.0))


def loewner_leq(A: Any, B: Any, rel_tol: float = DEFAULT_REL_TOL) -> LoewnerVerdict:
    """Certify ``A <= B`` in the Loewner order.

    The margin is the smallest eigenvalue of ``B - A``. The order is declared
    to hold when ``margin >= -rel_tol * max(||A||, ||B||, 1)``.
    """
    if rel_tol < 0:
        raise ValueError("rel_tol must be non-negative")
    a = as_sym(A)
    b = as_sym(B)
    _check_same_dim(a, b)
    margin = float(eigvals_sym(b - a)[0])
    scale = max(operator_norm(a), operator_norm(b), 1.0)
    return LoewnerVerdict(margin >= -rel_tol * scale, margin, rel_tol, scale)


def band_membership(A: Any, lo: float, hi: float) -> bool:
    """True iff every eigenvalue of ``A`` lies in ``[lo, hi]`` (with 1e-12 relative slack)."""
    if lo <= 0:
        raise ValueError(f"band lower edge must be positive, got {lo}")
    if hi < lo:
        raise ValueError(f"empty band [{lo}, {hi}]")
    vals = eigvals_sym(A)
    return bool(vals[0] >= lo * (1 - BAND_SLACK) and vals[-1] <= hi * (1 + BAND_SLACK))


def spectrum_in_band(A: Any, lo: float, hi: float, slack: float = BAND_SLACK) -> bool:
    vals = eigvals_sym(A)
    return bool(vals[0] >= lo * (1 - slack) and vals[-1] <= hi * (1 + slack))


# --------------------------------------------------------------------------
# matrix literal format: {"dim": n, "rows": [[...], ...]}
# --------------------------------------------------------------------------


def matrix_to_literal(A: Any) -> dict:
    a = np.asarray(A, dtype=float)
    if a.ndim == 0:
        a = a.reshape(1, 1)
    return {"dim": int(a.shape[0]), "rows": a.tolist()}


def matrix_from_literal(obj: dict) -> np.ndarray:
    """Parse a matrix literal, rejecting asymmetry beyond 1e-12 relative."""
    try:
        dim = int(obj["dim"])
        rows = np.asarray(obj["rows"], dtype=float)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed matrix literal: {exc}") from exc
    if rows.shape != (dim, dim):
        raise DimensionMismatchError(f"literal declares dim {dim} but rows have shape {rows.shape}")
    if not np.all(np.isfinite(rows)):
        raise ValueError("matrix literal has non-finite entries")
    scale = max(float(np.max(np.abs(rows))), 1e-300)
    if float(np.max(np.abs(rows - rows.T))) > LITERAL_SYM_TOL * scale:
        raise ValueError("matrix literal is not symmetric")
    return as_sym(rows)


# --------------------------------------------------------------------------
# check results (shared by means, maps and checkers)
# --------------------------------------------------------------------------


@dataclass
class CheckResult:
    """Both sides of one inequality evaluation plus its Loewner verdict.

    ``margin`` is the smallest eigenvalue of ``rhs - lhs`` and ``verdict``
    follows the :func:`loewner_leq` rule. ``subchecks`` holds verdicts on
    auxiliary inequalities evaluated on the same instance.
    """

    theorem_id: str
    lhs: np.ndarray
    rhs: np.ndarray
    margin: float
    scale: float
    verdict: bool
    constants: dict[str, float] = field(default_factory=dict)
    subchecks: dict[str, LoewnerVerdict] = field(default_factory=dict)
    notes: dict[str, Any] = field(default_factory=dict)
    instance_digest: str = ""
    seed: int | None = None

    @classmethod
    def compare(
        cls,
        theorem_id: str,
        lhs: Any,
        rhs: Any,
        constants: dict[str, float] | None = None,
        rel_tol: float = DEFAULT_REL_TOL,
        **kwargs: Any,
    ) -> CheckResult:
        lhs = as_sym(lhs)
        rhs = as_sym(rhs)
        v = loewner_leq(lhs, rhs, rel_tol)
        return cls(
            theorem_id=theorem_id,
            lhs=lhs,
            rhs=rhs,
            margin=v.margin,
            scale=v.scale,
            verdict=v.holds,
            constants=dict(constants or {}),
            **kwargs,
        )

    @property
    def relative_margin(self) -> float:
        return self.margin / self.scale

    @property
    def all_subchecks_hold(self) -> bool:
        return all(v.holds for v in self.subchecks.values())

    def to_record(self) -> dict:
        """Line-oriented serialization used in batch reports."""
        return {
            "theorem_id": self.theorem_id,
            "verdict": bool(self.verdict),
            "margin": float(self.margin),
            "scale": float(self.scale),
            "constants": {k: float(v) for k, v in sorted(self.constants.items())},
            "subchecks": {
                k: {"holds": bool(v.holds), "margin": float(v.margin)}
                for k, v in sorted(self.subchecks.items())
            },
            "instance_digest": self.instance_digest,
            "seed": self.seed,
        }

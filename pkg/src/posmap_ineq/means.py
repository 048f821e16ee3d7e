"""Weighted arithmetic/geometric operator means and the Kantorovich constant."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from .errors import DimensionMismatchError, NotPositiveDefiniteError
from .psd_core import CheckResult, PosDefMatrix, as_sym, eig_sym, mat_power


def check_weight(nu: float) -> float:
    nu = float(nu)
    if not 0.0 <= nu <= 1.0:
        raise ValueError(f"weight must lie in [0, 1], got {nu}")
    return nu


def kant_exponent(nu: float) -> float:
    """``r = min(nu, 1 - nu)``."""
    nu = check_weight(nu)
    return min(nu, 1.0 - nu)


def kantorovich(h: float) -> float:
    """Kantorovich constant ``K(h) = (h + 1)^2 / (4h)`` for ``h > 0``."""
    h = float(h)
    if not h > 0:
        raise ValueError(f"Kantorovich constant needs h > 0, got {h}")
    return (h + 1.0) ** 2 / (4.0 * h)


@dataclass(frozen=True)
class KantParams:
    """A ratio ``h`` paired with the exponent ``r`` that multiplies ``log K(h)``."""

    h: float
    r: float

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError(f"h must be positive, got {self.h}")
        if not 0.0 <= self.r <= 0.5:
            raise ValueError(f"r must lie in [0, 1/2], got {self.r}")

    @classmethod
    def from_weight(cls, h: float, nu: float) -> KantParams:
        return cls(float(h), kant_exponent(nu))

    @property
    def K(self) -> float:
        return kantorovich(self.h)

    @property
    def value(self) -> float:
        """``K(h) ** r``."""
        return self.K**self.r


def arith_mean(A: Any, B: Any, nu: float) -> np.ndarray:
    """``(1 - nu) A + nu B``."""
    nu = check_weight(nu)
    a = as_sym(A)
    b = as_sym(B)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch: {a.shape} vs {b.shape}")
    return as_sym((1.0 - nu) * a + nu * b)


def geo_mean(A: Any, B: Any, nu: float) -> np.ndarray:
    """Weighted geometric mean ``A^{1/2} (A^{-1/2} B A^{-1/2})^nu A^{1/2}``.

    Evaluated literally through matrix powers; no iterative scheme.
    """
    nu = check_weight(nu)
    a = PosDefMatrix(A) if not isinstance(A, PosDefMatrix) else A
    b = as_sym(B)
    if a.dim != b.shape[0]:
        raise DimensionMismatchError(f"shape mismatch: {a.array.shape} vs {b.shape}")
    if eig_sym(b).values[0] <= 0.0:
        raise NotPositiveDefiniteError("geometric mean needs positive definite arguments")
    if nu == 0.0:
        return as_sym(a.array)
    if nu == 1.0:
        return b
    ev = a.eig
    half = ev.reconstruct(np.sqrt)
    inv_half = ev.reconstruct(lambda lam: 1.0 / np.sqrt(lam))
    inner = as_sym(inv_half @ b @ inv_half)
    return as_sym(half @ mat_power(inner, nu) @ half)


def relative_spectrum(A: Any, B: Any) -> np.ndarray:
    """Eigenvalues of ``A^{-1/2} B A^{-1/2}`` in ascending order."""
    inv_half = mat_power(A, -0.5)
    return np.linalg.eigvalsh(as_sym(inv_half @ as_sym(B) @ inv_half))


def young_refinement_check(a: float, b: float, nu: float) -> CheckResult:
    """Scalar refined Young inequality ``K(b/a)^r a^{1-nu} b^nu <= (1-nu) a + nu b``."""
    a = float(a)
    b = float(b)
    nu = check_weight(nu)
    if not (a > 0 and b > 0):
        raise ValueError("young_refinement_check needs a, b > 0")
    kp = KantParams.from_weight(b / a, nu)
    lhs = kp.value * a ** (1.0 - nu) * b**nu
    rhs = (1.0 - nu) * a + nu * b
    return CheckResult.compare(
        "young",
        [[lhs]],
        [[rhs]],
        constants={"K": kp.K, "r": kp.r, "h": kp.h},
        rel_tol=1e-12,
    )

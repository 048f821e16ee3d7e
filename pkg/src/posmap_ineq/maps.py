"""A closed catalog of positive linear maps and the Choi / Ando lemma checkers.

Every catalog member is positive by construction:

* :class:`NormalizedTrace` ``X -> factor * tr(X)`` (a ``1 x 1`` output),
* :class:`Compression` ``X -> V^T X V`` for a column-orthonormal ``V``,
* :class:`Pinching` keeps the diagonal blocks of a partition of indices,
* :class:`Mixture` is a non-negative combination of catalog maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import DimensionMismatchError, PreconditionError
from .means import check_weight, geo_mean
from .psd_core import CheckResult, as_sym, inv_sym

UNITAL_TOL = 1e-12


class PositiveMap:
    in_dim: int

    @property
    def out_dim(self) -> int:
        raise NotImplementedError

    def _apply(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def __call__(self, X: Any) -> np.ndarray:
        return apply_map(self, X)

    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class NormalizedTrace(PositiveMap):
    in_dim: int
    factor: float = 1.0

    def __post_init__(self):
        if self.in_dim < 1:
            raise ValueError("in_dim must be positive")
        if not self.factor > 0:
            raise ValueError("trace factor must be positive")

    @classmethod
    def unital(cls, in_dim: int) -> NormalizedTrace:
        return cls(in_dim, 1.0 / in_dim)

    @property
    def out_dim(self) -> int:
        return 1

    def _apply(self, x):
        return np.array([[self.factor * float(np.trace(x))]])

    def to_dict(self):
        return {"kind": "normalized_trace", "in_dim": self.in_dim, "factor": self.factor}


@dataclass(frozen=True, eq=False)
class Compression(PositiveMap):
    isometry: np.ndarray

    def __post_init__(self):
        v = np.array(self.isometry, dtype=float)
        if v.ndim == 1:
            v = v.reshape(-1, 1)
        if v.ndim != 2 or v.shape[1] > v.shape[0] or v.shape[1] < 1:
            raise ValueError(f"isometry must be n x k with 1 <= k <= n, got {v.shape}")
        gram_err = np.max(np.abs(v.T @ v - np.eye(v.shape[1])))
        if gram_err > UNITAL_TOL * 10:
            raise ValueError(f"isometry columns are not orthonormal (error {gram_err:.2e})")
        v.setflags(write=False)
        object.__setattr__(self, "isometry", v)

    @classmethod
    def identity(cls, n: int) -> Compression:
        return cls(np.eye(n))

    @property
    def in_dim(self) -> int:  # type: ignore[override]
        return self.isometry.shape[0]

    @property
    def out_dim(self) -> int:
        return self.isometry.shape[1]

    def _apply(self, x):
        v = self.isometry
        return v.T @ x @ v

    def to_dict(self):
        return {"kind": "compression", "isometry": self.isometry.tolist()}


@dataclass(frozen=True)
class Pinching(PositiveMap):
    in_dim: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(int(i) for i in b) for b in self.blocks)
        flat = sorted(i for b in blocks for i in b)
        if flat != list(range(self.in_dim)) or any(len(b) == 0 for b in blocks):
            raise ValueError(f"blocks {blocks} do not partition range({self.in_dim})")
        object.__setattr__(self, "blocks", blocks)
        labels = np.empty(self.in_dim, dtype=int)
        for k, b in enumerate(blocks):
            labels[list(b)] = k
        object.__setattr__(self, "_mask", labels[:, None] == labels[None, :])

    @classmethod
    def diagonal(cls, n: int) -> Pinching:
        return cls(n, tuple((i,) for i in range(n)))

    @property
    def out_dim(self) -> int:
        return self.in_dim

    def _apply(self, x):
        return np.where(self._mask, x, 0.0)  # type: ignore[attr-defined]

    def to_dict(self):
        return {"kind": "pinching", "in_dim": self.in_dim, "blocks": [list(b) for b in self.blocks]}


@dataclass(frozen=True)
class Mixture(PositiveMap):
    components: tuple[tuple[float, PositiveMap], ...] = field(default_factory=tuple)

    def __post_init__(self):
        comps = tuple((float(w), m) for w, m in self.components)
        if not comps:
            raise ValueError("mixture needs at least one component")
        if any(w < 0 for w, _ in comps) or sum(w for w, _ in comps) <= 0:
            raise ValueError("mixture weights must be non-negative and not all zero")
        if len({m.in_dim for _, m in comps}) != 1 or len({m.out_dim for _, m in comps}) != 1:
            raise DimensionMismatchError("mixture components must share input and output dims")
        object.__setattr__(self, "components", comps)

    @property
    def in_dim(self) -> int:  # type: ignore[override]
        return self.components[0][1].in_dim

    @property
    def out_dim(self) -> int:
        return self.components[0][1].out_dim

    def _apply(self, x):
        return sum(w * m._apply(x) for w, m in self.components)

    def to_dict(self):
        return {
            "kind": "mixture",
            "components": [{"weight": w, "map": m.to_dict()} for w, m in self.components],
        }


def map_from_dict(obj: dict) -> PositiveMap:
    """Inverse of ``PositiveMap.to_dict``."""
    kind = obj.get("kind")
    if kind == "normalized_trace":
        return NormalizedTrace(int(obj["in_dim"]), float(obj.get("factor", 1.0)))
    if kind == "compression":
        return Compression(np.asarray(obj["isometry"], dtype=float))
    if kind == "pinching":
        return Pinching(int(obj["in_dim"]), tuple(tuple(b) for b in obj["blocks"]))
    if kind == "mixture":
        return Mixture(
            tuple((float(c["weight"]), map_from_dict(c["map"])) for c in obj["components"])
        )
    raise ValueError(f"unknown map kind {kind!r}")


def apply_map(phi: PositiveMap, X: Any) -> np.ndarray:
    """Evaluate ``phi(X)`` on a symmetric matrix."""
    x = as_sym(X)
    if x.shape[0] != phi.in_dim:
        raise DimensionMismatchError(f"map expects dim {phi.in_dim}, got {x.shape[0]}")
    return as_sym(phi._apply(x))


def is_unital(phi: PositiveMap) -> bool:
    out = apply_map(phi, np.eye(phi.in_dim))
    return bool(np.max(np.abs(out - np.eye(phi.out_dim))) <= UNITAL_TOL)


def choi_check(phi: PositiveMap, A: Any) -> CheckResult:
    """Choi's inequality ``phi(A)^{-1} <= phi(A^{-1})`` for unital ``phi``."""
    if not is_unital(phi):
        raise PreconditionError("Choi's inequality needs a unital map")
    lhs = inv_sym(apply_map(phi, A))
    rhs = apply_map(phi, inv_sym(A))
    return CheckResult.compare("choi", lhs, rhs)


def ando_check(phi: PositiveMap, A: Any, B: Any, nu: float) -> CheckResult:
    """Ando's inequality ``phi(A #_nu B) <= phi(A) #_nu phi(B)`` for any positive ``phi``."""
    nu = check_weight(nu)
    lhs = apply_map(phi, geo_mean(A, B, nu))
    rhs = geo_mean(apply_map(phi, A), apply_map(phi, B), nu)
    return CheckResult.compare("ando", lhs, rhs, constants={"nu": nu})

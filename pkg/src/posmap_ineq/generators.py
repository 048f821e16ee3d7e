"""Seed-driven generation of matrices and instances that meet each hypothesis exactly.

All randomness flows through :func:`make_rng`, a Philox-4x64 counter-based
bit generator keyed by ``numpy.random.SeedSequence(seed, spawn_key=stream)``.
The same ``(seed, stream)`` pair reproduces the same stream on every platform
numpy supports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .checkers import (
    A_UPPER,
    B_UPPER,
    MAP_OF_MEAN,
    MEAN_OF_MAPS,
    Instance,
    PolyaBand,
    SandwichBand,
)
from .errors import HypothesisViolation
from .maps import Compression, Mixture, NormalizedTrace, Pinching, PositiveMap
from .psd_core import PosDefMatrix, as_sym, mat_power

DEFAULT_MARGIN = 1e-3
NU_GRID = tuple(round(0.1 * k, 1) for k in range(11))
P_GRID = (2.0, 2.5, 3.0, 4.0, 5.0)
MAP_KINDS = ("trace", "compression", "pinching", "mixture")


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Philox generator for ``seed`` on the sub-stream ``stream``."""
    if seed < 0 or seed >= 2**64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    ss = np.random.SeedSequence(int(seed), spawn_key=tuple(int(s) for s in stream))
    return np.random.Generator(np.random.Philox(ss))


def _rng(seed_or_rng) -> np.random.Generator:
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return make_rng(int(seed_or_rng))


def loguniform(rng: np.random.Generator, lo: float, hi: float) -> float:
    return float(math.exp(rng.uniform(math.log(lo), math.log(hi))))


def random_orthogonal(dim: int, seed=0) -> np.ndarray:
    """Haar-distributed orthogonal matrix (QR of a Gaussian matrix, sign-corrected)."""
    if dim < 1:
        raise ValueError("dim must be positive")
    rng = _rng(seed)
    q, r = np.linalg.qr(rng.standard_normal((dim, dim)))
    return q * np.where(np.diag(r) < 0, -1.0, 1.0)


def random_isometry(n: int, k: int, seed=0) -> np.ndarray:
    """``n x k`` matrix with orthonormal columns."""
    return random_orthogonal(n, seed)[:, :k]


def _spectrum(dim: int, lo: float, hi: float, rng, margin: float) -> np.ndarray:
    if hi == lo:
        return np.full(dim, lo)
    width = hi - lo
    a = lo + margin * width
    b = hi - margin * width
    if dim == 1:
        return np.array([rng.uniform(a, b)])
    vals = np.empty(dim)
    vals[0], vals[-1] = a, b
    vals[1:-1] = rng.uniform(a, b, size=dim - 2)
    return vals


def matrix_with_spectrum(eigenvalues: Sequence[float], seed=0) -> np.ndarray:
    vals = np.asarray(eigenvalues, dtype=float)
    q = random_orthogonal(len(vals), seed)
    return as_sym((q * vals) @ q.T)


def random_posdef_in_band(
    dim: int, lo: float, hi: float, seed=0, margin: float = DEFAULT_MARGIN
) -> PosDefMatrix:
    """Random positive definite matrix with spectrum inside ``[lo, hi]``.

    The smallest and largest eigenvalues are pinned at ``margin`` (relative to
    the band width) from the edges; the rest are uniform in between.
    """
    if not lo > 0:
        raise ValueError("lo must be positive")
    if lo >= hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if not 0 < margin < 0.5:
        raise ValueError("margin must lie in (0, 1/2)")
    rng = _rng(seed)
    return PosDefMatrix(matrix_with_spectrum(_spectrum(dim, lo, hi, rng, margin), rng))


def _in_band(dim, lo, hi, rng, margin) -> PosDefMatrix:
    # degenerate bands give a multiple of the identity
    if lo == hi:
        return PosDefMatrix(lo * np.eye(dim))
    return random_posdef_in_band(dim, lo, hi, rng, margin)


def random_partition(n: int, rng: np.random.Generator) -> tuple[tuple[int, ...], ...]:
    labels = rng.integers(0, max(1, int(rng.integers(1, n + 1))), size=n)
    perm = rng.permutation(n)
    blocks: dict[int, list[int]] = {}
    for idx in perm:
        blocks.setdefault(int(labels[idx]), []).append(int(idx))
    return tuple(tuple(sorted(b)) for _, b in sorted(blocks.items()))


def random_map(
    dim: int, rng: np.random.Generator, unital: bool = True, kind: str | None = None
) -> PositiveMap:
    """Draw a map from the catalog.

    Non-unital draws rescale a unital map by a positive factor.
    """
    if kind is None:
        kind = MAP_KINDS[int(rng.integers(len(MAP_KINDS)))]
    if kind == "trace":
        phi: PositiveMap = NormalizedTrace.unital(dim)
    elif kind == "compression":
        k = int(rng.integers(1, dim + 1))
        phi = Compression(random_isometry(dim, k, rng))
    elif kind == "pinching":
        phi = Pinching(dim, random_partition(dim, rng))
    elif kind == "mixture":
        k = int(rng.integers(1, dim + 1))
        parts: list[PositiveMap] = [
            Compression(random_isometry(dim, k, rng)) for _ in range(int(rng.integers(2, 4)))
        ]
        if k == 1:
            parts.append(NormalizedTrace.unital(dim))
        if k == dim:
            parts.append(Pinching(dim, random_partition(dim, rng)))
        w = rng.dirichlet(np.ones(len(parts)))
        phi = Mixture(tuple(zip(w.tolist(), parts)))
    else:
        raise ValueError(f"unknown map kind {kind!r}")
    if unital:
        return phi
    scale = loguniform(rng, 0.1, 10.0)
    if isinstance(phi, NormalizedTrace):
        return NormalizedTrace(dim, phi.factor * scale)
    if isinstance(phi, Mixture):
        return Mixture(tuple((w * scale, m) for w, m in phi.components))
    return Mixture(((scale, phi),))


# --------------------------------------------------------------------------
# configs and instance builders
# --------------------------------------------------------------------------


@dataclass
class GenConfig:
    dim: int
    seed: int
    band: SandwichBand | PolyaBand
    margin: float = DEFAULT_MARGIN
    nu: float | None = None
    p: float | None = None
    map_kind: str | None = None
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 1 <= self.dim <= 32:
            raise ValueError("dim must lie in [1, 32]")
        if not 0 < self.margin < 1:
            raise ValueError("margin must lie in (0, 1)")


def _draw_nu(rng, nu):
    return float(NU_GRID[int(rng.integers(len(NU_GRID)))]) if nu is None else float(nu)


def _draw_p(rng, p):
    return float(P_GRID[int(rng.integers(len(P_GRID)))]) if p is None else float(p)


def random_sandwich_pair(cfg: GenConfig) -> Instance:
    """A, B in the upper/lower bands per the orientation, with a unital map."""
    band = cfg.band
    if not isinstance(band, SandwichBand) or not band.strict:
        raise HypothesisViolation("random_sandwich_pair needs a sandwich band with m' < M'")
    rng = make_rng(cfg.seed)
    A = _in_band(cfg.dim, *band.band_A, rng, cfg.margin)
    B = _in_band(cfg.dim, *band.band_B, rng, cfg.margin)
    phi = random_map(cfg.dim, rng, unital=True, kind=cfg.map_kind)
    nu = _draw_nu(rng, cfg.nu)
    p = _draw_p(rng, cfg.p)
    return Instance(A, B, phi, nu, p, band, cfg.seed, dict(cfg.params))


def random_polya_pair(cfg: GenConfig) -> Instance:
    """A with spectrum in ``[m1^2, M1^2]``, B in ``[m2^2, M2^2]``; the gap is required."""
    band = cfg.band
    if not isinstance(band, PolyaBand) or not band.has_gap:
        raise HypothesisViolation("random_polya_pair needs a Polya band with M1 < m2 or M2 < m1")
    rng = make_rng(cfg.seed)
    A = _in_band(cfg.dim, band.m1_sq, band.M1_sq, rng, cfg.margin)
    B = _in_band(cfg.dim, band.m2_sq, band.M2_sq, rng, cfg.margin)
    phi = random_map(cfg.dim, rng, unital=True, kind=cfg.map_kind)
    return Instance(A, B, phi, 0.5, 2.0, band, cfg.seed, dict(cfg.params))


def random_sandwich_band(rng: np.random.Generator) -> SandwichBand:
    """Band with log-uniform widths; ``h'`` ranges over ``[1.05, 6]``."""
    m = loguniform(rng, 0.2, 5.0)
    m_prime = m * loguniform(rng, 1.0, 4.0)
    M_prime = m_prime * loguniform(rng, 1.05, 6.0)
    M = M_prime * loguniform(rng, 1.0, 4.0)
    orientation = A_UPPER if rng.random() < 0.5 else B_UPPER
    return SandwichBand(m, m_prime, M_prime, M, orientation)


def random_polya_band(rng: np.random.Generator) -> PolyaBand:
    """Separated bands; the gap ratio ``m2^2/M1^2`` ranges over ``[1.02, 5]``."""
    lo1 = loguniform(rng, 0.2, 5.0)
    hi1 = lo1 * loguniform(rng, 1.0, 10.0)
    lo2 = hi1 * loguniform(rng, 1.02, 5.0)
    hi2 = lo2 * loguniform(rng, 1.0, 10.0)
    if rng.random() < 0.5:
        return PolyaBand(lo1, hi1, lo2, hi2)
    return PolyaBand(lo2, hi2, lo1, hi1)


# --------------------------------------------------------------------------
# suite instances, one builder per checker kind
# --------------------------------------------------------------------------


def _general_pd(dim, rng) -> PosDefMatrix:
    lo = loguniform(rng, 0.05, 2.0)
    return random_posdef_in_band(dim, lo, lo * loguniform(rng, 1.5, 50.0), rng)


def suite_instance(kind: str, dim: int, seed: int, index: int, min_p: float = 2.0) -> Instance:
    """Instance number ``index`` of a seeded sweep for checkers of ``kind``.

    Deterministic in ``(kind, dim, seed, index)``. Sandwich instances
    alternate the variant and the refined flag with ``index``.
    """
    rng = make_rng(seed, index)
    inst_seed = int(rng.integers(0, 2**63))
    variant = (MAP_OF_MEAN, MEAN_OF_MAPS)[(index // 2) % 2]
    refined = index % 2 == 0
    if kind == "scalar":
        a = loguniform(rng, 0.01, 100.0)
        b = loguniform(rng, 0.01, 100.0)
        return Instance([[a]], [[b]], None, _draw_nu(rng, None), 2.0, None, inst_seed)
    if kind == "single":
        A = _general_pd(dim, rng)
        return Instance(A, A, random_map(dim, rng, unital=True), 0.5, 2.0, None, inst_seed)
    if kind == "pair":
        A = _general_pd(dim, rng)
        B = _general_pd(dim, rng)
        unital = rng.random() < 0.5
        phi = random_map(dim, rng, unital=unital)
        return Instance(A, B, phi, _draw_nu(rng, None), 2.0, None, inst_seed)
    if kind == "norm":
        A = _general_pd(dim, rng)
        B = _general_pd(dim, rng)
        r = float(rng.uniform(1.0, 4.0))
        binv = mat_power(B, -0.5)
        threshold = float(np.linalg.eigvalsh(as_sym(binv @ A.array @ binv))[-1])
        alpha = threshold * math.exp(rng.uniform(-0.5, 0.5))
        return Instance(A, B, None, 0.5, 2.0, None, inst_seed, {"r": r, "alpha": alpha})
    if kind == "relative":
        A = _general_pd(dim, rng)
        h = loguniform(rng, 1.01, 3.0)
        lo, hi = h, h * loguniform(rng, 1.1, 5.0)
        if rng.random() < 0.5:
            lo, hi = 1.0 / hi, 1.0 / lo
        X = random_posdef_in_band(dim, lo, hi, rng)
        half = mat_power(A, 0.5)
        B = as_sym(half @ X.array @ half)
        return Instance(A, B, None, _draw_nu(rng, None), 2.0, None, inst_seed)
    if kind == "sandwich":
        band = random_sandwich_band(rng)
        p = _draw_p(rng, None)
        if p < min_p:
            p = min_p + float(rng.integers(0, 2))
        cfg = GenConfig(dim, inst_seed, band, p=p,
                        params={"variant": variant, "refined": refined})
        return random_sandwich_pair(cfg)
    if kind == "polya":
        band = random_polya_band(rng)
        cfg = GenConfig(dim, inst_seed, band, params={"refined": refined})
        return random_polya_pair(cfg)
    raise ValueError(f"unknown instance kind {kind!r}")

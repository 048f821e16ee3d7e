"""Empirical probe of how tight the refined Polya-Szego constant gamma is.

The tightness of ``phi(A) # phi(B) <= gamma phi(A # B)`` on one instance is
measured by the congruence-normalized top eigenvalue

    ratio = lambda_max(R^{-1/2} L R^{-1/2}),  L = phi(A) # phi(B),  R = gamma phi(A # B),

which equals ``L / R`` when the map has a ``1 x 1`` output. The inequality
holds on the instance iff ``ratio <= 1``. :func:`search_sharpness` maximizes
this ratio with random-restart hill climbing over the spectra and frames of
``A`` and ``B`` and the isometry of a compression map. It only gathers
evidence: the maps it explores are compressions from the catalog, not all
unital positive maps.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .checkers import Instance, PolyaBand, validate_polya
from .errors import HypothesisViolation, NotPositiveDefiniteError
from .generators import make_rng, random_isometry, random_orthogonal
from .maps import Compression, apply_map
from .means import geo_mean
from .psd_core import as_sym, eig_sym

log = logging.getLogger(__name__)

VIOLATION_TOL = 1e-9
SCALE_START = 1e-1
SCALE_END = 1e-4
TRACE_POINTS = 200


def sharpness_ratio(inst: Instance) -> float:
    """Top eigenvalue of ``R^{-1/2} L R^{-1/2}`` for the refined bound."""
    band = validate_polya(inst, need_gap=True)
    phi = inst.phi_or_identity
    L = geo_mean(apply_map(phi, inst.A), apply_map(phi, inst.B), 0.5)
    R = band.gamma * apply_map(phi, geo_mean(inst.A, inst.B, 0.5))
    ev = eig_sym(R)
    if ev.values[0] <= 0.0:
        raise NotPositiveDefiniteError("gamma * phi(A # B) is singular")
    inv_half = ev.reconstruct(lambda lam: 1.0 / np.sqrt(lam))
    return float(np.linalg.eigvalsh(as_sym(inv_half @ L @ inv_half))[-1])


@dataclass
class SearchState:
    best_ratio: float
    witness: Instance
    evaluations: int
    seed_lineage: list[str]
    config: dict[str, Any]
    ratio_trace: list[tuple[int, float]] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    violating_evaluations: int = 0

    @property
    def exceeds_bound(self) -> bool:
        return self.best_ratio > 1.0 + VIOLATION_TOL

    def downsampled_trace(self, points: int = TRACE_POINTS) -> list[tuple[int, float]]:
        tr = self.ratio_trace
        if len(tr) <= points:
            return list(tr)
        idx = np.unique(np.linspace(0, len(tr) - 1, points).round().astype(int))
        return [tr[i] for i in idx]

    def to_record(self) -> dict:
        return {
            "best_ratio": self.best_ratio,
            "exceeds_bound": self.exceeds_bound,
            "evaluations": self.evaluations,
            "seed_lineage": list(self.seed_lineage),
            "config": dict(self.config),
            "witness_instance": self.witness.to_record(),
            "ratio_trace": [[int(e), float(r)] for e, r in self.downsampled_trace()],
            "violating_evaluations": self.violating_evaluations,
            "violations": list(self.violations),
        }


class _Point:
    """Search coordinates: spectra and frames of A and B plus a compression isometry."""

    __slots__ = ("lam_a", "q_a", "lam_b", "q_b", "v")

    def __init__(self, lam_a, q_a, lam_b, q_b, v):
        self.lam_a, self.q_a, self.lam_b, self.q_b, self.v = lam_a, q_a, lam_b, q_b, v

    def instance(self, band: PolyaBand, seed: int) -> Instance:
        A = as_sym((self.q_a * self.lam_a) @ self.q_a.T)
        B = as_sym((self.q_b * self.lam_b) @ self.q_b.T)
        return Instance(A, B, Compression(self.v), 0.5, 2.0, band, seed)


def _random_point(band: PolyaBand, dim: int, out_dim: int, rng) -> _Point:
    lam_a = rng.uniform(band.m1_sq, band.M1_sq, size=dim)
    lam_b = rng.uniform(band.m2_sq, band.M2_sq, size=dim)
    return _Point(
        lam_a,
        random_orthogonal(dim, rng),
        lam_b,
        random_orthogonal(dim, rng),
        random_isometry(dim, out_dim, rng),
    )


def _rotate(q: np.ndarray, scale: float, rng) -> np.ndarray:
    n = q.shape[0]
    g = rng.standard_normal((n, n)) * scale
    s = 0.5 * (g - g.T)
    eye = np.eye(n)
    # Cayley transform keeps the product exactly orthogonal
    return q @ np.linalg.solve(eye - 0.5 * s, eye + 0.5 * s)


def _perturb(pt: _Point, band: PolyaBand, scale: float, rng) -> _Point:
    w1 = band.M1_sq - band.m1_sq
    w2 = band.M2_sq - band.m2_sq
    lam_a = np.clip(pt.lam_a + scale * w1 * rng.standard_normal(pt.lam_a.shape),
                    band.m1_sq, band.M1_sq)
    lam_b = np.clip(pt.lam_b + scale * w2 * rng.standard_normal(pt.lam_b.shape),
                    band.m2_sq, band.M2_sq)
    q, r = np.linalg.qr(pt.v + scale * rng.standard_normal(pt.v.shape))
    v = q * np.where(np.diag(r) < 0, -1.0, 1.0)
    return _Point(lam_a, _rotate(pt.q_a, scale, rng), lam_b, _rotate(pt.q_b, scale, rng), v)


def _climb(band: PolyaBand, budget: int, seed: int, restart: int, dim: int, out_dim: int):
    """One restart: anneal the step scale geometrically from 1e-1 to 1e-4."""
    rng = make_rng(seed, restart)
    pt = _random_point(band, dim, out_dim, rng)
    inst = pt.instance(band, seed)
    best = sharpness_ratio(inst)
    best_inst = inst
    trace = [(1, best)]
    violations = []
    n_viol = int(best > 1.0 + VIOLATION_TOL)
    if n_viol:
        violations.append({"evaluation": 1, "ratio": best, "witness": inst.to_record()})
    for j in range(1, budget):
        frac = j / max(budget - 1, 1)
        scale = SCALE_START * (SCALE_END / SCALE_START) ** frac
        cand = _perturb(pt, band, scale, rng)
        cinst = cand.instance(band, seed)
        ratio = sharpness_ratio(cinst)
        if ratio > 1.0 + VIOLATION_TOL:
            n_viol += 1
        if ratio > best:
            if ratio > 1.0 + VIOLATION_TOL and ratio > max(best, 1.0 + VIOLATION_TOL):
                violations.append(
                    {"evaluation": j + 1, "ratio": ratio, "witness": cinst.to_record()}
                )
            pt, best, best_inst = cand, ratio, cinst
            trace.append((j + 1, best))
    return best, best_inst, trace, violations, n_viol


def search_sharpness(
    band: PolyaBand,
    budget: int,
    seed: int,
    dim: int = 2,
    out_dim: int = 1,
    restarts: int = 8,
    workers: int = 1,
) -> SearchState:
    """Random-restart hill climbing on :func:`sharpness_ratio`.

    The budget (total ratio evaluations) is split evenly across restarts;
    each restart owns the Philox sub-stream ``(seed, restart)``. The merged
    state keeps the best restart (lowest index on ties), so the result is
    identical for any ``workers`` count.

    Ratios above ``1 + 1e-9`` mean the inequality failed on an admissible
    instance; they are logged at WARNING level with the witness and kept in
    ``SearchState.violations``.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if not band.has_gap:
        raise HypothesisViolation("sharpness search needs M1 < m2 or M2 < m1")
    if not 1 <= out_dim <= dim:
        raise ValueError("need 1 <= out_dim <= dim")
    restarts = max(1, min(restarts, budget))
    shares = [budget // restarts + (1 if k < budget % restarts else 0) for k in range(restarts)]
    args = [(band, shares[k], seed, k, dim, out_dim) for k in range(restarts)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outs = list(pool.map(_climb_star, args))
    else:
        outs = [_climb(*a) for a in args]

    best_k = max(range(restarts), key=lambda k: (outs[k][0], -k))
    trace: list[tuple[int, float]] = []
    offset = 0
    running = -math.inf
    for k, out in enumerate(outs):
        for e, r in out[2]:
            if r > running:
                running = r
                trace.append((offset + e, r))
        offset += shares[k]
    violations = [dict(v, restart=k) for k, out in enumerate(outs) for v in out[3]]
    for v in violations:
        log.warning(
            "ratio %.12f exceeds 1 on an admissible instance (restart %d, evaluation %d): %s",
            v["ratio"], v["restart"], v["evaluation"], v["witness"],
        )
    best, best_inst = outs[best_k][0], outs[best_k][1]
    return SearchState(
        best_ratio=best,
        witness=best_inst,
        evaluations=budget,
        seed_lineage=[f"{seed}/{k}" for k in range(restarts)],
        config={
            "dim": dim,
            "out_dim": out_dim,
            "restarts": restarts,
            "scale_start": SCALE_START,
            "scale_end": SCALE_END,
            "map_family": "compression",
            "band": band.to_dict(),
        },
        ratio_trace=trace,
        violations=violations,
        violating_evaluations=sum(out[4] for out in outs),
    )


def _climb_star(args):
    return _climb(*args)

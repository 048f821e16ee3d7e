"""One verifier per operator inequality.

Each checker evaluates both sides of an inequality on a finite instance with
the exact constants of the statement, certifies the Loewner order with
:func:`~posmap_ineq.psd_core.loewner_leq`, and returns a
:class:`~posmap_ineq.psd_core.CheckResult`.

Band conventions
----------------
:class:`SandwichBand` encodes ``0 < m <= (lower operator) <= m' < M' <=
(upper operator) <= M`` with ``h = M/m`` and ``h' = M'/m'``.
:class:`PolyaBand` encodes ``m1^2 <= A <= M1^2`` and ``m2^2 <= B <= M2^2``
with ``m = m2/M1`` and ``M = M2/m1``.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from typing import Any, Callable, NamedTuple

import numpy as np

from .errors import HypothesisViolation, PreconditionError, SideConditionError
from .maps import Compression, PositiveMap, ando_check, apply_map, choi_check, is_unital, map_from_dict
from .means import (
    arith_mean,
    check_weight,
    geo_mean,
    kant_exponent,
    kantorovich,
    relative_spectrum,
    young_refinement_check,
)
from .psd_core import (
    DEFAULT_REL_TOL,
    CheckResult,
    LoewnerVerdict,
    PosDefMatrix,
    as_sym,
    band_membership,
    inv_sym,
    loewner_leq,
    mat_power,
    matrix_from_literal,
    matrix_to_literal,
    operator_norm,
    spectral_norm,
)

MAP_OF_MEAN = "map_of_mean"
MEAN_OF_MAPS = "mean_of_maps"
VARIANTS = (MAP_OF_MEAN, MEAN_OF_MAPS)

A_UPPER = "A_upper"
B_UPPER = "B_upper"

GAP_M1_LT_m2 = "M1<m2"
GAP_M2_LT_m1 = "M2<m1"

# relative width of the undecidable band around the norm-ratio boundary
EQUIV_BAND = 1e-8


# --------------------------------------------------------------------------
# bands and instances
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SandwichBand:
    m: float
    m_prime: float
    M_prime: float
    M: float
    orientation: str = A_UPPER

    def __post_init__(self):
        if not 0 < self.m <= self.m_prime <= self.M_prime <= self.M:
            raise HypothesisViolation(
                f"need 0 < m <= m' <= M' <= M, got {self.m}, {self.m_prime}, {self.M_prime}, {self.M}"
            )
        if self.orientation not in (A_UPPER, B_UPPER):
            raise ValueError(f"unknown orientation {self.orientation!r}")

    @property
    def strict(self) -> bool:
        return self.m_prime < self.M_prime

    @property
    def h(self) -> float:
        return self.M / self.m

    @property
    def h_prime(self) -> float:
        return self.M_prime / self.m_prime

    @property
    def lower(self) -> tuple[float, float]:
        return (self.m, self.m_prime)

    @property
    def upper(self) -> tuple[float, float]:
        return (self.M_prime, self.M)

    @property
    def band_A(self) -> tuple[float, float]:
        return self.upper if self.orientation == A_UPPER else self.lower

    @property
    def band_B(self) -> tuple[float, float]:
        return self.lower if self.orientation == A_UPPER else self.upper

    def flipped(self) -> SandwichBand:
        return SandwichBand(
            self.m, self.m_prime, self.M_prime, self.M,
            B_UPPER if self.orientation == A_UPPER else A_UPPER,
        )

    def to_dict(self) -> dict:
        return {
            "type": "sandwich",
            "m": self.m,
            "m_prime": self.m_prime,
            "M_prime": self.M_prime,
            "M": self.M,
            "orientation": self.orientation,
        }


@dataclass(frozen=True)
class PolyaBand:
    m1_sq: float
    M1_sq: float
    m2_sq: float
    M2_sq: float
    gap_side: str | None = None

    def __post_init__(self):
        if not (0 < self.m1_sq <= self.M1_sq and 0 < self.m2_sq <= self.M2_sq):
            raise HypothesisViolation("need 0 < m1^2 <= M1^2 and 0 < m2^2 <= M2^2")
        actual = None
        if self.M1_sq < self.m2_sq:
            actual = GAP_M1_LT_m2
        elif self.M2_sq < self.m1_sq:
            actual = GAP_M2_LT_m1
        if self.gap_side is None:
            object.__setattr__(self, "gap_side", actual)
        elif self.gap_side not in (GAP_M1_LT_m2, GAP_M2_LT_m1):
            raise ValueError(f"unknown gap side {self.gap_side!r}")
        elif self.gap_side != actual:
            raise HypothesisViolation(f"declared gap {self.gap_side} does not hold")

    @property
    def has_gap(self) -> bool:
        return self.gap_side is not None

    @property
    def m1(self) -> float:
        return math.sqrt(self.m1_sq)

    @property
    def M1(self) -> float:
        return math.sqrt(self.M1_sq)

    @property
    def m2(self) -> float:
        return math.sqrt(self.m2_sq)

    @property
    def M2(self) -> float:
        return math.sqrt(self.M2_sq)

    @property
    def m(self) -> float:
        return self.m2 / self.M1

    @property
    def M(self) -> float:
        return self.M2 / self.m1

    @property
    def h(self) -> float:
        """Kantorovich ratio of the refinement, chosen by the gap side."""
        if self.gap_side == GAP_M1_LT_m2:
            return self.m2_sq / self.M1_sq
        if self.gap_side == GAP_M2_LT_m1:
            return self.M2_sq / self.m1_sq
        raise HypothesisViolation("the refined constant needs M1 < m2 or M2 < m1")

    @property
    def unrefined_constant(self) -> float:
        """``(M + m) / (2 sqrt(M m))``."""
        M, m = self.M, self.m
        return (M + m) / (2.0 * math.sqrt(M * m))

    @property
    def gamma(self) -> float:
        """``(M + m) / (2 sqrt(M m K(h)))``."""
        M, m = self.M, self.m
        return (M + m) / (2.0 * math.sqrt(M * m * kantorovich(self.h)))

    @property
    def alpha(self) -> float:
        return self.m1 * self.m2

    @property
    def beta(self) -> float:
        return self.M1 * self.M2

    def to_dict(self) -> dict:
        return {
            "type": "polya",
            "m1_sq": self.m1_sq,
            "M1_sq": self.M1_sq,
            "m2_sq": self.m2_sq,
            "M2_sq": self.M2_sq,
            "gap_side": self.gap_side,
        }


def band_from_dict(obj: dict | None) -> SandwichBand | PolyaBand | None:
    if obj is None:
        return None
    kind = obj.get("type")
    if kind == "sandwich":
        return SandwichBand(
            float(obj["m"]), float(obj["m_prime"]), float(obj["M_prime"]), float(obj["M"]),
            obj.get("orientation", A_UPPER),
        )
    if kind == "polya":
        return PolyaBand(
            float(obj["m1_sq"]), float(obj["M1_sq"]), float(obj["m2_sq"]), float(obj["M2_sq"]),
            obj.get("gap_side"),
        )
    raise ValueError(f"unknown band type {kind!r}")


@dataclass(eq=False)
class Instance:
    """Everything one checker evaluation needs.

    ``params`` carries checker-specific knobs (``r`` and ``alpha`` for the
    norm lemmas, ``variant``/``refined`` for the sandwich theorems).
    """

    A: PosDefMatrix
    B: PosDefMatrix
    phi: PositiveMap | None = None
    nu: float = 0.5
    p: float = 2.0
    band: SandwichBand | PolyaBand | None = None
    seed: int | None = None
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.A = PosDefMatrix(self.A)
        self.B = PosDefMatrix(self.B)
        self.nu = check_weight(self.nu)
        self.p = float(self.p)
        if self.A.dim != self.B.dim:
            raise ValueError("A and B must have the same dimension")
        if self.phi is not None and self.phi.in_dim != self.A.dim:
            raise ValueError("map input dimension does not match the instance")

    @property
    def phi_or_identity(self) -> PositiveMap:
        return self.phi if self.phi is not None else Compression.identity(self.A.dim)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "A": matrix_to_literal(self.A.array),
            "B": matrix_to_literal(self.B.array),
            "phi": None if self.phi is None else self.phi.to_dict(),
            "nu": self.nu,
            "p": self.p,
            "band": None if self.band is None else self.band.to_dict(),
            "params": dict(sorted(self.params.items())),
        }

    @property
    def digest(self) -> str:
        payload = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def to_record(self) -> dict:
        rec = self.to_dict()
        rec["digest"] = self.digest
        return rec

    @classmethod
    def from_dict(cls, obj: dict) -> Instance:
        return cls(
            A=PosDefMatrix(matrix_from_literal(obj["A"])),
            B=PosDefMatrix(matrix_from_literal(obj["B"])),
            phi=None if obj.get("phi") is None else map_from_dict(obj["phi"]),
            nu=float(obj.get("nu", 0.5)),
            p=float(obj.get("p", 2.0)),
            band=band_from_dict(obj.get("band")),
            seed=obj.get("seed"),
            params=dict(obj.get("params", {})),
        )


def validate_sandwich(inst: Instance) -> SandwichBand:
    band = inst.band
    if not isinstance(band, SandwichBand):
        raise HypothesisViolation("instance carries no sandwich band")
    if not band.strict:
        raise HypothesisViolation("sandwich checkers need m' < M'")
    if not band_membership(inst.A, *band.band_A):
        raise HypothesisViolation(f"A is outside its band {band.band_A}")
    if not band_membership(inst.B, *band.band_B):
        raise HypothesisViolation(f"B is outside its band {band.band_B}")
    return band


def validate_polya(inst: Instance, need_gap: bool) -> PolyaBand:
    band = inst.band
    if not isinstance(band, PolyaBand):
        raise HypothesisViolation("instance carries no Polya-Szego band")
    if need_gap and not band.has_gap:
        raise HypothesisViolation("the refined inequality needs M1 < m2 or M2 < m1")
    if not band_membership(inst.A, band.m1_sq, band.M1_sq):
        raise HypothesisViolation("A is outside [m1^2, M1^2]")
    if not band_membership(inst.B, band.m2_sq, band.M2_sq):
        raise HypothesisViolation("B is outside [m2^2, M2^2]")
    return band


def validate_instance(inst: Instance) -> None:
    """Check the hypotheses implied by the instance's band type."""
    if isinstance(inst.band, SandwichBand):
        validate_sandwich(inst)
    elif isinstance(inst.band, PolyaBand):
        validate_polya(inst, need_gap=False)


def _require_unital(phi: PositiveMap, what: str) -> None:
    if not is_unital(phi):
        raise PreconditionError(f"{what} needs a unital map")


def _stamp(res: CheckResult, inst: Instance) -> CheckResult:
    res.instance_digest = inst.digest
    res.seed = inst.seed
    return res


def _map_sides(inst: Instance, variant: str) -> tuple[np.ndarray, np.ndarray]:
    """Return ``phi(A nabla_nu B)`` and the geometric-mean side selected by ``variant``."""
    phi = inst.phi_or_identity
    lhs_base = apply_map(phi, arith_mean(inst.A, inst.B, inst.nu))
    if variant == MAP_OF_MEAN:
        rhs_base = apply_map(phi, geo_mean(inst.A, inst.B, inst.nu))
    elif variant == MEAN_OF_MAPS:
        rhs_base = geo_mean(apply_map(phi, inst.A), apply_map(phi, inst.B), inst.nu)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return lhs_base, rhs_base


# --------------------------------------------------------------------------
# sandwich-band theorems
# --------------------------------------------------------------------------


def squared_constant(band: SandwichBand, nu: float, refined: bool) -> float:
    """``K(h) / K(h')^r`` (refined) or ``K(h)``."""
    Kh = kantorovich(band.h)
    if not refined:
        return Kh
    return Kh / kantorovich(band.h_prime) ** kant_exponent(nu)


def power_constant(band: SandwichBand, nu: float, p: float, refined: bool) -> float:
    """Base ``C`` of the ``C^p`` coefficient for the p-th power inequalities."""
    if refined:
        r = kant_exponent(nu)
        return kantorovich(band.h) / (4.0 ** (2.0 / p - 1.0) * kantorovich(band.h_prime) ** r)
    M, m = band.M, band.m
    return (M + m) ** 2 / (4.0 ** (2.0 / p) * M * m)


def power4_constant(band: SandwichBand, nu: float, p: float) -> float:
    """Base of ``(sqrt(K(h^2)) K(h) / (2^{4/p-1} K(h')^r))^p``."""
    r = kant_exponent(nu)
    return (
        math.sqrt(kantorovich(band.h**2))
        * kantorovich(band.h)
        / (2.0 ** (4.0 / p - 1.0) * kantorovich(band.h_prime) ** r)
    )


def check_squared(inst: Instance, variant: str = MAP_OF_MEAN, refined: bool = True) -> CheckResult:
    """Squared reverse AM-GM for positive maps.

    ``phi(A nabla_nu B)^2 <= C^2 G^2`` where ``G`` is ``phi(A #_nu B)``
    (``map_of_mean``) or ``phi(A) #_nu phi(B)`` (``mean_of_maps``), and
    ``C = K(h)/K(h')^r`` (refined) or ``K(h)`` (classical).
    """
    band = validate_sandwich(inst)
    phi = inst.phi_or_identity
    _require_unital(phi, "the squared inequality")
    C = squared_constant(band, inst.nu, refined)
    lhs_base, rhs_base = _map_sides(inst, variant)
    lhs = mat_power(lhs_base, 2.0)
    rhs = C**2 * mat_power(rhs_base, 2.0)
    res = CheckResult.compare(
        "thm5",
        lhs,
        rhs,
        constants={
            "C": C,
            "K_h": kantorovich(band.h),
            "K_h_prime": kantorovich(band.h_prime),
            "r": kant_exponent(inst.nu),
            "nu": inst.nu,
            "refined": float(refined),
        },
        notes={"variant": variant},
    )
    return _stamp(res, inst)


def check_eq4(inst: Instance) -> CheckResult:
    """``phi(A nabla_nu B) + M m phi(A^{-1} nabla_nu B^{-1}) <= (M + m) I``."""
    band = validate_sandwich(inst)
    phi = inst.phi_or_identity
    _require_unital(phi, "the additive reverse bound")
    M, m = band.M, band.m
    lhs = apply_map(phi, arith_mean(inst.A, inst.B, inst.nu)) + M * m * apply_map(
        phi, arith_mean(inv_sym(inst.A), inv_sym(inst.B), inst.nu)
    )
    rhs = (M + m) * np.eye(phi.out_dim)
    res = CheckResult.compare("eq4", lhs, rhs, constants={"M": M, "m": m, "nu": inst.nu})
    return _stamp(res, inst)


def check_reverse_amgm_inverse(inst: Instance) -> CheckResult:
    """``K(h')^r (A^{-1} #_nu B^{-1}) <= A^{-1} nabla_nu B^{-1}`` (the map is unused)."""
    band = validate_sandwich(inst)
    r = kant_exponent(inst.nu)
    Kr = kantorovich(band.h_prime) ** r
    Ai = inv_sym(inst.A)
    Bi = inv_sym(inst.B)
    lhs = Kr * geo_mean(Ai, Bi, inst.nu)
    rhs = arith_mean(Ai, Bi, inst.nu)
    res = CheckResult.compare(
        "lemma1", lhs, rhs, constants={"K_h_prime_r": Kr, "r": r, "nu": inst.nu}
    )
    return _stamp(res, inst)


def lemma43_ratio(A: Any, B: Any) -> tuple[float, float]:
    """Nearest-to-1 and farthest edges of the spectrum of ``A^{-1/2} B A^{-1/2}``.

    Raises
    ------
    HypothesisViolation
        If that spectrum contains 1 or straddles it.
    """
    spec = relative_spectrum(A, B)
    if spec[0] > 1.0:
        return float(spec[0]), float(spec[-1])
    if spec[-1] < 1.0:
        return float(spec[-1]), float(spec[0])
    raise HypothesisViolation(
        f"relative spectrum [{spec[0]:.6g}, {spec[-1]:.6g}] straddles 1"
    )


def check_lemma43(A: Any, B: Any, nu: float) -> CheckResult:
    """``K(h)^r A #_nu B <= A nabla_nu B`` with ``h`` read off the relative spectrum."""
    nu = check_weight(nu)
    h, h_far = lemma43_ratio(A, B)
    r = kant_exponent(nu)
    Kr = kantorovich(h) ** r
    lhs = Kr * geo_mean(A, B, nu)
    rhs = arith_mean(A, B, nu)
    return CheckResult.compare(
        "lemma43", lhs, rhs, constants={"h": h, "h_far": h_far, "K_h_r": Kr, "r": r, "nu": nu}
    )


def check_power_p(inst: Instance, variant: str = MAP_OF_MEAN, refined: bool = True) -> CheckResult:
    """p-th power reverse AM-GM, ``p >= 2``.

    Coefficient ``(K(h) / (4^{2/p-1} K(h')^r))^p`` (refined) or
    ``((M+m)^2 / (4^{2/p} M m))^p`` (classical).
    """
    p = inst.p
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    band = validate_sandwich(inst)
    phi = inst.phi_or_identity
    _require_unital(phi, "the p-th power inequality")
    C = power_constant(band, inst.nu, p, refined)
    lhs_base, rhs_base = _map_sides(inst, variant)
    lhs = mat_power(lhs_base, p)
    rhs = C**p * mat_power(rhs_base, p)
    res = CheckResult.compare(
        "thm20",
        lhs,
        rhs,
        constants={"C": C, "coefficient": C**p, "p": p, "nu": inst.nu, "refined": float(refined)},
        notes={"variant": variant},
    )
    return _stamp(res, inst)


def check_power_p4(inst: Instance, variant: str = MAP_OF_MEAN) -> CheckResult:
    """p-th power bound with the ``sqrt(K(h^2))`` coefficient, ``p >= 4``.

    Also certifies ``M^2 m^2 phi(A nabla_nu B)^{-2} + phi(A nabla_nu B)^2 <=
    (M^2 + m^2) I`` on the same instance (subcheck ``eq64``).
    """
    p = inst.p
    if p < 4:
        raise ValueError(f"p must be at least 4, got {p}")
    band = validate_sandwich(inst)
    phi = inst.phi_or_identity
    _require_unital(phi, "the p >= 4 inequality")
    M, m = band.M, band.m
    C = power4_constant(band, inst.nu, p)
    lhs_base, rhs_base = _map_sides(inst, variant)
    lhs = mat_power(lhs_base, p)
    rhs = C**p * mat_power(rhs_base, p)
    aux_lhs = M**2 * m**2 * mat_power(lhs_base, -2.0) + mat_power(lhs_base, 2.0)
    aux = loewner_leq(aux_lhs, (M**2 + m**2) * np.eye(phi.out_dim))
    unrefined = (kantorovich(band.h) * (M**2 + m**2)) ** p / (16.0 * M**p * m**p)
    res = CheckResult.compare(
        "thm28",
        lhs,
        rhs,
        constants={
            "C": C,
            "coefficient": C**p,
            "unrefined_coefficient": unrefined,
            "p": p,
            "nu": inst.nu,
            "eq64_margin": aux.margin,
        },
        subchecks={"eq64": aux},
        notes={"variant": variant},
    )
    return _stamp(res, inst)


# --------------------------------------------------------------------------
# Polya-Szego family
# --------------------------------------------------------------------------


def check_polya_szego(inst: Instance, refined: bool = True) -> CheckResult:
    """``phi(A) # phi(B) <= c phi(A # B)``.

    ``c = gamma`` when ``refined`` (requires a strict gap between the bands)
    and ``(M+m)/(2 sqrt(Mm))`` otherwise. Subcheck ``eq45`` certifies
    ``M m phi(A) + phi(B) <= (M+m) phi(A # B)``. The note
    ``containment`` reports whether the spectrum of
    ``phi(A)^{-1/2} phi(B) phi(A)^{-1/2}`` lies in ``[m2^2/M1^2, M2^2/m1^2]``.
    """
    band = validate_polya(inst, need_gap=refined)
    phi = inst.phi_or_identity
    pA = apply_map(phi, inst.A)
    pB = apply_map(phi, inst.B)
    pG = apply_map(phi, geo_mean(inst.A, inst.B, 0.5))
    c = band.gamma if refined else band.unrefined_constant
    lhs = geo_mean(pA, pB, 0.5)
    rhs = c * pG
    M, m = band.M, band.m
    eq45 = loewner_leq(M * m * pA + pB, (M + m) * pG)
    rel = relative_spectrum(pA, pB)
    lo, hi = band.m2_sq / band.M1_sq, band.M2_sq / band.m1_sq
    containment = bool(rel[0] >= lo * (1 - 1e-9) and rel[-1] <= hi * (1 + 1e-9))
    constants = {
        "constant": c,
        "unrefined_constant": band.unrefined_constant,
        "M": M,
        "m": m,
        "refined": float(refined),
    }
    if band.has_gap:
        constants["gamma"] = band.gamma
        constants["h"] = band.h
    res = CheckResult.compare(
        "thm46",
        lhs,
        rhs,
        constants=constants,
        subchecks={"eq45": eq45},
        notes={
            "containment": containment,
            "relative_spectrum": [float(rel[0]), float(rel[-1])],
        },
    )
    return _stamp(res, inst)


class PsiConstants(NamedTuple):
    gamma: float
    alpha: float
    beta: float
    t0: float
    psi: float


def compute_psi(band: PolyaBand) -> PsiConstants:
    """Constants of the squared refined Polya-Szego bound.

    ``f(t) = (gamma (alpha + beta) t - alpha beta) / t^2`` peaks at
    ``t0 = 2 alpha beta / (gamma (alpha + beta))``; ``psi`` is ``f(t0)`` when
    ``alpha <= t0`` and ``f(alpha)`` otherwise.
    """
    if not band.has_gap:
        raise HypothesisViolation("psi needs M1 < m2 or M2 < m1")
    g = band.gamma
    a = band.alpha
    b = band.beta
    t0 = 2.0 * a * b / (g * (a + b))
    if a <= t0:
        psi = g**2 * (a + b) ** 2 / (4.0 * a * b)
    else:
        psi = (g * (a + b) - b) / a
    return PsiConstants(g, a, b, t0, psi)


def check_squared_polya(inst: Instance) -> CheckResult:
    """``(phi(A) # phi(B))^2 <= psi phi(A # B)^2``.

    The side bounds ``alpha <= phi(A # B) <= beta`` and
    ``alpha <= phi(A) # phi(B) <= beta`` are certified first; a failure there
    raises :class:`SideConditionError`.
    """
    band = validate_polya(inst, need_gap=True)
    phi = inst.phi_or_identity
    _require_unital(phi, "the squared Polya-Szego bound")
    consts = compute_psi(band)
    pG = apply_map(phi, geo_mean(inst.A, inst.B, 0.5))
    L = geo_mean(apply_map(phi, inst.A), apply_map(phi, inst.B), 0.5)
    eye = np.eye(phi.out_dim)
    side = {
        "eq58_lower": loewner_leq(consts.alpha * eye, pG),
        "eq58_upper": loewner_leq(pG, consts.beta * eye),
        "eq59_lower": loewner_leq(consts.alpha * eye, L),
        "eq59_upper": loewner_leq(L, consts.beta * eye),
    }
    bad = [k for k, v in side.items() if not v.holds]
    if bad:
        raise SideConditionError(f"side conditions {bad} failed on instance {inst.digest}")
    lhs = mat_power(L, 2.0)
    rhs = consts.psi * mat_power(pG, 2.0)
    res = CheckResult.compare(
        "thm97",
        lhs,
        rhs,
        constants=dict(consts._asdict()),
        subchecks=side,
        notes={"branch": "t0" if consts.alpha <= consts.t0 else "alpha"},
    )
    return _stamp(res, inst)


# --------------------------------------------------------------------------
# norm lemmas
# --------------------------------------------------------------------------


class NormLemmaResults(NamedTuple):
    lemma6: CheckResult
    lemma8: CheckResult
    lemma50: CheckResult


def check_lemma50(A: Any, B: Any, alpha: float) -> CheckResult:
    """Consistency of ``A <= alpha B  <=>  ||A^{1/2} B^{-1/2}|| <= alpha^{1/2}``.

    Each direction is asserted only outside a relative band of width 1e-8
    around the boundary, where the two sides are numerically undecidable.
    ``margin`` is ``alpha^{1/2} - ||A^{1/2} B^{-1/2}||``; ``verdict`` is the
    consistency of both implications, not the sign of the margin.
    """
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    a = as_sym(A)
    b = as_sym(B)
    order = loewner_leq(a, alpha * b)
    norm = spectral_norm(mat_power(a, 0.5) @ mat_power(b, -0.5))
    sqrt_alpha = math.sqrt(alpha)
    forward_tested = order.margin >= EQUIV_BAND * order.scale
    forward_ok = (not forward_tested) or norm <= sqrt_alpha * (1 + 1e-12)
    converse_tested = norm <= sqrt_alpha * (1 - EQUIV_BAND)
    converse_ok = (not converse_tested) or order.holds
    margin = sqrt_alpha - norm
    return CheckResult(
        theorem_id="lemma50",
        lhs=np.array([[norm]]),
        rhs=np.array([[sqrt_alpha]]),
        margin=margin,
        scale=max(norm, sqrt_alpha, 1.0),
        verdict=bool(forward_ok and converse_ok),
        constants={
            "alpha": alpha,
            "order_margin": order.margin,
            "forward_tested": float(forward_tested),
            "converse_tested": float(converse_tested),
        },
        notes={"order_holds": order.holds},
    )


def check_norm_lemmas(A: Any, B: Any, r: float, alpha: float) -> NormLemmaResults:
    """``||AB|| <= ||A+B||^2 / 4``, ``||A^r + B^r|| <= ||(A+B)^r||`` and the norm-ratio equivalence."""
    if r < 1:
        raise ValueError(f"r must be at least 1, got {r}")
    a = as_sym(A)
    b = as_sym(B)
    s = a + b
    n6_lhs = spectral_norm(a @ b)
    n6_rhs = 0.25 * operator_norm(s) ** 2
    res6 = CheckResult.compare("lemma6", [[n6_lhs]], [[n6_rhs]])
    n8_lhs = operator_norm(mat_power(a, r) + mat_power(b, r))
    n8_rhs = operator_norm(mat_power(s, r))
    res8 = CheckResult.compare("lemma8", [[n8_lhs]], [[n8_rhs]], constants={"r": float(r)})
    return NormLemmaResults(res6, res8, check_lemma50(a, b, alpha))


# --------------------------------------------------------------------------
# constant comparison
# --------------------------------------------------------------------------


class ConstantComparison(NamedTuple):
    squared_refined: float
    squared_unrefined: float
    squared_ratio: float
    power_refined: float
    power_unrefined: float
    power_ratio: float

    @property
    def refined_dominates(self) -> bool:
        return self.squared_ratio <= 1.0 + 1e-15 and self.power_ratio <= 1.0 + 1e-15


def compare_constants(band: SandwichBand, nu: float, p: float) -> ConstantComparison:
    """Refined versus classical coefficients for the squared and p-th power bounds.

    The band may be degenerate (``m' = M'``), in which case ``h' = 1`` and
    both ratios are exactly 1.
    """
    nu = check_weight(nu)
    if p < 2:
        raise ValueError("p must be at least 2")
    sq_ref = squared_constant(band, nu, True)
    sq_un = squared_constant(band, nu, False)
    pw_ref = power_constant(band, nu, p, True) ** p
    pw_un = power_constant(band, nu, p, False) ** p
    return ConstantComparison(sq_ref, sq_un, sq_ref / sq_un, pw_ref, pw_un, pw_ref / pw_un)


# --------------------------------------------------------------------------
# registry
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckerSpec:
    theorem_id: str
    instance_kind: str
    run: Callable[[Instance], list[CheckResult]]
    description: str
    uses_p: bool = False
    min_p: float = 2.0


def _run_young(inst):
    a = float(inst.A.array[0, 0])
    b = float(inst.B.array[0, 0])
    return [_stamp(young_refinement_check(a, b, inst.nu), inst)]


def _run_choi(inst):
    return [_stamp(choi_check(inst.phi_or_identity, inst.A), inst)]


def _run_ando(inst):
    return [_stamp(ando_check(inst.phi_or_identity, inst.A, inst.B, inst.nu), inst)]


def _run_norms(inst):
    out = check_norm_lemmas(inst.A, inst.B, inst.params.get("r", 2.0), inst.params.get("alpha", 1.0))
    return [_stamp(r, inst) for r in out]


def _run_lemma43(inst):
    return [_stamp(check_lemma43(inst.A, inst.B, inst.nu), inst)]


def _opts(inst):
    return inst.params.get("variant", MAP_OF_MEAN), bool(inst.params.get("refined", True))


def _run_thm5(inst):
    variant, refined = _opts(inst)
    return [check_squared(inst, variant, refined)]


def _run_thm20(inst):
    variant, refined = _opts(inst)
    return [check_power_p(inst, variant, refined)]


def _run_thm28(inst):
    variant, _ = _opts(inst)
    return [check_power_p4(inst, variant)]


def _run_thm46(inst):
    _, refined = _opts(inst)
    return [check_polya_szego(inst, refined)]


CHECKERS: dict[str, CheckerSpec] = {
    spec.theorem_id: spec
    for spec in [
        CheckerSpec("young", "scalar", _run_young, "refined scalar Young inequality"),
        CheckerSpec("choi", "single", _run_choi, "Choi: phi(A)^-1 <= phi(A^-1)"),
        CheckerSpec("ando", "pair", _run_ando, "Ando: phi(A #_nu B) <= phi(A) #_nu phi(B)"),
        CheckerSpec("norms", "norm", _run_norms, "norm inequalities and the norm-ratio equivalence"),
        CheckerSpec("eq4", "sandwich", lambda i: [check_eq4(i)], "additive reverse AM-HM bound"),
        CheckerSpec("lemma1", "sandwich", lambda i: [check_reverse_amgm_inverse(i)],
                    "refined reverse AM-GM on inverses"),
        CheckerSpec("lemma43", "relative", _run_lemma43, "refined AM-GM from the relative spectrum"),
        CheckerSpec("thm5", "sandwich", _run_thm5, "squared refined reverse AM-GM"),
        CheckerSpec("thm20", "sandwich", _run_thm20, "p-th power refined reverse AM-GM",
                    uses_p=True),
        CheckerSpec("thm28", "sandwich", _run_thm28, "p-th power bound, p >= 4", uses_p=True,
                    min_p=4.0),
        CheckerSpec("thm46", "polya", _run_thm46, "operator Polya-Szego (refined and classical)"),
        CheckerSpec("thm97", "polya", lambda i: [check_squared_polya(i)],
                    "squared refined Polya-Szego"),
    ]
}


def run_checker(theorem_id: str, inst: Instance) -> list[CheckResult]:
    try:
        spec = CHECKERS[theorem_id]
    except KeyError:
        raise KeyError(f"unknown theorem id {theorem_id!r}") from None
    return spec.run(inst)


__all__ = [
    "A_UPPER",
    "B_UPPER",
    "CHECKERS",
    "CheckerSpec",
    "ConstantComparison",
    "DEFAULT_REL_TOL",
    "Instance",
    "LoewnerVerdict",
    "MAP_OF_MEAN",
    "MEAN_OF_MAPS",
    "NormLemmaResults",
    "PolyaBand",
    "PsiConstants",
    "SandwichBand",
    "check_eq4",
    "check_lemma43",
    "check_lemma50",
    "check_norm_lemmas",
    "check_polya_szego",
    "check_power_p",
    "check_power_p4",
    "check_reverse_amgm_inverse",
    "check_squared",
    "check_squared_polya",
    "compare_constants",
    "compute_psi",
    "run_checker",
    "validate_instance",
]

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from posmap_ineq.checkers import (
    B_UPPER,
    CHECKERS,
    PolyaBand,
    SandwichBand,
)
from posmap_ineq.errors import HypothesisViolation
from posmap_ineq.generators import (
    GenConfig,
    make_rng,
    matrix_with_spectrum,
    random_map,
    random_orthogonal,
    random_partition,
    random_polya_band,
    random_polya_pair,
    random_posdef_in_band,
    random_sandwich_band,
    random_sandwich_pair,
    suite_instance,
)
from posmap_ineq.maps import apply_map
from posmap_ineq.psd_core import loewner_leq

from conftest import EX1_BAND, EX2_BAND

SLACK = 1e-12


def _in(x, lo, hi):
    lam = np.linalg.eigvalsh(np.asarray(x))
    return lam[0] >= lo * (1 - SLACK) and lam[-1] <= hi * (1 + SLACK)


# ---- RNG -------------------------------------------------------------------


def test_rng_is_documented_philox():
    ref = np.random.Generator(np.random.Philox(np.random.SeedSequence(42)))
    np.testing.assert_array_equal(make_rng(42).integers(0, 2**63, 8), ref.integers(0, 2**63, 8))
    sub = np.random.Generator(np.random.Philox(np.random.SeedSequence(42, spawn_key=(3,))))
    np.testing.assert_array_equal(make_rng(42, 3).random(4), sub.random(4))


def test_rng_seed_range():
    with pytest.raises(ValueError):
        make_rng(-1)
    with pytest.raises(ValueError):
        make_rng(2**64)
    make_rng(2**64 - 1)


# ---- orthogonal and banded matrices ----------------------------------------


def test_orthogonal_dim_one():
    q = random_orthogonal(1, 5)
    assert q.shape == (1, 1) and abs(q[0, 0]) == 1.0


def test_orthogonal_determinism():
    np.testing.assert_array_equal(random_orthogonal(3, 1), random_orthogonal(3, 1))
    assert np.linalg.norm(random_orthogonal(4, 1) - random_orthogonal(4, 2), 2) > 1e-6


@given(st.integers(1, 32), st.integers(0, 2**64 - 1))
def test_orthogonal_is_orthogonal(n, seed):
    q = random_orthogonal(n, seed)
    np.testing.assert_allclose(q.T @ q, np.eye(n), atol=1e-12)


def test_posdef_in_band_examples():
    x = random_posdef_in_band(1, 2.0, 3.0, seed=0)
    assert 2.0 <= x.array[0, 0] <= 3.0
    y = random_posdef_in_band(2, 20.25, 25.0, seed=5)
    assert _in(y.array, 20.25, 25.0)
    assert loewner_leq(20.25 * np.eye(2), y.array).holds
    assert loewner_leq(y.array, 25.0 * np.eye(2)).holds


def test_posdef_in_band_pins_extremes():
    lo, hi, margin = 1.0, 5.0, 1e-3
    lam = np.linalg.eigvalsh(random_posdef_in_band(5, lo, hi, seed=3, margin=margin).array)
    assert lam[0] == pytest.approx(lo + margin * (hi - lo), rel=1e-12)
    assert lam[-1] == pytest.approx(hi - margin * (hi - lo), rel=1e-12)


@pytest.mark.parametrize("lo,hi", [(3.0, 3.0), (3.0, 2.0), (0.0, 1.0)])
def test_posdef_in_band_errors(lo, hi):
    with pytest.raises(ValueError):
        random_posdef_in_band(2, lo, hi, seed=0)


def test_matrix_with_spectrum():
    x = matrix_with_spectrum([1.0, 2.0, 7.0], seed=8)
    np.testing.assert_allclose(np.linalg.eigvalsh(x), [1, 2, 7], rtol=1e-13)


def test_partition_covers_indices():
    rng = make_rng(0)
    for n in range(1, 9):
        blocks = random_partition(n, rng)
        assert sorted(i for b in blocks for i in b) == list(range(n))


@pytest.mark.parametrize("kind", ["trace", "compression", "pinching", "mixture"])
def test_random_map_unital_flag(kind):
    for seed in range(20):
        phi = random_map(4, make_rng(seed), unital=True, kind=kind)
        out = apply_map(phi, np.eye(4))
        np.testing.assert_allclose(out, np.eye(out.shape[0]), atol=1e-12)


# ---- sandwich pairs --------------------------------------------------------


def test_sandwich_pair_example():
    band = SandwichBand(1.0, 2.0, 3.0, 4.0)
    inst = random_sandwich_pair(GenConfig(2, 9, band))
    assert _in(inst.A.array, 3.0, 4.0) and _in(inst.B.array, 1.0, 2.0)


def test_sandwich_pair_flipped():
    band = SandwichBand(1.0, 2.0, 3.0, 4.0, B_UPPER)
    inst = random_sandwich_pair(GenConfig(3, 9, band))
    assert _in(inst.B.array, 3.0, 4.0) and _in(inst.A.array, 1.0, 2.0)


def test_sandwich_pair_determinism():
    band = SandwichBand(1.0, 2.0, 3.0, 4.0)
    a = random_sandwich_pair(GenConfig(4, 77, band))
    b = random_sandwich_pair(GenConfig(4, 77, band))
    assert a.digest == b.digest
    np.testing.assert_array_equal(a.A.array, b.A.array)
    assert random_sandwich_pair(GenConfig(4, 78, band)).digest != a.digest


def test_sandwich_pair_rejects_bad_band():
    with pytest.raises(HypothesisViolation):
        random_sandwich_pair(GenConfig(2, 0, SandwichBand(1.0, 2.0, 2.0, 4.0)))
    with pytest.raises(HypothesisViolation):
        random_sandwich_pair(GenConfig(2, 0, PolyaBand(*EX1_BAND)))


def test_gen_config_validation():
    band = SandwichBand(1.0, 2.0, 3.0, 4.0)
    with pytest.raises(ValueError):
        GenConfig(33, 0, band)
    with pytest.raises(ValueError):
        GenConfig(2, 0, band, margin=0.0)


# ---- Polya pairs -----------------------------------------------------------


@pytest.mark.parametrize("raw,gap", [(EX1_BAND, "M1<m2"), (EX2_BAND, "M2<m1")])
def test_polya_pair_examples(raw, gap):
    inst = random_polya_pair(GenConfig(2, 4, PolyaBand(*raw)))
    assert inst.band.gap_side == gap
    assert _in(inst.A.array, raw[0], raw[1]) and _in(inst.B.array, raw[2], raw[3])


def test_polya_pair_point_band():
    inst = random_polya_pair(GenConfig(3, 4, PolyaBand(2.0, 2.0, 5.0, 7.0)))
    np.testing.assert_allclose(np.linalg.eigvalsh(inst.A.array), [2, 2, 2])


def test_polya_pair_needs_gap():
    with pytest.raises(HypothesisViolation):
        random_polya_pair(GenConfig(2, 0, PolyaBand(1.0, 4.0, 2.0, 9.0)))


# ---- band samplers ---------------------------------------------------------


def test_band_samplers():
    rng = make_rng(1)
    for _ in range(500):
        sb = random_sandwich_band(rng)
        assert sb.strict and 1.05 * (1 - 1e-12) <= sb.h_prime <= 6.0 * (1 + 1e-12)
        pb = random_polya_band(rng)
        assert pb.has_gap


# ---- suite instances: determinism, soundness, coverage ---------------------


@pytest.mark.parametrize("tid", sorted(CHECKERS))
def test_suite_instance_determinism(tid):
    spec = CHECKERS[tid]
    a = suite_instance(spec.instance_kind, 3, 5, 7, spec.min_p)
    b = suite_instance(spec.instance_kind, 3, 5, 7, spec.min_p)
    assert a.digest == b.digest


def _independent_validity(inst, kind):
    """Re-derive the instance invariants from raw eigenvalues."""
    A, B = inst.A.array, inst.B.array
    assert np.linalg.eigvalsh(A)[0] > 0 and np.linalg.eigvalsh(B)[0] > 0
    if kind == "sandwich":
        band = inst.band
        m, mp, Mp, M = band.m, band.m_prime, band.M_prime, band.M
        assert 0 < m <= mp < Mp <= M
        up, low = (A, B) if band.orientation == "A_upper" else (B, A)
        assert _in(up, Mp, M) and _in(low, m, mp)
    if kind == "polya":
        b = inst.band
        assert _in(A, b.m1_sq, b.M1_sq) and _in(B, b.m2_sq, b.M2_sq)
        assert b.M1_sq < b.m2_sq or b.M2_sq < b.m1_sq
    if kind == "relative":
        rel = np.linalg.eigvals(np.linalg.solve(A, B)).real
        assert rel.min() > 1 or rel.max() < 1
    if kind in ("sandwich", "polya", "single"):
        phi = inst.phi_or_identity
        out = apply_map(phi, np.eye(phi.in_dim))
        np.testing.assert_allclose(out, np.eye(out.shape[0]), atol=1e-12)
    if kind == "scalar":
        assert A.shape == (1, 1)
    assert 0.0 <= inst.nu <= 1.0


@pytest.mark.parametrize("kind", ["scalar", "single", "pair", "norm", "relative", "sandwich",
                                  "polya"])
def test_suite_instance_soundness(kind):
    for i in range(300):
        inst = suite_instance(kind, 2 + i % 7, 11, i, 4.0 if i % 3 == 0 else 2.0)
        _independent_validity(inst, kind)


def test_coverage_near_band_edges():
    band = SandwichBand(1.0, 2.0, 3.0, 4.0)
    margin = 1e-3
    lo_hits = {"A": False, "B": False}
    hi_hits = {"A": False, "B": False}
    for seed in range(1000):
        inst = random_sandwich_pair(GenConfig(2 + seed % 7, seed, band, margin=margin))
        for name, x, (lo, hi) in (("A", inst.A.array, band.band_A), ("B", inst.B.array, band.band_B)):
            lam = np.linalg.eigvalsh(x)
            tol = 2 * margin * (hi - lo)
            lo_hits[name] |= lam[0] - lo <= tol
            hi_hits[name] |= hi - lam[-1] <= tol
    assert all(lo_hits.values()) and all(hi_hits.values())

import numpy as np
import pytest

from gradenorm.graded_space import (
    GradedVector,
    GradingSignature,
    ScalarProfile,
    dilate,
    hnorm,
    homogeneity_defect,
    profile_from_json,
    profile_to_json,
    random_vector,
    scalar_norm,
    scalar_profile,
    triangle_defect,
    vector_from_json,
    vector_to_json,
)


def unit_level(dim, axis=0):
    v = np.zeros(dim)
    v[axis] = 1.0
    return v


# ---------------------------------------------------------------------------
# signature
# ---------------------------------------------------------------------------

def test_signature_exponent_ladder():
    sig = GradingSignature(5)
    assert sig.exponents == (10, 8, 6, 4, 2)
    assert sig.exponent(1) == 10 and sig.exponent(5) == 2


@pytest.mark.parametrize("r", [0, -3, 2.5, "4"])
def test_signature_rejects_bad_lengths(r):
    with pytest.raises(ValueError):
        GradingSignature(r)


def test_signature_exponent_out_of_range():
    with pytest.raises(ValueError):
        GradingSignature(3).exponent(4)


# ---------------------------------------------------------------------------
# hnorm
# ---------------------------------------------------------------------------

def test_hnorm_zero_vector_is_zero():
    x = GradedVector.zero(GradingSignature(4))
    assert hnorm(x) == 0.0


def test_hnorm_r2_unit_first_level():
    x = GradedVector.from_components([unit_level(3), np.zeros(2)])
    assert hnorm(x) == pytest.approx(1.0, rel=1e-15)


def test_hnorm_r5_all_unit_levels():
    x = GradedVector.from_components([unit_level(3) for _ in range(5)])
    assert hnorm(x) == pytest.approx(5 ** (1 / 10), rel=1e-14)


def test_hnorm_positive_definite():
    sig = GradingSignature(3)
    x = GradedVector(sig, (np.zeros(2), np.array([0.0, 1e-8]), np.zeros(1)))
    assert hnorm(x) > 0
    assert hnorm(GradedVector.zero(sig)) == 0.0


def test_hnorm_negation_symmetry_exact():
    rng = np.random.default_rng(3)
    for r in (1, 2, 3, 5):
        x = random_vector(GradingSignature(r), rng)
        assert hnorm(-x) == hnorm(x)


def test_hnorm_equals_profile_norm_exactly():
    rng = np.random.default_rng(11)
    for r in (1, 2, 4, 6):
        x = random_vector(GradingSignature(r), rng, magnitude_decades=(-2, 2))
        assert hnorm(x) == scalar_norm(scalar_profile(x))


# ---------------------------------------------------------------------------
# dilate
# ---------------------------------------------------------------------------

def test_dilate_identity():
    rng = np.random.default_rng(5)
    x = random_vector(GradingSignature(4), rng)
    y = dilate(1.0, x)
    for a, b in zip(x.components, y.components):
        assert np.array_equal(a, b)


def test_dilate_negation_preserves_norm():
    rng = np.random.default_rng(6)
    x = random_vector(GradingSignature(5), rng)
    assert hnorm(dilate(-1.0, x)) == hnorm(x)


def test_dilate_rejects_zero():
    x = GradedVector.zero(GradingSignature(2))
    with pytest.raises(ValueError):
        dilate(0.0, x)


def test_dilate_r2_doubles_norm():
    x = GradedVector.from_components([np.array([1.0]), np.array([1.0])])
    assert hnorm(x) == pytest.approx(2 ** 0.25, rel=1e-15)
    assert hnorm(dilate(2.0, x)) == pytest.approx(2 * hnorm(x), rel=1e-14)


def test_dilate_scales_levels_by_powers():
    x = GradedVector.from_components([np.array([1.0]), np.array([1.0]), np.array([1.0])])
    y = dilate(3.0, x)
    assert [float(c[0]) for c in y.components] == [3.0, 9.0, 27.0]


# ---------------------------------------------------------------------------
# homogeneity boundary
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("r", [1, 2])
def test_homogeneity_holds_for_short_gradings(r):
    rng = np.random.default_rng(100 + r)
    sig = GradingSignature(r)
    for _ in range(2000):
        x = random_vector(sig, rng, magnitude_decades=(-2, 2))
        t = float(rng.uniform(0.01, 100.0) * rng.choice([-1.0, 1.0]))
        defect = homogeneity_defect(x, t)
        assert abs(defect) <= 1e-12 * max(1.0, abs(t) * hnorm(x))


def level2_witness(r):
    comps = [np.zeros(1) for _ in range(r)]
    comps[1] = np.array([1.0])
    return GradedVector.from_components(comps)


def test_homogeneity_witness_r3():
    defect = homogeneity_defect(level2_witness(3), 2.0)
    assert defect == pytest.approx(2 ** (4 / 3) - 2, abs=1e-12)
    assert defect > 0.5


@pytest.mark.parametrize("r, expected", [(4, 2 ** 1.5 - 2), (5, 2 ** 1.6 - 2)])
def test_homogeneity_witnesses_longer_gradings(r, expected):
    defect = homogeneity_defect(level2_witness(r), 2.0)
    assert defect == pytest.approx(expected, abs=1e-12)
    assert defect > 0.5


def test_homogeneity_defect_zero_at_identity():
    rng = np.random.default_rng(9)
    x = random_vector(GradingSignature(4), rng)
    assert homogeneity_defect(x, 1.0) == 0.0


# ---------------------------------------------------------------------------
# scalar profiles and the scalar norm
# ---------------------------------------------------------------------------

def test_scalar_profile_zero_vector():
    p = scalar_profile(GradedVector.zero(GradingSignature(3)))
    assert np.array_equal(p.magnitudes, np.zeros(3))


def test_scalar_profile_unit_levels():
    x = GradedVector.from_components([unit_level(4) for _ in range(5)])
    assert np.array_equal(scalar_profile(x).magnitudes, np.ones(5))


def test_scalar_profile_345_triangle():
    x = GradedVector.from_components([np.array([3.0, 4.0]), np.array([5.0])])
    assert scalar_profile(x).magnitudes.tolist() == [5.0, 5.0]


def test_scalar_norm_zero():
    assert scalar_norm(ScalarProfile(GradingSignature(4), np.zeros(4))) == 0.0


def test_scalar_norm_r5_ones():
    p = ScalarProfile(GradingSignature(5), np.ones(5))
    assert scalar_norm(p) == pytest.approx(5 ** 0.1, rel=1e-15)


def test_scalar_norm_r1_is_identity():
    rng = np.random.default_rng(12)
    sig = GradingSignature(1)
    for a in rng.uniform(1e-3, 1e3, size=1000):
        assert scalar_norm(ScalarProfile(sig, np.array([a]))) == a


def test_profile_rejects_negative_magnitudes():
    with pytest.raises(ValueError):
        ScalarProfile(GradingSignature(2), np.array([1.0, -0.5]))


def test_scalar_norm_monotone_per_coordinate():
    rng = np.random.default_rng(13)
    sig = GradingSignature(5)
    for _ in range(2000):
        mags = 10.0 ** rng.uniform(-2, 2, size=5)
        base = scalar_norm(ScalarProfile(sig, mags))
        j = rng.integers(0, 5)
        bumped = mags.copy()
        bumped[j] += float(rng.uniform(0.1, 10.0))
        assert scalar_norm(ScalarProfile(sig, bumped)) >= base


# ---------------------------------------------------------------------------
# triangle defect
# ---------------------------------------------------------------------------

def test_triangle_defect_zero_partner():
    rng = np.random.default_rng(14)
    x = random_vector(GradingSignature(5), rng)
    zero = GradedVector.zero(GradingSignature(5), dims=x.dims)
    assert triangle_defect(x, zero) == 0.0


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_triangle_defect_self_pair_nonpositive(r):
    rng = np.random.default_rng(200 + r)
    sig = GradingSignature(r)
    for _ in range(500):
        x = random_vector(sig, rng, magnitude_decades=(-2, 2))
        defect = triangle_defect(x, x)
        assert defect <= 1e-12 * max(1.0, 2 * hnorm(x))


def test_triangle_defect_r5_random_sweep():
    rng = np.random.default_rng(15)
    sig = GradingSignature(5)
    worst = -np.inf
    for _ in range(10_000):
        x = random_vector(sig, rng, dims=(2, 3, 1, 4, 2), magnitude_decades=(-2, 2))
        y = random_vector(sig, rng, dims=(2, 3, 1, 4, 2), magnitude_decades=(-2, 2))
        rel = triangle_defect(x, y) / max(1.0, hnorm(x) + hnorm(y))
        worst = max(worst, rel)
    assert worst <= 1e-12


def test_triangle_defect_signature_mismatch():
    x = GradedVector.zero(GradingSignature(3))
    y = GradedVector.zero(GradingSignature(4))
    with pytest.raises(ValueError):
        triangle_defect(x, y)


def test_triangle_defect_dimension_mismatch():
    x = GradedVector.zero(GradingSignature(2), dims=(2, 2))
    y = GradedVector.zero(GradingSignature(2), dims=(2, 3))
    with pytest.raises(ValueError):
        triangle_defect(x, y)


def test_reduction_dominance():
    # per-level Euclidean triangle inequality plus monotonicity:
    # the vector defect never exceeds the profile-sum defect
    rng = np.random.default_rng(16)
    sig = GradingSignature(4)
    for _ in range(2000):
        x = random_vector(sig, rng, magnitude_decades=(-2, 1))
        y = random_vector(sig, rng, magnitude_decades=(-2, 1))
        pa, pb = scalar_profile(x), scalar_profile(y)
        scalar_side = scalar_norm(pa + pb) - scalar_norm(pa) - scalar_norm(pb)
        assert triangle_defect(x, y) <= scalar_side + 1e-12


def test_r1_norm_is_euclidean_and_triangle_exact():
    rng = np.random.default_rng(17)
    sig = GradingSignature(1)
    for _ in range(1000):
        v = rng.standard_normal(3)
        w = rng.standard_normal(3)
        x, y = GradedVector(sig, (v,)), GradedVector(sig, (w,))
        assert hnorm(x) == pytest.approx(float(np.linalg.norm(v)), rel=1e-15, abs=0.0)
        assert triangle_defect(x, y) <= 1e-15


# ---------------------------------------------------------------------------
# construction and JSON
# ---------------------------------------------------------------------------

def test_vector_component_count_must_match():
    with pytest.raises(ValueError):
        GradedVector(GradingSignature(3), (np.zeros(2), np.zeros(2)))


def test_vector_rejects_empty_level():
    with pytest.raises(ValueError):
        GradedVector(GradingSignature(2), (np.zeros(2), np.zeros(0)))


def test_vector_components_are_immutable():
    x = GradedVector.zero(GradingSignature(2))
    with pytest.raises(ValueError):
        x.components[0][0] = 1.0


def test_vector_json_round_trip():
    rng = np.random.default_rng(18)
    x = random_vector(GradingSignature(3), rng, dims=(2, 1, 4))
    y = vector_from_json(vector_to_json(x))
    assert y.dims == x.dims
    for a, b in zip(x.components, y.components):
        assert np.array_equal(a, b)


@pytest.mark.parametrize(
    "payload",
    [
        {"r": 2},
        {"components": [[1.0]]},
        {"r": 2, "components": [[1.0]]},
        {"r": "2", "components": [[1.0], [2.0]]},
        [1, 2],
    ],
)
def test_vector_json_rejects_malformed(payload):
    with pytest.raises(ValueError):
        vector_from_json(payload)


def test_profile_json_round_trip():
    p = ScalarProfile(GradingSignature(3), np.array([0.5, 2.0, 0.0]))
    q = profile_from_json(profile_to_json(p))
    assert np.array_equal(p.magnitudes, q.magnitudes)
    assert profile_to_json(p) == {"r": 3, "a": [0.5, 2.0, 0.0]}


def test_profile_json_rejects_malformed():
    with pytest.raises(ValueError):
        profile_from_json({"r": 2, "a": [1.0]})

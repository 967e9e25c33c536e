import math

import pytest
from hypothesis import given, strategies as st

from systolic.bounds import (
    LOEWNER,
    AdmissiblePair,
    BallGrowthConstant,
    SystolicRatio,
    classical_bounds,
    corollary_residual,
    entropy_upper,
    entropy_upper_isoembolic,
    extremal_disk_area_lower,
    katok_entropy_lower,
    sphere_isoembolic,
)
from systolic.errors import DomainError

# Reference values below were computed with mpmath at 30 digits from the
# closed forms, independently of this package.
PAIR = AdmissiblePair(0.05, 0.29)


class TestAdmissiblePair:
    def test_accepts_interior(self):
        AdmissiblePair(0.1, 0.09)

    @pytest.mark.parametrize("alpha,beta", [(0.125, 0.0), (0.0, 0.1), (-0.01, 0.2), (0.1, 0.1), (0.125, 0.01)])
    def test_rejects(self, alpha, beta):
        with pytest.raises(DomainError):
            AdmissiblePair(alpha, beta)

    def test_boundary_is_excluded(self):
        with pytest.raises(DomainError):
            AdmissiblePair(0.0625, 0.25)


def test_katok_gauss_bonnet_equality():
    assert katok_entropy_lower(2, 4 * math.pi) == pytest.approx(1.0, rel=1e-15)


def test_katok_genus3_unit_area():
    assert katok_entropy_lower(3, 1.0) == pytest.approx(5.01325654926200100, rel=1e-14)


@pytest.mark.parametrize("genus", [1, 0])
def test_katok_rejects_nonnegative_euler_characteristic(genus):
    with pytest.raises(DomainError, match="nonnegative Euler characteristic"):
        katok_entropy_lower(genus, 1.0)


@given(st.integers(2, 10_000), st.floats(1e-6, 1e6))
def test_katok_identity(genus, area):
    h = katok_entropy_lower(genus, area)
    assert h * h * area == pytest.approx(2 * math.pi * (2 * genus - 2), rel=1e-12)


class TestClassicalBounds:
    def test_gromov_genus_100(self):
        assert classical_bounds(100).gromov_genus == pytest.approx(64 / 67, rel=1e-15)

    def test_gromov_genus_crossover_at_51(self):
        assert classical_bounds(50).gromov_genus > LOEWNER
        assert classical_bounds(51).gromov_genus == pytest.approx(1.15178939893068505, rel=1e-14)
        assert classical_bounds(51).gromov_genus < LOEWNER

    def test_torus_conventions(self):
        rec = classical_bounds(1)
        assert rec.loewner == pytest.approx(2 / math.sqrt(3))
        assert rec.buser_sarnak_lower == 0.0 and rec.asymptotic_upper == 0.0
        assert rec.gromov_aspherical == pytest.approx(4 / 3)

    def test_constants(self):
        rec = classical_bounds(1000)
        lg = math.log(1000) ** 2 / 1000
        assert rec.balacheff_coeff == pytest.approx(8 / (3 * math.log(2) ** 2))
        assert rec.asymptotic_upper == pytest.approx(lg / math.pi)
        assert rec.buser_sarnak_lower == pytest.approx(4 / (9 * math.pi) * lg)

    def test_gromov_genus_strictly_decreasing(self):
        vals = [classical_bounds(g).gromov_genus for g in range(1, 500)]
        assert all(b < a for a, b in zip(vals, vals[1:]))

    def test_rejects_nonpositive_genus(self):
        with pytest.raises(DomainError):
            classical_bounds(0)


@pytest.mark.parametrize("r,expected", [(0.5, 0.5), (0.25, 0.125)])
def test_extremal_disk_area(r, expected):
    assert extremal_disk_area_lower(r, 1.0) == expected


def test_extremal_disk_area_radius_too_large():
    with pytest.raises(DomainError, match="half-systole"):
        extremal_disk_area_lower(0.6, 1.0)


class TestCorollaryResidual:
    def test_value(self):
        assert corollary_residual(PAIR, 2, LOEWNER) == pytest.approx(21.9522734986974119, rel=1e-12)

    def test_accepts_ratio_type(self):
        assert corollary_residual(PAIR, 2, SystolicRatio(LOEWNER)) == corollary_residual(PAIR, 2, LOEWNER)

    def test_diverges_at_small_sigma(self):
        vals = [corollary_residual(PAIR, 2, s) for s in (1e-2, 1e-4, 1e-8, 1e-12)]
        assert all(b > a for a, b in zip(vals, vals[1:]))
        assert vals[-1] > 1e13

    def test_log_argument_must_be_below_one(self):
        with pytest.raises(DomainError, match="not below one"):
            corollary_residual(PAIR, 2, 1 / (2 * PAIR.alpha**2))

    @given(
        st.floats(1e-4, 0.12),
        st.floats(1e-3, 0.99),
        st.integers(2, 10**6),
        st.floats(1e-6, 0.999),
        st.floats(1e-6, 0.999),
    )
    def test_strictly_decreasing_in_sigma(self, a_frac, b_frac, genus, s1, s2):
        beta = 0.5 * b_frac
        pair = AdmissiblePair(a_frac * (0.5 - beta) / 4, beta)
        smax = 1 / (2 * pair.alpha**2)
        lo, hi = sorted((s1 * smax, s2 * smax))
        if hi - lo < 1e-9 * hi:
            return
        r_lo, r_hi = corollary_residual(pair, genus, lo), corollary_residual(pair, genus, hi)
        assert r_lo >= r_hi
        # strictness is only visible when the change exceeds the float spacing at the target
        term = lambda s: math.log(2 * pair.alpha**2 * s) ** 2 / s
        target = 4 * math.pi * pair.beta**2 * (genus - 1)
        if term(lo) - term(hi) > 8 * math.ulp(target):
            assert r_lo > r_hi


class TestEntropyUpper:
    def test_extremal(self):
        assert entropy_upper(PAIR, 1.0, LOEWNER) == pytest.approx(17.7740563114556766, rel=1e-12)

    def test_ball_constant_pi(self):
        v = entropy_upper(PAIR, 1.0, LOEWNER, BallGrowthConstant(math.pi, 2))
        assert v == pytest.approx(16.2168745690782460, rel=1e-12)

    def test_default_matches_explicit_constant_bitwise(self):
        assert entropy_upper(PAIR, 1.3, 0.7) == entropy_upper(PAIR, 1.3, 0.7, BallGrowthConstant(2.0, 2))

    def test_dominates_flat_entropy(self):
        assert entropy_upper(AdmissiblePair(0.1, 0.09), 1.0, 1.0, BallGrowthConstant(math.pi, 2)) >= 0.0

    def test_vacuous(self):
        with pytest.raises(DomainError, match="vacuous"):
            entropy_upper(PAIR, 1.0, 1000.0)


class TestIsoembolic:
    def test_value(self):
        v = entropy_upper_isoembolic(PAIR, 1.0, 4 / math.pi, BallGrowthConstant(1.0, 2))
        assert v == pytest.approx(21.4932035254430084, rel=1e-12)

    def test_scaling_in_inj(self):
        g = BallGrowthConstant(1.0, 2)
        assert entropy_upper_isoembolic(PAIR, 2.0, 3.0, g) == pytest.approx(
            entropy_upper_isoembolic(PAIR, 1.0, 3.0, g) / 2, rel=1e-15
        )

    def test_vacuous_at_log_of_one(self):
        with pytest.raises(DomainError, match="vacuous"):
            entropy_upper_isoembolic(PAIR, 1.0, PAIR.alpha**2, BallGrowthConstant(1.0, 2))


@pytest.mark.parametrize("n,expected", [(1, 2.0), (2, 4 / math.pi), (3, 2 / math.pi)])
def test_sphere_isoembolic(n, expected):
    assert sphere_isoembolic(n) == pytest.approx(expected, abs=1e-15)


def test_sphere_isoembolic_rejects_zero():
    with pytest.raises(DomainError):
        sphere_isoembolic(0)

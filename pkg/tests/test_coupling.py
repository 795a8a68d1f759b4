import pytest
from hypothesis import given
from hypothesis import strategies as st

from triaxis.coupling import (
    CouplingParams,
    GrowthModel,
    MarketStructure,
    Mission,
    TrapKind,
    capital_growth_step,
    detect_first_control_trap,
    detect_second_control_trap,
    feasible_autonomy_cap,
    mission_set,
    stabilized_autonomy_cap,
)
from triaxis.errors import ValidationError
from triaxis.model import ImpactFactors

w_values = st.floats(0, 100, allow_nan=False, allow_infinity=False)


class TestMarketValidation:
    def test_auction_requires_positive_gamma(self):
        with pytest.raises(ValidationError):
            MarketStructure.auction(gamma=0)
        with pytest.raises(ValidationError):
            MarketStructure.auction(gamma=-1)

    def test_wta_requires_ordered_caps(self):
        with pytest.raises(ValidationError, match="low_cap"):
            MarketStructure.winner_take_all(50, low_cap=80, high_cap=20)


class TestAutonomyCap:
    def test_zero_capital_zero_cap(self):
        assert feasible_autonomy_cap(0, MarketStructure.auction(1)) == 0

    def test_saturation(self):
        assert feasible_autonomy_cap(100, MarketStructure.auction(1)) == 100

    def test_wta_jump(self):
        market = MarketStructure.winner_take_all(50, 10, 100)
        assert feasible_autonomy_cap(49, market) == 10
        assert feasible_autonomy_cap(51, market) == 100

    def test_wta_threshold_is_high_side(self):
        market = MarketStructure.winner_take_all(50, 10, 100)
        assert feasible_autonomy_cap(50, market) == 100

    @given(w_values, w_values, st.floats(0.1, 4, allow_nan=False))
    def test_monotone_auction(self, w1, w2, gamma):
        market = MarketStructure.auction(gamma)
        lo, hi = sorted((w1, w2))
        assert feasible_autonomy_cap(lo, market) <= feasible_autonomy_cap(hi, market)

    @given(w_values, w_values)
    def test_monotone_wta(self, w1, w2):
        market = MarketStructure.winner_take_all(40, 15, 90)
        lo, hi = sorted((w1, w2))
        assert feasible_autonomy_cap(lo, market) <= feasible_autonomy_cap(hi, market)


class TestFirstTrap:
    MARKET = MarketStructure.auction(1)

    def test_overreach_trips(self):
        report = detect_first_control_trap(80, 50, self.MARKET)
        assert report.trap is TrapKind.FIRST_TRAP
        assert "50" in report.detail  # cites the cap value

    def test_boundary_is_feasible(self):
        assert detect_first_control_trap(50, 50, self.MARKET).trap is TrapKind.NONE

    def test_zero_request_never_trips(self):
        assert detect_first_control_trap(0, 0, self.MARKET).trap is TrapKind.NONE

    @given(w_values, w_values)
    def test_matches_raw_predicate(self, a_attempted, w):
        report = detect_first_control_trap(a_attempted, w, self.MARKET)
        expected = a_attempted > feasible_autonomy_cap(w, self.MARKET)
        assert (report.trap is TrapKind.FIRST_TRAP) == expected


class TestSecondTrap:
    def test_both_conjuncts(self):
        params = CouplingParams(w_star_trap=70)
        assert detect_second_control_trap(90, params, 80, 40).trap is TrapKind.SECOND_TRAP

    def test_below_threshold(self):
        params = CouplingParams(w_star_trap=70)
        assert detect_second_control_trap(50, params, 80, 40).trap is TrapKind.NONE

    def test_request_granted(self):
        params = CouplingParams(w_star_trap=70)
        assert detect_second_control_trap(90, params, 40, 40).trap is TrapKind.NONE

    @given(w_values, w_values, w_values, w_values)
    def test_matches_raw_conjunction(self, w, w_star, requested, granted):
        params = CouplingParams(w_star_trap=w_star)
        report = detect_second_control_trap(w, params, requested, granted)
        expected = w >= w_star and requested > granted
        assert (report.trap is TrapKind.SECOND_TRAP) == expected


def _mission(i, gate):
    return Mission(f"m{i}", gate, ImpactFactors(2, 2, 2, 2))


class TestMissionSet:
    def test_all_gated_out(self):
        catalog = [_mission(i, g) for i, g in enumerate((10, 50, 90))]
        assert mission_set(0, catalog) == []

    def test_full_catalog_at_max(self):
        catalog = [_mission(i, g) for i, g in enumerate((10, 50, 90))]
        assert mission_set(100, catalog) == catalog

    @given(
        st.lists(st.floats(0, 100, allow_nan=False), min_size=0, max_size=20),
        w_values,
        w_values,
    )
    def test_monotone_inclusion(self, gates, w1, w2):
        catalog = [_mission(i, g) for i, g in enumerate(gates)]
        lo, hi = sorted((w1, w2))
        ids_lo = {m.id for m in mission_set(lo, catalog)}
        ids_hi = {m.id for m in mission_set(hi, catalog)}
        assert ids_lo <= ids_hi


class TestGrowthStep:
    MODEL = GrowthModel(eta=0.3, floor_w=1.0)

    def test_hand_value(self):
        assert capital_growth_step(50, 1, self.MODEL, 1) == pytest.approx(53.75, abs=1e-9)

    @given(w_values)
    def test_zero_practice_fixed_point(self, w):
        assert capital_growth_step(w, 0, self.MODEL, 1) == w

    @given(st.floats(0, 1, allow_nan=False), st.floats(0.1, 5, allow_nan=False))
    def test_ceiling_fixed_point(self, q, dt):
        assert capital_growth_step(100, q, self.MODEL, dt) == 100

    def test_floor_prevents_absorbing_zero(self):
        assert capital_growth_step(0, 1, self.MODEL, 1) > 0

    def test_rejects_nonpositive_dt(self):
        with pytest.raises(ValidationError, match="dt"):
            capital_growth_step(50, 1, self.MODEL, 0)
        with pytest.raises(ValidationError, match="dt"):
            capital_growth_step(50, 1, self.MODEL, -1)

    @given(w_values, st.floats(0, 1, allow_nan=False), st.floats(0, 1, allow_nan=False))
    def test_monotone_in_practice_quality(self, w, q1, q2):
        lo, hi = sorted((q1, q2))
        assert capital_growth_step(w, lo, self.MODEL, 1) <= capital_growth_step(
            w, hi, self.MODEL, 1
        )

    @given(w_values, st.floats(0, 1, allow_nan=False), st.floats(0.1, 10, allow_nan=False))
    def test_never_decreases_never_overflows(self, w, q, dt):
        after = capital_growth_step(w, q, self.MODEL, dt)
        assert w <= after <= 100


class TestStabilizedCap:
    def test_zero_meaning_identity(self):
        params = CouplingParams(beta_meaning=0.5)
        assert stabilized_autonomy_cap(60, 0, params) == 60

    def test_zero_beta_identity(self):
        params = CouplingParams(beta_meaning=0.0)
        assert stabilized_autonomy_cap(60, 100, params) == 60

    def test_hand_value(self):
        params = CouplingParams(beta_meaning=0.5)
        assert stabilized_autonomy_cap(60, 100, params) == pytest.approx(90)

    def test_ceiling_clamp(self):
        params = CouplingParams(beta_meaning=0.5)
        assert stabilized_autonomy_cap(80, 100, params) == 100

    @given(w_values, w_values, w_values)
    def test_monotone_in_meaning(self, base_cap, m1, m2):
        params = CouplingParams(beta_meaning=0.7)
        lo, hi = sorted((m1, m2))
        assert stabilized_autonomy_cap(base_cap, lo, params) <= stabilized_autonomy_cap(
            base_cap, hi, params
        )

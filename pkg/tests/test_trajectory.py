import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triaxis.coupling import (
    CouplingParams,
    GrowthModel,
    MarketStructure,
    Mission,
    TrapKind,
    capital_growth_step,
    feasible_autonomy_cap,
    stabilized_autonomy_cap,
)
from triaxis.errors import ValidationError
from triaxis.model import CareerState, ImpactFactors, Preferences, utility
from triaxis.trajectory import (
    CareerPlan,
    Phase,
    PhasePriority,
    PhaseSchedule,
    PlanMove,
    Role,
    StateAdjustment,
    StrategyScenario,
    default_phase_schedule,
    evaluate_strategy,
    option_value,
    phase_priority,
    risk_adjusted_utility,
    simulate,
)

MARKET = MarketStructure.auction(1.0)
PARAMS = CouplingParams(w_star_trap=70, beta_meaning=0.5, delta_instability=0.15)
GROWTH = GrowthModel(eta=0.3, floor_w=1.0)
PREFS = Preferences(0.4, 0.3, 0.3)
NO_IMPACT = ImpactFactors(0, 0, 0, 0)


def steady_role(q=0.0, autonomy=10.0, impact=NO_IMPACT, **kwargs):
    return Role("steady", q, autonomy, impact, income=100_000, **kwargs)


def single_role_plan(horizon, role_id="steady"):
    return CareerPlan((PlanMove(0, role_id),), horizon)


class TestPlanValidation:
    def test_first_move_must_be_year_zero(self):
        with pytest.raises(ValidationError, match="year 0"):
            CareerPlan((PlanMove(1, "steady"),), 5)

    def test_years_strictly_increasing(self):
        with pytest.raises(ValidationError, match="strictly increasing"):
            CareerPlan((PlanMove(0, "a"), PlanMove(0, "b")), 5)

    def test_horizon_covers_last_move(self):
        with pytest.raises(ValidationError, match="horizon"):
            CareerPlan((PlanMove(0, "a"), PlanMove(6, "b")), 5)

    def test_unknown_role_rejected_at_simulation(self):
        plan = single_role_plan(3, role_id="ghost")
        with pytest.raises(ValidationError, match="ghost"):
            simulate(plan, [steady_role()], MARKET, PARAMS, GROWTH, CareerState(50, 0, 0), PREFS)


class TestPhases:
    def test_default_boundaries(self):
        schedule = default_phase_schedule()
        assert phase_priority(5, schedule) is PhasePriority.MAXIMIZE_W
        assert phase_priority(15, schedule) is PhasePriority.CONVERT
        assert phase_priority(30, schedule) is PhasePriority.MAXIMIZE_M

    def test_boundary_years_belong_to_next_phase(self):
        schedule = default_phase_schedule()
        assert phase_priority(10, schedule) is PhasePriority.CONVERT
        assert phase_priority(25, schedule) is PhasePriority.MAXIMIZE_M

    def test_uncovered_year_rejected(self):
        schedule = PhaseSchedule((Phase(0, 10, PhasePriority.MAXIMIZE_W),))
        with pytest.raises(ValidationError, match="not covered"):
            phase_priority(10, schedule)

    def test_gaps_rejected(self):
        with pytest.raises(ValidationError, match="contiguous"):
            PhaseSchedule(
                (
                    Phase(0, 10, PhasePriority.MAXIMIZE_W),
                    Phase(11, 20, PhasePriority.CONVERT),
                )
            )

    def test_open_phase_only_last(self):
        with pytest.raises(ValidationError, match="open-ended"):
            PhaseSchedule(
                (
                    Phase(0, None, PhasePriority.MAXIMIZE_W),
                    Phase(10, 20, PhasePriority.CONVERT),
                )
            )


class TestSimulate:
    def test_fixed_point_no_practice(self):
        role = steady_role(q=0.0, autonomy=10.0)
        traj = simulate(
            single_role_plan(3), [role], MARKET, PARAMS, GROWTH, CareerState(50, 0, 0), PREFS
        )
        assert [p.state.w for p in traj.points] == [50, 50, 50, 50]
        assert all(p.trap.trap is TrapKind.NONE for p in traj.points)

    def test_one_year_hand_value(self):
        role = steady_role(q=1.0, autonomy=10.0)
        traj = simulate(
            single_role_plan(1), [role], MARKET, PARAMS, GROWTH, CareerState(50, 0, 0), PREFS
        )
        assert traj.points[0].state.w == 50
        assert traj.points[1].state.w == pytest.approx(53.75, abs=1e-9)

    def test_premature_overreach_traps_and_decays(self):
        role = Role("freelance", 0.4, 90.0, NO_IMPACT, income=50_000)
        traj = simulate(
            single_role_plan(8, "freelance"), [role], MARKET, PARAMS, GROWTH,
            CareerState(10, 0, 0), PREFS,
        )
        assert all(p.trap.trap is TrapKind.FIRST_TRAP for p in traj.points)
        ws = [10.0] + [p.state.w for p in traj.points]
        assert all(b < a for a, b in zip(ws, ws[1:]))

    def test_realized_autonomy_capped(self):
        role = Role("freelance", 0.4, 90.0, NO_IMPACT, income=50_000)
        traj = simulate(
            single_role_plan(8, "freelance"), [role], MARKET, PARAMS, GROWTH,
            CareerState(10, 0, 0), PREFS,
        )
        for p in traj.points:
            cap = stabilized_autonomy_cap(
                feasible_autonomy_cap(p.state.w, MARKET), p.state.m, PARAMS
            )
            assert p.state.a <= cap

    def test_entry_gate_refusal_keeps_prior_role(self):
        roles = [
            steady_role(q=0.0, autonomy=10.0),
            Role("elite", 0.9, 20.0, NO_IMPACT, income=300_000, entry_min_w=80.0),
        ]
        plan = CareerPlan((PlanMove(0, "steady"), PlanMove(2, "elite")), 4)
        traj = simulate(plan, roles, MARKET, PARAMS, GROWTH, CareerState(40, 0, 0), PREFS)
        assert len(traj.refusals) == 1
        assert traj.refusals[0].year == 2
        assert traj.refusals[0].role_id == "elite"
        assert all(p.role_id == "steady" for p in traj.points)

    def test_entry_cost_charged_on_accept(self):
        roles = [
            steady_role(q=0.0, autonomy=10.0),
            Role("pivot", 0.0, 10.0, NO_IMPACT, income=100_000, entry_cost_w=7.0),
        ]
        plan = CareerPlan((PlanMove(0, "steady"), PlanMove(2, "pivot")), 3)
        traj = simulate(plan, roles, MARKET, PARAMS, GROWTH, CareerState(50, 0, 0), PREFS)
        assert traj.points[2].state.w == pytest.approx(43.0)

    def test_year_zero_refusal_means_no_role(self):
        role = Role("gated", 0.5, 10.0, NO_IMPACT, income=100_000, entry_min_w=60.0)
        traj = simulate(
            single_role_plan(2, "gated"), [role], MARKET, PARAMS, GROWTH, CareerState(10, 0, 0), PREFS
        )
        assert traj.refusals[0].year == 0
        assert all(p.role_id is None for p in traj.points)
        assert [p.state.w for p in traj.points] == [10, 10, 10]

    def test_deterministic(self):
        role = Role("freelance", 0.4, 90.0, NO_IMPACT, income=50_000)
        args = ([role], MARKET, PARAMS, GROWTH, CareerState(10, 0, 0), PREFS)
        assert simulate(single_role_plan(8, "freelance"), *args) == simulate(
            single_role_plan(8, "freelance"), *args
        )

    def test_meaning_follows_role_impact(self):
        role = steady_role(q=0.0, autonomy=10.0, impact=ImpactFactors(5, 3, 3, 4))
        traj = simulate(
            single_role_plan(2), [role], MARKET, PARAMS, GROWTH, CareerState(50, 0, 0), PREFS
        )
        assert all(p.state.m == pytest.approx(28.8) for p in traj.points)

    @given(
        st.floats(20, 90, allow_nan=False),
        st.floats(0, 1, allow_nan=False),
        st.floats(0, 100, allow_nan=False),
        st.integers(1, 15),
    )
    @settings(max_examples=50, deadline=None)
    def test_no_trap_implies_nondecreasing_w(self, w0, q, autonomy, horizon):
        role = steady_role(q=q, autonomy=autonomy)
        traj = simulate(
            single_role_plan(horizon), [role], MARKET, PARAMS, GROWTH,
            CareerState(w0, 0, 0), PREFS,
        )
        ws = [w0] + [p.state.w for p in traj.points]
        for (prev, cur), point in zip(zip(ws, ws[1:]), traj.points):
            if point.trap.trap is TrapKind.NONE:
                assert cur >= prev


class TestStrategy:
    ROLES = [
        Role("safe_job", 0.6, 30.0, ImpactFactors(2, 2, 2, 2), income=120_000),
        Role("venture", 0.8, 40.0, ImpactFactors(4, 3, 3, 3), income=40_000),
    ]

    def scenario(self, p, rho=1.0, success=StateAdjustment(30, 20, 20),
                 failure=StateAdjustment(-30, -10, -5)):
        return StrategyScenario(
            safe_path=single_role_plan(6, "safe_job"),
            venture_path=single_role_plan(6, "venture"),
            success_probability=p,
            success_adjustment=success,
            failure_adjustment=failure,
            risk_exponent=rho,
        )

    def evaluate(self, scenario):
        return evaluate_strategy(
            scenario, self.ROLES, MARKET, PARAMS, GROWTH, CareerState(40, 10, 5), PREFS
        )

    def test_p1_prefers_simultaneous_when_success_dominates(self):
        report = self.evaluate(self.scenario(1.0, success=StateAdjustment(60, 60, 60)))
        seq = report.sequential_terminal
        suc = report.venture_success_state
        assert suc.w >= seq.w and suc.a >= seq.a and suc.m >= seq.m
        assert report.simultaneous_eu >= report.sequential_eu
        assert report.preferred == "simultaneous"

    def test_p0_prefers_sequential_when_failure_dominated(self):
        report = self.evaluate(self.scenario(0.0, failure=StateAdjustment(-100, -100, -100)))
        assert report.preferred == "sequential"
        assert report.simultaneous_eu <= report.sequential_eu

    def test_degenerate_probabilities_match_single_branch(self):
        for p in (0.0, 1.0):
            scenario = self.scenario(p, rho=0.5)
            report = self.evaluate(scenario)
            branch = (
                report.venture_success_state if p == 1.0 else report.venture_failure_state
            )
            assert report.simultaneous_eu == pytest.approx(
                risk_adjusted_utility(branch, PREFS, 0.5), abs=1e-9
            )

    def test_tie_breaks_sequential(self):
        # identical paths and no adjustments: both strategies tie exactly
        scenario = StrategyScenario(
            safe_path=single_role_plan(4, "safe_job"),
            venture_path=single_role_plan(4, "safe_job"),
            success_probability=0.5,
            success_adjustment=StateAdjustment(),
            failure_adjustment=StateAdjustment(),
            risk_exponent=1.0,
        )
        report = self.evaluate(scenario)
        assert report.sequential_eu == report.simultaneous_eu
        assert report.preferred == "sequential"

    def test_risk_exponent_validated(self):
        with pytest.raises(ValidationError, match="risk_exponent"):
            self.scenario(0.5, rho=0.0)
        with pytest.raises(ValidationError, match="probability"):
            self.scenario(1.5)

    def test_risk_transform_touches_only_wealth(self):
        state = CareerState(49, 31, 17)
        assert risk_adjusted_utility(state, Preferences(0, 1, 0), 0.5) == 31
        assert risk_adjusted_utility(state, Preferences(0, 0, 1), 0.5) == 17
        assert risk_adjusted_utility(state, Preferences(1, 0, 0), 0.5) == pytest.approx(
            100 * (0.49**0.5)
        )


class TestOptionValue:
    ROLES = [
        Role("narrow", 0.5, 20.0, ImpactFactors(2, 2, 2, 2), income=150_000),
        Role("broad", 0.8, 20.0, ImpactFactors(2, 2, 2, 2), income=100_000),
    ]
    MISSIONS = [
        Mission("starter", 10.0, ImpactFactors(2, 2, 2, 2)),
        Mission("frontier", 70.0, ImpactFactors(5, 3, 3, 4)),
    ]

    def report(self, plan_a, plan_b):
        return option_value(
            plan_a, plan_b, self.MISSIONS, self.ROLES, MARKET, PARAMS, GROWTH,
            CareerState(30, 10, 5), PREFS,
        )

    def test_identical_plans_zero_gaps(self):
        plan = single_role_plan(8, "narrow")
        report = self.report(plan, plan)
        assert report.w_gap == 0
        assert report.meaning_option_gap == 0
        assert report.reachable_missions_spec == report.reachable_missions_gen

    def test_lower_terminal_w_means_subset(self):
        report = self.report(single_role_plan(12, "broad"), single_role_plan(4, "narrow"))
        assert report.terminal_w_gen < report.terminal_w_spec
        assert set(report.reachable_missions_gen) <= set(report.reachable_missions_spec)

    def test_better_practice_unlocks_strictly_more(self):
        report = self.report(single_role_plan(20, "narrow"), single_role_plan(20, "broad"))
        assert report.terminal_w_gen > report.terminal_w_spec
        assert set(report.reachable_missions_spec) < set(report.reachable_missions_gen)
        assert report.max_meaning_gen > report.max_meaning_spec

    def test_empty_mission_set_scores_zero(self):
        report = option_value(
            single_role_plan(1, "narrow"),
            single_role_plan(1, "narrow"),
            [Mission("gated", 99.0, ImpactFactors(5, 5, 5, 5))],
            self.ROLES, MARKET, PARAMS, GROWTH, CareerState(5, 0, 0), PREFS,
        )
        assert report.reachable_missions_spec == ()
        assert report.max_meaning_spec == 0.0

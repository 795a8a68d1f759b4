"""Report builders shared by the CLI and the HTTP service.

Each function turns a validated scenario into a plain JSON-able dict so
both front ends expose numerically identical results; tests compare these
against direct engine calls.
"""

from __future__ import annotations

from .errors import ValidationError
from .household import coordination_gap
from .model import frontier_labels, impact_raw, utility
from .satisficing import least_regret_relaxation, satisfice
from .scenario import Scenario, archetypes, transition_matrix
from .trajectory import evaluate_strategy, option_value, role_state, simulate


def _role_options(scenario: Scenario) -> list[tuple[str, object]]:
    return [(role.id, role_state(role, scenario.normalization)) for role in scenario.roles]


def score_report(scenario: Scenario) -> dict:
    """Utility of every role's static state under the scenario preferences."""
    scores = []
    for role in scenario.roles:
        state = role_state(role, scenario.normalization)
        scores.append(
            {
                "role_id": role.id,
                "state": state.to_dict(),
                "impact_raw": impact_raw(role.impact),
                "utility": utility(state, scenario.preferences),
            }
        )
    return {"preferences": scenario.preferences.to_dict(), "scores": scores}


def frontier_report(scenario: Scenario) -> dict:
    options = _role_options(scenario)
    return {
        "options": [{"label": label, "state": state.to_dict()} for label, state in options],
        "frontier": frontier_labels(options),
    }


def simulate_report(scenario: Scenario, plan_name: str) -> dict:
    plan = scenario.plan(plan_name)
    trajectory = simulate(
        plan,
        scenario.roles,
        scenario.market,
        scenario.coupling,
        scenario.growth,
        scenario.initial_state,
        scenario.preferences,
        scenario.phases,
    )
    return {"plan": plan_name, **trajectory.to_dict()}


def satisfice_report(scenario: Scenario) -> dict:
    """Feasible options under the thresholds; when none qualify, the
    least-regret relaxation advice rides along."""
    options = _role_options(scenario)
    feasible = satisfice(options, scenario.thresholds)
    relaxation = None
    if not feasible and options:
        relaxation = least_regret_relaxation(options, scenario.thresholds).to_dict()
    return {
        "thresholds": scenario.thresholds.to_dict(),
        "options": [{"label": label, "state": state.to_dict()} for label, state in options],
        "feasible": [label for label, _ in feasible],
        "relaxation": relaxation,
    }


def strategy_report(scenario: Scenario) -> dict:
    if scenario.strategy is None:
        raise ValidationError("scenario has no strategy section", field_path="strategy")
    report = evaluate_strategy(
        scenario.strategy,
        scenario.roles,
        scenario.market,
        scenario.coupling,
        scenario.growth,
        scenario.initial_state,
        scenario.preferences,
        scenario.phases,
    )
    return report.to_dict()


def options_report(scenario: Scenario, specialized: str, generalized: str) -> dict:
    report = option_value(
        scenario.plan(specialized),
        scenario.plan(generalized),
        scenario.missions,
        scenario.roles,
        scenario.market,
        scenario.coupling,
        scenario.growth,
        scenario.initial_state,
        scenario.preferences,
        scenario.phases,
    )
    return {"specialized": specialized, "generalized": generalized, **report.to_dict()}


def household_report(scenario: Scenario) -> dict:
    if scenario.household is None:
        raise ValidationError("scenario has no household section", field_path="household")
    return coordination_gap(scenario.household).to_dict()


def archetypes_report() -> dict:
    return {
        "archetypes": [entry.to_dict() for entry in archetypes()],
        "transition_costs": [
            {"from": a.value, "to": b.value, **cost.to_dict()}
            for (a, b), cost in sorted(
                transition_matrix().items(), key=lambda kv: (kv[0][0].value, kv[0][1].value)
            )
        ],
    }

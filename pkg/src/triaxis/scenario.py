"""Scenario documents: loading, validation, archetypes, and persistence.

A scenario is a single UTF-8 JSON document bundling everything the engine
needs: preferences, the initial state, market/coupling/growth parameters,
role and mission catalogs, plans, thresholds, phases, and the optional
strategy and household sections. Loading is strict — unknown keys are
rejected unless prefixed ``x_``, every failure names the field path, and
omitted optional sections get documented defaults. Saving emits canonical
JSON so round-trips are byte-identical.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from .canonical import canonical_dumps
from .coupling import CouplingParams, GrowthModel, MarketKind, MarketStructure, Mission
from .errors import ValidationError
from .household import AgentSpec, Constraints, HouseholdGame, Strategy
from .model import CareerState, ImpactFactors, NormalizationConfig, Preferences
from .satisficing import Thresholds
from .trajectory import (
    CareerPlan,
    Phase,
    PhasePriority,
    PlanMove,
    Role,
    PhaseSchedule,
    StateAdjustment,
    StrategyScenario,
    default_phase_schedule,
)

SCHEMA_VERSION = "1"


# ---------------------------------------------------------------------------
# Archetypes


class Level(enum.Enum):
    LOW = "low"
    MID = "mid"
    HIGH = "high"
    VERY_HIGH = "very_high"


LEVEL_SCORE = {Level.LOW: 25.0, Level.MID: 50.0, Level.HIGH: 75.0, Level.VERY_HIGH: 90.0}


class ArchetypeName(enum.Enum):
    INDUSTRIAL_RND = "industrial_rnd"
    TENURED_ACADEMIA = "tenured_academia"
    VENTURE_ENTREPRENEURSHIP = "venture_entrepreneurship"


@dataclass(frozen=True)
class ArchetypeEntry:
    name: ArchetypeName
    signature: tuple[Level, Level, Level]  # (wealth, autonomy, meaning)
    default_state: CareerState
    variance_note: str

    def to_dict(self) -> dict:
        return {
            "name": self.name.value,
            "signature": [level.value for level in self.signature],
            "default_state": self.default_state.to_dict(),
            "variance_note": self.variance_note,
        }


def _entry(name: ArchetypeName, levels: tuple[Level, Level, Level], note: str) -> ArchetypeEntry:
    return ArchetypeEntry(
        name=name,
        signature=levels,
        default_state=CareerState(
            w=LEVEL_SCORE[levels[0]], a=LEVEL_SCORE[levels[1]], m=LEVEL_SCORE[levels[2]]
        ),
        variance_note=note,
    )


_ARCHETYPES = {
    ArchetypeName.INDUSTRIAL_RND: _entry(
        ArchetypeName.INDUSTRIAL_RND,
        (Level.HIGH, Level.MID, Level.LOW),
        "steady outcomes; compensation-led with moderate control and limited mission pull",
    ),
    ArchetypeName.TENURED_ACADEMIA: _entry(
        ArchetypeName.TENURED_ACADEMIA,
        (Level.LOW, Level.HIGH, Level.HIGH),
        "steady outcomes; autonomy- and mission-led at below-market pay",
    ),
    ArchetypeName.VENTURE_ENTREPRENEURSHIP: _entry(
        ArchetypeName.VENTURE_ENTREPRENEURSHIP,
        (Level.VERY_HIGH, Level.HIGH, Level.HIGH),
        "extreme outcome spread: typical results fall far below the average, and "
        "success stories overstate the odds",
    ),
}


def archetypes() -> tuple[ArchetypeEntry, ...]:
    return tuple(_ARCHETYPES[name] for name in ArchetypeName)


def archetype(name: ArchetypeName | str) -> ArchetypeEntry:
    if isinstance(name, str):
        try:
            name = ArchetypeName(name)
        except ValueError:
            raise ValidationError(f"unknown archetype: {name!r}", field_path="archetype") from None
    return _ARCHETYPES[name]


@dataclass(frozen=True)
class TransitionCost:
    w_cost: float
    min_w_gate: float
    note: str

    def to_dict(self) -> dict:
        return {"w_cost": self.w_cost, "min_w_gate": self.min_w_gate, "note": self.note}


_VARIANCE_NOTE = "high-variance move: typical outcomes fall well short of average outcomes"

_TRANSITIONS: dict[tuple[ArchetypeName, ArchetypeName], TransitionCost] = {}
for _a in ArchetypeName:
    for _b in ArchetypeName:
        if _a == _b:
            _TRANSITIONS[(_a, _b)] = TransitionCost(0.0, 0.0, "no transition")
        elif ArchetypeName.VENTURE_ENTREPRENEURSHIP in (_a, _b):
            _TRANSITIONS[(_a, _b)] = TransitionCost(10.0, 0.0, _VARIANCE_NOTE)
_TRANSITIONS[(ArchetypeName.INDUSTRIAL_RND, ArchetypeName.TENURED_ACADEMIA)] = TransitionCost(
    30.0, 60.0, "substantial pay cut plus retraining; gated on prior capital"
)
_TRANSITIONS[(ArchetypeName.TENURED_ACADEMIA, ArchetypeName.INDUSTRIAL_RND)] = TransitionCost(
    5.0, 0.0, "earnings recover quickly; purpose and control typically drop"
)


def transition_cost(
    from_archetype: ArchetypeName | str, to_archetype: ArchetypeName | str
) -> TransitionCost:
    a = archetype(from_archetype).name
    b = archetype(to_archetype).name
    return _TRANSITIONS[(a, b)]


def transition_matrix() -> dict[tuple[ArchetypeName, ArchetypeName], TransitionCost]:
    return dict(_TRANSITIONS)


# ---------------------------------------------------------------------------
# Document walking helpers


class _Node:
    """Cursor over a JSON object that tracks its field path, enforces the
    strict-keys rule (unknown keys rejected unless ``x_``-prefixed), and
    converts values with range checks."""

    def __init__(self, data: Any, path: str):
        if not isinstance(data, dict):
            raise ValidationError(f"{path or 'document'} must be a JSON object", field_path=path)
        self.data = data
        self.path = path
        self.seen: set[str] = set()

    def child_path(self, key: str) -> str:
        return f"{self.path}.{key}" if self.path else key

    def finish(self) -> None:
        unknown = [
            k for k in self.data if k not in self.seen and not k.startswith("x_")
        ]
        if unknown:
            raise ValidationError(
                f"unknown keys in {self.path or 'document'}: " + ", ".join(sorted(unknown)),
                field_path=self.child_path(sorted(unknown)[0]),
            )

    def has(self, key: str) -> bool:
        return key in self.data

    def raw(self, key: str, default: Any = None, required: bool = False) -> Any:
        self.seen.add(key)
        if key not in self.data:
            if required:
                raise ValidationError(
                    f"missing required field: {self.child_path(key)}",
                    field_path=self.child_path(key),
                )
            return default
        return self.data[key]

    def number(self, key: str, default: float | None = None, required: bool = False) -> Any:
        value = self.raw(key, default=default, required=required)
        if value is None:
            return None
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ValidationError(
                f"{self.child_path(key)} must be a number, got {value!r}",
                field_path=self.child_path(key),
            )
        return value

    def integer(self, key: str, default: int | None = None, required: bool = False) -> Any:
        value = self.raw(key, default=default, required=required)
        if value is None:
            return None
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValidationError(
                f"{self.child_path(key)} must be an integer, got {value!r}",
                field_path=self.child_path(key),
            )
        return value

    def string(self, key: str, default: str | None = None, required: bool = False) -> Any:
        value = self.raw(key, default=default, required=required)
        if value is None:
            return None
        if not isinstance(value, str):
            raise ValidationError(
                f"{self.child_path(key)} must be a string, got {value!r}",
                field_path=self.child_path(key),
            )
        return value

    def boolean(self, key: str, default: bool | None = None, required: bool = False) -> Any:
        value = self.raw(key, default=default, required=required)
        if value is None:
            return None
        if not isinstance(value, bool):
            raise ValidationError(
                f"{self.child_path(key)} must be a boolean, got {value!r}",
                field_path=self.child_path(key),
            )
        return value

    def array(self, key: str, default: list | None = None, required: bool = False) -> Any:
        value = self.raw(key, default=default, required=required)
        if value is None:
            return None
        if not isinstance(value, list):
            raise ValidationError(
                f"{self.child_path(key)} must be an array", field_path=self.child_path(key)
            )
        return value

    def obj(self, key: str, required: bool = False) -> "_Node | None":
        value = self.raw(key, required=required)
        if value is None:
            return None
        return _Node(value, self.child_path(key))


def _rescope(exc: ValidationError, path: str) -> ValidationError:
    """Attach a document path to a domain-level validation failure."""
    field_path = exc.field_path if exc.field_path and exc.field_path.startswith(path) else path
    message = exc.message if path in exc.message else f"{path}: {exc.message}"
    return ValidationError(message, field_path=field_path)


def _build(path: str, factory, *args, **kwargs):
    try:
        return factory(*args, **kwargs)
    except ValidationError as exc:
        raise _rescope(exc, path) from None


# ---------------------------------------------------------------------------
# Section parsers


def _parse_preferences(node: _Node) -> Preferences:
    prefs = _build(
        node.path,
        Preferences,
        lambda_w=node.number("lambda_w", required=True),
        lambda_a=node.number("lambda_a", required=True),
        lambda_m=node.number("lambda_m", required=True),
    )
    node.finish()
    return prefs


def _parse_state(node: _Node) -> CareerState:
    state = _build(
        node.path,
        CareerState,
        w=node.number("w", required=True),
        a=node.number("a", required=True),
        m=node.number("m", required=True),
    )
    node.finish()
    return state


def _parse_impact(node: _Node) -> ImpactFactors:
    impact = _build(
        node.path,
        ImpactFactors,
        scale=node.number("scale", required=True),
        neglectedness=node.number("neglectedness", required=True),
        tractability=node.number("tractability", required=True),
        personal_fit=node.number("personal_fit", required=True),
    )
    node.finish()
    return impact


def _parse_normalization(node: _Node) -> NormalizationConfig:
    config = _build(
        node.path,
        NormalizationConfig,
        income_ceiling=node.number("income_ceiling", default=200_000.0),
        runway_ceiling=node.number("runway_ceiling", default=5.0),
    )
    node.finish()
    return config


def _parse_market(node: _Node) -> MarketStructure:
    kind = node.string("kind", required=True)
    if kind == MarketKind.AUCTION.value:
        market = _build(
            node.path, MarketStructure.auction, gamma=node.number("gamma", default=1.0)
        )
    elif kind == MarketKind.WINNER_TAKE_ALL.value:
        market = _build(
            node.path,
            MarketStructure.winner_take_all,
            threshold_w=node.number("threshold_w", required=True),
            low_cap=node.number("low_cap", required=True),
            high_cap=node.number("high_cap", required=True),
        )
    else:
        raise ValidationError(
            f"{node.child_path('kind')} must be 'auction' or 'winner_take_all', got {kind!r}",
            field_path=node.child_path("kind"),
        )
    node.finish()
    return market


def _parse_coupling(node: _Node) -> CouplingParams:
    params = _build(
        node.path,
        CouplingParams,
        w_star_trap=node.number("w_star_trap", default=70.0),
        beta_meaning=node.number("beta_meaning", default=0.5),
        delta_instability=node.number("delta_instability", default=0.15),
    )
    node.finish()
    return params


def _parse_growth(node: _Node) -> GrowthModel:
    growth = _build(
        node.path,
        GrowthModel,
        eta=node.number("eta", default=0.3),
        floor_w=node.number("floor_w", default=1.0),
    )
    node.finish()
    return growth


def _parse_role(node: _Node) -> Role:
    role = _build(
        node.path,
        Role,
        id=node.string("id", required=True),
        practice_quality=node.number("practice_quality", required=True),
        offered_autonomy=node.number("offered_autonomy", required=True),
        impact=_parse_impact(node.obj("impact", required=True)),
        income=node.number("income", required=True),
        entry_min_w=node.number("entry_min_w", default=0.0),
        entry_cost_w=node.number("entry_cost_w", default=0.0),
    )
    node.finish()
    return role


def _parse_mission(node: _Node) -> Mission:
    mission = _build(
        node.path,
        Mission,
        id=node.string("id", required=True),
        min_w=node.number("min_w", required=True),
        impact=_parse_impact(node.obj("impact", required=True)),
    )
    node.finish()
    return mission


def _parse_plan(node: _Node) -> CareerPlan:
    moves_raw = node.array("moves", required=True)
    moves = []
    for i, move_data in enumerate(moves_raw):
        move_node = _Node(move_data, f"{node.path}.moves[{i}]")
        moves.append(
            _build(
                move_node.path,
                PlanMove,
                year=move_node.integer("year", required=True),
                role_id=move_node.string("role_id", required=True),
            )
        )
        move_node.finish()
    plan = _build(
        node.path, CareerPlan, moves=tuple(moves), horizon=node.integer("horizon", required=True)
    )
    node.finish()
    return plan


def _parse_thresholds(node: _Node) -> Thresholds:
    thresholds = _build(
        node.path,
        Thresholds,
        w_min=node.number("w_min", default=0.0),
        a_min=node.number("a_min", default=0.0),
        m_min=node.number("m_min", default=0.0),
    )
    node.finish()
    return thresholds


_PRIORITIES = {p.value: p for p in PhasePriority}


def _parse_phases(items: list, path: str) -> PhaseSchedule:
    phases = []
    for i, data in enumerate(items):
        node = _Node(data, f"{path}[{i}]")
        priority_raw = node.string("priority", required=True)
        if priority_raw not in _PRIORITIES:
            raise ValidationError(
                f"{node.child_path('priority')} must be one of "
                f"{sorted(_PRIORITIES)}, got {priority_raw!r}",
                field_path=node.child_path("priority"),
            )
        end_raw = node.raw("end_year", default=None)
        if end_raw is not None and (not isinstance(end_raw, int) or isinstance(end_raw, bool)):
            raise ValidationError(
                f"{node.child_path('end_year')} must be an integer or null",
                field_path=node.child_path("end_year"),
            )
        phases.append(
            Phase(
                start_year=node.integer("start_year", required=True),
                end_year=end_raw,
                priority=_PRIORITIES[priority_raw],
            )
        )
        node.finish()
    return _build(path, PhaseSchedule, tuple(phases))


def _parse_adjustment(node: _Node) -> StateAdjustment:
    adj = _build(
        node.path,
        StateAdjustment,
        dw=node.number("dw", default=0.0),
        da=node.number("da", default=0.0),
        dm=node.number("dm", default=0.0),
    )
    node.finish()
    return adj


def _parse_strategy(node: _Node) -> StrategyScenario:
    strategy = _build(
        node.path,
        StrategyScenario,
        safe_path=_parse_plan(node.obj("safe_path", required=True)),
        venture_path=_parse_plan(node.obj("venture_path", required=True)),
        success_probability=node.number("success_probability", required=True),
        success_adjustment=_parse_adjustment(node.obj("success_adjustment", required=True)),
        failure_adjustment=_parse_adjustment(node.obj("failure_adjustment", required=True)),
        risk_exponent=node.number("risk_exponent", default=1.0),
    )
    node.finish()
    return strategy


def _parse_agent(node: _Node) -> AgentSpec:
    strategies = []
    for i, data in enumerate(node.array("strategies", required=True)):
        s_node = _Node(data, f"{node.path}.strategies[{i}]")
        strategies.append(
            _build(
                s_node.path,
                Strategy,
                label=s_node.string("label", required=True),
                state=_parse_state(s_node.obj("state", required=True)),
                high_variance=s_node.boolean("high_variance", default=False),
            )
        )
        s_node.finish()
    agent = _build(
        node.path,
        AgentSpec,
        strategies=tuple(strategies),
        preferences=_parse_preferences(node.obj("preferences", required=True)),
    )
    node.finish()
    return agent


def _parse_household(node: _Node) -> HouseholdGame:
    agent1 = _parse_agent(node.obj("agent1", required=True))
    agent2 = _parse_agent(node.obj("agent2", required=True))
    c_node = node.obj("constraints")
    if c_node is None:
        constraints = Constraints()
    else:
        colocation_raw = c_node.raw("colocation_map", default={})
        if not isinstance(colocation_raw, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in colocation_raw.items()
        ):
            raise ValidationError(
                f"{c_node.child_path('colocation_map')} must map strategy labels to locations",
                field_path=c_node.child_path("colocation_map"),
            )
        flexible_raw = c_node.array("flexible_strategies", default=[])
        if not all(isinstance(x, str) for x in flexible_raw):
            raise ValidationError(
                f"{c_node.child_path('flexible_strategies')} must be an array of labels",
                field_path=c_node.child_path("flexible_strategies"),
            )
        constraints = _build(
            c_node.path,
            Constraints,
            colocation_required=c_node.boolean("colocation_required", default=False),
            colocation_map=colocation_raw,
            care_requirement=c_node.boolean("care_requirement", default=False),
            flexible_strategies=frozenset(flexible_raw),
            care_penalty=c_node.number("care_penalty", default=0.0),
            joint_w_floor=c_node.number("joint_w_floor", default=0.0),
            max_one_high_variance=c_node.boolean("max_one_high_variance", default=False),
        )
        c_node.finish()
    game = _build(node.path, HouseholdGame, agent1=agent1, agent2=agent2, constraints=constraints)
    node.finish()
    return game


# ---------------------------------------------------------------------------
# Scenario


@dataclass(frozen=True)
class Scenario:
    version: str
    preferences: Preferences
    initial_state: CareerState
    normalization: NormalizationConfig
    market: MarketStructure
    coupling: CouplingParams
    growth: GrowthModel
    roles: tuple[Role, ...]
    missions: tuple[Mission, ...]
    plans: Mapping[str, CareerPlan]
    thresholds: Thresholds
    phases: PhaseSchedule
    strategy: StrategyScenario | None = None
    household: HouseholdGame | None = None

    def role_catalog(self) -> dict[str, Role]:
        return {role.id: role for role in self.roles}

    def plan(self, name: str) -> CareerPlan:
        if name not in self.plans:
            raise ValidationError(
                f"unknown plan: {name!r} (available: {', '.join(sorted(self.plans)) or 'none'})",
                field_path="plans",
            )
        return self.plans[name]


def scenario_from_dict(document: Mapping[str, Any]) -> Scenario:
    """Validate a parsed JSON document into a Scenario, applying defaults
    for omitted optional sections and resolving every cross-reference."""
    root = _Node(dict(document), "")

    version = root.string("version", default=SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ValidationError(
            f"unrecognized scenario version: {version!r} (supported: {SCHEMA_VERSION!r})",
            field_path="version",
        )

    preferences = _parse_preferences(root.obj("preferences", required=True))
    initial_state = _parse_state(root.obj("initial_state", required=True))

    norm_node = root.obj("normalization")
    normalization = _parse_normalization(norm_node) if norm_node else NormalizationConfig()
    market_node = root.obj("market")
    market = _parse_market(market_node) if market_node else MarketStructure.auction(gamma=1.0)
    coupling_node = root.obj("coupling")
    coupling = _parse_coupling(coupling_node) if coupling_node else CouplingParams()
    growth_node = root.obj("growth")
    growth = _parse_growth(growth_node) if growth_node else GrowthModel()

    roles = []
    seen_roles: set[str] = set()
    for i, data in enumerate(root.array("roles", default=[])):
        role = _parse_role(_Node(data, f"roles[{i}]"))
        if role.id in seen_roles:
            raise ValidationError(f"duplicate role id: {role.id!r}", field_path=f"roles[{i}].id")
        seen_roles.add(role.id)
        roles.append(role)

    missions = []
    seen_missions: set[str] = set()
    for i, data in enumerate(root.array("missions", default=[])):
        mission = _parse_mission(_Node(data, f"missions[{i}]"))
        if mission.id in seen_missions:
            raise ValidationError(
                f"duplicate mission id: {mission.id!r}", field_path=f"missions[{i}].id"
            )
        seen_missions.add(mission.id)
        missions.append(mission)

    plans_raw = root.raw("plans", default={})
    if not isinstance(plans_raw, dict):
        raise ValidationError("plans must be an object of named plans", field_path="plans")
    plans: dict[str, CareerPlan] = {}
    for name in plans_raw:
        plans[name] = _parse_plan(_Node(plans_raw[name], f"plans.{name}"))

    thresholds_node = root.obj("thresholds")
    thresholds = _parse_thresholds(thresholds_node) if thresholds_node else Thresholds(0, 0, 0)

    phases_raw = root.array("phases")
    phases = _parse_phases(phases_raw, "phases") if phases_raw is not None else default_phase_schedule()

    strategy_node = root.obj("strategy")
    strategy = _parse_strategy(strategy_node) if strategy_node else None

    household_node = root.obj("household")
    household = _parse_household(household_node) if household_node else None

    root.finish()

    def check_plan_roles(plan: CareerPlan, path: str) -> None:
        for move in plan.moves:
            if move.role_id not in seen_roles:
                raise ValidationError(
                    f"{path} references unknown role id: {move.role_id!r}", field_path=path
                )

    for name, plan in plans.items():
        check_plan_roles(plan, f"plans.{name}")
    if strategy is not None:
        check_plan_roles(strategy.safe_path, "strategy.safe_path")
        check_plan_roles(strategy.venture_path, "strategy.venture_path")

    return Scenario(
        version=version,
        preferences=preferences,
        initial_state=initial_state,
        normalization=normalization,
        market=market,
        coupling=coupling,
        growth=growth,
        roles=tuple(roles),
        missions=tuple(missions),
        plans=plans,
        thresholds=thresholds,
        phases=phases,
        strategy=strategy,
        household=household,
    )


def load_scenario(text: str) -> Scenario:
    """Parse and validate a scenario document from JSON text."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(
            f"parse error at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    return scenario_from_dict(document)


def load_scenario_file(path: str) -> Scenario:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read scenario file {path!r}: {exc}") from None
    return load_scenario(text)


def scenario_to_dict(scenario: Scenario) -> dict:
    """Serialize with every section explicit (defaults materialized)."""
    out: dict[str, Any] = {
        "version": scenario.version,
        "preferences": scenario.preferences.to_dict(),
        "initial_state": scenario.initial_state.to_dict(),
        "normalization": scenario.normalization.to_dict(),
        "market": scenario.market.to_dict(),
        "coupling": scenario.coupling.to_dict(),
        "growth": scenario.growth.to_dict(),
        "roles": [role.to_dict() for role in scenario.roles],
        "missions": [mission.to_dict() for mission in scenario.missions],
        "plans": {name: plan.to_dict() for name, plan in scenario.plans.items()},
        "thresholds": scenario.thresholds.to_dict(),
        "phases": scenario.phases.to_dict()["phases"],
    }
    if scenario.strategy is not None:
        out["strategy"] = scenario.strategy.to_dict()
    if scenario.household is not None:
        out["household"] = scenario.household.to_dict()
    return out


def save_scenario(scenario: Scenario) -> str:
    """Canonical JSON text for a scenario; load/save round-trips are
    byte-identical on canonical documents."""
    return canonical_dumps(scenario_to_dict(scenario))

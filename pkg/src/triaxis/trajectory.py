"""Discrete-time career simulation.

A plan is a sequence of role moves on a yearly grid. Each simulated year:
the scheduled move is attempted (entry gates can refuse it), wealth grows
with the role's practice quality, autonomy is capped by what the market
funds at that wealth (stabilized by meaning), and overreaching the cap
records the first control trap and decays wealth for that year.

Also here: phase schedules, sequential-vs-simultaneous strategy comparison
under success/failure branching, and the option-value report comparing what
two plans leave reachable.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .coupling import (
    CouplingParams,
    GrowthModel,
    MarketStructure,
    Mission,
    NO_TRAP,
    BindingConstraint,
    TrapKind,
    TrapReport,
    capital_growth_step,
    feasible_autonomy_cap,
    mission_set,
    stabilized_autonomy_cap,
)
from .errors import ValidationError
from .model import (
    AXIS_MAX,
    CareerState,
    ImpactFactors,
    NormalizationConfig,
    Preferences,
    _check_range,
    meaning_score,
    utility,
)


@dataclass(frozen=True)
class Role:
    """A job: practice quality drives wealth growth, offered autonomy is what
    the role nominally grants, impact sets the meaning score, and the entry
    gate/cost model switching frictions."""

    id: str
    practice_quality: float
    offered_autonomy: float
    impact: ImpactFactors
    income: float
    entry_min_w: float = 0.0
    entry_cost_w: float = 0.0

    def __post_init__(self):
        if not self.id:
            raise ValidationError("role id must be nonempty", field_path="roles.id")
        object.__setattr__(
            self,
            "practice_quality",
            _check_range("role.practice_quality", self.practice_quality, 0.0, 1.0),
        )
        object.__setattr__(
            self,
            "offered_autonomy",
            _check_range("role.offered_autonomy", self.offered_autonomy, 0.0, AXIS_MAX),
        )
        object.__setattr__(self, "income", _check_range("role.income", self.income, 0.0, math.inf))
        object.__setattr__(
            self, "entry_min_w", _check_range("role.entry_min_w", self.entry_min_w, 0.0, AXIS_MAX)
        )
        object.__setattr__(
            self, "entry_cost_w", _check_range("role.entry_cost_w", self.entry_cost_w, 0.0, AXIS_MAX)
        )

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "practice_quality": self.practice_quality,
            "offered_autonomy": self.offered_autonomy,
            "impact": self.impact.to_dict(),
            "income": self.income,
            "entry_min_w": self.entry_min_w,
            "entry_cost_w": self.entry_cost_w,
        }


def role_state(role: Role, config: NormalizationConfig) -> CareerState:
    """Static view of a role as a point in axis space: wealth from income
    against the ceiling, autonomy as offered, meaning from impact."""
    w = AXIS_MAX * min(1.0, role.income / config.income_ceiling)
    return CareerState(w=w, a=role.offered_autonomy, m=meaning_score(role.impact))


@dataclass(frozen=True)
class PlanMove:
    year: int
    role_id: str

    def __post_init__(self):
        if not isinstance(self.year, int) or isinstance(self.year, bool) or self.year < 0:
            raise ValidationError(
                f"move year must be a nonnegative integer, got {self.year!r}",
                field_path="moves.year",
            )
        if not self.role_id:
            raise ValidationError("move role_id must be nonempty", field_path="moves.role_id")

    def to_dict(self) -> dict:
        return {"year": self.year, "role_id": self.role_id}


@dataclass(frozen=True)
class CareerPlan:
    """An ordered move sequence starting at year 0 and a simulation horizon."""

    moves: tuple[PlanMove, ...]
    horizon: int

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))
        if not self.moves:
            raise ValidationError("plan must contain at least one move", field_path="moves")
        if self.moves[0].year != 0:
            raise ValidationError("first move must be at year 0", field_path="moves[0].year")
        years = [m.year for m in self.moves]
        if any(b <= a for a, b in zip(years, years[1:])):
            raise ValidationError("move years must be strictly increasing", field_path="moves")
        if not isinstance(self.horizon, int) or isinstance(self.horizon, bool) or self.horizon < 0:
            raise ValidationError("horizon must be a nonnegative integer", field_path="horizon")
        if self.horizon < years[-1]:
            raise ValidationError(
                f"horizon {self.horizon} precedes the last move year {years[-1]}",
                field_path="horizon",
            )

    def to_dict(self) -> dict:
        return {"horizon": self.horizon, "moves": [m.to_dict() for m in self.moves]}


class PhasePriority(enum.Enum):
    MAXIMIZE_W = "maximize_w"
    CONVERT = "convert"
    MAXIMIZE_M = "maximize_m"


@dataclass(frozen=True)
class Phase:
    start_year: int
    end_year: int | None  # None = open-ended (last phase only)
    priority: PhasePriority

    def to_dict(self) -> dict:
        return {
            "start_year": self.start_year,
            "end_year": self.end_year,
            "priority": self.priority.value,
        }


@dataclass(frozen=True)
class PhaseSchedule:
    """Contiguous, non-overlapping phases from year 0; each phase covers
    [start_year, end_year). The last phase may be open-ended."""

    phases: tuple[Phase, ...]

    def __post_init__(self):
        object.__setattr__(self, "phases", tuple(self.phases))
        if not self.phases:
            raise ValidationError("phase schedule must be nonempty", field_path="phases")
        if self.phases[0].start_year != 0:
            raise ValidationError("first phase must start at year 0", field_path="phases[0]")
        for i, phase in enumerate(self.phases):
            last = i == len(self.phases) - 1
            if phase.end_year is None:
                if not last:
                    raise ValidationError(
                        "only the last phase may be open-ended", field_path=f"phases[{i}]"
                    )
            elif phase.end_year <= phase.start_year:
                raise ValidationError(
                    "phase end_year must exceed start_year", field_path=f"phases[{i}]"
                )
            if not last and self.phases[i + 1].start_year != phase.end_year:
                raise ValidationError(
                    "phases must be contiguous and non-overlapping",
                    field_path=f"phases[{i + 1}]",
                )

    def to_dict(self) -> dict:
        return {"phases": [p.to_dict() for p in self.phases]}


def default_phase_schedule() -> PhaseSchedule:
    """Build-wealth for a decade, convert it for fifteen years, then
    maximize meaning: the conventional three-phase arc."""
    return PhaseSchedule(
        (
            Phase(0, 10, PhasePriority.MAXIMIZE_W),
            Phase(10, 25, PhasePriority.CONVERT),
            Phase(25, None, PhasePriority.MAXIMIZE_M),
        )
    )


def phase_priority(year: int, schedule: PhaseSchedule) -> PhasePriority:
    """Priority of the unique phase covering ``year``."""
    if not isinstance(year, int) or isinstance(year, bool) or year < 0:
        raise ValidationError(f"year must be a nonnegative integer, got {year!r}")
    for phase in schedule.phases:
        if phase.start_year <= year and (phase.end_year is None or year < phase.end_year):
            return phase.priority
    raise ValidationError(f"year {year} is not covered by the phase schedule", field_path="phases")


@dataclass(frozen=True)
class TrajectoryPoint:
    year: int
    state: CareerState
    role_id: str | None
    trap: TrapReport
    phase: PhasePriority

    def to_dict(self) -> dict:
        return {
            "year": self.year,
            "state": self.state.to_dict(),
            "role_id": self.role_id,
            "trap": self.trap.to_dict(),
            "phase": self.phase.value,
        }


@dataclass(frozen=True)
class MoveRefusal:
    year: int
    role_id: str
    reason: str

    def to_dict(self) -> dict:
        return {"year": self.year, "role_id": self.role_id, "reason": self.reason}


@dataclass(frozen=True)
class Trajectory:
    points: tuple[TrajectoryPoint, ...]
    refusals: tuple[MoveRefusal, ...]
    terminal_utility: float

    @property
    def terminal_state(self) -> CareerState:
        return self.points[-1].state

    def to_dict(self) -> dict:
        return {
            "points": [p.to_dict() for p in self.points],
            "refusals": [r.to_dict() for r in self.refusals],
            "terminal_utility": self.terminal_utility,
        }


def _role_catalog(roles: Sequence[Role] | Mapping[str, Role]) -> dict[str, Role]:
    if isinstance(roles, Mapping):
        return dict(roles)
    catalog: dict[str, Role] = {}
    for role in roles:
        if role.id in catalog:
            raise ValidationError(f"duplicate role id: {role.id!r}", field_path="roles")
        catalog[role.id] = role
    return catalog


def simulate(
    plan: CareerPlan,
    roles: Sequence[Role] | Mapping[str, Role],
    market: MarketStructure,
    params: CouplingParams,
    growth: GrowthModel,
    initial: CareerState,
    prefs: Preferences,
    schedule: PhaseSchedule | None = None,
) -> Trajectory:
    """Simulate a plan year by year from years 0 through the horizon.

    Per year, in order: attempt any scheduled move (refused if the entry
    gate exceeds current wealth; the entry cost is charged on acceptance),
    grow wealth with the active role's practice quality (year 0 is the
    post-move snapshot: growth applies from year 1 on), compute the meaning
    score from the role's impact, cap autonomy by the stabilized market
    cap, and — when the offered autonomy strictly exceeds that cap — record
    the first control trap and decay wealth once for the year. Realized
    autonomy is re-capped after the decay so the recorded state always
    satisfies the bound. Deterministic throughout.
    """
    catalog = _role_catalog(roles)
    for move in plan.moves:
        if move.role_id not in catalog:
            raise ValidationError(
                f"plan references unknown role id: {move.role_id!r}", field_path="moves.role_id"
            )
    if schedule is None:
        schedule = default_phase_schedule()

    move_by_year = {m.year: m.role_id for m in plan.moves}
    w = initial.w
    role: Role | None = None
    points: list[TrajectoryPoint] = []
    refusals: list[MoveRefusal] = []

    for year in range(plan.horizon + 1):
        if year in move_by_year:
            candidate = catalog[move_by_year[year]]
            if w >= candidate.entry_min_w:
                role = candidate
                w = max(0.0, w - candidate.entry_cost_w)
            else:
                refusals.append(
                    MoveRefusal(
                        year=year,
                        role_id=candidate.id,
                        reason=(
                            f"entry gate {candidate.entry_min_w:g} exceeds wealth {w:g}; "
                            "staying in prior role"
                        ),
                    )
                )
        q = role.practice_quality if role is not None else 0.0
        offered = role.offered_autonomy if role is not None else 0.0
        m = meaning_score(role.impact) if role is not None else 0.0

        if year > 0:
            w = capital_growth_step(w, q, growth, dt=1.0)
        cap = stabilized_autonomy_cap(feasible_autonomy_cap(w, market), m, params)
        if offered > cap:
            trap = TrapReport(
                TrapKind.FIRST_TRAP,
                f"year {year}: offered autonomy {offered:g} exceeds the stabilized cap "
                f"{cap:g}; wealth decays by {params.delta_instability:g} this year",
                BindingConstraint.MARKET_VIABILITY,
            )
            w = max(0.0, w - params.delta_instability * w)
            cap = stabilized_autonomy_cap(feasible_autonomy_cap(w, market), m, params)
        else:
            trap = NO_TRAP
        a = min(offered, cap)
        points.append(
            TrajectoryPoint(
                year=year,
                state=CareerState(w=w, a=a, m=m),
                role_id=role.id if role is not None else None,
                trap=trap,
                phase=phase_priority(year, schedule),
            )
        )

    terminal = points[-1].state
    return Trajectory(
        points=tuple(points),
        refusals=tuple(refusals),
        terminal_utility=utility(terminal, prefs),
    )


@dataclass(frozen=True)
class StateAdjustment:
    """Additive per-axis shock applied to a simulated terminal state, then
    clamped back into axis range."""

    dw: float = 0.0
    da: float = 0.0
    dm: float = 0.0

    def __post_init__(self):
        for name in ("dw", "da", "dm"):
            object.__setattr__(
                self, name, _check_range(name, getattr(self, name), -AXIS_MAX, AXIS_MAX)
            )

    def apply(self, state: CareerState) -> CareerState:
        clamp = lambda v: min(AXIS_MAX, max(0.0, v))
        return CareerState(
            w=clamp(state.w + self.dw), a=clamp(state.a + self.da), m=clamp(state.m + self.dm)
        )

    def to_dict(self) -> dict:
        return {"dw": self.dw, "da": self.da, "dm": self.dm}


@dataclass(frozen=True)
class StrategyScenario:
    """Sequential-vs-simultaneous comparison inputs: a safe path, a venture
    path whose terminal state branches on success/failure, the success
    probability, and the risk-aversion exponent applied to terminal wealth."""

    safe_path: CareerPlan
    venture_path: CareerPlan
    success_probability: float
    success_adjustment: StateAdjustment
    failure_adjustment: StateAdjustment
    risk_exponent: float = 1.0

    def __post_init__(self):
        object.__setattr__(
            self,
            "success_probability",
            _check_range("strategy.success_probability", self.success_probability, 0.0, 1.0),
        )
        rho = _check_range("strategy.risk_exponent", self.risk_exponent, 0.0, 1.0)
        if rho <= 0:
            raise ValidationError(
                "strategy.risk_exponent must be in (0, 1]",
                field_path="strategy.risk_exponent",
            )
        object.__setattr__(self, "risk_exponent", rho)

    def to_dict(self) -> dict:
        return {
            "safe_path": self.safe_path.to_dict(),
            "venture_path": self.venture_path.to_dict(),
            "success_probability": self.success_probability,
            "success_adjustment": self.success_adjustment.to_dict(),
            "failure_adjustment": self.failure_adjustment.to_dict(),
            "risk_exponent": self.risk_exponent,
        }


def risk_adjusted_utility(state: CareerState, prefs: Preferences, rho: float) -> float:
    """Utility with a concave transform on the wealth axis only: wealth maps
    through 100*(w/100)**rho before weighting, penalizing financial downside."""
    w = AXIS_MAX * (state.w / AXIS_MAX) ** rho
    return utility(CareerState(w=w, a=state.a, m=state.m), prefs)


@dataclass(frozen=True)
class StrategyReport:
    sequential_eu: float
    simultaneous_eu: float
    preferred: str  # "sequential" | "simultaneous"
    sequential_terminal: CareerState
    venture_success_state: CareerState
    venture_failure_state: CareerState

    def to_dict(self) -> dict:
        return {
            "sequential_eu": self.sequential_eu,
            "simultaneous_eu": self.simultaneous_eu,
            "preferred": self.preferred,
            "sequential_terminal": self.sequential_terminal.to_dict(),
            "venture_success_state": self.venture_success_state.to_dict(),
            "venture_failure_state": self.venture_failure_state.to_dict(),
        }


def evaluate_strategy(
    scenario: StrategyScenario,
    roles: Sequence[Role] | Mapping[str, Role],
    market: MarketStructure,
    params: CouplingParams,
    growth: GrowthModel,
    initial: CareerState,
    prefs: Preferences,
    schedule: PhaseSchedule | None = None,
) -> StrategyReport:
    """Expected risk-adjusted utility of the safe path versus the venture.

    The venture's two branches are enumerated exactly: its simulated
    terminal state is shifted by the success adjustment with probability p
    and by the failure adjustment with probability 1-p. Ties prefer the
    sequential strategy.
    """
    rho = scenario.risk_exponent
    p = scenario.success_probability

    safe = simulate(scenario.safe_path, roles, market, params, growth, initial, prefs, schedule)
    venture = simulate(
        scenario.venture_path, roles, market, params, growth, initial, prefs, schedule
    )
    success_state = scenario.success_adjustment.apply(venture.terminal_state)
    failure_state = scenario.failure_adjustment.apply(venture.terminal_state)

    sequential_eu = risk_adjusted_utility(safe.terminal_state, prefs, rho)
    simultaneous_eu = p * risk_adjusted_utility(success_state, prefs, rho) + (
        1.0 - p
    ) * risk_adjusted_utility(failure_state, prefs, rho)
    preferred = "simultaneous" if simultaneous_eu > sequential_eu else "sequential"
    return StrategyReport(
        sequential_eu=sequential_eu,
        simultaneous_eu=simultaneous_eu,
        preferred=preferred,
        sequential_terminal=safe.terminal_state,
        venture_success_state=success_state,
        venture_failure_state=failure_state,
    )


@dataclass(frozen=True)
class OptionValueReport:
    """What two plans leave open: terminal wealth, the missions reachable at
    that wealth, and the best meaning score among them."""

    terminal_w_spec: float
    terminal_w_gen: float
    w_gap: float  # specialized minus generalized
    reachable_missions_spec: tuple[str, ...]
    reachable_missions_gen: tuple[str, ...]
    max_meaning_spec: float
    max_meaning_gen: float
    meaning_option_gap: float  # generalized minus specialized

    def to_dict(self) -> dict:
        return {
            "terminal_w_spec": self.terminal_w_spec,
            "terminal_w_gen": self.terminal_w_gen,
            "w_gap": self.w_gap,
            "reachable_missions_spec": list(self.reachable_missions_spec),
            "reachable_missions_gen": list(self.reachable_missions_gen),
            "max_meaning_spec": self.max_meaning_spec,
            "max_meaning_gen": self.max_meaning_gen,
            "meaning_option_gap": self.meaning_option_gap,
        }


def option_value(
    specialized: CareerPlan,
    generalized: CareerPlan,
    mission_catalog: Sequence[Mission],
    roles: Sequence[Role] | Mapping[str, Role],
    market: MarketStructure,
    params: CouplingParams,
    growth: GrowthModel,
    initial: CareerState,
    prefs: Preferences,
    schedule: PhaseSchedule | None = None,
) -> OptionValueReport:
    """Compare two plans by the option value their terminal wealth buys:
    the reachable mission set and the best meaning score inside it."""
    spec = simulate(specialized, roles, market, params, growth, initial, prefs, schedule)
    gen = simulate(generalized, roles, market, params, growth, initial, prefs, schedule)
    w_spec = spec.terminal_state.w
    w_gen = gen.terminal_state.w
    reach_spec = mission_set(w_spec, tuple(mission_catalog))
    reach_gen = mission_set(w_gen, tuple(mission_catalog))
    best = lambda missions: max((meaning_score(m.impact) for m in missions), default=0.0)
    max_spec = best(reach_spec)
    max_gen = best(reach_gen)
    return OptionValueReport(
        terminal_w_spec=w_spec,
        terminal_w_gen=w_gen,
        w_gap=w_spec - w_gen,
        reachable_missions_spec=tuple(m.id for m in reach_spec),
        reachable_missions_gen=tuple(m.id for m in reach_gen),
        max_meaning_spec=max_spec,
        max_meaning_gen=max_gen,
        meaning_option_gap=max_gen - max_spec,
    )

"""Two-agent household coordination games.

Each partner picks one labeled strategy; payoffs are their own weighted
utilities, minus a shared care penalty when neither chosen strategy is
flexible. Co-location, a joint wealth floor, and the risk-hedging rule make
profiles infeasible outright. Pure Nash equilibria are enumerated
exhaustively (an agent cannot deviate into an infeasible profile), the
cooperative optimum maximizes joint welfare, and the gap between the two
quantifies what independent optimization leaves on the table.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Mapping

from .errors import InfeasibleError, ValidationError
from .model import CareerState, Preferences, _check_range, utility

MAX_STRATEGIES = 64


@dataclass(frozen=True)
class Strategy:
    label: str
    state: CareerState
    high_variance: bool = False

    def __post_init__(self):
        if not self.label:
            raise ValidationError("strategy label must be nonempty", field_path="strategies.label")

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "state": self.state.to_dict(),
            "high_variance": self.high_variance,
        }


@dataclass(frozen=True)
class AgentSpec:
    strategies: tuple[Strategy, ...]
    preferences: Preferences

    def __post_init__(self):
        object.__setattr__(self, "strategies", tuple(self.strategies))
        if not self.strategies:
            raise ValidationError("agent needs at least one strategy", field_path="strategies")
        if len(self.strategies) > MAX_STRATEGIES:
            raise ValidationError(
                f"agent strategy set exceeds {MAX_STRATEGIES}", field_path="strategies"
            )
        labels = [s.label for s in self.strategies]
        if len(set(labels)) != len(labels):
            raise ValidationError("agent strategy labels must be unique", field_path="strategies")

    def get(self, label: str) -> Strategy:
        for s in self.strategies:
            if s.label == label:
                return s
        raise ValidationError(f"unknown strategy label: {label!r}", field_path="strategies")

    def to_dict(self) -> dict:
        return {
            "strategies": [s.to_dict() for s in self.strategies],
            "preferences": self.preferences.to_dict(),
        }


@dataclass(frozen=True)
class Constraints:
    """Shared household constraints. ``flexible_strategies`` and
    ``colocation_map`` are keyed by strategy label (a shared vocabulary
    across both agents)."""

    colocation_required: bool = False
    colocation_map: Mapping[str, str] = field(default_factory=dict)
    care_requirement: bool = False
    flexible_strategies: frozenset[str] = frozenset()
    care_penalty: float = 0.0
    joint_w_floor: float = 0.0
    max_one_high_variance: bool = False

    def __post_init__(self):
        object.__setattr__(self, "colocation_map", dict(self.colocation_map))
        object.__setattr__(self, "flexible_strategies", frozenset(self.flexible_strategies))
        penalty = _check_range("constraints.care_penalty", self.care_penalty, 0.0, float("inf"))
        object.__setattr__(self, "care_penalty", penalty)
        object.__setattr__(
            self,
            "joint_w_floor",
            _check_range("constraints.joint_w_floor", self.joint_w_floor, 0.0, 200.0),
        )

    def to_dict(self) -> dict:
        return {
            "colocation_required": self.colocation_required,
            "colocation_map": dict(self.colocation_map),
            "care_requirement": self.care_requirement,
            "flexible_strategies": sorted(self.flexible_strategies),
            "care_penalty": self.care_penalty,
            "joint_w_floor": self.joint_w_floor,
            "max_one_high_variance": self.max_one_high_variance,
        }


@dataclass(frozen=True)
class HouseholdGame:
    agent1: AgentSpec
    agent2: AgentSpec
    constraints: Constraints = field(default_factory=Constraints)

    def __post_init__(self):
        if self.constraints.colocation_required:
            labels = {s.label for s in self.agent1.strategies} | {
                s.label for s in self.agent2.strategies
            }
            unmapped = sorted(labels - set(self.constraints.colocation_map))
            if unmapped:
                raise ValidationError(
                    "colocation required but strategies lack locations: " + ", ".join(unmapped),
                    field_path="household.constraints.colocation_map",
                )

    def to_dict(self) -> dict:
        return {
            "agent1": self.agent1.to_dict(),
            "agent2": self.agent2.to_dict(),
            "constraints": self.constraints.to_dict(),
        }


@dataclass(frozen=True)
class Profile:
    s1: str
    s2: str
    payoff1: float | None
    payoff2: float | None
    feasible: bool
    violation: str | None = None

    @property
    def joint_welfare(self) -> float | None:
        if not self.feasible:
            return None
        return self.payoff1 + self.payoff2

    def to_dict(self) -> dict:
        return {
            "s1": self.s1,
            "s2": self.s2,
            "payoff1": self.payoff1,
            "payoff2": self.payoff2,
            "joint_welfare": self.joint_welfare,
            "feasible": self.feasible,
            "violation": self.violation,
        }


def payoff(game: HouseholdGame, s1_label: str, s2_label: str) -> Profile:
    """Evaluate one strategy profile.

    Feasibility checks first (co-location, joint wealth floor, risk
    hedging); infeasible profiles carry no payoffs. Otherwise each agent
    scores their own strategy's state under their own preferences, and the
    care penalty hits both when the care requirement is on and neither
    strategy is flexible.
    """
    s1 = game.agent1.get(s1_label)
    s2 = game.agent2.get(s2_label)
    c = game.constraints

    if c.colocation_required:
        loc1 = c.colocation_map[s1.label]
        loc2 = c.colocation_map[s2.label]
        if loc1 != loc2:
            return Profile(s1.label, s2.label, None, None, False, "colocation")
    if s1.state.w + s2.state.w < c.joint_w_floor:
        return Profile(s1.label, s2.label, None, None, False, "income floor")
    if c.max_one_high_variance and s1.high_variance and s2.high_variance:
        return Profile(s1.label, s2.label, None, None, False, "risk hedging")

    u1 = utility(s1.state, game.agent1.preferences)
    u2 = utility(s2.state, game.agent2.preferences)
    if (
        c.care_requirement
        and s1.label not in c.flexible_strategies
        and s2.label not in c.flexible_strategies
    ):
        u1 -= c.care_penalty
        u2 -= c.care_penalty
    return Profile(s1.label, s2.label, u1, u2, True)


def enumerate_profiles(game: HouseholdGame) -> list[Profile]:
    return [
        payoff(game, s1.label, s2.label)
        for s1 in game.agent1.strategies
        for s2 in game.agent2.strategies
    ]


def pure_nash(game: HouseholdGame) -> list[Profile]:
    """All pure Nash profiles: feasible profiles from which neither agent
    has a feasible unilateral deviation with strictly higher own payoff."""
    by_pair = {(p.s1, p.s2): p for p in enumerate_profiles(game)}
    labels1 = [s.label for s in game.agent1.strategies]
    labels2 = [s.label for s in game.agent2.strategies]
    equilibria = []
    for profile in by_pair.values():
        if not profile.feasible:
            continue
        improves1 = any(
            (alt := by_pair[(l1, profile.s2)]).feasible and alt.payoff1 > profile.payoff1
            for l1 in labels1
            if l1 != profile.s1
        )
        if improves1:
            continue
        improves2 = any(
            (alt := by_pair[(profile.s1, l2)]).feasible and alt.payoff2 > profile.payoff2
            for l2 in labels2
            if l2 != profile.s2
        )
        if not improves2:
            equilibria.append(profile)
    return equilibria


def cooperative_optimum(game: HouseholdGame) -> Profile:
    """Feasible profile with maximal joint welfare; ties broken
    lexicographically by the (s1, s2) label pair."""
    feasible = [p for p in enumerate_profiles(game) if p.feasible]
    if not feasible:
        raise InfeasibleError("no feasible strategy profile under the household constraints")
    return min(feasible, key=lambda p: (-p.joint_welfare, p.s1, p.s2))


def _weakly_improved_by(candidate: Profile, over: Profile) -> bool:
    return (
        candidate.payoff1 >= over.payoff1
        and candidate.payoff2 >= over.payoff2
        and (candidate.payoff1 > over.payoff1 or candidate.payoff2 > over.payoff2)
    )


@dataclass(frozen=True)
class EquilibriumReport:
    pure_nash_profiles: tuple[Profile, ...]
    pareto_suboptimal: tuple[bool, ...]  # aligned with pure_nash_profiles
    cooperative_optimum: Profile
    gap: float
    note: str | None = None

    def to_dict(self) -> dict:
        return {
            "pure_nash_profiles": [p.to_dict() for p in self.pure_nash_profiles],
            "pareto_suboptimal": list(self.pareto_suboptimal),
            "cooperative_optimum": self.cooperative_optimum.to_dict(),
            "gap": self.gap,
            "note": self.note,
        }


def coordination_gap(game: HouseholdGame) -> EquilibriumReport:
    """Nash set versus cooperative optimum.

    A Nash profile is flagged Pareto-suboptimal when some feasible profile
    weakly improves both payoffs and strictly improves at least one. The
    gap is cooperative joint welfare minus the best Nash joint welfare
    (zero, with a note, when no pure Nash exists).
    """
    feasible = [p for p in enumerate_profiles(game) if p.feasible]
    nash = pure_nash(game)
    coop = cooperative_optimum(game)
    flags = tuple(
        any(_weakly_improved_by(candidate, eq) for candidate in feasible) for eq in nash
    )
    if nash:
        gap = coop.joint_welfare - max(p.joint_welfare for p in nash)
        note = None
    else:
        gap = 0.0
        note = "no pure Nash equilibrium exists; gap reported as 0"
    assert gap >= 0.0
    return EquilibriumReport(
        pure_nash_profiles=tuple(nash),
        pareto_suboptimal=flags,
        cooperative_optimum=coop,
        gap=gap,
        note=note,
    )


@dataclass(frozen=True)
class Template:
    """A named transformation of a base game into one or more games."""

    name: str
    description: str
    apply: Callable[[HouseholdGame], tuple[HouseholdGame, ...]]


def _sequential_focus(game: HouseholdGame) -> tuple[HouseholdGame, ...]:
    swapped = HouseholdGame(
        agent1=game.agent2, agent2=game.agent1, constraints=game.constraints
    )
    return (game, swapped)


def _risk_hedging(game: HouseholdGame) -> tuple[HouseholdGame, ...]:
    tagged = any(
        s.high_variance for s in game.agent1.strategies + game.agent2.strategies
    )
    if not tagged:
        raise ValidationError(
            "risk hedging template inapplicable: no strategy is tagged high_variance",
            field_path="household",
        )
    constraints = replace(game.constraints, max_one_high_variance=True)
    return (HouseholdGame(game.agent1, game.agent2, constraints),)


def _geographic_bundling(game: HouseholdGame) -> tuple[HouseholdGame, ...]:
    labels = {s.label for s in game.agent1.strategies} | {
        s.label for s in game.agent2.strategies
    }
    unmapped = sorted(labels - set(game.constraints.colocation_map))
    if unmapped:
        raise ValidationError(
            "geographic bundling template inapplicable: strategies lack locations: "
            + ", ".join(unmapped),
            field_path="household.constraints.colocation_map",
        )
    constraints = replace(game.constraints, colocation_required=True)
    return (HouseholdGame(game.agent1, game.agent2, constraints),)


def cooperative_templates() -> tuple[Template, ...]:
    """The three cooperative arrangements, as game transformations:
    alternate career focus across two periods, stagger risk-taking, and
    bundle locations."""
    return (
        Template(
            name="sequential_focus",
            description=(
                "Two-period pair: the base game, then the role-swapped mirror, so "
                "partners alternate career-maximization across periods."
            ),
            apply=_sequential_focus,
        ),
        Template(
            name="risk_hedging",
            description=(
                "Profiles where both partners pick high-variance strategies become "
                "infeasible, so at most one takes the risky path at a time."
            ),
            apply=_risk_hedging,
        ),
        Template(
            name="geographic_bundling",
            description=(
                "Activates the co-location constraint, restricting the game to "
                "shared-location profiles."
            ),
            apply=_geographic_bundling,
        ),
    )

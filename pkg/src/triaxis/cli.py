"""Command-line front door.

Every engine capability is a subcommand; output is a human-readable table
by default or canonical JSON with ``--json``. Exit codes: 0 success, 1
validation error, 2 infeasible result, 3 internal error. Errors print one
machine-parsable line ``error:<category>: <message>`` to stderr. The
scenario path comes from ``--scenario`` or the ``TRIAXIS_SCENARIO``
environment variable, in that order.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import reports
from .canonical import canonical_dumps
from .errors import InfeasibleError, TriaxisError, ValidationError
from .scenario import Scenario, load_scenario_file

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_INFEASIBLE = 2
EXIT_INTERNAL = 3

SCENARIO_ENV = "TRIAXIS_SCENARIO"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triaxis",
        description="Score, simulate, and compare careers in (wealth, autonomy, meaning) space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, scenario: bool = True) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        if scenario:
            cmd.add_argument("--scenario", help="path to a scenario JSON file")
            cmd.add_argument("--json", action="store_true", help="emit canonical JSON")
        return cmd

    add("score", "utility of every role's state under the scenario preferences")
    add("frontier", "undominated subset of the role states")
    sim = add("simulate", "simulate a named plan year by year")
    sim.add_argument("--plan", required=True, help="plan name from the scenario")
    add("satisfice", "filter roles by thresholds; advise a relaxation when empty")
    add("strategy", "sequential vs simultaneous expected utility")
    opt = add("options", "option-value comparison of two named plans")
    opt.add_argument("--specialized", required=True)
    opt.add_argument("--generalized", required=True)
    add("household", "household game: Nash set, cooperative optimum, gap")
    arche = add("archetypes", "built-in archetype table and transition costs", scenario=False)
    arche.add_argument("--json", action="store_true", help="emit canonical JSON")
    serve = add("serve", "start the HTTP service", scenario=False)
    serve.add_argument("--scenario", help="default scenario merged under partial requests")
    serve.add_argument("--port", type=int, default=8787)
    serve.add_argument("--host", default="127.0.0.1")
    return parser


def _load(args: argparse.Namespace) -> Scenario:
    path = args.scenario or os.environ.get(SCENARIO_ENV)
    if not path:
        raise ValidationError(
            f"no scenario: pass --scenario or set {SCENARIO_ENV}", field_path="scenario"
        )
    return load_scenario_file(path)


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _render_state(state: dict) -> str:
    return f"w={_fmt(state['w'])} a={_fmt(state['a'])} m={_fmt(state['m'])}"


def _render(command: str, payload: dict, out) -> None:
    if command == "score":
        ranked = sorted(payload["scores"], key=lambda s: (-s["utility"], s["role_id"]))
        for row in ranked:
            print(f"{row['role_id']:<24} utility={_fmt(row['utility'])}  {_render_state(row['state'])}", file=out)
    elif command == "frontier":
        frontier = set(payload["frontier"])
        for row in payload["options"]:
            mark = "*" if row["label"] in frontier else " "
            print(f"{mark} {row['label']:<24} {_render_state(row['state'])}", file=out)
        print(f"frontier: {', '.join(payload['frontier'])}", file=out)
    elif command == "simulate":
        print(f"plan: {payload['plan']}", file=out)
        for point in payload["points"]:
            trap = point["trap"]["trap"]
            trap_note = "" if trap == "none" else f"  [{trap}]"
            print(
                f"  year {point['year']:>3}  {_render_state(point['state'])}  "
                f"role={point['role_id']}  phase={point['phase']}{trap_note}",
                file=out,
            )
        for refusal in payload["refusals"]:
            print(f"  refused move to {refusal['role_id']} at year {refusal['year']}: "
                  f"{refusal['reason']}", file=out)
        print(f"terminal utility: {_fmt(payload['terminal_utility'])}", file=out)
    elif command == "satisfice":
        t = payload["thresholds"]
        print(
            f"thresholds: w>={_fmt(t['w_min'])} a>={_fmt(t['a_min'])} m>={_fmt(t['m_min'])}",
            file=out,
        )
        if payload["feasible"]:
            for label in payload["feasible"]:
                print(f"  feasible: {label}", file=out)
        else:
            print("  no option meets every threshold", file=out)
            relaxation = payload["relaxation"]
            if relaxation and relaxation["advice"]:
                advice = relaxation["advice"]
                print(
                    f"  relax {advice['axis']} to {_fmt(advice['required_threshold'])} "
                    f"(regret {_fmt(advice['regret'])}) to unlock: "
                    + ", ".join(advice["unlocked_options"]),
                    file=out,
                )
            elif relaxation:
                print(f"  {relaxation['reason']}", file=out)
    elif command == "strategy":
        print(f"sequential EU:   {_fmt(payload['sequential_eu'])}", file=out)
        print(f"simultaneous EU: {_fmt(payload['simultaneous_eu'])}", file=out)
        print(f"preferred: {payload['preferred']}", file=out)
    elif command == "options":
        print(
            f"terminal W: specialized={_fmt(payload['terminal_w_spec'])} "
            f"generalized={_fmt(payload['terminal_w_gen'])} (gap {_fmt(payload['w_gap'])})",
            file=out,
        )
        print(f"reachable (specialized): {', '.join(payload['reachable_missions_spec']) or '-'}", file=out)
        print(f"reachable (generalized): {', '.join(payload['reachable_missions_gen']) or '-'}", file=out)
        print(
            f"best meaning: specialized={_fmt(payload['max_meaning_spec'])} "
            f"generalized={_fmt(payload['max_meaning_gen'])} "
            f"(option gap {_fmt(payload['meaning_option_gap'])})",
            file=out,
        )
    elif command == "household":
        for profile, flagged in zip(payload["pure_nash_profiles"], payload["pareto_suboptimal"]):
            note = "  [pareto-suboptimal]" if flagged else ""
            print(
                f"nash: ({profile['s1']}, {profile['s2']}) payoffs "
                f"({_fmt(profile['payoff1'])}, {_fmt(profile['payoff2'])}){note}",
                file=out,
            )
        if not payload["pure_nash_profiles"]:
            print("nash: none", file=out)
        coop = payload["cooperative_optimum"]
        print(
            f"cooperative: ({coop['s1']}, {coop['s2']}) joint welfare "
            f"{_fmt(coop['joint_welfare'])}",
            file=out,
        )
        print(f"coordination gap: {_fmt(payload['gap'])}", file=out)
        if payload["note"]:
            print(f"note: {payload['note']}", file=out)
    elif command == "archetypes":
        for entry in payload["archetypes"]:
            signature = "/".join(entry["signature"])
            print(
                f"{entry['name']:<26} {signature:<20} {_render_state(entry['default_state'])}",
                file=out,
            )
            print(f"    {entry['variance_note']}", file=out)
        print("transition costs (from -> to: w_cost, gate):", file=out)
        for cost in payload["transition_costs"]:
            print(
                f"  {cost['from']} -> {cost['to']}: {_fmt(cost['w_cost'])}, "
                f"gate {_fmt(cost['min_w_gate'])}",
                file=out,
            )


def run(argv: list[str] | None = None, out=None) -> int:
    """Parse arguments, dispatch, print, and return the exit code."""
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own message
        return EXIT_VALIDATION if exc.code not in (0, None) else EXIT_OK

    try:
        exit_code = EXIT_OK
        if args.command == "serve":
            from .service import serve as run_service  # deferred: pulls in fastapi

            run_service(host=args.host, port=args.port, scenario_path=args.scenario)
            return EXIT_OK
        if args.command == "archetypes":
            payload = reports.archetypes_report()
        else:
            scenario = _load(args)
            if args.command == "score":
                payload = reports.score_report(scenario)
            elif args.command == "frontier":
                payload = reports.frontier_report(scenario)
            elif args.command == "simulate":
                payload = reports.simulate_report(scenario, args.plan)
            elif args.command == "satisfice":
                payload = reports.satisfice_report(scenario)
                if not payload["feasible"]:
                    exit_code = EXIT_INFEASIBLE
            elif args.command == "strategy":
                payload = reports.strategy_report(scenario)
            elif args.command == "options":
                payload = reports.options_report(scenario, args.specialized, args.generalized)
            elif args.command == "household":
                payload = reports.household_report(scenario)
            else:  # pragma: no cover - argparse restricts choices
                raise ValidationError(f"unknown command: {args.command}")
    except ValidationError as exc:
        print(f"error:{exc.category}: {exc.message}", file=sys.stderr)
        return EXIT_VALIDATION
    except InfeasibleError as exc:
        print(f"error:{exc.category}: {exc.message}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except TriaxisError as exc:
        print(f"error:{exc.category}: {exc.message}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - the CLI boundary maps everything
        print(f"error:internal: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    if getattr(args, "json", False):
        print(canonical_dumps(payload), file=out)
    else:
        _render(args.command, payload, out)
    return exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

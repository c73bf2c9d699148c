"""Command-line front end: scenario runs, fuzz campaigns, and listings.

Exit codes: 0 when every task verdict is a pass, 1 on any mathematical
failure (the report carries witnesses), 2 on input or validation errors.
Reports are deterministic per (scenario, seed) except for the timing
section, which is kept separate so the rest of the document is
byte-for-byte reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor

from .campaigns import CAMPAIGNS, run_campaign
from .conditions import CONDITIONS
from .results import DomainError, _jsonify
from .scenarios import (
    BUILTIN_SCENARIOS,
    SCENARIO_VERSION,
    Scenario,
    ScenarioError,
    builtin_scenario,
    run_task,
)

EXIT_OK = 0
EXIT_MATH_FAILURE = 1
EXIT_INPUT_ERROR = 2


def _load_scenario(ref: str) -> Scenario:
    if ref in BUILTIN_SCENARIOS:
        return Scenario(builtin_scenario(ref), name=ref)
    try:
        with open(ref, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise ScenarioError(f"cannot read scenario {ref!r}: {e}") from None
    except json.JSONDecodeError as e:
        raise ScenarioError(f"scenario {ref!r} is not valid JSON: {e}") from None
    return Scenario(doc, name=ref)


def _emit(report: dict, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        json.dump(report, stream, sort_keys=True, indent=2)
        stream.write("\n")
        return
    body = report.get("report", report)
    print(f"scenario: {body.get('scenario', body.get('campaign', '?'))}", file=stream)
    print(f"seed: {body.get('seed')}", file=stream)
    for i, task in enumerate(body.get("tasks", [])):
        mark = "pass" if task.get("verdict") == "pass" else "FAIL"
        line = f"[{mark}] task {i + 1} {task.get('task')}"
        if "outcome" in task:
            line += f": {task['outcome']} (expected {task['expected']})"
        if "value" in task:
            line += f" value={task['value']}"
        print(line, file=stream)
        if task.get("verdict") != "pass":
            wit = task.get("result", {}).get("witness") or task.get("error")
            if wit:
                print(f"       witness: {json.dumps(wit, sort_keys=True)}", file=stream)
    if "campaign" in body:
        c = body["campaign"]
        print(f"campaign {c['id']}: {c['passed']}/{c['trials']} passed", file=stream)
        for failure in c.get("failures", []):
            print(f"       failure: {json.dumps(failure, sort_keys=True)[:400]}",
                  file=stream)
    summary = body.get("summary", {})
    print(f"summary: {summary.get('passed', 0)} passed, "
          f"{summary.get('failed', 0)} failed", file=stream)
    timing = report.get("timing", {})
    if timing:
        print(f"timing: {timing.get('total_ms', 0):.0f} ms", file=stream)


def _cmd_run(args) -> int:
    try:
        sc = _load_scenario(args.scenario)
    except (ScenarioError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    t0 = time.perf_counter()

    def timed(task):
        start = time.perf_counter()
        rec = run_task(sc, task, default_seed=args.seed,
                       default_tolerance=args.tolerance)
        return rec, (time.perf_counter() - start) * 1000.0

    try:
        if args.jobs > 1 and len(sc.tasks) > 1:
            # tasks are pure and independent; threads keep results ordered
            with ThreadPoolExecutor(max_workers=args.jobs) as pool:
                outcomes = list(pool.map(timed, sc.tasks))
        else:
            outcomes = [timed(t) for t in sc.tasks]
    except (ScenarioError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    tasks = [rec for rec, _ in outcomes]
    task_ms = [ms for _, ms in outcomes]
    failed = sum(1 for rec in tasks if rec["verdict"] != "pass")
    report = {
        "report": _jsonify({
            "version": SCENARIO_VERSION,
            "scenario": sc.name,
            "seed": args.seed,
            "tasks": tasks,
            "summary": {"passed": len(tasks) - failed, "failed": failed},
        }),
        "timing": {"total_ms": (time.perf_counter() - t0) * 1000.0,
                   "tasks_ms": task_ms},
    }
    _emit(report, args.format)
    return EXIT_OK if failed == 0 else EXIT_MATH_FAILURE


def _fuzz_chunk(args_tuple):
    campaign_id, trials, seed, offset = args_tuple
    # chunk seeds derive from (seed, offset); campaigns mix the index in
    return run_campaign(campaign_id, trials, seed + offset)


def _cmd_fuzz(args) -> int:
    if args.campaign not in CAMPAIGNS:
        print(f"error: unknown campaign {args.campaign!r}; try --list",
              file=sys.stderr)
        return EXIT_INPUT_ERROR
    t0 = time.perf_counter()
    try:
        if args.jobs > 1 and args.trials >= 2 * args.jobs:
            per = args.trials // args.jobs
            chunks = [(args.campaign, per + (1 if i < args.trials % args.jobs else 0),
                       args.seed, i) for i in range(args.jobs)]
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                parts = list(pool.map(_fuzz_chunk, chunks))
            rep = {
                "id": args.campaign,
                "trials": sum(p["trials"] for p in parts),
                "passed": sum(p["passed"] for p in parts),
                "failed": sum(p["failed"] for p in parts),
                "failures": [f for p in parts for f in p["failures"]][:10],
                "notes": {"jobs": args.jobs},
            }
        else:
            rep = run_campaign(args.campaign, args.trials, args.seed)
    except DomainError as e:
        # instance generation exhausted its resample budget, or similar
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    report = {
        "report": _jsonify({
            "version": SCENARIO_VERSION,
            "campaign": rep,
            "seed": args.seed,
            "summary": {"passed": rep["passed"], "failed": rep["failed"]},
        }),
        "timing": {"total_ms": (time.perf_counter() - t0) * 1000.0},
    }
    _emit(report, args.format)
    return EXIT_OK if rep["failed"] == 0 else EXIT_MATH_FAILURE


def _cmd_list(_args) -> int:
    print("campaigns (fuzz ids):")
    for cid in sorted(CAMPAIGNS):
        print(f"  {cid}")
    print("built-in scenarios:")
    for name in sorted(BUILTIN_SCENARIOS):
        print(f"  {name}")
    print("conditions (check_condition ids):")
    for name in sorted(CONDITIONS):
        print(f"  {name}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonadd",
        description="Verification toolkit for nonadditive integrals, inequality "
                    "conditions, and metrics of convergence in measure.",
    )
    parser.add_argument("--list", action="store_true",
                        help="enumerate campaigns, built-in scenarios, and conditions")
    sub = parser.add_subparsers(dest="command")

    run_p = sub.add_parser("run", help="execute a scenario file or built-in name")
    run_p.add_argument("scenario", help="path to a scenario JSON or a built-in name")
    run_p.add_argument("--format", choices=("text", "json"), default="text")
    run_p.add_argument("--seed", type=int, default=0)
    run_p.add_argument("--tolerance", type=float, default=None)
    run_p.add_argument("--jobs", type=int, default=1)

    fuzz_p = sub.add_parser("fuzz", help="run a seeded fuzz campaign")
    fuzz_p.add_argument("campaign")
    fuzz_p.add_argument("--trials", type=int, default=100)
    fuzz_p.add_argument("--seed", type=int, default=0)
    fuzz_p.add_argument("--format", choices=("text", "json"), default="text")
    fuzz_p.add_argument("--jobs", type=int, default=1)

    sub.add_parser("list", help="same as --list")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list or args.command == "list":
        return _cmd_list(args)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "fuzz":
        return _cmd_fuzz(args)
    parser.print_help()
    return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface.

Subcommands: elicit, weights, rank, sensitivity, baseline-ahp,
baseline-critic, run, serve. Exit codes: 0 success, 1 validation error,
2 numeric failure, 3 I/O error; every failure prints one line starting
with ``error[<kind>]:`` on stderr. ``SOMIT_OUT_DIR`` supplies a default
directory for output files; ``--json`` switches stdout to machine format.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__, baselines, elicitation, io, ranking, weighting
from .model import (
    NumericError,
    Provenance,
    ValidationError,
    WeightVector,
    make_session,
    parse_scale,
    validate_session,
)
from .sensitivity import robustness_report

OUT_DIR_ENV = "SOMIT_OUT_DIR"

SENSITIVITY_METHODS = {
    "somit-ii": weighting.objective_weights,
    "critic": baselines.critic_weights,
}


def _out_path(explicit: Optional[str], default_name: str) -> Optional[Path]:
    if explicit:
        return Path(explicit)
    out_dir = os.environ.get(OUT_DIR_ENV)
    if out_dir:
        return Path(out_dir) / default_name
    return None


def _emit(doc: dict, path: Optional[Path], as_json: bool, human: str) -> None:
    if as_json:
        print(io.dumps_artifact(doc), end="")
    else:
        print(human)
    if path is not None:
        io._write_json(doc, path)
        if not as_json:
            print(f"wrote {path}")


# ---------------------------------------------------------------- elicit

class AnswerSource:
    """Prompt-and-answer stream: interactive stdin or a scripted list."""

    def __init__(self, answers: Optional[list[str]]):
        self.answers = answers
        self.interactive = answers is None

    def ask(self, prompt: str) -> str:
        if self.interactive:
            return input(prompt)
        if not self.answers:
            raise ValidationError("scripted answers exhausted")
        answer = self.answers.pop(0)
        print(f"{prompt}{answer}")
        return answer


def _parse_answers(spec: str) -> list[str]:
    """Answers from a file path, or inline separated by ';' / newlines."""
    text = Path(spec).read_text() if Path(spec).is_file() else spec
    parts = [p.strip() for p in text.replace("\n", ";").split(";")]
    return [p for p in parts if p]


def _ask_scale(source: AnswerSource, prompt: str) -> float:
    while True:
        token = source.ask(prompt)
        try:
            return parse_scale(token)
        except ValidationError:
            if not source.interactive:
                raise
            print("Enter a decimal or fraction within [1/9, 9] (e.g. 3, 1/2, 0.8).")


def elicit_session(items: list[str], source: AnswerSource):
    """Run the guided flow: median pick, relative comparisons in item
    order, then the extreme comparison between the announced ends."""
    n = len(items)
    if n < 2:
        raise ValidationError("need at least two items to compare")
    print(f"You have {n} items, numbered 1 through {n}.")
    for k, item in enumerate(items, 1):
        print(f"  {k}. {item}")

    while True:
        token = source.ask(f"Which item (1-{n}) is the median level of importance? ")
        try:
            pick = int(token)
            if not 1 <= pick <= n:
                raise ValueError
            break
        except ValueError:
            if not source.interactive:
                raise ValidationError(f"median pick must be 1..{n}, got {token!r}") \
                    from None
            print(f"Enter a number between 1 and {n}.")
    median = items[pick - 1]
    print(f"Median: #{pick} {median}.")

    print("\nEnter importance of each item relative to the median.")
    comparisons: dict[str, float] = {}
    for k, item in enumerate(items, 1):
        if item == median:
            continue
        comparisons[item] = _ask_scale(
            source, f"Compare item #{k} ({item}) with #{pick} ({median}): ")

    extreme_value = None
    if n >= 3:
        from .model import extreme_pair
        high, low = extreme_pair(items, median, comparisons)
        hi_k, lo_k = items.index(high) + 1, items.index(low) + 1
        print(f"\nHighest: #{hi_k} {high} ({comparisons[high]:g}); "
              f"Lowest: #{lo_k} {low} ({comparisons[low]:g})")
        extreme_value = _ask_scale(
            source, f"Compare item #{hi_k} ({high}) with #{lo_k} ({low}): ")

    session = make_session(items, median, comparisons, extreme_value)
    report = validate_session(session)
    for warning in report.warnings:
        print(f"note: {warning}")
    return session


def cmd_elicit(args) -> int:
    items = [s.strip() for s in args.items.split(",") if s.strip()]
    source = AnswerSource(_parse_answers(args.answers) if args.answers else None)
    session = elicit_session(items, source)
    out = _out_path(args.out, "session.json") or Path("session.json")
    io.save_session(session, out)
    print(f"wrote {out}")
    return 0


# --------------------------------------------------------------- weights

def _weights_table(labels, columns: dict[str, Sequence[float]]) -> str:
    width = max(9, *(len(c) for c in labels)) + 2
    head = "criterion".ljust(width) + "".join(h.rjust(12) for h in columns)
    lines = [head]
    for k, label in enumerate(labels):
        row = label.ljust(width)
        row += "".join(f"{col[k]:12.4f}" for col in columns.values())
        lines.append(row)
    return "\n".join(lines)


def cmd_weights(args) -> int:
    if args.mode in ("subjective", "combined") \
            and not (args.session or args.hierarchy):
        raise ValidationError(f"mode {args.mode!r} needs --session or --hierarchy")
    if args.session and args.hierarchy:
        raise ValidationError("give either --session or --hierarchy, not both")
    problem = io.load_problem(args.problem)

    columns: dict[str, WeightVector] = {}
    z = None
    if args.mode in ("subjective", "combined"):
        subjective, z = io.load_subjective(problem, args.session, args.hierarchy)
        columns["subjective"] = subjective
    if args.mode in ("objective", "combined"):
        columns["objective"] = weighting.objective_weights(problem)
    if args.mode == "combined":
        columns["final"] = weighting.combine(columns["subjective"],
                                             columns["objective"])

    selected = columns["final" if args.mode == "combined" else args.mode]
    doc = io.weights_to_dict(selected, z if args.mode == "subjective" else None)
    if args.mode == "combined":
        doc["components"] = {
            name: io.weights_to_dict(w, z if name == "subjective" else None)
            for name, w in columns.items() if name != "final"
        }
    if args.audit:
        io.write_audit_csv(problem, args.audit)
    table = _weights_table(problem.codes,
                           {name: w.values for name, w in columns.items()})
    _emit(doc, _out_path(args.out, "weights.json"), args.json, table)
    return 0


# ------------------------------------------------------------------ rank

def cmd_rank(args) -> int:
    problem = io.load_problem(args.problem)
    weights = io.load_weights(args.weights)
    result = ranking.topsis(problem, weights, round4=args.round4)
    lines = ["rank  alternative            score"]
    for k, alt in enumerate(result.order, 1):
        lines.append(f"{k:<6}{alt:<23}{result.score_of(alt):.4f}")
    _emit(result.as_dict(), _out_path(args.out, "ranking.json"), args.json,
          "\n".join(lines))
    return 0


# ----------------------------------------------------------- sensitivity

def cmd_sensitivity(args) -> int:
    problem = io.load_problem(args.problem)
    scenario = io.load_scenario(args.scenario)
    methods = {}
    for name in (s.strip() for s in args.methods.split(",")):
        if name not in SENSITIVITY_METHODS:
            raise ValidationError(
                f"unknown method {name!r}; choose from "
                f"{sorted(SENSITIVITY_METHODS)}")
        methods[name] = SENSITIVITY_METHODS[name]
    report = robustness_report(problem, scenario, methods)
    lines = ["method        aafd_w   max|dw|"]
    for name, block in report["methods"].items():
        lines.append(f"{name:<12}{block['aafd_w'] * 100:7.2f}%"
                     f"{block['max_abs_change']:10.4f}")
    _emit(report, _out_path(args.out, "sensitivity.json"), args.json,
          "\n".join(lines))
    return 0


# ------------------------------------------------------------- baselines

def cmd_baseline_ahp(args) -> int:
    matrix, per_group = io.load_pairwise(args.pairwise)
    if per_group is None:
        weights = baselines.ahp_weights(matrix)
    else:
        order = io.load_problem(args.problem).codes if args.problem else None
        weights = baselines.ahp_compose(matrix, per_group, order=order)
    doc = io.weights_to_dict(weights)
    if 3 <= matrix.n <= 10:
        doc["consistency_ratio"] = baselines.consistency_ratio(matrix)
    human = _weights_table(weights.labels, {"ahp": weights.values})
    if "consistency_ratio" in doc:
        human += f"\nconsistency ratio: {doc['consistency_ratio']:.4f}"
    _emit(doc, _out_path(args.out, "ahp_weights.json"), args.json, human)
    return 0


def cmd_baseline_critic(args) -> int:
    problem = io.load_problem(args.problem)
    weights = baselines.critic_weights(problem)
    _emit(io.weights_to_dict(weights), _out_path(args.out, "critic_weights.json"),
          args.json, _weights_table(weights.labels, {"critic": weights.values}))
    return 0


# ------------------------------------------------------------------- run

def cmd_run(args) -> int:
    manifest = io.load_manifest(args.manifest)
    artifact = io.run_manifest(manifest)
    order = artifact["ranking"]["order"]
    scores = artifact["ranking"]["scores"]
    human = "\n".join(f"{k:<6}{alt:<23}{scores[alt]:.4f}"
                      for k, alt in enumerate(order, 1))
    if args.json:
        print(io.dumps_artifact(artifact), end="")
    else:
        print("rank  alternative            score")
        print(human)
        if manifest.output:
            print(f"wrote {manifest.output}")
    return 0


# ----------------------------------------------------------------- serve

def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(persist_dir=Path(args.persist_dir) if args.persist_dir else None)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


# ----------------------------------------------------------------- wiring

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="somit",
        description="Hybrid criteria weighting and ranking for MCDM.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("elicit", help="run a guided comparison session")
    p.add_argument("--items", required=True,
                   help="comma-separated item labels")
    p.add_argument("--answers",
                   help="scripted answers: a file, or inline 'a; b; c'")
    p.add_argument("--out", help="session file to write (default session.json)")
    p.set_defaults(func=cmd_elicit)

    p = sub.add_parser("weights", help="compute criteria weights")
    p.add_argument("--problem", required=True)
    p.add_argument("--session")
    p.add_argument("--hierarchy")
    p.add_argument("--mode", choices=["subjective", "objective", "combined"],
                   default="combined")
    p.add_argument("--audit",
                   help="also dump the normalization block to this CSV")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("rank", help="rank alternatives with TOPSIS")
    p.add_argument("--problem", required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--round4", action="store_true",
                   help="round weights to 4 decimals first")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("sensitivity", help="perturb a problem and compare methods")
    p.add_argument("--problem", required=True)
    p.add_argument("--scenario", required=True)
    p.add_argument("--methods", default="somit-ii,critic")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sensitivity)

    p = sub.add_parser("baseline-ahp", help="AHP weights from a pairwise matrix")
    p.add_argument("--pairwise", required=True)
    p.add_argument("--problem", help="orders composed weights by this problem")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_baseline_ahp)

    p = sub.add_parser("baseline-critic", help="CRITIC weights from a problem")
    p.add_argument("--problem", required=True)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_baseline_critic)

    p = sub.add_parser("run", help="execute a manifest end to end")
    p.add_argument("--manifest", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("serve", help="start the session HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8645)
    p.add_argument("--persist-dir")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except io.ParseError as e:
        _fail("io", e)
        return 3
    except ValidationError as e:
        _fail("validation", e)
        return 1
    except NumericError as e:
        _fail("numeric", e)
        return 2
    except OSError as e:
        _fail("io", e)
        return 3
    except json.JSONDecodeError as e:
        _fail("io", e)
        return 3


def _fail(kind: str, exc: Exception) -> None:
    message = " ".join(str(exc).split())
    print(f"error[{kind}]: {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())

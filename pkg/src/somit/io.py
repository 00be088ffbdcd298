"""File formats (problem, session, hierarchy, pairwise matrix, scenario,
weights) and the manifest runner that binds one reproducible end-to-end
run together.

Problems round-trip through JSON (full metadata) or CSV (codes and
directions only). Comparison values in session and pairwise files may be
written as scale tokens ("1/3") so reciprocals stay exact.
"""
from __future__ import annotations

import csv
import hashlib
import json
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import __version__, baselines, elicitation, ranking, weighting
from .model import (
    ComparisonSession,
    CriterionSpec,
    DecisionProblem,
    Direction,
    ExtremeComparison,
    HierarchySpec,
    Provenance,
    SomitError,
    ValidationError,
    WeightVector,
    parse_scale,
    validate_problem,
)
from .sensitivity import (
    AffineColumn,
    CellReplace,
    ComplementColumn,
    PerturbationScenario,
    ReciprocalColumn,
)

ARTIFACT_SCHEMA = "somit.run/1"

MODES = ("subjective", "objective", "combined", "ahp", "critic")


class ParseError(SomitError):
    """A file could not be decoded into the expected structure."""


def _scale_from_json(value, where: str) -> float:
    if isinstance(value, str):
        try:
            return parse_scale(value)
        except ValidationError as e:
            raise ParseError(f"{where}: {e}") from e
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    raise ParseError(f"{where}: expected a number or scale token, got {value!r}")


# ---------------------------------------------------------------- problems

def problem_to_dict(problem: DecisionProblem) -> dict:
    return {
        "criteria": [
            {"code": c.code, "name": c.name, "unit": c.unit,
             "direction": c.direction.value, "group": c.group}
            for c in problem.criteria
        ],
        "alternatives": list(problem.alternatives),
        "matrix": [[float(x) for x in row] for row in problem.matrix],
    }


def problem_from_dict(data: dict) -> DecisionProblem:
    try:
        criteria = [
            CriterionSpec(
                code=c["code"],
                name=c.get("name", ""),
                unit=c.get("unit", ""),
                direction=Direction(c["direction"]),
                group=c.get("group"),
            )
            for c in data["criteria"]
        ]
        alternatives = data["alternatives"]
        matrix = data["matrix"]
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"problem JSON missing or malformed field: {e}") from e
    for i, row in enumerate(matrix):
        for j, cell in enumerate(row):
            if not isinstance(cell, (int, float)) or isinstance(cell, bool):
                raise ParseError(
                    f"non-numeric cell at row {i} ({alternatives[i]!r}), "
                    f"column {j}: {cell!r}")
    return DecisionProblem(criteria, alternatives, matrix)


def _problem_from_csv(path: Path) -> DecisionProblem:
    with path.open(newline="") as fh:
        rows = list(csv.reader(fh))
    if len(rows) < 3:
        raise ParseError(f"{path}: need header, direction row, and data rows")
    codes = [c.strip() for c in rows[0][1:]]
    directions = []
    for j, token in enumerate(rows[1][1:]):
        try:
            directions.append(Direction(token.strip().lower()))
        except ValueError:
            raise ParseError(
                f"{path} line 2, column {codes[j]!r}: "
                f"direction must be benefit/cost, got {token!r}") from None
    if len(directions) != len(codes):
        raise ParseError(f"{path}: direction row length does not match header")
    alternatives, matrix = [], []
    for lineno, row in enumerate(rows[2:], start=3):
        if not row or not any(cell.strip() for cell in row):
            continue
        alternatives.append(row[0].strip())
        values = []
        for j, cell in enumerate(row[1:]):
            try:
                values.append(float(cell))
            except ValueError:
                raise ParseError(
                    f"{path} line {lineno}, column "
                    f"{codes[j] if j < len(codes) else j + 1!r}: "
                    f"non-numeric cell {cell!r}") from None
        if len(values) != len(codes):
            raise ParseError(f"{path} line {lineno}: expected {len(codes)} values")
        matrix.append(values)
    criteria = [CriterionSpec(code=c, direction=d)
                for c, d in zip(codes, directions)]
    return DecisionProblem(criteria, alternatives, matrix)


def _problem_to_csv(problem: DecisionProblem, path: Path) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["alternative", *problem.codes])
        writer.writerow(["direction", *(d.value for d in problem.directions)])
        for alt, row in zip(problem.alternatives, problem.matrix):
            writer.writerow([alt, *(repr(float(x)) for x in row)])


def load_problem(path) -> DecisionProblem:
    """Load and validate a problem from .json or .csv."""
    path = Path(path)
    if path.suffix.lower() == ".csv":
        problem = _problem_from_csv(path)
    else:
        problem = problem_from_dict(_read_json(path))
    validate_problem(problem).raise_if_invalid(f"problem {path}")
    return problem


def save_problem(problem: DecisionProblem, path) -> None:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        _problem_to_csv(problem, path)
    else:
        _write_json(problem_to_dict(problem), path)


# ---------------------------------------------------------------- sessions

def session_to_dict(session: ComparisonSession) -> dict:
    data: dict = {
        "items": list(session.items),
        "median": session.median,
        "comparisons": {item: repr(float(v))
                        for item, v in session.comparisons.items()},
    }
    if session.extreme is not None:
        data["extreme"] = {
            "high": session.extreme.high,
            "low": session.extreme.low,
            "value": repr(float(session.extreme.value)),
        }
    return data


def session_from_dict(data: dict) -> ComparisonSession:
    try:
        items = [str(it) for it in data["items"]]
        median = data["median"]
        raw = data["comparisons"]
    except (KeyError, TypeError) as e:
        raise ParseError(f"session JSON missing field: {e}") from e
    comparisons = {item: _scale_from_json(v, f"comparison for {item!r}")
                   for item, v in raw.items()}
    extreme = None
    if data.get("extreme") is not None:
        ex = data["extreme"]
        try:
            extreme = ExtremeComparison(
                ex["high"], ex["low"],
                _scale_from_json(ex["value"], "extreme comparison"))
        except KeyError as e:
            raise ParseError(f"extreme block missing field: {e}") from e
    return ComparisonSession(tuple(items), median, comparisons, extreme)


def load_session(path) -> ComparisonSession:
    from .model import validate_session
    session = session_from_dict(_read_json(Path(path)))
    validate_session(session).raise_if_invalid(f"session {path}")
    return session


def save_session(session: ComparisonSession, path) -> None:
    _write_json(session_to_dict(session), Path(path))


def hierarchy_from_dict(data: dict) -> HierarchySpec:
    try:
        group_session = session_from_dict(data["group_session"])
        raw = data["per_group"]
    except (KeyError, TypeError) as e:
        raise ParseError(f"hierarchy JSON missing field: {e}") from e
    per_group = {}
    for group, entry in raw.items():
        per_group[group] = entry if isinstance(entry, str) \
            else session_from_dict(entry)
    return HierarchySpec(group_session, per_group)


def hierarchy_to_dict(hierarchy: HierarchySpec) -> dict:
    return {
        "group_session": session_to_dict(hierarchy.group_session),
        "per_group": {
            g: s if isinstance(s, str) else session_to_dict(s)
            for g, s in hierarchy.per_group.items()
        },
    }


def load_hierarchy(path) -> HierarchySpec:
    return hierarchy_from_dict(_read_json(Path(path)))


# ------------------------------------------------------------- pairwise

def pairwise_from_dict(data: dict) -> baselines.PairwiseMatrix:
    try:
        labels = data["labels"]
        rows = data["matrix"]
    except (KeyError, TypeError) as e:
        raise ParseError(f"pairwise JSON missing field: {e}") from e
    values = [[_scale_from_json(cell, f"pairwise entry ({i},{j})")
               for j, cell in enumerate(row)]
              for i, row in enumerate(rows)]
    return baselines.PairwiseMatrix(labels, values)


def load_pairwise(path):
    """Load a flat pairwise matrix, or a hierarchical bundle
    {"groups": <matrix>, "per_group": {label: <matrix> | "<code>"}}."""
    data = _read_json(Path(path))
    if "groups" in data:
        per_group = {
            g: entry if isinstance(entry, str) else pairwise_from_dict(entry)
            for g, entry in data.get("per_group", {}).items()
        }
        return pairwise_from_dict(data["groups"]), per_group
    return pairwise_from_dict(data), None


# ------------------------------------------------------------- scenarios

_EDIT_KINDS = {
    "cell": (CellReplace, ("alternative", "criterion", "value")),
    "affine": (AffineColumn, ("criterion", "a", "b")),
    "reciprocal": (ReciprocalColumn, ("criterion", "flip_direction")),
    "complement": (ComplementColumn, ("criterion", "c")),
}

_EDIT_DEFAULTS = {"b": 0.0, "flip_direction": True}


def scenario_from_dict(data: dict) -> PerturbationScenario:
    edits = []
    for k, entry in enumerate(data.get("edits", [])):
        kind = entry.get("kind")
        if kind not in _EDIT_KINDS:
            raise ParseError(f"edit {k}: unknown kind {kind!r}")
        cls, fields = _EDIT_KINDS[kind]
        kwargs = {}
        for name in fields:
            if name in entry:
                kwargs[name] = entry[name]
            elif name in _EDIT_DEFAULTS:
                kwargs[name] = _EDIT_DEFAULTS[name]
            else:
                raise ParseError(f"edit {k} ({kind}): missing field {name!r}")
        unknown = set(entry) - set(fields) - {"kind"}
        if unknown:
            raise ParseError(f"edit {k} ({kind}): unknown fields {sorted(unknown)}")
        edits.append(cls(**kwargs))
    return PerturbationScenario(tuple(edits))


def scenario_to_dict(scenario: PerturbationScenario) -> dict:
    out = []
    for edit in scenario.edits:
        if isinstance(edit, CellReplace):
            out.append({"kind": "cell", "alternative": edit.alternative,
                        "criterion": edit.criterion, "value": edit.value})
        elif isinstance(edit, AffineColumn):
            out.append({"kind": "affine", "criterion": edit.criterion,
                        "a": edit.a, "b": edit.b})
        elif isinstance(edit, ReciprocalColumn):
            out.append({"kind": "reciprocal", "criterion": edit.criterion,
                        "flip_direction": edit.flip_direction})
        else:
            out.append({"kind": "complement", "criterion": edit.criterion,
                        "c": edit.c})
    return {"edits": out}


def load_scenario(path) -> PerturbationScenario:
    return scenario_from_dict(_read_json(Path(path)))


# --------------------------------------------------------------- weights

def write_audit_csv(problem: DecisionProblem, path) -> None:
    """Dump the objective-weighting intermediates (normalized matrix,
    column medians, per-cell absolute deviations, AADM row) for audit."""
    table = weighting.normalization_table(problem)
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["normalized", *table["criteria"]])
        for alt, row in zip(table["alternatives"], table["normalized"]):
            writer.writerow([alt, *(repr(x) for x in row)])
        writer.writerow(["median", *(repr(x) for x in table["medians"])])
        writer.writerow(["abs deviation", *[""] * len(table["criteria"])])
        for alt, row in zip(table["alternatives"], table["abs_deviation"]):
            writer.writerow([alt, *(repr(x) for x in row)])
        writer.writerow(["aadm", *(repr(x) for x in table["aadm"])])


def weights_to_dict(weights: WeightVector, z: Optional[float] = None) -> dict:
    data = {
        "labels": list(weights.labels),
        "weights": list(weights.values),
        "provenance": weights.provenance.value,
    }
    if z is not None:
        data["z"] = z
    return data


def weights_from_dict(data: dict) -> WeightVector:
    try:
        return WeightVector(data["labels"], data["weights"],
                            Provenance(data["provenance"]))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ValidationError):
            raise
        raise ParseError(f"weights JSON missing or malformed field: {e}") from e


def load_weights(path) -> WeightVector:
    return weights_from_dict(_read_json(Path(path)))


# -------------------------------------------------------------- manifest

@dataclass(frozen=True)
class RunManifest:
    """One reproducible pipeline run: inputs, weighting mode, ranker."""

    problem: Path
    mode: str
    session: Optional[Path] = None
    hierarchy: Optional[Path] = None
    pairwise: Optional[Path] = None
    ranker: str = "topsis"
    round4: bool = False
    output: Optional[Path] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValidationError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.ranker not in ranking.RANKERS:
            raise ValidationError(f"unknown ranker {self.ranker!r}")
        if self.mode in ("subjective", "combined") \
                and self.session is None and self.hierarchy is None:
            raise ValidationError(f"mode {self.mode!r} needs a session or hierarchy")
        if self.mode == "ahp" and self.pairwise is None:
            raise ValidationError("mode 'ahp' needs a pairwise matrix file")


def load_manifest(path) -> RunManifest:
    path = Path(path)
    data = _read_json(path)
    base = path.parent

    def resolve(key):
        return (base / data[key]) if data.get(key) else None

    try:
        return RunManifest(
            problem=base / data["problem"],
            mode=data["mode"],
            session=resolve("session"),
            hierarchy=resolve("hierarchy"),
            pairwise=resolve("pairwise"),
            ranker=data.get("ranker", "topsis"),
            round4=bool(data.get("round4", False)),
            output=resolve("output"),
        )
    except KeyError as e:
        raise ParseError(f"manifest missing field: {e}") from e


@contextmanager
def _stage(name: str):
    try:
        yield
    except SomitError as e:
        raise type(e)(f"stage {name}: {e}") from e


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def load_subjective(problem: DecisionProblem, session_path=None,
                    hierarchy_path=None) -> tuple[WeightVector, Optional[float]]:
    """Subjective weights from either a flat session or a hierarchy file,
    ordered by the problem's criteria. z is reported for flat sessions
    only (a hierarchy solves several systems)."""
    if hierarchy_path is not None:
        hierarchy = load_hierarchy(hierarchy_path)
        return elicitation.compose_hierarchy(hierarchy, problem), None
    session = load_session(session_path)
    if set(session.items) != set(problem.codes):
        raise ValidationError(
            f"session items {session.items} do not match criteria {problem.codes}")
    solution = elicitation.solve_subjective(session)
    ordered = [solution.weights[c] for c in problem.codes]
    return (WeightVector(problem.codes, ordered, Provenance.SUBJECTIVE),
            solution.z)


def run_manifest(manifest: RunManifest) -> dict:
    """Execute the pipeline the manifest describes and return the run
    artifact (also written to ``manifest.output`` when set). Repeated
    runs on identical inputs produce byte-identical artifacts."""
    inputs = {}
    for key in ("problem", "session", "hierarchy", "pairwise"):
        p = getattr(manifest, key)
        if p is not None:
            inputs[key] = {"path": Path(p).name, "sha256": _sha256(Path(p))}

    with _stage("load-problem"):
        problem = load_problem(manifest.problem)

    weights: dict = {}
    z = None
    if manifest.mode in ("subjective", "combined"):
        with _stage("elicitation"):
            subjective, z = load_subjective(problem, manifest.session,
                                            manifest.hierarchy)
            weights["subjective"] = subjective
    if manifest.mode in ("objective", "combined"):
        with _stage("objective-weighting"):
            weights["objective"] = weighting.objective_weights(problem)
    if manifest.mode == "combined":
        with _stage("combine"):
            weights["final"] = weighting.combine(weights["subjective"],
                                                 weights["objective"])
    if manifest.mode == "ahp":
        with _stage("ahp"):
            matrix, per_group = load_pairwise(manifest.pairwise)
            if per_group is None:
                weights["ahp"] = baselines.ahp_weights(matrix)
            else:
                weights["ahp"] = baselines.ahp_compose(matrix, per_group,
                                                       order=problem.codes)
    if manifest.mode == "critic":
        with _stage("critic"):
            weights["critic"] = baselines.critic_weights(problem)

    rank_with = {"subjective": "subjective", "objective": "objective",
                 "combined": "final", "ahp": "ahp", "critic": "critic"}
    chosen = weights[rank_with[manifest.mode]]
    if chosen.labels != problem.codes:
        raise ValidationError(
            f"stage ranking: weight labels {chosen.labels} do not match "
            f"criteria {problem.codes}")
    with _stage("ranking"):
        ranker = ranking.RANKERS[manifest.ranker]
        result = ranker(problem, chosen, round4=manifest.round4)

    artifact = {
        "schema": ARTIFACT_SCHEMA,
        "tool": {"name": "somit", "version": __version__},
        "mode": manifest.mode,
        "ranker": manifest.ranker,
        "round4": manifest.round4,
        "inputs": inputs,
        "problem": {
            "alternatives": list(problem.alternatives),
            "criteria": list(problem.codes),
            "directions": [d.value for d in problem.directions],
        },
        "weights": {
            name: weights_to_dict(w, z if name == "subjective" else None)
            for name, w in weights.items()
        },
        "ranking": result.as_dict(),
    }
    if manifest.output is not None:
        _write_json(artifact, manifest.output)
    return artifact


# ----------------------------------------------------------------- shared

def _read_json(path: Path) -> dict:
    try:
        text = path.read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} line {e.lineno} column {e.colno}: {e.msg}") from e
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected a JSON object at top level")
    return data


def dumps_artifact(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _write_json(data: dict, path: Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_artifact(data))

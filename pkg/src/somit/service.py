"""Session HTTP API powering the workbench.

Projects hold a decision problem plus in-progress comparison sessions.
Mutations (project creation, submitted answers) bump a per-project
revision; what-if evaluation computes against a snapshot and never
touches stored state. Every response carries the revision it was
computed against. Errors are ``{"error": code, "detail": text}``.
"""
from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal, Optional, Union

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict

from . import __version__, baselines, elicitation, io, ranking, weighting
from .model import (
    ComparisonSession,
    DecisionProblem,
    ExtremeComparison,
    HierarchySpec,
    NumericError,
    Provenance,
    SomitError,
    ValidationError,
    WeightVector,
    extreme_pair,
    parse_scale,
    validate_problem,
    validate_session,
)
from .sensitivity import PerturbationScenario, aafd_w, apply_scenario

GROUP_LEVEL = "groups"
FLAT_LEVEL = "criteria"

WEIGHT_MODES = ("subjective", "objective", "final", "critic")


class ApiError(SomitError):
    def __init__(self, status: int, code: str, detail: str):
        super().__init__(detail)
        self.status = status
        self.code = code
        self.detail = detail


def _bad_request(detail: str) -> ApiError:
    return ApiError(400, "validation", detail)


def _not_found(detail: str) -> ApiError:
    return ApiError(404, "not_found", detail)


def _conflict(detail: str) -> ApiError:
    return ApiError(409, "conflict", detail)


def _unprocessable(detail: str) -> ApiError:
    return ApiError(422, "unprocessable", detail)


# ------------------------------------------------------------ level state

class LevelState:
    """One comparison session being filled in answer by answer."""

    def __init__(self, name: str, items: list[str]):
        self.name = name
        self.items = list(items)
        self.median: Optional[str] = None
        self.answers: dict[str, float] = {}
        self.extreme_value: Optional[float] = None

    @property
    def pending(self) -> list[str]:
        if self.median is None:
            return [it for it in self.items]
        return [it for it in self.items
                if it != self.median and it not in self.answers]

    @property
    def relative_done(self) -> bool:
        return self.median is not None and not self.pending

    @property
    def needs_extreme(self) -> bool:
        return len(self.items) >= 3

    @property
    def complete(self) -> bool:
        return self.relative_done and \
            (self.extreme_value is not None or not self.needs_extreme)

    def extreme_pair(self) -> Optional[tuple[str, str]]:
        if not (self.relative_done and self.needs_extreme):
            return None
        return extreme_pair(self.items, self.median, self.answers)

    def next_prompt(self) -> Optional[dict]:
        if self.median is None:
            return {"kind": "median", "items": self.items}
        if self.pending:
            return {"kind": "comparison", "item": self.pending[0],
                    "median": self.median}
        if self.needs_extreme and self.extreme_value is None:
            high, low = self.extreme_pair()
            return {"kind": "extreme", "high": high, "low": low}
        return None

    def to_session(self) -> ComparisonSession:
        extreme = None
        if self.needs_extreme:
            high, low = self.extreme_pair()
            extreme = ExtremeComparison(high, low, self.extreme_value)
        return ComparisonSession(tuple(self.items), self.median,
                                 dict(self.answers), extreme)

    def as_dict(self) -> dict:
        state = {
            "items": self.items,
            "median": self.median,
            "answered": {k: v for k, v in self.answers.items()},
            "pending": self.pending,
            "complete": self.complete,
            "next": self.next_prompt(),
        }
        pair = self.extreme_pair()
        if pair is not None:
            state["extreme"] = {"high": pair[0], "low": pair[1],
                                "value": self.extreme_value}
        return state


def build_levels(problem: DecisionProblem) -> dict[str, LevelState]:
    """Hierarchical levels when every criterion is grouped (2+ groups),
    else one flat level over the criterion codes. Singleton groups get
    no level: their group weight passes straight through."""
    groups: list[str] = []
    members: dict[str, list[str]] = {}
    for c in problem.criteria:
        if c.group is None:
            groups = []
            break
        if c.group not in members:
            groups.append(c.group)
            members[c.group] = []
        members[c.group].append(c.code)
    if len(groups) >= 2:
        levels = {GROUP_LEVEL: LevelState(GROUP_LEVEL, groups)}
        for g in groups:
            if len(members[g]) >= 2:
                levels[g] = LevelState(g, members[g])
        return levels
    return {FLAT_LEVEL: LevelState(FLAT_LEVEL, list(problem.codes))}


# ---------------------------------------------------------------- project

@dataclass
class Baseline:
    revision: int
    mode: str
    weights: WeightVector
    result: ranking.RankingResult
    round4: bool = False


@dataclass
class Project:
    id: str
    problem: DecisionProblem
    levels: dict[str, LevelState]
    revision: int = 0
    baseline: Optional[Baseline] = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def elicitation_complete(self) -> bool:
        return all(level.complete for level in self.levels.values())

    def subjective_weights(self) -> WeightVector:
        if not self.elicitation_complete:
            pending = [name for name, lv in self.levels.items() if not lv.complete]
            raise _conflict(f"elicitation incomplete: levels {pending} unanswered")
        return _compose_subjective(self.problem, self.levels)

    def weights_for(self, mode: str) -> WeightVector:
        if mode == "subjective":
            return self.subjective_weights()
        if mode == "objective":
            return weighting.objective_weights(self.problem)
        if mode == "final":
            return weighting.combine(self.subjective_weights(),
                                     weighting.objective_weights(self.problem))
        if mode == "critic":
            return baselines.critic_weights(self.problem)
        raise _bad_request(f"mode must be one of {WEIGHT_MODES}, got {mode!r}")


def _compose_subjective(problem: DecisionProblem,
                        levels: dict[str, LevelState]) -> WeightVector:
    if GROUP_LEVEL in levels:
        per_group: dict[str, Union[ComparisonSession, str]] = {}
        members: dict[str, list[str]] = {}
        for c in problem.criteria:
            members.setdefault(c.group, []).append(c.code)
        for group in levels[GROUP_LEVEL].items:
            if group in levels:
                per_group[group] = levels[group].to_session()
            else:
                per_group[group] = members[group][0]
        hierarchy = HierarchySpec(levels[GROUP_LEVEL].to_session(), per_group)
        return elicitation.compose_hierarchy(hierarchy, problem)
    session = levels[FLAT_LEVEL].to_session()
    solution = elicitation.solve_subjective(session)
    ordered = [solution.weights[c] for c in problem.codes]
    return WeightVector(problem.codes, ordered, Provenance.SUBJECTIVE)


# ------------------------------------------------------------------ store

class ProjectStore:
    """In-memory projects with optional append-only JSON persistence."""

    def __init__(self, persist_dir: Optional[Path] = None):
        self.projects: dict[str, Project] = {}
        self.persist_dir = Path(persist_dir) if persist_dir else None
        self._lock = threading.Lock()
        if self.persist_dir is not None:
            self.persist_dir.mkdir(parents=True, exist_ok=True)
            self._replay()

    def get(self, project_id: str) -> Project:
        with self._lock:
            project = self.projects.get(project_id)
        if project is None:
            raise _not_found(f"unknown project {project_id!r}")
        return project

    def create(self, payload: dict, project_id: Optional[str] = None,
               persist: bool = True) -> Project:
        try:
            problem = io.problem_from_dict(payload)
        except io.ParseError as e:
            raise _bad_request(str(e)) from e
        report = validate_problem(problem)
        if not report.ok:
            raise _bad_request("; ".join(report.errors))
        project = Project(
            id=project_id or uuid.uuid4().hex[:12],
            problem=problem,
            levels=build_levels(problem),
            revision=1,
        )
        with self._lock:
            self.projects[project.id] = project
        if persist:
            self._append(project.id, {"event": "create", "problem": payload})
        return project

    def _append(self, project_id: str, event: dict) -> None:
        if self.persist_dir is None:
            return
        path = self.persist_dir / f"{project_id}.jsonl"
        with path.open("a") as fh:
            fh.write(json.dumps(event, sort_keys=True) + "\n")

    def _replay(self) -> None:
        for path in sorted(self.persist_dir.glob("*.jsonl")):
            project = None
            for line in path.read_text().splitlines():
                event = json.loads(line)
                if event["event"] == "create":
                    project = self.create(event["problem"],
                                          project_id=path.stem, persist=False)
                elif event["event"] == "submit" and project is not None:
                    apply_submission(project, event["level"], event["payload"],
                                     persist_store=None)


# ------------------------------------------------------------- submission

class SubmissionPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")
    kind: Literal["median", "comparison", "extreme"]
    item: Optional[str] = None
    value: Optional[Union[str, float]] = None


def _parse_value(raw: Union[str, float, None]) -> float:
    if raw is None:
        raise _unprocessable("missing comparison value")
    try:
        if isinstance(raw, str):
            return parse_scale(raw)
        value = float(raw)
        if not 1 / 9 <= value <= 9:
            raise ValidationError(f"scale value {value} outside [1/9, 9]")
        return value
    except ValidationError as e:
        raise _unprocessable(str(e)) from e


def _copy_levels(levels: dict[str, LevelState]) -> dict[str, LevelState]:
    copied: dict[str, LevelState] = {}
    for name, level in levels.items():
        twin = LevelState(name, level.items)
        twin.median = level.median
        twin.answers = dict(level.answers)
        twin.extreme_value = level.extreme_value
        copied[name] = twin
    return copied


def apply_submission(project: Project, level_name: str, payload: dict,
                     persist_store: Optional[ProjectStore]) -> dict:
    """Apply one answer under the project lock and report the new state."""
    with project.lock:
        level = project.levels.get(level_name)
        if level is None:
            raise _not_found(f"unknown level {level_name!r}; "
                             f"levels are {sorted(project.levels)}")
        kind = payload["kind"]
        if level.complete:
            raise _conflict(f"level {level_name!r} already complete")

        if kind == "median":
            if level.median is not None:
                raise _conflict(f"median already chosen: {level.median!r}")
            item = payload.get("item")
            if item not in level.items:
                raise _unprocessable(f"item {item!r} not at this level")
            level.median = item
        elif kind == "comparison":
            if level.median is None:
                raise _conflict("choose the median item first")
            item = payload.get("item")
            if item not in level.items or item == level.median:
                raise _unprocessable(
                    f"item {item!r} is not pending at this level")
            if item in level.answers:
                raise _conflict(f"item {item!r} already answered")
            level.answers[item] = _parse_value(payload.get("value"))
        else:  # extreme
            if not level.relative_done:
                raise _conflict("relative comparisons still pending")
            if not level.needs_extreme:
                raise _conflict("two-item level takes no extreme comparison")
            if level.extreme_value is not None:
                raise _conflict("extreme comparison already answered")
            level.extreme_value = _parse_value(payload.get("value"))

        project.revision += 1
        if persist_store is not None:
            persist_store._append(project.id,
                                  {"event": "submit", "level": level_name,
                                   "payload": payload})

        state = level.as_dict()
        response = {
            "revision": project.revision,
            "level": level_name,
            "state": state,
            "elicitation_complete": project.elicitation_complete,
        }
        if level.complete:
            session = level.to_session()
            report = validate_session(session)
            report.raise_if_invalid("session")
            if report.warnings:
                response["warnings"] = list(report.warnings)
            solution = elicitation.solve_subjective(session)
            response["level_weights"] = io.weights_to_dict(solution.weights,
                                                           solution.z)
        if project.elicitation_complete:
            response["subjective"] = io.weights_to_dict(
                _compose_subjective(project.problem, project.levels))
        return response


# ---------------------------------------------------------------- what-if

class OverridePayload(BaseModel):
    model_config = ConfigDict(extra="forbid")
    level: str
    item: str
    value: Union[str, float]


class WhatIfPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")
    scenario: Optional[dict] = None
    override: Optional[OverridePayload] = None


def _levels_with_override(levels: dict[str, LevelState],
                          override: OverridePayload) -> dict[str, LevelState]:
    """Copy of levels with one relative comparison replaced; the extreme
    pair is re-derived from the overridden answers, keeping the stored
    extreme value."""
    if override.level not in levels:
        raise _unprocessable(f"unknown level {override.level!r}")
    copied = _copy_levels(levels)
    target = copied[override.level]
    if override.item not in target.answers:
        raise _unprocessable(
            f"item {override.item!r} has no answered comparison at "
            f"level {override.level!r}")
    target.answers[override.item] = _parse_value(override.value)
    return copied


def evaluate_whatif(project: Project, payload: WhatIfPayload) -> dict:
    with project.lock:
        baseline = project.baseline
        if baseline is None or baseline.revision != project.revision:
            raise _conflict("no baseline ranking computed at this revision; "
                            "GET the ranking first")
        problem = project.problem
        levels = _copy_levels(project.levels)
        revision = project.revision

    candidate_problem = problem
    if payload.scenario is not None:
        try:
            scenario = io.scenario_from_dict(payload.scenario)
            candidate_problem = apply_scenario(problem, scenario)
        except (io.ParseError, ValidationError) as e:
            raise _unprocessable(str(e)) from e

    candidate_levels = levels
    if payload.override is not None:
        candidate_levels = _levels_with_override(levels, payload.override)

    mode = baseline.mode
    try:
        if mode == "subjective":
            weights = _compose_subjective(candidate_problem, candidate_levels)
        elif mode == "objective":
            weights = weighting.objective_weights(candidate_problem)
        elif mode == "critic":
            weights = baselines.critic_weights(candidate_problem)
        else:
            weights = weighting.combine(
                _compose_subjective(candidate_problem, candidate_levels),
                weighting.objective_weights(candidate_problem))
        result = ranking.topsis(candidate_problem, weights,
                                round4=baseline.round4)
    except (ValidationError, NumericError) as e:
        raise _unprocessable(str(e)) from e

    old_pos = {alt: k for k, alt in enumerate(baseline.result.order)}
    new_pos = {alt: k for k, alt in enumerate(result.order)}
    rank_changes = [
        {"alternative": alt, "before": old_pos[alt] + 1, "after": new_pos[alt] + 1}
        for alt in problem.alternatives if old_pos[alt] != new_pos[alt]
    ]
    return {
        "revision": revision,
        "mode": mode,
        "baseline": {
            "weights": io.weights_to_dict(baseline.weights),
            "scores": {a: float(s) for a, s in
                       zip(baseline.result.alternatives, baseline.result.scores)},
            "order": list(baseline.result.order),
        },
        "candidate": {
            "weights": io.weights_to_dict(weights),
            "scores": {a: float(s) for a, s in
                       zip(result.alternatives, result.scores)},
            "order": list(result.order),
        },
        "aafd_w": aafd_w(baseline.weights, weights),
        "rank_changes": rank_changes,
        "order_changed": bool(rank_changes),
    }


# -------------------------------------------------------------------- app

def create_app(store: Optional[ProjectStore] = None,
               persist_dir: Optional[Path] = None) -> FastAPI:
    if store is None:
        store = ProjectStore(persist_dir=persist_dir)
    app = FastAPI(title="somit service", version=__version__)
    app.state.store = store
    # the workbench is served from a different origin at desk scale
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status,
                            content={"error": exc.code, "detail": exc.detail})

    @app.exception_handler(RequestValidationError)
    async def _shape_error(_request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=422,
                            content={"error": "unprocessable",
                                     "detail": str(exc.errors())})

    @app.post("/v1/projects", status_code=201)
    def create_project(payload: dict):
        unknown = set(payload) - {"criteria", "alternatives", "matrix"}
        if unknown:
            raise _bad_request(f"unknown fields {sorted(unknown)}")
        project = store.create(payload)
        return {
            "id": project.id,
            "revision": project.revision,
            "levels": {name: lv.as_dict() for name, lv in project.levels.items()},
        }

    @app.get("/v1/projects/{project_id}")
    def get_project(project_id: str):
        project = store.get(project_id)
        with project.lock:
            return {
                "id": project.id,
                "revision": project.revision,
                "problem": io.problem_to_dict(project.problem),
                "levels": {name: lv.as_dict()
                           for name, lv in project.levels.items()},
                "elicitation_complete": project.elicitation_complete,
            }

    @app.post("/v1/projects/{project_id}/sessions/{level}/comparisons")
    def submit_comparison(project_id: str, level: str,
                          payload: SubmissionPayload):
        project = store.get(project_id)
        return apply_submission(project, level,
                                payload.model_dump(exclude_none=True),
                                persist_store=store)

    @app.get("/v1/projects/{project_id}/weights")
    def get_weights(project_id: str, mode: str = "final"):
        project = store.get(project_id)
        with project.lock:
            revision = project.revision
            try:
                weights = project.weights_for(mode)
            except (NumericError, ValidationError) as e:
                raise _unprocessable(str(e)) from e
        return {"revision": revision, "mode": mode,
                **io.weights_to_dict(weights)}

    @app.get("/v1/projects/{project_id}/ranking")
    def get_ranking(project_id: str, mode: str = "final", round4: bool = False):
        project = store.get(project_id)
        with project.lock:
            try:
                weights = project.weights_for(mode)
                result = ranking.topsis(project.problem, weights, round4=round4)
            except (NumericError, ValidationError) as e:
                raise _unprocessable(str(e)) from e
            project.baseline = Baseline(project.revision, mode, weights,
                                        result, round4)
            return {"revision": project.revision, "mode": mode,
                    **result.as_dict()}

    @app.post("/v1/projects/{project_id}/whatif")
    def whatif(project_id: str, payload: WhatIfPayload):
        project = store.get(project_id)
        return evaluate_whatif(project, payload)

    @app.get("/v1/health")
    def health():
        return {"status": "ok", "version": __version__}

    return app

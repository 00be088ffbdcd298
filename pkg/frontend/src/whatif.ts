/** What-if panel controller: build a draft (cell edit, comparison
 * override, or a canned scenario), evaluate it server-side without
 * touching the baseline, and either adopt or discard.
 *
 * Adopting promotes the draft through real mutations using only the
 * existing endpoints: a fresh project is created with the edited matrix
 * and every answered comparison is replayed (with the override applied,
 * when one is drafted). The workbench then switches to the new project.
 */
import {
  ApiClient,
  LevelState,
  ProblemPayload,
  ScenarioEdit,
  WhatIfReport,
  WhatIfRequest,
} from "./api.js";
import { Store, orderedLevels } from "./state.js";

export interface Draft {
  edits: ScenarioEdit[];
  override: { level: string; item: string; value: string } | null;
}

export function emptyDraft(): Draft {
  return { edits: [], override: null };
}

/** Apply scenario edits to a problem payload (input data only; all
 * derived numbers still come from the server). Direction flags flip
 * whenever an edit reverses the optimization sense, mirroring the
 * server's scenario semantics. */
export function applyEditsToProblem(problem: ProblemPayload, edits: ScenarioEdit[]): ProblemPayload {
  const clone: ProblemPayload = JSON.parse(JSON.stringify(problem));
  const column = (code: string) => {
    const j = clone.criteria.findIndex((c) => c.code === code);
    if (j < 0) throw new Error(`unknown criterion ${code}`);
    return j;
  };
  const flip = (j: number) => {
    clone.criteria[j].direction = clone.criteria[j].direction === "benefit" ? "cost" : "benefit";
  };
  for (const edit of edits) {
    if (edit.kind === "cell") {
      const i = clone.alternatives.indexOf(edit.alternative);
      if (i < 0) throw new Error(`unknown alternative ${edit.alternative}`);
      clone.matrix[i][column(edit.criterion)] = edit.value;
    } else if (edit.kind === "affine") {
      const j = column(edit.criterion);
      for (const row of clone.matrix) row[j] = edit.a * row[j] + edit.b;
      if (edit.a < 0) flip(j);
    } else if (edit.kind === "reciprocal") {
      const j = column(edit.criterion);
      for (const row of clone.matrix) row[j] = 1 / row[j];
      if (edit.flip_direction) flip(j);
    } else {
      const j = column(edit.criterion);
      for (const row of clone.matrix) row[j] = edit.c - row[j];
      flip(j);
    }
  }
  return clone;
}

export class WhatIfPanel {
  draft: Draft = emptyDraft();

  constructor(
    private api: ApiClient,
    private store: Store,
  ) {}

  setCell(alternative: string, criterion: string, value: number): void {
    this.draft.edits.push({ kind: "cell", alternative, criterion, value });
  }

  setAffine(criterion: string, a: number, b: number): void {
    this.draft.edits.push({ kind: "affine", criterion, a, b });
  }

  setReciprocal(criterion: string, flipDirection = true): void {
    this.draft.edits.push({ kind: "reciprocal", criterion, flip_direction: flipDirection });
  }

  setComplement(criterion: string, c: number): void {
    this.draft.edits.push({ kind: "complement", criterion, c });
  }

  setOverride(level: string, item: string, value: string): void {
    this.draft.override = { level, item, value };
  }

  discard(): void {
    this.draft = emptyDraft();
    this.store.update((s) => {
      s.lastDelta = null;
      s.inlineError = null;
    });
  }

  request(): WhatIfRequest {
    const body: WhatIfRequest = {};
    if (this.draft.edits.length) body.scenario = { edits: this.draft.edits };
    if (this.draft.override) body.override = this.draft.override;
    return body;
  }

  /** Evaluate the draft against the stored baseline; nothing mutates. */
  async evaluate(): Promise<WhatIfReport> {
    const projectId = this.store.state.projectId;
    if (!projectId) throw new Error("no project");
    const report = await this.api.whatIf(projectId, this.request());
    this.store.update((s) => {
      s.lastDelta = { doc: report, revision: report.revision };
    });
    return report;
  }

  /** Promote the draft: recreate the project with the edited inputs and
   * replay every answered comparison, overridden where drafted. */
  async adopt(): Promise<string> {
    const { projectId, problem, levels, levelOrder } = this.store.state;
    if (!projectId || !problem) throw new Error("no project");
    const edited = applyEditsToProblem(problem, this.draft.edits);
    const created = await this.api.createProject(edited);

    for (const name of levelOrder) {
      await this.replayLevel(created.id, name, levels[name]);
    }

    const project = await this.api.getProject(created.id);
    this.store.update((s) => {
      s.projectId = project.id;
      s.revision = project.revision;
      s.problem = project.problem;
      s.levels = project.levels;
      s.levelOrder = orderedLevels(project.levels);
      s.weights = {};
      s.ranking = null;
      s.lastDelta = null;
    });
    this.draft = emptyDraft();
    return project.id;
  }

  private async replayLevel(newId: string, name: string, level: LevelState): Promise<void> {
    if (level.median === null) return;
    await this.api.submit(newId, name, { kind: "median", item: level.median });
    const override = this.draft.override;
    for (const item of level.items) {
      if (item === level.median) continue;
      const answered = level.answered[item];
      if (answered === undefined) continue;
      const value =
        override && override.level === name && override.item === item
          ? override.value
          : answered;
      await this.api.submit(newId, name, { kind: "comparison", item, value });
    }
    if (level.extreme && level.extreme.value !== null) {
      await this.api.submit(newId, name, { kind: "extreme", value: level.extreme.value });
    }
  }
}

/** Guided elicitation controller: walks median pick, the linear run of
 * relative comparisons, then the extreme question, level by level. Every
 * answer POSTs immediately; server rejections land as inline errors on
 * the offending field without losing progress. */
import { ApiClient, ApiError, Prompt, ProblemPayload, SubmitResponse } from "./api.js";
import { Store, orderedLevels } from "./state.js";

export interface ActivePrompt {
  level: string;
  prompt: Prompt;
}

export class ElicitationFlow {
  /** Scale questions issued per level (median picks excluded). */
  questionsIssued: Record<string, number> = {};

  constructor(
    private api: ApiClient,
    private store: Store,
  ) {}

  async createProject(problem: ProblemPayload): Promise<string> {
    const created = await this.api.createProject(problem);
    this.store.update((s) => {
      s.projectId = created.id;
      s.revision = created.revision;
      s.problem = problem;
      s.levels = created.levels;
      s.levelOrder = orderedLevels(created.levels);
      s.inlineError = null;
    });
    return created.id;
  }

  /** The next unanswered prompt, in level order; null when done. */
  currentPrompt(): ActivePrompt | null {
    const { levels, levelOrder } = this.store.state;
    for (const name of levelOrder) {
      const next = levels[name]?.next;
      if (next) return { level: name, prompt: next };
    }
    return null;
  }

  complete(): boolean {
    return this.currentPrompt() === null && this.store.state.projectId !== null;
  }

  /** Answer the current prompt: an item label for a median pick, a scale
   * token for everything else. */
  async answer(value: string): Promise<SubmitResponse | null> {
    const active = this.currentPrompt();
    const projectId = this.store.state.projectId;
    if (!active || !projectId) return null;
    const { level, prompt } = active;

    if (prompt.kind !== "median") {
      this.questionsIssued[level] = (this.questionsIssued[level] ?? 0) + 1;
    }
    const body =
      prompt.kind === "median"
        ? ({ kind: "median", item: value } as const)
        : prompt.kind === "comparison"
          ? ({ kind: "comparison", item: prompt.item, value } as const)
          : ({ kind: "extreme", value } as const);

    try {
      const response = await this.api.submit(projectId, level, body);
      this.store.update((s) => {
        s.revision = response.revision;
        s.levels[level] = response.state;
        s.inlineError = null;
        if (response.warnings) s.warnings.push(...response.warnings);
      });
      return response;
    } catch (error) {
      if (error instanceof ApiError) {
        // a rejected answer was not a question the server accepted
        if (prompt.kind !== "median") this.questionsIssued[level] -= 1;
        this.store.update((s) => {
          s.inlineError = { where: level, detail: error.detail };
        });
        return null;
      }
      throw error;
    }
  }

  /** Fetch the weight vector for one provenance and cache it tagged with
   * the revision it answers for. */
  async refreshWeights(mode: "subjective" | "objective" | "final" | "critic"): Promise<void> {
    const projectId = this.store.state.projectId;
    if (!projectId) return;
    const doc = await this.api.weights(projectId, mode);
    this.store.update((s) => {
      s.weights[mode] = {
        doc: { labels: doc.labels, weights: doc.weights, provenance: doc.provenance, z: doc.z },
        revision: doc.revision,
      };
    });
  }

  async refreshRanking(mode = "final", round4 = false): Promise<void> {
    const projectId = this.store.state.projectId;
    if (!projectId) return;
    const doc = await this.api.ranking(projectId, mode, round4);
    this.store.update((s) => {
      s.ranking = { doc, revision: doc.revision };
    });
  }
}

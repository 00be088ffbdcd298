/** Typed client for the /v1 decision-session API. All mathematics lives
 * server-side; this module only moves JSON. */

export type Direction = "benefit" | "cost";

export interface CriterionPayload {
  code: string;
  name?: string;
  unit?: string;
  direction: Direction;
  group?: string | null;
}

export interface ProblemPayload {
  criteria: CriterionPayload[];
  alternatives: string[];
  matrix: number[][];
}

export type Prompt =
  | { kind: "median"; items: string[] }
  | { kind: "comparison"; item: string; median: string }
  | { kind: "extreme"; high: string; low: string };

export interface LevelState {
  items: string[];
  median: string | null;
  answered: Record<string, number>;
  pending: string[];
  complete: boolean;
  next: Prompt | null;
  extreme?: { high: string; low: string; value: number | null };
}

export interface WeightsDoc {
  labels: string[];
  weights: number[];
  provenance: string;
  z?: number;
}

export interface SubmitResponse {
  revision: number;
  level: string;
  state: LevelState;
  elicitation_complete: boolean;
  level_weights?: WeightsDoc;
  subjective?: WeightsDoc;
  warnings?: string[];
}

export interface ProjectDoc {
  id: string;
  revision: number;
  problem: ProblemPayload;
  levels: Record<string, LevelState>;
  elicitation_complete: boolean;
}

export interface CreatedDoc {
  id: string;
  revision: number;
  levels: Record<string, LevelState>;
}

export interface RankingDoc {
  revision: number;
  mode: string;
  scores: Record<string, number>;
  s_plus: Record<string, number>;
  s_minus: Record<string, number>;
  order: string[];
  pis: number[];
  nis: number[];
}

export type ScenarioEdit =
  | { kind: "cell"; alternative: string; criterion: string; value: number }
  | { kind: "affine"; criterion: string; a: number; b: number }
  | { kind: "reciprocal"; criterion: string; flip_direction: boolean }
  | { kind: "complement"; criterion: string; c: number };

export interface ScenarioPayload {
  edits: ScenarioEdit[];
}

export interface OverridePayload {
  level: string;
  item: string;
  value: string | number;
}

export interface WhatIfRequest {
  scenario?: ScenarioPayload;
  override?: OverridePayload;
}

export interface WhatIfSide {
  weights: WeightsDoc;
  scores: Record<string, number>;
  order: string[];
}

export interface WhatIfReport {
  revision: number;
  mode: string;
  baseline: WhatIfSide;
  candidate: WhatIfSide;
  aafd_w: number;
  rank_changes: { alternative: string; before: number; after: number }[];
  order_changed: boolean;
}

export type SubmissionBody =
  | { kind: "median"; item: string }
  | { kind: "comparison"; item: string; value: string | number }
  | { kind: "extreme"; value: string | number };

/** Error body {error, detail} surfaced with the HTTP status attached. */
export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    public detail: string,
  ) {
    super(`${code}: ${detail}`);
  }
}

export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchImpl: typeof fetch = fetch,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method,
      headers: { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const data = await response.json();
    if (!response.ok) {
      throw new ApiError(
        response.status,
        typeof data.error === "string" ? data.error : "error",
        typeof data.detail === "string" ? data.detail : JSON.stringify(data),
      );
    }
    return data as T;
  }

  health(): Promise<{ status: string; version: string }> {
    return this.request("GET", "/v1/health");
  }

  createProject(problem: ProblemPayload): Promise<CreatedDoc> {
    return this.request("POST", "/v1/projects", problem);
  }

  getProject(id: string): Promise<ProjectDoc> {
    return this.request("GET", `/v1/projects/${encodeURIComponent(id)}`);
  }

  submit(id: string, level: string, body: SubmissionBody): Promise<SubmitResponse> {
    const path = `/v1/projects/${encodeURIComponent(id)}/sessions/${encodeURIComponent(level)}/comparisons`;
    return this.request("POST", path, body);
  }

  weights(id: string, mode: string): Promise<WeightsDoc & { revision: number; mode: string }> {
    return this.request("GET", `/v1/projects/${encodeURIComponent(id)}/weights?mode=${mode}`);
  }

  ranking(id: string, mode = "final", round4 = false): Promise<RankingDoc> {
    const path = `/v1/projects/${encodeURIComponent(id)}/ranking?mode=${mode}&round4=${round4}`;
    return this.request("GET", path);
  }

  whatIf(id: string, body: WhatIfRequest): Promise<WhatIfReport> {
    return this.request("POST", `/v1/projects/${encodeURIComponent(id)}/whatif`, body);
  }
}

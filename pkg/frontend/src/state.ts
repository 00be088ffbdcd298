/** Client-side session state: everything rendered is a server value
 * tagged with the revision it was fetched at. When the project revision
 * advances past a cached document, the view is flagged stale instead of
 * silently recomputing anything locally. */
import type {
  LevelState,
  ProblemPayload,
  RankingDoc,
  WeightsDoc,
  WhatIfReport,
} from "./api.js";

export interface Tagged<T> {
  doc: T;
  revision: number;
}

export interface InlineError {
  where: string; // level name or panel field
  detail: string;
}

export interface UiSessionState {
  projectId: string | null;
  revision: number;
  problem: ProblemPayload | null;
  levelOrder: string[];
  levels: Record<string, LevelState>;
  weights: Record<string, Tagged<WeightsDoc>>; // keyed by provenance mode
  ranking: Tagged<RankingDoc> | null;
  lastDelta: Tagged<WhatIfReport> | null;
  warnings: string[];
  inlineError: InlineError | null;
}

export function emptyState(): UiSessionState {
  return {
    projectId: null,
    revision: 0,
    problem: null,
    levelOrder: [],
    levels: {},
    weights: {},
    ranking: null,
    lastDelta: null,
    warnings: [],
    inlineError: null,
  };
}

export function isStale<T>(tagged: Tagged<T> | null | undefined, revision: number): boolean {
  return !!tagged && tagged.revision !== revision;
}

type Listener = (state: UiSessionState) => void;

/** Minimal observable store; reducers live on the controllers. */
export class Store {
  state: UiSessionState = emptyState();
  private listeners: Listener[] = [];

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  update(mutate: (state: UiSessionState) => void): void {
    mutate(this.state);
    for (const listener of this.listeners) listener(this.state);
  }
}

/** Levels in elicitation order: the group level first, then each inner
 * level in the order the server listed them. */
export function orderedLevels(levels: Record<string, LevelState>): string[] {
  const names = Object.keys(levels);
  names.sort((a, b) => {
    if (a === "groups") return -1;
    if (b === "groups") return 1;
    return 0;
  });
  return names;
}

/** Scale questions asked so far at a level: relative comparisons plus
 * the extreme one. The median pick is a selection, not a question. */
export function scaleQuestionCount(level: LevelState): number {
  const extremeAnswered =
    level.extreme && level.extreme.value !== null ? 1 : 0;
  return Object.keys(level.answered).length + extremeAnswered;
}

/** Total scale questions a level will take: n for 3+ items, 1 for 2. */
export function scaleQuestionBudget(level: LevelState): number {
  const n = level.items.length;
  return n >= 3 ? n : 1;
}

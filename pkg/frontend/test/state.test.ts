import { describe, expect, it } from "vitest";

import type { LevelState } from "../src/api.js";
import {
  isStale,
  orderedLevels,
  scaleQuestionBudget,
  scaleQuestionCount,
  Store,
} from "../src/state.js";

function level(partial: Partial<LevelState>): LevelState {
  return {
    items: ["a", "b", "c"],
    median: null,
    answered: {},
    pending: ["a", "b", "c"],
    complete: false,
    next: { kind: "median", items: ["a", "b", "c"] },
    ...partial,
  };
}

describe("staleness", () => {
  it("flags documents tagged with an older revision", () => {
    const tagged = { doc: { labels: [], weights: [], provenance: "final" }, revision: 4 };
    expect(isStale(tagged, 4)).toBe(false);
    expect(isStale(tagged, 5)).toBe(true);
    expect(isStale(null, 5)).toBe(false);
  });
});

describe("level ordering", () => {
  it("puts the group level first", () => {
    const levels = {
      Financial: level({}),
      groups: level({}),
      Social: level({}),
    };
    expect(orderedLevels(levels)[0]).toBe("groups");
  });
});

describe("question accounting", () => {
  it("counts relative answers plus the extreme, not the median pick", () => {
    const partway = level({
      median: "b",
      answered: { a: 3 },
      pending: ["c"],
      extreme: undefined,
    });
    expect(scaleQuestionCount(partway)).toBe(1);
    const done = level({
      median: "b",
      answered: { a: 3, c: 0.5 },
      pending: [],
      complete: true,
      next: null,
      extreme: { high: "a", low: "c", value: 2 },
    });
    expect(scaleQuestionCount(done)).toBe(3);
  });

  it("budgets n questions for 3+ items and 1 for a pair", () => {
    expect(scaleQuestionBudget(level({ items: ["a", "b", "c", "d"] }))).toBe(4);
    expect(scaleQuestionBudget(level({ items: ["a", "b"] }))).toBe(1);
  });
});

describe("store", () => {
  it("notifies subscribers on update", () => {
    const store = new Store();
    let seen = 0;
    const unsubscribe = store.subscribe(() => (seen += 1));
    store.update((s) => {
      s.revision = 3;
    });
    expect(seen).toBe(1);
    expect(store.state.revision).toBe(3);
    unsubscribe();
    store.update(() => {});
    expect(seen).toBe(1);
  });
});

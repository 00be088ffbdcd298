/** Browser entry point: binds the controllers to the page. The server
 * does all the math; this file only routes events and re-renders. */
import { ApiClient, ProblemPayload } from "./api.js";
import { ElicitationFlow } from "./elicitation.js";
import { Store } from "./state.js";
import {
  renderDelta,
  renderInlineError,
  renderLevelProgress,
  renderPrompt,
  renderRanking,
  renderWarnings,
  renderWeightBars,
} from "./views.js";
import { WhatIfPanel } from "./whatif.js";

const api = new ApiClient(
  (window as { SOMIT_API_URL?: string }).SOMIT_API_URL ?? "http://127.0.0.1:8645",
);
const store = new Store();
const flow = new ElicitationFlow(api, store);
const panel = new WhatIfPanel(api, store);

function $(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el;
}

async function refreshDerived(): Promise<void> {
  if (!flow.complete()) return;
  await flow.refreshWeights("subjective");
  await flow.refreshWeights("objective");
  await flow.refreshWeights("final");
  await flow.refreshRanking();
}

function render(): void {
  const state = store.state;
  $("status").innerHTML = state.projectId
    ? `project <code>${state.projectId}</code> @ revision ${state.revision}`
    : "paste a problem JSON and create a project";
  $("messages").innerHTML = renderInlineError(state) + renderWarnings(state);

  const active = flow.currentPrompt();
  $("prompt").innerHTML = active ? renderPrompt(active.level, active.prompt) : "";
  $("levels").innerHTML = state.levelOrder
    .map((name) => renderLevelProgress(name, state.levels[name]))
    .join("");

  $("weights").innerHTML = (["subjective", "objective", "final"] as const)
    .map((mode) => {
      const tagged = state.weights[mode];
      return tagged ? renderWeightBars(mode, tagged, state.revision) : "";
    })
    .join("");
  $("ranking").innerHTML = state.ranking
    ? renderRanking(state.ranking, state.revision)
    : "";
  $("delta").innerHTML = state.lastDelta
    ? renderDelta(state.lastDelta, state.revision)
    : "";
}

store.subscribe(render);

$("create-form").addEventListener("submit", (event) => {
  event.preventDefault();
  const text = ($("problem-json") as HTMLTextAreaElement).value;
  void (async () => {
    try {
      const problem = JSON.parse(text) as ProblemPayload;
      await flow.createProject(problem);
    } catch (error) {
      store.update((s) => {
        s.inlineError = { where: "create", detail: String(error) };
      });
    }
  })();
});

$("prompt").addEventListener("submit", (event) => {
  event.preventDefault();
  const form = event.target as HTMLFormElement;
  const field = form.elements.namedItem("answer") as HTMLInputElement | HTMLSelectElement;
  void (async () => {
    const response = await flow.answer(field.value);
    if (response && flow.complete()) await refreshDerived();
    render();
  })();
});

$("delta").addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  const action = target.dataset.action;
  if (!action) return;
  void (async () => {
    if (action === "adopt") {
      await panel.adopt();
      await refreshDerived();
    } else if (action === "discard") {
      panel.discard();
    }
    render();
  })();
});

$("whatif-form").addEventListener("submit", (event) => {
  event.preventDefault();
  const form = event.target as HTMLFormElement;
  const kind = (form.elements.namedItem("kind") as HTMLSelectElement).value;
  const a = (form.elements.namedItem("a") as HTMLInputElement).value;
  const b = (form.elements.namedItem("b") as HTMLInputElement).value;
  const c = (form.elements.namedItem("c") as HTMLInputElement).value;
  void (async () => {
    try {
      panel.draft = { edits: [], override: null };
      if (kind === "cell") panel.setCell(a, b, Number(c));
      else if (kind === "affine") panel.setAffine(a, Number(b), Number(c));
      else if (kind === "reciprocal") panel.setReciprocal(a);
      else if (kind === "complement") panel.setComplement(a, Number(c));
      else if (kind === "override") panel.setOverride(a, b, c);
      await panel.evaluate();
    } catch (error) {
      store.update((s) => {
        s.inlineError = { where: "whatif", detail: String(error) };
      });
    }
    render();
  })();
});

render();

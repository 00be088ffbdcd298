/** HTML renderers. Pure string builders over server documents: every
 * number shown is a server value formatted to 4 decimals, tagged with
 * the revision it was computed at and flagged when stale. */
import type { LevelState, Prompt, RankingDoc, WhatIfReport, WeightsDoc } from "./api.js";
import { fmt4, pct, signed4 } from "./format.js";
import { isStale, Tagged, UiSessionState } from "./state.js";

function staleBadge<T>(tagged: Tagged<T>, revision: number): string {
  return isStale(tagged, revision)
    ? `<span class="stale" title="computed at revision ${tagged.revision}">stale</span>`
    : "";
}

export function renderWeightBars(
  title: string,
  tagged: Tagged<WeightsDoc>,
  revision: number,
): string {
  const { labels, weights } = tagged.doc;
  const peak = Math.max(...weights, 1e-12);
  const rows = labels.map((label, j) => {
    const w = weights[j];
    const width = Math.round((100 * w) / peak);
    return `
      <div class="bar-row">
        <span class="bar-label">${label}</span>
        <span class="bar-track"><span class="bar-fill" style="width:${width}%"></span></span>
        <span class="bar-value">${fmt4(w)}</span>
      </div>`;
  });
  return `
    <section class="weights" data-provenance="${tagged.doc.provenance}">
      <h3>${title} ${staleBadge(tagged, revision)}</h3>
      ${rows.join("")}
    </section>`;
}

export function renderRanking(tagged: Tagged<RankingDoc>, revision: number): string {
  const rows = tagged.doc.order.map(
    (alt, k) => `
      <tr><td>${k + 1}</td><td>${alt}</td>
      <td>${fmt4(tagged.doc.scores[alt])}</td></tr>`,
  );
  return `
    <section class="ranking">
      <h3>Ranking ${staleBadge(tagged, revision)}</h3>
      <table><thead><tr><th>#</th><th>alternative</th><th>score</th></tr></thead>
      <tbody>${rows.join("")}</tbody></table>
    </section>`;
}

export function renderPrompt(level: string, prompt: Prompt): string {
  if (prompt.kind === "median") {
    const options = prompt.items
      .map((item) => `<option value="${item}">${item}</option>`)
      .join("");
    return `
      <form class="prompt" data-level="${level}" data-kind="median">
        <label>Which item is of median importance at level "${level}"?</label>
        <select name="answer">${options}</select>
        <button type="submit">Choose</button>
      </form>`;
  }
  const question =
    prompt.kind === "comparison"
      ? `How important is <b>${prompt.item}</b> relative to <b>${prompt.median}</b>?`
      : `Highest: <b>${prompt.high}</b>; Lowest: <b>${prompt.low}</b>.
         How important is <b>${prompt.high}</b> relative to <b>${prompt.low}</b>?`;
  return `
    <form class="prompt" data-level="${level}" data-kind="${prompt.kind}">
      <label>${question}</label>
      <input name="answer" placeholder="1/9 .. 9 (e.g. 3, 1/2, 0.8)" />
      <button type="submit">Answer</button>
    </form>`;
}

export function renderLevelProgress(name: string, level: LevelState): string {
  const answered = Object.keys(level.answered)
    .map((item) => `<li>${item}: ${level.answered[item]}</li>`)
    .join("");
  const status = level.complete ? "done" : `${level.pending.length} pending`;
  return `
    <details class="level" data-level="${name}" ${level.complete ? "" : "open"}>
      <summary>${name} (${status})</summary>
      <ul>${answered}</ul>
    </details>`;
}

export function renderDelta(tagged: Tagged<WhatIfReport>, revision: number): string {
  const report = tagged.doc;
  const labels = report.baseline.weights.labels;
  const weightRows = labels.map((label, j) => {
    const before = report.baseline.weights.weights[j];
    const after = report.candidate.weights.weights[j];
    return `
      <tr><td>${label}</td><td>${fmt4(before)}</td><td>${fmt4(after)}</td>
      <td>${signed4(after - before)}</td></tr>`;
  });
  const scoreRows = report.baseline.order.map((alt) => {
    const before = report.baseline.scores[alt];
    const after = report.candidate.scores[alt];
    return `
      <tr><td>${alt}</td><td>${fmt4(before)}</td><td>${fmt4(after)}</td>
      <td>${signed4(after - before)}</td></tr>`;
  });
  const badges = report.rank_changes
    .map(
      (change) => `
      <span class="badge rank-change">${change.alternative}:
        #${change.before} &rarr; #${change.after}</span>`,
    )
    .join("");
  return `
    <section class="delta">
      <h3>What-if ${staleBadge(tagged, revision)}</h3>
      <p>weight deviation (AAFD): <b>${pct(report.aafd_w)}</b>;
         ordering ${report.order_changed ? "CHANGES" : "holds"}</p>
      <div class="badges">${badges || '<span class="badge">no rank changes</span>'}</div>
      <h4>weights</h4>
      <table><thead><tr><th>criterion</th><th>now</th><th>draft</th><th>&Delta;</th></tr></thead>
      <tbody>${weightRows.join("")}</tbody></table>
      <h4>scores</h4>
      <table><thead><tr><th>alternative</th><th>now</th><th>draft</th><th>&Delta;</th></tr></thead>
      <tbody>${scoreRows.join("")}</tbody></table>
      <button data-action="adopt">Adopt</button>
      <button data-action="discard">Discard</button>
    </section>`;
}

export function renderInlineError(state: UiSessionState): string {
  if (!state.inlineError) return "";
  return `<p class="error" data-where="${state.inlineError.where}">
    ${state.inlineError.detail}</p>`;
}

export function renderWarnings(state: UiSessionState): string {
  if (!state.warnings.length) return "";
  const items = state.warnings.map((w) => `<li>${w}</li>`).join("");
  return `<aside class="warnings"><b>notes</b><ul>${items}</ul></aside>`;
}

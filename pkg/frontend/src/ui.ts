// DOM rendering. The queue, header and banner re-render from state on
// every change; the verdict form is written only on selection changes
// and hotkey edits so typing in a field is never interrupted.

import type { ReviewState } from "./state.js";
import type { FormState } from "./state.js";
import type { DisagreementRow, PairDetail, DialogContext } from "./types.js";

export interface Refs {
  root: HTMLElement;
  roundEl: HTMLElement;
  metricsEl: HTMLElement;
  advanceBtn: HTMLButtonElement;
  bannerEl: HTMLElement;
  queueEl: HTMLElement;
  queueSummaryEl: HTMLElement;
  detailEl: HTMLElement;
  formEl: HTMLFormElement;
  noteInput: HTMLInputElement;
  kindSelect: HTMLSelectElement;
  turnIdInput: HTMLInputElement;
  editTurnIdInput: HTMLInputElement;
  newLabelInput: HTMLInputElement;
  sourceLabelInput: HTMLInputElement;
  targetLabelInput: HTMLInputElement;
  newTextInput: HTMLInputElement;
  submitBtn: HTMLButtonElement;
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function buildSkeleton(root: HTMLElement): Refs {
  root.innerHTML = `
    <header class="topbar">
      <h1>paraphrase review</h1>
      <span id="round-indicator" class="round"></span>
      <span id="metrics-summary" class="metrics"></span>
      <button id="advance-btn" type="button" disabled>next round (n)</button>
    </header>
    <p id="banner" class="banner" hidden></p>
    <main class="columns">
      <section class="queue-pane">
        <p id="queue-summary" class="queue-summary"></p>
        <ol id="queue" class="queue"></ol>
      </section>
      <section class="detail-pane">
        <div id="detail" class="detail"></div>
        <form id="verdict-form" class="verdict">
          <fieldset class="categories">
            <label><input type="radio" name="category" value="prediction_error"> pred. (p)</label>
            <label><input type="radio" name="category" value="annotation_error"> ann. (a)</label>
            <label><input type="radio" name="category" value="prep_error"> prep. (x)</label>
          </fieldset>
          <input id="note" name="note" type="text" placeholder="note (optional)" autocomplete="off">
          <select id="action-kind" name="action-kind">
            <option value="none">no revision</option>
            <option value="relabel">relabel a question</option>
            <option value="merge">merge two labels</option>
            <option value="edit">edit turn text</option>
          </select>
          <div class="action-fields" data-kind="relabel" hidden>
            <input id="turn-id" type="text" placeholder="turn id" autocomplete="off">
            <input id="new-label" type="text" placeholder="new label" autocomplete="off">
          </div>
          <div class="action-fields" data-kind="merge" hidden>
            <input id="source-label" type="text" placeholder="merge this label..." autocomplete="off">
            <input id="target-label" type="text" placeholder="...into this label" autocomplete="off">
          </div>
          <div class="action-fields" data-kind="edit" hidden>
            <input id="edit-turn-id" type="text" placeholder="turn id" autocomplete="off">
            <input id="new-text" type="text" placeholder="corrected text" autocomplete="off">
          </div>
          <button id="submit-verdict" type="submit">submit verdict (enter)</button>
        </form>
      </section>
    </main>
  `;
  const get = <T extends HTMLElement>(selector: string): T => {
    const el = root.querySelector(selector);
    if (!el) throw new Error(`missing element ${selector}`);
    return el as T;
  };
  return {
    root,
    roundEl: get("#round-indicator"),
    metricsEl: get("#metrics-summary"),
    advanceBtn: get<HTMLButtonElement>("#advance-btn"),
    bannerEl: get("#banner"),
    queueEl: get("#queue"),
    queueSummaryEl: get("#queue-summary"),
    detailEl: get("#detail"),
    formEl: get<HTMLFormElement>("#verdict-form"),
    noteInput: get<HTMLInputElement>("#note"),
    kindSelect: get<HTMLSelectElement>("#action-kind"),
    turnIdInput: get<HTMLInputElement>("#turn-id"),
    editTurnIdInput: get<HTMLInputElement>("#edit-turn-id"),
    newLabelInput: get<HTMLInputElement>("#new-label"),
    sourceLabelInput: get<HTMLInputElement>("#source-label"),
    targetLabelInput: get<HTMLInputElement>("#target-label"),
    newTextInput: get<HTMLInputElement>("#new-text"),
    submitBtn: get<HTMLButtonElement>("#submit-verdict"),
  };
}

function queueRow(row: DisagreementRow, selected: boolean): string {
  const classes = ["item", row.status, selected ? "selected" : ""].filter(Boolean).join(" ");
  return `
    <li class="${classes}" data-pair-id="${escapeHtml(row.pair_id)}">
      <span class="pair-id">${escapeHtml(row.pair_id)}</span>
      <span class="texts">${escapeHtml(row.text1)} / ${escapeHtml(row.text2)}</span>
      <span class="labels">${escapeHtml(row.label1)} vs ${escapeHtml(row.label2)}</span>
      <span class="score">gold ${row.gold}, predicted ${row.predicted} @ ${row.score.toFixed(2)}</span>
      <span class="status">${row.status === "closed" ? `closed: ${row.verdict?.category ?? ""}` : "open"}</span>
    </li>
  `;
}

export function renderQueue(refs: Refs, state: ReviewState): void {
  // display order is the server ranking, verbatim
  refs.queueEl.innerHTML = state.queue
    .map((row) => queueRow(row, row.pair_id === state.selected))
    .join("");
  refs.queueSummaryEl.textContent =
    `${state.open} open / ${state.closed} closed of ${state.total}`;
}

export function renderHeader(refs: Refs, state: ReviewState, advanceEnabled: boolean): void {
  refs.roundEl.textContent = `round ${state.round}`;
  const accuracy = state.metricsRendered["accuracy"];
  const baseline = state.metricsRendered["majority_baseline_accuracy"];
  refs.metricsEl.textContent = accuracy
    ? `accuracy ${accuracy} (baseline ${baseline ?? "?"})`
    : "";
  refs.advanceBtn.disabled = !advanceEnabled;
}

export function renderBanner(refs: Refs, state: ReviewState): void {
  refs.bannerEl.hidden = state.banner === null;
  refs.bannerEl.textContent = state.banner ?? "";
}

function contextHtml(context: DialogContext): string {
  const turns = context.turns
    .map((turn) => {
      const classes = ["turn", turn.focus ? "focus" : ""].filter(Boolean).join(" ");
      return `<li class="${classes}">${escapeHtml(turn.speaker)}: ${escapeHtml(turn.text)}</li>`;
    })
    .join("");
  return `<ul class="context" data-dialog="${escapeHtml(context.dialog_id)}">${turns}</ul>`;
}

export function renderDetail(refs: Refs, detail: PairDetail | null): void {
  if (!detail) {
    refs.detailEl.innerHTML = `<p class="placeholder">queue is clear</p>`;
    return;
  }
  const predicted = detail.predicted === null ? "?" : String(detail.predicted);
  const score = detail.score === null ? "?" : detail.score.toFixed(4);
  refs.detailEl.innerHTML = `
    <h2>${escapeHtml(detail.pair_id)}</h2>
    <table class="pair-table">
      <tr><th></th><th>text</th><th>annotated</th></tr>
      <tr><td>1</td><td>${escapeHtml(detail.text1)}</td><td>${escapeHtml(detail.label1)}</td></tr>
      <tr><td>2</td><td>${escapeHtml(detail.text2)}</td><td>${escapeHtml(detail.label2)}</td></tr>
    </table>
    <p class="scores">gold ${detail.gold}, predicted ${predicted}, score ${score}</p>
    <div class="contexts">
      ${contextHtml(detail.context.q1)}
      ${contextHtml(detail.context.q2)}
    </div>
  `;
}

/** Push form state into the inputs. Called on selection change and on
 * hotkey/prefill edits, never while the reviewer is typing. */
export function syncForm(refs: Refs, form: FormState): void {
  for (const radio of refs.formEl.querySelectorAll<HTMLInputElement>("input[name=category]")) {
    radio.checked = radio.value === form.category;
  }
  refs.noteInput.value = form.note;
  refs.kindSelect.value = form.kind;
  refs.turnIdInput.value = form.turnId;
  refs.editTurnIdInput.value = form.turnId;
  refs.newLabelInput.value = form.newLabel;
  refs.sourceLabelInput.value = form.sourceLabel;
  refs.targetLabelInput.value = form.targetLabel;
  refs.newTextInput.value = form.newText;
  for (const group of refs.formEl.querySelectorAll<HTMLElement>(".action-fields")) {
    group.hidden = group.dataset.kind !== form.kind;
  }
}

// Pure review-session state. Every transition returns a new state object
// so the DOM layer can re-render from (server data + unsubmitted form)
// and nothing else; a reload rebuilds the same view from the server.

import type {
  Category,
  DisagreementRow,
  QueueResponse,
  RevisionAction,
  VerdictSubmission,
} from "./types.js";

export type ActionKind = "none" | "relabel" | "merge" | "edit";

export interface FormState {
  category: Category | null;
  note: string;
  kind: ActionKind;
  turnId: string;
  newLabel: string;
  sourceLabel: string;
  targetLabel: string;
  newText: string;
}

export interface ReviewState {
  round: number;
  queue: DisagreementRow[];
  total: number;
  open: number;
  closed: number;
  selected: string | null;
  form: FormState;
  banner: string | null;
  metricsRendered: Record<string, string>;
  advancing: boolean;
}

export function emptyForm(): FormState {
  return {
    category: null,
    note: "",
    kind: "none",
    turnId: "",
    newLabel: "",
    sourceLabel: "",
    targetLabel: "",
    newText: "",
  };
}

export function initialState(): ReviewState {
  return {
    round: 0,
    queue: [],
    total: 0,
    open: 0,
    closed: 0,
    selected: null,
    form: emptyForm(),
    banner: null,
    metricsRendered: {},
    advancing: false,
  };
}

export function itemById(state: ReviewState, pairId: string | null): DisagreementRow | null {
  if (pairId === null) return null;
  return state.queue.find((row) => row.pair_id === pairId) ?? null;
}

export function firstOpen(queue: DisagreementRow[]): string | null {
  const row = queue.find((r) => r.status === "open");
  return row ? row.pair_id : null;
}

/** The next open item after pairId in queue order, wrapping around. */
export function nextOpenAfter(queue: DisagreementRow[], pairId: string | null): string | null {
  const start = pairId === null ? -1 : queue.findIndex((r) => r.pair_id === pairId);
  for (let step = 1; step <= queue.length; step++) {
    const row = queue[(start + step + queue.length) % queue.length];
    if (row && row.status === "open") return row.pair_id;
  }
  return null;
}

/**
 * Fold a queue listing from the server into the state.
 *
 * The queue position is the server's cursor: if the current selection is
 * gone (or nothing is selected) we land on the first open item, which is
 * exactly where a full page reload would land too. Form state survives
 * only while the selection survives.
 */
export function withQueue(state: ReviewState, listing: QueueResponse): ReviewState {
  const stillThere = listing.disagreements.some((r) => r.pair_id === state.selected);
  const selected = stillThere ? state.selected : firstOpen(listing.disagreements);
  return {
    ...state,
    round: listing.round,
    queue: listing.disagreements,
    total: listing.total,
    open: listing.open,
    closed: listing.closed,
    selected,
    form: stillThere && selected === state.selected ? state.form : emptyForm(),
  };
}

export function withMetrics(state: ReviewState, rendered: Record<string, string>): ReviewState {
  return { ...state, metricsRendered: rendered };
}

export function select(state: ReviewState, pairId: string): ReviewState {
  if (pairId === state.selected) return state;
  if (!itemById(state, pairId)) return state;
  return { ...state, selected: pairId, form: emptyForm(), banner: null };
}

const LABEL_SHAPE = /^([A-Za-z_][A-Za-z0-9_]*)\((.*)\)$/;

/** True for label pairs like similar(e,x) vs associated(e,x): same
 * arguments, different predicate name. Those are merge candidates. */
export function differOnlyByPredicate(label1: string, label2: string): boolean {
  const a = LABEL_SHAPE.exec(label1);
  const b = LABEL_SHAPE.exec(label2);
  if (!a || !b) return false;
  return a[1] !== b[1] && a[2] === b[2];
}

export function setCategory(state: ReviewState, category: Category): ReviewState {
  const item = itemById(state, state.selected);
  if (!item) return state;
  let form: FormState = { ...state.form, category };
  const untouchedAction = state.form.kind === "none" && !state.form.sourceLabel && !state.form.targetLabel;
  if (
    category === "annotation_error" &&
    untouchedAction &&
    differOnlyByPredicate(item.label1, item.label2)
  ) {
    // prefill the obvious fix; the reviewer can still flip direction
    form = { ...form, kind: "merge", sourceLabel: item.label1, targetLabel: item.label2 };
  }
  return { ...state, form, banner: null };
}

export function patchForm(state: ReviewState, patch: Partial<FormState>): ReviewState {
  return { ...state, form: { ...state.form, ...patch } };
}

export function rejected(state: ReviewState, message: string): ReviewState {
  // server said no; keep everything the reviewer typed
  return { ...state, banner: message };
}

export function draftAction(form: FormState): RevisionAction | null {
  switch (form.kind) {
    case "none":
      return null;
    case "relabel":
      return { type: "relabel_turn", turn_id: form.turnId, new_label: form.newLabel };
    case "merge":
      return { type: "merge_labels", source_label: form.sourceLabel, target_label: form.targetLabel };
    case "edit":
      return { type: "edit_text", turn_id: form.turnId, new_text: form.newText };
  }
}

/** The verdict POST body, or an error string when the form is not
 * submittable. A verdict without a category is never constructed. */
export function buildSubmission(state: ReviewState, actor: string): VerdictSubmission | string {
  const item = itemById(state, state.selected);
  if (!item) return "no item selected";
  if (item.status === "closed") return "item already closed";
  if (!state.form.category) return "pick a category first";
  const submission: VerdictSubmission = {
    pair_id: item.pair_id,
    category: state.form.category,
    actor,
  };
  if (state.form.note) submission.note = state.form.note;
  const action = draftAction(state.form);
  if (action) submission.action = action;
  return submission;
}

/** A confirmed verdict: close the row locally, step to the next open
 * item, and clear the form. Counts come from the server response. */
export function verdictAccepted(
  state: ReviewState,
  pairId: string,
  open: number,
  closed: number,
): ReviewState {
  const queue = state.queue.map((row) =>
    row.pair_id === pairId ? { ...row, status: "closed" as const } : row,
  );
  return {
    ...state,
    queue,
    open,
    closed,
    selected: nextOpenAfter(queue, pairId),
    form: emptyForm(),
    banner: null,
  };
}

export function canAdvance(state: ReviewState): boolean {
  return state.total > 0 && state.open === 0 && !state.advancing;
}

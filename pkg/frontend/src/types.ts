// Response and request shapes of the review service REST API.

export type Category = "prediction_error" | "annotation_error" | "prep_error";

export type RevisionAction =
  | { type: "relabel_turn"; turn_id: string; new_label: string }
  | { type: "merge_labels"; source_label: string; target_label: string }
  | { type: "edit_text"; turn_id: string; new_text: string };

export interface VerdictInfo {
  rev_id: number;
  timestamp: string;
  actor: string;
  category: Category;
  note: string;
  has_revision: boolean;
}

export interface DisagreementRow {
  pair_id: string;
  gold: number;
  predicted: number;
  score: number;
  label1: string;
  label2: string;
  text1: string;
  text2: string;
  status: "open" | "closed";
  verdict: VerdictInfo | null;
}

export interface QueueResponse {
  round: number;
  status: string;
  total: number;
  open: number;
  closed: number;
  disagreements: DisagreementRow[];
}

export interface Metrics {
  n: number;
  tp: number;
  fp: number;
  tn: number;
  fn: number;
  accuracy: number | null;
  precision: number | null;
  recall: number | null;
  f1: number | null;
  majority_baseline_accuracy: number | null;
  error_reduction_vs_baseline: number | null;
}

export interface RoundReport {
  round: number;
  corpus_version: number;
  eval_split: string;
  metrics: Metrics;
  metrics_rendered: Record<string, string>;
  verdicts: Record<string, number>;
  disagreements: { total: number; open: number; closed: number };
  dataset: Record<string, unknown>;
}

export interface RoundsResponse {
  current: number;
  rounds: RoundReport[];
}

export interface ContextTurn {
  turn_id: string;
  index: number;
  speaker: string;
  text: string;
  is_question: boolean;
  focus: boolean;
}

export interface DialogContext {
  dialog_id: string;
  turns: ContextTurn[];
}

export interface PairDetail {
  pair_id: string;
  q1_id: string;
  q2_id: string;
  text1: string;
  text2: string;
  gold: number;
  split: string;
  label1: string;
  label2: string;
  score: number | null;
  predicted: number | null;
  verdict: VerdictInfo | null;
  context: { q1: DialogContext; q2: DialogContext };
}

export interface VerdictSubmission {
  pair_id: string;
  category: Category;
  note?: string;
  actor?: string;
  action?: RevisionAction;
}

export interface VerdictResponse {
  rev_id: number;
  pair_id: string;
  category: Category;
  round: number;
  open: number;
  closed: number;
}

export interface AdvanceResponse extends RoundReport {
  advanced_from: number;
}

export interface HealthResponse {
  ok: boolean;
  round: number;
}

export interface CorpusInfo {
  version: number;
  parent_version: number | null;
  n_turns: number;
  n_questions: number;
}

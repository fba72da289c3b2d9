// Hotkey layer. Triage throughput lives on the keyboard:
//
//   p          verdict category "pred." (model was wrong)
//   a          verdict category "ann."  (annotation was wrong)
//   x          verdict category "prep." (preprocessing artifact)
//   j / k      next / previous queue item
//   Enter      submit the verdict form (Ctrl+Enter from inside a field)
//   n          advance to the next round once the queue is closed
//
// Plain keys are ignored while focus is in a form field so typing a
// note never fires verdicts.

import type { Category } from "./types.js";

export type Intent =
  | { kind: "category"; category: Category }
  | { kind: "move"; delta: 1 | -1 }
  | { kind: "submit" }
  | { kind: "advance" };

const CATEGORY_KEYS: Record<string, Category> = {
  p: "prediction_error",
  a: "annotation_error",
  x: "prep_error",
};

interface KeyLike {
  key: string;
  ctrlKey?: boolean;
  metaKey?: boolean;
  altKey?: boolean;
  target?: unknown;
}

function isFormField(target: unknown): boolean {
  const tag = (target as { tagName?: string } | null)?.tagName;
  return tag === "INPUT" || tag === "TEXTAREA" || tag === "SELECT";
}

export function intentFor(event: KeyLike): Intent | null {
  if (event.altKey || event.metaKey) return null;
  const inField = isFormField(event.target);
  if (event.key === "Enter") {
    if (inField && !event.ctrlKey) return null;
    return { kind: "submit" };
  }
  if (inField || event.ctrlKey) return null;
  const category = CATEGORY_KEYS[event.key.toLowerCase()];
  if (category) return { kind: "category", category };
  if (event.key === "j") return { kind: "move", delta: 1 };
  if (event.key === "k") return { kind: "move", delta: -1 };
  if (event.key === "n") return { kind: "advance" };
  return null;
}

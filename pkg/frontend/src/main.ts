// Controller: owns the state, talks to the API, renders on change.

import { ApiClient } from "./api.js";
import { intentFor, type Intent } from "./keyboard.js";
import {
  buildSubmission,
  canAdvance,
  initialState,
  itemById,
  patchForm,
  rejected,
  select,
  setCategory,
  verdictAccepted,
  withMetrics,
  withQueue,
  type ReviewState,
} from "./state.js";
import {
  buildSkeleton,
  renderBanner,
  renderDetail,
  renderHeader,
  renderQueue,
  syncForm,
  type Refs,
} from "./ui.js";
import type { Category, PairDetail } from "./types.js";

export interface AppOptions {
  actor?: string;
}

function freshKey(): string {
  const generator = globalThis.crypto;
  if (generator && typeof generator.randomUUID === "function") {
    return generator.randomUUID();
  }
  return `key-${Date.now()}-${Math.random().toString(16).slice(2)}`;
}

export class App {
  state: ReviewState;
  private readonly refs: Refs;
  private readonly client: ApiClient;
  private readonly actor: string;
  private readonly details = new Map<string, PairDetail>();
  private tail: Promise<void> = Promise.resolve();

  constructor(root: HTMLElement, client: ApiClient, options: AppOptions = {}) {
    this.state = initialState();
    this.refs = buildSkeleton(root);
    this.client = client;
    this.actor = options.actor ?? "reviewer-ui";
    this.wire();
  }

  /** Resolves once every operation started so far has settled. */
  async idle(): Promise<void> {
    let seen: Promise<void>;
    do {
      seen = this.tail;
      await seen.catch(() => undefined);
    } while (seen !== this.tail);
  }

  private track(work: () => Promise<void>): Promise<void> {
    const next = this.tail.catch(() => undefined).then(work);
    this.tail = next.catch(() => undefined);
    return next;
  }

  refresh(): Promise<void> {
    return this.track(async () => {
      const health = await this.client.health();
      const queue = await this.client.disagreements(health.round);
      const report = await this.client.round(health.round);
      this.state = withMetrics(withQueue(this.state, queue), report.metrics_rendered);
      this.render();
      this.syncSelection();
    });
  }

  selectPair(pairId: string): void {
    if (!itemById(this.state, pairId)) return;
    this.state = select(this.state, pairId);
    this.render();
    this.syncSelection();
  }

  applyIntent(intent: Intent): void {
    switch (intent.kind) {
      case "category":
        this.chooseCategory(intent.category);
        break;
      case "move":
        this.moveSelection(intent.delta);
        break;
      case "submit":
        void this.submit();
        break;
      case "advance":
        void this.advance();
        break;
    }
  }

  chooseCategory(category: Category): void {
    this.state = setCategory(this.state, category);
    syncForm(this.refs, this.state.form);
    this.render();
  }

  moveSelection(delta: number): void {
    const ids = this.state.queue.map((row) => row.pair_id);
    if (ids.length === 0) return;
    const at = this.state.selected === null ? -1 : ids.indexOf(this.state.selected);
    const next = ids[(at + delta + ids.length) % ids.length];
    if (next !== undefined) this.selectPair(next);
  }

  submit(): Promise<void> {
    return this.track(async () => {
      const built = buildSubmission(this.state, this.actor);
      if (typeof built === "string") {
        this.state = rejected(this.state, built);
        this.render();
        return;
      }
      try {
        const accepted = await this.client.submitVerdict(built, freshKey());
        this.state = verdictAccepted(this.state, accepted.pair_id, accepted.open, accepted.closed);
      } catch (error) {
        this.state = rejected(this.state, error instanceof Error ? error.message : String(error));
        this.render();
        return;
      }
      // re-fetch so row verdicts and counts come from the ledger, not our math
      const queue = await this.client.disagreements(this.state.round);
      this.state = withQueue(this.state, queue);
      this.render();
      this.syncSelection();
    });
  }

  advance(): Promise<void> {
    return this.track(async () => {
      if (!canAdvance(this.state)) return;
      this.state = { ...this.state, advancing: true };
      this.render();
      try {
        await this.client.nextRound(this.actor, freshKey());
      } catch (error) {
        this.state = rejected(
          { ...this.state, advancing: false },
          error instanceof Error ? error.message : String(error),
        );
        this.render();
        return;
      }
      this.state = { ...this.state, advancing: false };
    }).then(() => this.refresh());
  }

  private render(): void {
    renderQueue(this.refs, this.state);
    renderHeader(this.refs, this.state, canAdvance(this.state));
    renderBanner(this.refs, this.state);
  }

  /** Re-sync the form and load the detail pane for the selected pair. */
  private syncSelection(): void {
    syncForm(this.refs, this.state.form);
    const pairId = this.state.selected;
    if (pairId === null) {
      renderDetail(this.refs, null);
      return;
    }
    const cached = this.details.get(pairId);
    if (cached) {
      renderDetail(this.refs, cached);
      return;
    }
    void this.track(async () => {
      const detail = await this.client.pair(pairId);
      this.details.set(pairId, detail);
      if (this.state.selected === pairId) renderDetail(this.refs, detail);
    });
  }

  private wire(): void {
    this.refs.queueEl.addEventListener("click", (event) => {
      const target = event.target as HTMLElement | null;
      const item = target?.closest<HTMLElement>("[data-pair-id]");
      if (item?.dataset.pairId) this.selectPair(item.dataset.pairId);
    });
    this.refs.formEl.addEventListener("change", (event) => {
      const target = event.target as HTMLInputElement;
      if (target.name === "category") this.chooseCategory(target.value as Category);
    });
    const bind = (input: HTMLInputElement, field: keyof typeof this.state.form) => {
      input.addEventListener("input", () => {
        this.state = patchForm(this.state, { [field]: input.value });
      });
    };
    bind(this.refs.noteInput, "note");
    bind(this.refs.turnIdInput, "turnId");
    bind(this.refs.editTurnIdInput, "turnId");
    bind(this.refs.newLabelInput, "newLabel");
    bind(this.refs.sourceLabelInput, "sourceLabel");
    bind(this.refs.targetLabelInput, "targetLabel");
    bind(this.refs.newTextInput, "newText");
    this.refs.kindSelect.addEventListener("change", () => {
      this.state = patchForm(this.state, {
        kind: this.refs.kindSelect.value as ReviewState["form"]["kind"],
      });
      syncForm(this.refs, this.state.form);
    });
    this.refs.formEl.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submit();
    });
    this.refs.advanceBtn.addEventListener("click", () => void this.advance());
    this.refs.root.ownerDocument.addEventListener("keydown", (event) => {
      const intent = intentFor(event);
      if (!intent) return;
      event.preventDefault();
      this.applyIntent(intent);
    });
  }
}

export function createApp(root: HTMLElement, client: ApiClient, options?: AppOptions): App {
  return new App(root, client, options);
}

function bootstrap(): void {
  const rootEl = document.getElementById("app");
  if (!rootEl) return;
  const params = new URLSearchParams(window.location.search);
  const client = new ApiClient({ token: params.get("token") ?? undefined });
  const app = createApp(rootEl, client);
  void app.refresh();
}

if (typeof document !== "undefined" && typeof window !== "undefined") {
  if (document.readyState === "loading") {
    document.addEventListener("DOMContentLoaded", bootstrap);
  } else if (document.getElementById("app")) {
    bootstrap();
  }
}

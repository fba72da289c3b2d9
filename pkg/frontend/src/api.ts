// Thin fetch wrapper over the review service. Every error response has
// the shape {"error": {"code", "message"}}; we surface it as ApiError so
// callers can show the message inline without parsing anything.

import type {
  AdvanceResponse,
  CorpusInfo,
  HealthResponse,
  PairDetail,
  QueueResponse,
  RoundReport,
  RoundsResponse,
  VerdictResponse,
  VerdictSubmission,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export interface ApiClientOptions {
  baseUrl?: string;
  token?: string | null;
  fetchFn?: typeof fetch;
}

export class ApiClient {
  private readonly baseUrl: string;
  private readonly token: string | null;
  private readonly fetchFn: typeof fetch;

  constructor(options: ApiClientOptions = {}) {
    this.baseUrl = (options.baseUrl ?? "").replace(/\/$/, "");
    this.token = options.token ?? null;
    this.fetchFn = options.fetchFn ?? fetch;
  }

  private async request<T>(
    method: "GET" | "POST",
    path: string,
    body?: unknown,
    idempotencyKey?: string,
  ): Promise<T> {
    const headers: Record<string, string> = {};
    if (body !== undefined) {
      headers["Content-Type"] = "application/json";
    }
    if (this.token) {
      headers["Authorization"] = `Bearer ${this.token}`;
    }
    if (idempotencyKey) {
      headers["Idempotency-Key"] = idempotencyKey;
    }
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let code = "error";
      let message = `${response.status} ${response.statusText}`;
      try {
        const payload = (await response.json()) as { error?: { code?: string; message?: string } };
        if (payload.error) {
          code = payload.error.code ?? code;
          message = payload.error.message ?? message;
        }
      } catch {
        // non-JSON error body; keep the status line
      }
      throw new ApiError(code, message, response.status);
    }
    return (await response.json()) as T;
  }

  health(): Promise<HealthResponse> {
    return this.request("GET", "/api/health");
  }

  rounds(): Promise<RoundsResponse> {
    return this.request("GET", "/api/rounds");
  }

  round(roundNo: number): Promise<RoundReport> {
    return this.request("GET", `/api/rounds/${roundNo}`);
  }

  disagreements(roundNo: number, status: "all" | "open" | "closed" = "all"): Promise<QueueResponse> {
    return this.request("GET", `/api/rounds/${roundNo}/disagreements?status=${status}`);
  }

  pair(pairId: string): Promise<PairDetail> {
    return this.request("GET", `/api/pairs/${encodeURIComponent(pairId)}`);
  }

  corpusVersion(): Promise<CorpusInfo> {
    return this.request("GET", "/api/corpus/version");
  }

  submitVerdict(verdict: VerdictSubmission, idempotencyKey?: string): Promise<VerdictResponse> {
    return this.request("POST", "/api/verdicts", verdict, idempotencyKey);
  }

  nextRound(actor?: string, idempotencyKey?: string): Promise<AdvanceResponse> {
    return this.request("POST", "/api/rounds/next", actor ? { actor } : {}, idempotencyKey);
  }
}

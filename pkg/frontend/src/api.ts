/**
 * Thin fetch client for the review service. Every number the UI shows comes
 * out of these calls; nothing is computed client-side beyond presentation.
 */
import type {
  ConceptEntry,
  DetectionReport,
  LexiconEntry,
  ReviewDecision,
  ServiceConfig,
  SuspiciousRecord,
} from "./types.js";

export type FetchFn = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchFn = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      let detail = response.statusText || `HTTP ${response.status}`;
      try {
        const body = await response.json();
        if (body && typeof body.detail === "string") detail = body.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return response.json() as Promise<T>;
  }

  getSuspicious(): Promise<SuspiciousRecord[]> {
    return this.request("/api/suspicious");
  }

  getSlang(): Promise<LexiconEntry[]> {
    return this.request("/api/lexicon/slang");
  }

  getConcepts(): Promise<ConceptEntry[]> {
    return this.request("/api/concepts");
  }

  getConfig(): Promise<ServiceConfig> {
    return this.request("/api/config");
  }

  getAudit(): Promise<ReviewDecision[]> {
    return this.request("/api/audit");
  }

  filterText(text: string): Promise<DetectionReport> {
    return this.request("/api/filter", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text }),
    });
  }

  decide(word: string, action: "confirm" | "dismiss"): Promise<ReviewDecision> {
    return this.request(`/api/suspicious/${encodeURIComponent(word)}/decision`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ action }),
    });
  }
}

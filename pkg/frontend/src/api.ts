// Typed client for the /v1 JSON service. Every number the console shows
// comes out of these response payloads; nothing is recomputed client-side.

export interface ProblemDocument {
  error_code: string;
  message: string;
  field: string | null;
}

export class ApiError extends Error {
  constructor(readonly status: number, readonly problem: ProblemDocument) {
    super(problem.message);
    this.name = "ApiError";
  }
}

export interface EvaluateResponse {
  schema_version: number;
  swp_raw: number;
  swp_percent: number;
  bwp_raw: number;
  bwp_percent: number;
  zone: string;
}

export interface InverseResponse {
  schema_version: number;
  price: number;
}

export interface CurveResponse {
  schema_version: number;
  points: [number, number, number][]; // [value, swp_raw, bwp_raw]
}

export interface RuleInput {
  constant_cost?: number | null;
  constant_upper?: number | null;
  settled_offset?: number | null;
  increasing_party?: string;
  decreasing_party?: string;
  axis_label?: string;
}

export interface DealRecordInput {
  label: string;
  cost_price?: number;
  reference_price?: number;
  settled_price?: number;
}

export interface AttributedRow {
  label: string;
  cost_price: number;
  reference_price: number;
  settled_price: number;
  swp_raw: number;
  swp_percent: number;
  bwp_raw: number;
  bwp_percent: number;
  zone: string;
  attribution: "increasing_wins" | "decreasing_wins" | "tie";
}

export interface LedgerSummary {
  record_count: number;
  increasing_win_count: number;
  decreasing_win_count: number;
  tie_count: number;
  avg_increasing_percent: number;
  avg_decreasing_percent: number;
  full_win_count_increasing: number;
  full_win_count_decreasing: number;
}

export interface RecordIssue {
  label: string;
  error_code: string;
  message: string;
}

export interface LedgerResponse {
  schema_version: number;
  attributed: AttributedRow[];
  summary: LedgerSummary;
  errors: RecordIssue[];
}

async function problemOf(response: Response): Promise<ProblemDocument> {
  try {
    const body = (await response.json()) as Partial<ProblemDocument>;
    if (typeof body.error_code === "string" && typeof body.message === "string") {
      return { error_code: body.error_code, message: body.message, field: body.field ?? null };
    }
  } catch {
    // fall through to the generic document
  }
  return {
    error_code: "http_error",
    message: `service returned status ${response.status}`,
    field: null,
  };
}

export class WinWinApi {
  constructor(readonly baseUrl: string = "") {}

  private async request<T>(path: string, init: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, init);
    if (!response.ok) {
      throw new ApiError(response.status, await problemOf(response));
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown, signal?: AbortSignal): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
  }

  evaluate(
    lower: number,
    upper: number,
    value: number,
    signal?: AbortSignal,
  ): Promise<EvaluateResponse> {
    return this.post("/v1/evaluate", { lower, upper, value }, signal);
  }

  inverse(
    lower: number,
    upper: number,
    party: "increasing" | "decreasing",
    target: number,
    signal?: AbortSignal,
  ): Promise<InverseResponse> {
    return this.post("/v1/inverse", { lower, upper, party, target }, signal);
  }

  curve(
    lower: number,
    upper: number,
    start: number,
    end: number,
    samples: number,
    signal?: AbortSignal,
  ): Promise<CurveResponse> {
    const query = new URLSearchParams({
      lower: String(lower),
      upper: String(upper),
      start: String(start),
      end: String(end),
      samples: String(samples),
    });
    return this.request(`/v1/curve?${query}`, { method: "GET", signal });
  }

  ledger(
    rule: RuleInput,
    records: DealRecordInput[],
    signal?: AbortSignal,
  ): Promise<LedgerResponse> {
    return this.post("/v1/ledger", { rule, records }, signal);
  }

  async health(): Promise<boolean> {
    try {
      const response = await fetch(this.baseUrl + "/v1/health");
      return response.ok;
    } catch {
      return false;
    }
  }
}

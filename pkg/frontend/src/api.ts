import type {
  AlgebraFile,
  GraphDoc,
  MutateResponse,
  OrderResponse,
  PairSummary,
  SessionResponse,
} from "./types.js";

export type FetchLike = (
  url: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string }
) => Promise<{ ok: boolean; status: number; json(): Promise<any> }>;

/** Error carrying the server's own message, shown verbatim in the banner. */
export class ServerError extends Error {
  status: number;

  constructor(status: number, detail: string) {
    super(detail);
    this.status = status;
  }
}

async function unwrap<T>(resPromise: ReturnType<FetchLike>): Promise<T> {
  const res = await resPromise;
  const body = await res.json();
  if (!res.ok) {
    const detail =
      body && typeof body.detail === "string"
        ? body.detail
        : `server error (${res.status})`;
    throw new ServerError(res.status, detail);
  }
  return body as T;
}

export class ApiClient {
  private baseUrl: string;
  private fetchFn: FetchLike;

  constructor(baseUrl = "", fetchFn?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchFn = fetchFn ?? (globalThis.fetch as unknown as FetchLike);
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return unwrap<T>(
      this.fetchFn(this.baseUrl + path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      })
    );
  }

  private get<T>(path: string): Promise<T> {
    return unwrap<T>(this.fetchFn(this.baseUrl + path));
  }

  newSession(algebra: AlgebraFile): Promise<SessionResponse> {
    return this.post("/session", algebra);
  }

  getPair(sessionId: string, key: string): Promise<PairSummary> {
    return this.get(`/session/${sessionId}/pair/${encodeURIComponent(key)}`);
  }

  mutate(
    sessionId: string,
    key: string,
    position: number
  ): Promise<MutateResponse> {
    return this.post(
      `/session/${sessionId}/pair/${encodeURIComponent(key)}/mutate`,
      { position }
    );
  }

  getGraph(sessionId: string): Promise<GraphDoc> {
    return this.get(`/session/${sessionId}/graph`);
  }

  getOrder(sessionId: string, a: string, b: string): Promise<OrderResponse> {
    return this.get(
      `/session/${sessionId}/order?a=${encodeURIComponent(a)}&b=${encodeURIComponent(b)}`
    );
  }
}

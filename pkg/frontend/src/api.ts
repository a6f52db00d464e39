import type { Report, SeedDocument, SeedState, SessionState } from "./model.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: Record<string, unknown>,
  ) {
    super(
      typeof detail?.reason === "string" ? (detail.reason as string) : `request failed (${status})`,
    );
  }
}

export interface GlueChoice {
  left: string;
  right: string;
}

export interface VerifyBounds {
  depth?: number;
  max_nodes?: number;
  max_depth?: number;
}

export interface ServiceClient {
  createSession(seeds: SeedDocument[], glue?: GlueChoice): Promise<SessionState>;
  getState(session: string): Promise<SessionState>;
  mutate(session: string, vertex: string): Promise<SessionState>;
  undo(session: string): Promise<SessionState>;
  gluePreview(
    leftSession: string,
    rightSession: string,
    leftVertex: string,
    rightVertex: string,
  ): Promise<{ state: SeedState }>;
  verify(session: string, kind: string, bounds?: VerifyBounds): Promise<Report>;
}

export class HttpServiceClient implements ServiceClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: typeof fetch = fetch.bind(globalThis),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const resp = await this.fetchFn(this.base + path, {
      method,
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const data = (await resp.json().catch(() => ({}))) as Record<string, unknown>;
    if (!resp.ok) {
      const detail =
        data && typeof data === "object" && "detail" in data ? data.detail : data;
      throw new ApiError(resp.status, (detail ?? {}) as Record<string, unknown>);
    }
    return data as T;
  }

  createSession(seeds: SeedDocument[], glue?: GlueChoice): Promise<SessionState> {
    return this.request("POST", "/sessions", glue ? { seeds, glue } : { seeds });
  }

  getState(session: string): Promise<SessionState> {
    return this.request("GET", `/sessions/${session}`);
  }

  mutate(session: string, vertex: string): Promise<SessionState> {
    return this.request("POST", `/sessions/${session}/mutate`, { vertex });
  }

  undo(session: string): Promise<SessionState> {
    return this.request("POST", `/sessions/${session}/undo`);
  }

  gluePreview(
    leftSession: string,
    rightSession: string,
    leftVertex: string,
    rightVertex: string,
  ): Promise<{ state: SeedState }> {
    return this.request("POST", "/glue-preview", {
      left_session: leftSession,
      right_session: rightSession,
      left_vertex: leftVertex,
      right_vertex: rightVertex,
    });
  }

  verify(session: string, kind: string, bounds: VerifyBounds = {}): Promise<Report> {
    return this.request("POST", `/sessions/${session}/verify`, { kind, ...bounds });
  }
}

// One text line per failure, shown inline next to the control that caused it.
export function describeError(err: unknown): string {
  if (err instanceof ApiError) {
    const d = err.detail as { reason?: unknown; left?: unknown; right?: unknown };
    if (d?.reason === "degree mismatch") {
      return `degree mismatch: ${d.left} != ${d.right}`;
    }
    if (typeof d?.reason === "string") {
      return d.reason;
    }
    return `request failed (${err.status})`;
  }
  return err instanceof Error ? err.message : String(err);
}

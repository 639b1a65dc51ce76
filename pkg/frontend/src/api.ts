/** Service client: thin fetch wrapper with per-endpoint in-flight
 * deduplication.  Stale-response discarding for superseded selections is the
 * caller's job via `SelectionGuard`. */

import type {
  ClustersResponse,
  CompareResponse,
  DistancesResponse,
  RegionProfile,
  RegionSummary,
} from "./types.js";

export interface FetchResponse {
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<FetchResponse>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

async function errorOf(resp: FetchResponse): Promise<ApiError> {
  let message = `service error ${resp.status}`;
  try {
    const body = (await resp.json()) as { error?: string };
    if (body && typeof body.error === "string") message = body.error;
  } catch {
    /* non-JSON error body */
  }
  return new ApiError(resp.status, message);
}

export class ApiClient {
  private inflight = new Map<string, Promise<unknown>>();

  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike,
  ) {}

  /** Identical concurrent requests share one round trip. */
  private request<T>(key: string, run: () => Promise<T>): Promise<T> {
    const pending = this.inflight.get(key);
    if (pending) return pending as Promise<T>;
    const p = run().finally(() => this.inflight.delete(key));
    this.inflight.set(key, p);
    return p;
  }

  private async getJson<T>(path: string): Promise<T> {
    return this.request(`GET ${path}`, async () => {
      const resp = await this.fetchFn(`${this.baseUrl}${path}`);
      if (!resp.ok) throw await errorOf(resp);
      return (await resp.json()) as T;
    });
  }

  regions(): Promise<RegionSummary[]> {
    return this.getJson("/regions");
  }

  region(id: string): Promise<RegionProfile> {
    return this.getJson(`/regions/${encodeURIComponent(id)}`);
  }

  compare(a: string, b: string): Promise<CompareResponse> {
    return this.getJson(
      `/compare?a=${encodeURIComponent(a)}&b=${encodeURIComponent(b)}`,
    );
  }

  distances(region: string, sort: "asc" | "desc", limit?: number): Promise<DistancesResponse> {
    const tail = limit === undefined ? "" : `&limit=${limit}`;
    return this.getJson(
      `/distances?region=${encodeURIComponent(region)}&sort=${sort}${tail}`,
    );
  }

  clusters(k: number, seed = 0): Promise<ClustersResponse> {
    const body = JSON.stringify({ k, seed });
    return this.request(`POST /clusters ${body}`, async () => {
      const resp = await this.fetchFn(`${this.baseUrl}/clusters`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body,
      });
      if (!resp.ok) throw await errorOf(resp);
      return (await resp.json()) as ClustersResponse;
    });
  }

  loadDataset(csv: string): Promise<{ fingerprint: string; regions: number; issues: string[] }> {
    return this.request("POST /dataset", async () => {
      const resp = await this.fetchFn(`${this.baseUrl}/dataset`, {
        method: "POST",
        headers: { "content-type": "text/csv" },
        body: csv,
      });
      if (!resp.ok) throw await errorOf(resp);
      return (await resp.json()) as { fingerprint: string; regions: number; issues: string[] };
    });
  }
}

/** Discards responses that arrive after the selection moved on. */
export class SelectionGuard {
  private token = 0;

  next(): number {
    return ++this.token;
  }

  isCurrent(token: number): boolean {
    return token === this.token;
  }
}

/** In-memory stand-in for the JSON service, backed by the frozen fixture
 * payloads.  Used for demo mode and by the test suite; it also counts
 * requests per endpoint so tests can assert exactly-once semantics. */

import type { FetchLike, FetchResponse } from "./api.js";
import { DEMO_DATA, DemoData } from "./demoData.js";
import type { ClustersResponse } from "./types.js";

function jsonResponse(status: number, payload: unknown): FetchResponse {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: () => Promise.resolve(payload),
  };
}

export interface MockService {
  fetchFn: FetchLike;
  calls: string[];
  countCalls(prefix: string): number;
}

export function createMockService(data: DemoData = DEMO_DATA): MockService {
  const calls: string[] = [];

  const fetchFn: FetchLike = (url, init) => {
    const method = init?.method ?? "GET";
    const parsed = new URL(url, "http://mock.local");
    const key = `${method} ${parsed.pathname}${parsed.search}`;
    calls.push(key);

    const respond = (): FetchResponse => {
      if (parsed.pathname === "/regions") {
        return jsonResponse(200, data.regions);
      }
      if (parsed.pathname.startsWith("/regions/")) {
        const id = decodeURIComponent(parsed.pathname.slice("/regions/".length));
        const profile = data.profiles[id];
        return profile
          ? jsonResponse(200, profile)
          : jsonResponse(404, { error: `unknown region '${id}'` });
      }
      if (parsed.pathname === "/compare") {
        const a = parsed.searchParams.get("a") ?? "";
        const b = parsed.searchParams.get("b") ?? "";
        const pa = data.profiles[a];
        const pb = data.profiles[b];
        if (!pa || !pb) {
          return jsonResponse(404, { error: `unknown region '${pa ? b : a}'` });
        }
        if (a === data.compareSample.profiles.a.region_id && b === data.compareSample.profiles.b.region_id) {
          return jsonResponse(200, data.compareSample);
        }
        const row = data.distances[a]?.distances.find((d) => d.region === b);
        return jsonResponse(200, {
          profiles: { a: pa, b: pb },
          distance_terms: { size: 0, shape: 0, location: 0 },
          total_distance: a === b ? 0 : (row?.distance ?? 0),
        });
      }
      if (parsed.pathname === "/distances") {
        const region = parsed.searchParams.get("region") ?? "";
        const payload = data.distances[region];
        if (!payload) return jsonResponse(404, { error: `unknown region '${region}'` });
        const sort = parsed.searchParams.get("sort") ?? "asc";
        const rows = [...payload.distances];
        if (sort === "desc") rows.reverse();
        const limit = parsed.searchParams.get("limit");
        return jsonResponse(200, {
          ...payload,
          sort,
          distances: limit === null ? rows : rows.slice(0, Number(limit)),
        });
      }
      if (parsed.pathname === "/clusters" && method === "POST") {
        const body = JSON.parse(String(init?.body ?? "{}")) as { k?: number };
        const payload: ClustersResponse | undefined = data.clusters[String(body.k)];
        return payload
          ? jsonResponse(200, payload)
          : jsonResponse(400, { error: `k=${body.k} outside 1..${data.regions.length}` });
      }
      return jsonResponse(404, { error: `no such endpoint ${parsed.pathname}` });
    };

    return Promise.resolve(respond());
  };

  return {
    fetchFn,
    calls,
    countCalls: (prefix) => calls.filter((c) => c.startsWith(prefix)).length,
  };
}

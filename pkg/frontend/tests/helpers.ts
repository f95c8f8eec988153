// Test helpers: canned API responses served through a fake fetch.

import { ApiClient, type Summary, type MemberPayload } from "../src/api.js";

export function makeSummary(partial: Partial<Summary> = {}): Summary {
  return {
    query: { from: "2016-05-01", to: "2016-05-31", hide_stale: true, as_of: "2016-05-31" },
    days: [],
    total_count: 0,
    ...partial,
  };
}

export interface MockRoutes {
  members?: MemberPayload[];
  summary?: Summary;
  catchupHidden?: Summary;
  catchupAll?: Summary;
  createEvent?: (body: Record<string, unknown>) => { status: number; body: unknown };
}

export function mockApi(routes: MockRoutes): { api: ApiClient; calls: string[] } {
  const calls: string[] = [];
  const fakeFetch = async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    calls.push(url);
    const json = (body: unknown, status = 200) =>
      new Response(JSON.stringify(body), {
        status,
        headers: { "content-type": "application/json" },
      });

    if (url.startsWith("/api/members")) return json(routes.members ?? []);
    if (url.startsWith("/api/summary")) return json(routes.summary ?? makeSummary());
    if (url.startsWith("/api/catchup")) {
      const hideStale = new URLSearchParams(url.split("?")[1]).get("hide_stale") !== "false";
      if (hideStale) return json(routes.catchupHidden ?? makeSummary());
      return json(routes.catchupAll ?? routes.catchupHidden ?? makeSummary());
    }
    if (url.startsWith("/api/events") && init?.method === "POST") {
      const body = JSON.parse(String(init.body));
      const result = routes.createEvent
        ? routes.createEvent(body)
        : {
            status: 201,
            body: { id: 1, created_at: "2016-05-31T09:00:00Z", ...body },
          };
      return json(result.body, result.status);
    }
    throw new Error(`unmocked route: ${url}`);
  };
  return { api: new ApiClient("", fakeFetch as typeof fetch), calls };
}

export function memoryStorage(): Pick<Storage, "getItem" | "setItem"> {
  const data = new Map<string, string>();
  return {
    getItem: (k) => data.get(k) ?? null,
    setItem: (k, v) => void data.set(k, v),
  };
}

// Thin client for the happening HTTP API. All shapes mirror the wire
// protocol exactly; the UI never re-derives relevance or ordering.

export interface EventPayload {
  id: number;
  author: string;
  description: string;
  priority: number;
  event_date: string;
  created_at: string;
}

export interface MemberPayload {
  id: string;
  display_name: string;
}

export type Weight = "small" | "medium" | "large";

export interface SummaryEntry {
  event: EventPayload;
  author_name: string;
  weight: Weight;
}

export interface DayGroup {
  date: string;
  entries: SummaryEntry[];
}

export interface Summary {
  query: { from: string; to: string; hide_stale: boolean; as_of: string };
  days: DayGroup[];
  total_count: number;
}

export interface ApiErrorBody {
  status: number;
  code: string;
  message: string;
  details?: string[];
}

export class ApiRequestError extends Error {
  constructor(public body: ApiErrorBody) {
    super(body.message);
  }
}

type FetchLike = typeof fetch;

export class ApiClient {
  constructor(
    private base = "",
    private fetchImpl: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.base + path, init);
    if (response.status === 204) return undefined as T;
    const body = await response.json();
    if (!response.ok) throw new ApiRequestError(body as ApiErrorBody);
    return body as T;
  }

  listMembers(): Promise<MemberPayload[]> {
    return this.request("/api/members");
  }

  createEvent(input: {
    author: string;
    description: string;
    priority: number;
    event_date: string;
  }): Promise<EventPayload> {
    return this.request("/api/events", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(input),
    });
  }

  getSummary(from: string, to: string, hideStale: boolean): Promise<Summary> {
    const params = new URLSearchParams({ from, to, hide_stale: String(hideStale) });
    return this.request(`/api/summary?${params}`);
  }

  getCatchup(member: string, since: string, hideStale: boolean): Promise<Summary> {
    const params = new URLSearchParams({
      member,
      since,
      hide_stale: String(hideStale),
    });
    return this.request(`/api/catchup?${params}`);
  }
}

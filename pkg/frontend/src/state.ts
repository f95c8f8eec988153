// All view state round-trips through the URL query string so deep links
// re-render identically.

export type ViewName = "track" | "summary" | "catchup";

export interface ViewState {
  member: string;
  view: ViewName;
  from: string;
  to: string;
  hideStale: boolean;
  since: string;
}

export function isoDate(d: Date): string {
  const pad = (n: number) => String(n).padStart(2, "0");
  return `${d.getFullYear()}-${pad(d.getMonth() + 1)}-${pad(d.getDate())}`;
}

export function daysAgo(today: Date, days: number): string {
  const d = new Date(today);
  d.setDate(d.getDate() - days);
  return isoDate(d);
}

export function stateFromUrl(search: string, today: Date): ViewState {
  const params = new URLSearchParams(search);
  const view = params.get("view");
  return {
    member: params.get("member") ?? "",
    view: view === "track" || view === "catchup" ? view : "summary",
    from: params.get("from") ?? daysAgo(today, 7),
    to: params.get("to") ?? isoDate(today),
    hideStale: params.get("hide_stale") !== "false",
    since: params.get("since") ?? daysAgo(today, 7),
  };
}

export function stateToQuery(state: ViewState): string {
  const params = new URLSearchParams({
    view: state.view,
    member: state.member,
    from: state.from,
    to: state.to,
    hide_stale: String(state.hideStale),
    since: state.since,
  });
  return `?${params}`;
}

// App shell: member picker, view tabs, URL-driven state, request sequencing.

import { ApiClient, type Summary } from "./api.js";
import { isoDate, stateFromUrl, stateToQuery, type ViewState, type ViewName } from "./state.js";
import { renderCatchup, renderEntryForm, renderTimeline } from "./views.js";

const MEMBER_STORAGE_KEY = "happening.member";

export interface AppContext {
  api: ApiClient;
  today: Date;
  storage: Pick<Storage, "getItem" | "setItem">;
  onNavigate?: (query: string) => void;
}

export async function renderApp(
  root: HTMLElement,
  search: string,
  ctx: AppContext,
): Promise<void> {
  const state = stateFromUrl(search, ctx.today);
  if (!state.member) {
    state.member = ctx.storage.getItem(MEMBER_STORAGE_KEY) ?? "";
  }
  root.replaceChildren();

  // One in-flight request per view; stale responses are dropped by sequence.
  let requestSeq = 0;

  const header = document.createElement("header");
  const title = document.createElement("h1");
  title.textContent = "happening";
  header.appendChild(title);

  const memberSelect = document.createElement("select");
  memberSelect.className = "member-select";
  const placeholder = document.createElement("option");
  placeholder.value = "";
  placeholder.textContent = "Who are you?";
  memberSelect.appendChild(placeholder);
  header.appendChild(memberSelect);

  const nav = document.createElement("nav");
  for (const view of ["track", "summary", "catchup"] as ViewName[]) {
    const link = document.createElement("a");
    link.textContent = view === "catchup" ? "what did I miss?" : view;
    link.href = stateToQuery({ ...state, view });
    link.className = view === state.view ? "active" : "";
    link.addEventListener("click", (e) => {
      e.preventDefault();
      navigate({ ...state, view });
    });
    nav.appendChild(link);
  }
  header.appendChild(nav);

  const main = document.createElement("main");
  root.append(header, main);

  function navigate(next: ViewState) {
    const query = stateToQuery(next);
    ctx.onNavigate?.(query);
    void renderApp(root, query, ctx);
  }

  try {
    const members = await ctx.api.listMembers();
    for (const member of members) {
      const option = document.createElement("option");
      option.value = member.id;
      option.textContent = member.display_name;
      option.selected = member.id === state.member;
      memberSelect.appendChild(option);
    }
  } catch {
    main.appendChild(errorPanel("Could not load members.", () => navigate(state)));
    return;
  }
  memberSelect.addEventListener("change", () => {
    ctx.storage.setItem(MEMBER_STORAGE_KEY, memberSelect.value);
    navigate({ ...state, member: memberSelect.value });
  });

  const seq = ++requestSeq;
  try {
    const view = await renderView(state, ctx, navigate);
    if (seq === requestSeq) main.replaceChildren(view);
  } catch {
    main.replaceChildren(errorPanel("Request failed.", () => navigate(state)));
  }
}

async function renderView(
  state: ViewState,
  ctx: AppContext,
  navigate: (next: ViewState) => void,
): Promise<HTMLElement> {
  if (state.view === "track") {
    if (!state.member) return memberPrompt();
    return renderEntryForm({
      today: isoDate(ctx.today),
      submit: (input) => ctx.api.createEvent({ author: state.member, ...input }),
    });
  }

  if (state.view === "catchup") {
    if (!state.member) return memberPrompt();
    const shown: Summary = await ctx.api.getCatchup(state.member, state.since, state.hideStale);
    // Hidden count = total without the stale filter minus total with it.
    const unfiltered: Summary = state.hideStale
      ? await ctx.api.getCatchup(state.member, state.since, false)
      : shown;
    const hiddenCount = unfiltered.total_count - shown.total_count;
    const container = document.createElement("div");
    container.appendChild(sincePicker(state, navigate));
    container.appendChild(
      renderCatchup(shown, hiddenCount, !state.hideStale, () =>
        navigate({ ...state, hideStale: !state.hideStale }),
      ),
    );
    return container;
  }

  const summary = await ctx.api.getSummary(state.from, state.to, state.hideStale);
  const container = document.createElement("div");
  container.appendChild(periodPicker(state, navigate));
  container.appendChild(renderTimeline(summary));
  return container;
}

function memberPrompt(): HTMLElement {
  const p = document.createElement("p");
  p.className = "member-prompt";
  p.textContent = "Pick your name from the member list first.";
  return p;
}

function errorPanel(message: string, retry: () => void): HTMLElement {
  const panel = document.createElement("div");
  panel.className = "error-panel";
  const text = document.createElement("p");
  text.textContent = message;
  const button = document.createElement("button");
  button.type = "button";
  button.textContent = "Retry";
  button.addEventListener("click", retry);
  panel.append(text, button);
  return panel;
}

function periodPicker(state: ViewState, navigate: (next: ViewState) => void): HTMLElement {
  const picker = document.createElement("form");
  picker.className = "period-picker";
  const from = dateInput("from", state.from);
  const to = dateInput("to", state.to);
  const hideStale = staleToggle(state.hideStale);
  const apply = document.createElement("button");
  apply.type = "submit";
  apply.textContent = "Show";
  picker.append(from, to, hideStale.label, apply);
  picker.addEventListener("submit", (e) => {
    e.preventDefault();
    if (from.value > to.value) {
      from.setCustomValidity("start must not be after end");
      from.reportValidity();
      return; // invalid period never leaves the picker
    }
    navigate({ ...state, from: from.value, to: to.value, hideStale: hideStale.input.checked });
  });
  return picker;
}

function sincePicker(state: ViewState, navigate: (next: ViewState) => void): HTMLElement {
  const picker = document.createElement("form");
  picker.className = "since-picker";
  const since = dateInput("since", state.since);
  const apply = document.createElement("button");
  apply.type = "submit";
  apply.textContent = "What did I miss?";
  picker.append(since, apply);
  picker.addEventListener("submit", (e) => {
    e.preventDefault();
    navigate({ ...state, since: since.value });
  });
  return picker;
}

function dateInput(name: string, value: string): HTMLInputElement {
  const input = document.createElement("input");
  input.type = "date";
  input.name = name;
  input.value = value;
  return input;
}

function staleToggle(checked: boolean): { label: HTMLLabelElement; input: HTMLInputElement } {
  const label = document.createElement("label");
  const input = document.createElement("input");
  input.type = "checkbox";
  input.checked = checked;
  label.append(input, document.createTextNode(" hide stale"));
  return { label, input };
}

// Browser bootstrap; tests drive renderApp directly instead.
if (typeof document !== "undefined" && document.getElementById("app")) {
  const ctx: AppContext = {
    api: new ApiClient(),
    today: new Date(),
    storage: window.localStorage,
    onNavigate: (query) => window.history.pushState(null, "", query),
  };
  const root = document.getElementById("app")!;
  void renderApp(root, window.location.search, ctx);
  window.addEventListener("popstate", () => {
    void renderApp(root, window.location.search, ctx);
  });
}

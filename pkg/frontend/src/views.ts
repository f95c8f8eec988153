// DOM builders for the three views. These render API responses verbatim:
// day order, entry order and inclusion all come straight from the server.

import type { EventPayload, Summary } from "./api.js";
import { renderAvatar } from "./avatar.js";
import { validateEventInput, VIOLATION_MESSAGES, DESCRIPTION_MAX_LEN } from "./validate.js";

const PRIORITY_LABELS: Record<number, string> = { 1: "low", 2: "normal", 3: "high" };

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderTimeline(summary: Summary): HTMLElement {
  const container = el("div", "timeline");
  if (summary.days.length === 0) {
    container.appendChild(el("p", "empty-state", "No events in this period."));
    return container;
  }
  for (const day of summary.days) {
    const section = el("section", "day-group");
    section.dataset.date = day.date;
    section.appendChild(el("h3", "day-heading", day.date));
    const list = el("ul", "entries");
    for (const entry of day.entries) {
      const item = el("li", "entry");
      item.dataset.eventId = String(entry.event.id);
      item.appendChild(renderAvatar(entry.author_name, entry.weight));
      const body = el("div", "entry-body");
      body.appendChild(el("p", "entry-description", entry.event.description));
      const meta = el("p", "entry-meta");
      meta.textContent = `${entry.author_name} · ${entry.event.event_date}`;
      body.appendChild(meta);
      item.appendChild(body);
      list.appendChild(item);
    }
    section.appendChild(list);
    container.appendChild(section);
  }
  return container;
}

export interface EntryFormHandlers {
  today: string;
  submit: (input: {
    description: string;
    priority: number;
    event_date: string;
  }) => Promise<EventPayload>;
  onCreated?: (event: EventPayload) => void;
}

export function renderEntryForm(handlers: EntryFormHandlers): HTMLFormElement {
  const form = el("form", "entry-form");
  form.noValidate = true;

  const description = el("textarea") as HTMLTextAreaElement;
  description.name = "description";
  description.placeholder = "What happened?";
  description.maxLength = DESCRIPTION_MAX_LEN + 20; // let validation report overrun

  const priority = el("select") as HTMLSelectElement;
  priority.name = "priority";
  for (const level of [1, 2, 3]) {
    const option = el("option") as HTMLOptionElement;
    option.value = String(level);
    option.textContent = `${level} (${PRIORITY_LABELS[level]})`;
    if (level === 2) option.selected = true;
    priority.appendChild(option);
  }

  const eventDate = el("input") as HTMLInputElement;
  eventDate.type = "date";
  eventDate.name = "event_date";
  eventDate.value = handlers.today;
  eventDate.max = handlers.today;

  const errors = el("ul", "form-errors");
  const banner = el("p", "network-banner");
  banner.hidden = true;
  const confirmation = el("p", "created-confirmation");
  confirmation.hidden = true;
  const submit = el("button", undefined, "Share") as HTMLButtonElement;
  submit.type = "submit";

  form.append(description, priority, eventDate, errors, banner, confirmation, submit);

  form.addEventListener("submit", async (e) => {
    e.preventDefault();
    errors.replaceChildren();
    banner.hidden = true;
    confirmation.hidden = true;

    const input = {
      description: description.value,
      priority: Number(priority.value),
      event_date: eventDate.value,
    };
    const violations = validateEventInput(
      input.description, input.priority, input.event_date, handlers.today,
    );
    if (violations.length > 0) {
      showViolations(errors, violations);
      return; // blocked client-side, no request sent
    }
    try {
      const created = await handlers.submit(input);
      description.value = "";
      confirmation.textContent =
        `Shared: "${created.description}" (${created.event_date}, #${created.id})`;
      confirmation.hidden = false;
      handlers.onCreated?.(created);
    } catch (err: unknown) {
      const body = (err as { body?: { details?: string[] } }).body;
      if (body && Array.isArray(body.details)) {
        showViolations(errors, body.details);
      } else {
        // Network failure: retryable banner, form content preserved.
        banner.textContent = "Could not reach the server. Your entry is kept; try again.";
        banner.hidden = false;
      }
    }
  });

  return form;
}

function showViolations(list: HTMLElement, violations: string[]) {
  for (const code of violations) {
    list.appendChild(el("li", "form-error", VIOLATION_MESSAGES[code] ?? code));
  }
}

export function renderCatchup(
  shown: Summary,
  hiddenCount: number,
  showingHidden: boolean,
  onToggleHidden: () => void,
): HTMLElement {
  const container = el("div", "catchup");
  if (shown.total_count === 0) {
    container.appendChild(el("p", "empty-state", "Nothing happened since then."));
  } else {
    container.appendChild(renderTimeline(shown));
  }
  if (hiddenCount > 0 || showingHidden) {
    const toggle = el("button", "toggle-hidden") as HTMLButtonElement;
    toggle.type = "button";
    toggle.textContent = showingHidden
      ? "Hide older items"
      : `Show hidden (${hiddenCount} older item${hiddenCount === 1 ? "" : "s"} hidden)`;
    toggle.addEventListener("click", onToggleHidden);
    container.appendChild(toggle);
  }
  return container;
}

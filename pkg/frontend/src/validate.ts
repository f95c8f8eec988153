// Client-side mirror of the server's event-input rules. Must be a strict
// mirror: anything accepted here is accepted by the server.

export const DESCRIPTION_MAX_LEN = 280;

const DATE_RE = /^\d{4}-\d{2}-\d{2}$/;

export const VIOLATION_MESSAGES: Record<string, string> = {
  EmptyDescription: "Description must not be empty.",
  DescriptionTooLong: `Description must be at most ${DESCRIPTION_MAX_LEN} characters.`,
  InvalidDescription: "Description contains unsupported control characters.",
  InvalidPriority: "Priority must be 1, 2 or 3.",
  InvalidDate: "Date must be a valid YYYY-MM-DD date.",
  FutureEventDate: "The event date cannot be in the future.",
};

function hasForbiddenControlChars(text: string): boolean {
  for (const ch of text) {
    const code = ch.codePointAt(0)!;
    if ((code < 0x20 && ch !== "\n") || code === 0x7f) return true;
  }
  return false;
}

function isLeapYear(year: number): boolean {
  return (year % 4 === 0 && year % 100 !== 0) || year % 400 === 0;
}

const DAYS_IN_MONTH = [31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31];

// Returns the validated "YYYY-MM-DD" string, or null. Calendar arithmetic is
// done by hand: Date.UTC remaps years 0-99 and rolls over bad components.
export function parseIsoDate(text: string): string | null {
  if (!DATE_RE.test(text)) return null;
  const [year, month, day] = text.split("-").map(Number);
  if (year < 1 || month < 1 || month > 12) return null;
  const maxDay =
    month === 2 && isLeapYear(year) ? 29 : DAYS_IN_MONTH[month - 1];
  if (day < 1 || day > maxDay) return null;
  return text;
}

export function validateEventInput(
  description: unknown,
  priority: unknown,
  eventDate: unknown,
  today: string,
): string[] {
  const violations: string[] = [];

  const trimmed = typeof description === "string" ? description.trim() : "";
  if (typeof description !== "string" || trimmed === "") {
    violations.push("EmptyDescription");
  } else {
    if (trimmed.length > DESCRIPTION_MAX_LEN) violations.push("DescriptionTooLong");
    if (hasForbiddenControlChars(trimmed)) violations.push("InvalidDescription");
  }

  if (
    typeof priority !== "number" ||
    !Number.isInteger(priority) ||
    priority < 1 ||
    priority > 3
  ) {
    violations.push("InvalidPriority");
  }

  const parsed = typeof eventDate === "string" ? parseIsoDate(eventDate) : null;
  if (parsed === null) {
    violations.push("InvalidDate");
  } else if (eventDate !== undefined && (eventDate as string) > today) {
    // ISO dates compare correctly as strings
    violations.push("FutureEventDate");
  }

  return violations;
}

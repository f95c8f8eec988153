"""
Core domain types and rules.

Everything here is an immutable value or a pure function; no I/O,
no clocks. Relevance is measured from the event's own date: an event
stays visible for `window_days(priority)` days after it happened.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, datetime
from enum import Enum, IntEnum

DESCRIPTION_MAX_LEN = 280
MEMBER_ID_MAX_LEN = 64
DISPLAY_NAME_MAX_LEN = 80

# Characters allowed in member ids (must survive unescaped in URLs).
_ID_SAFE = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-._~")


class Priority(IntEnum):
    """Event priority on the 1..3 scale. Higher = more prominent, longer relevant."""

    LOW = 1
    NORMAL = 2
    HIGH = 3


class DisplayWeight(str, Enum):
    """Avatar size class; bijective with Priority."""

    SMALL = "small"
    MEDIUM = "medium"
    LARGE = "large"


def display_weight(priority: Priority) -> DisplayWeight:
    """Map a priority to its avatar size class (1→small, 2→medium, 3→large)."""
    return {
        Priority.LOW: DisplayWeight.SMALL,
        Priority.NORMAL: DisplayWeight.MEDIUM,
        Priority.HIGH: DisplayWeight.LARGE,
    }[priority]


@dataclass(frozen=True, slots=True)
class Member:
    """A team member identity. `id` is the stable token used everywhere."""

    id: str
    display_name: str

    def __post_init__(self):
        if not self.id or len(self.id) > MEMBER_ID_MAX_LEN:
            raise ValueError(f"member id must be 1..{MEMBER_ID_MAX_LEN} chars")
        if not set(self.id) <= _ID_SAFE:
            raise ValueError("member id must be URL-safe")
        if not self.display_name.strip() or len(self.display_name) > DISPLAY_NAME_MAX_LEN:
            raise ValueError(f"display_name must be 1..{DISPLAY_NAME_MAX_LEN} chars")


@dataclass(frozen=True, slots=True)
class Event:
    """One tracked activity entry. Ids are store-assigned, never reused."""

    id: int
    author: str
    description: str
    priority: Priority
    event_date: date
    created_at: datetime

    def to_payload(self) -> dict:
        """Serialize to the wire/log payload shape."""
        return {
            "id": self.id,
            "author": self.author,
            "description": self.description,
            "priority": int(self.priority),
            "event_date": self.event_date.isoformat(),
            "created_at": format_timestamp(self.created_at),
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "Event":
        return cls(
            id=payload["id"],
            author=payload["author"],
            description=payload["description"],
            priority=Priority(payload["priority"]),
            event_date=date.fromisoformat(payload["event_date"]),
            created_at=parse_timestamp(payload["created_at"]),
        )


@dataclass(frozen=True)
class RelevancePolicy:
    """Days each priority stays relevant. Windows must strictly increase with priority."""

    window_days: dict[Priority, int]

    def __post_init__(self):
        for p in Priority:
            if p not in self.window_days:
                raise ValueError(f"policy missing priority {int(p)}")
        w = self.window_days
        if not (0 <= w[Priority.LOW] < w[Priority.NORMAL] < w[Priority.HIGH]):
            raise ValueError("relevance windows must be non-negative and strictly increasing")


# Low-priority items vanish after the next standup or two; high survives a
# month's absence. Overridable via server config.
DEFAULT_POLICY = RelevancePolicy(
    {Priority.LOW: 2, Priority.NORMAL: 7, Priority.HIGH: 30}
)


def relevance_window(policy: RelevancePolicy, priority: Priority) -> int:
    """Number of days after its event date an event stays relevant."""
    return policy.window_days[priority]


def is_relevant_at(event: Event, as_of: date, policy: RelevancePolicy) -> bool:
    """True iff the event's relevance window has not elapsed at `as_of`.

    Always true on the event date itself and on any earlier viewing date.
    """
    return (as_of - event.event_date).days <= relevance_window(policy, event.priority)


class ValidationError(Exception):
    """Carries the complete list of violated rule codes, not just the first."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


def _has_forbidden_control_chars(text: str) -> bool:
    return any(ord(c) < 0x20 and c != "\n" for c in text) or "\x7f" in text


def validate_event_input(
    description: str,
    priority_level: int,
    event_date: date | str,
    today: date,
) -> tuple[str, Priority, date]:
    """Check a new-event submission against every rule at once.

    Returns the trimmed description, constructed Priority and parsed date.
    Raises ValidationError listing all violations:
    EmptyDescription, DescriptionTooLong, InvalidDescription (control
    characters other than newline), InvalidPriority, FutureEventDate,
    InvalidDate.
    """
    violations: list[str] = []

    trimmed = description.strip() if isinstance(description, str) else ""
    if not isinstance(description, str) or not trimmed:
        violations.append("EmptyDescription")
    else:
        if len(trimmed) > DESCRIPTION_MAX_LEN:
            violations.append("DescriptionTooLong")
        if _has_forbidden_control_chars(trimmed):
            violations.append("InvalidDescription")

    priority = None
    if isinstance(priority_level, bool) or not isinstance(priority_level, int) or priority_level not in (1, 2, 3):
        violations.append("InvalidPriority")
    else:
        priority = Priority(priority_level)

    parsed_date = None
    if isinstance(event_date, date):
        parsed_date = event_date
    else:
        try:
            parsed_date = date.fromisoformat(event_date)
        except (TypeError, ValueError):
            violations.append("InvalidDate")
    if parsed_date is not None and parsed_date > today:
        violations.append("FutureEventDate")

    if violations:
        raise ValidationError(violations)
    assert priority is not None and parsed_date is not None
    return trimmed, priority, parsed_date


def format_timestamp(ts: datetime) -> str:
    """UTC second-precision wire form, e.g. 2016-05-10T08:30:00Z."""
    return ts.strftime("%Y-%m-%dT%H:%M:%SZ")


def parse_timestamp(text: str) -> datetime:
    return datetime.strptime(text, "%Y-%m-%dT%H:%M:%SZ")

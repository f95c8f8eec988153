"""
Summary engine: day-grouped, deterministically ordered views of events.

Pure functions over immutable snapshots; safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date
from itertools import groupby

from .model import (
    DisplayWeight,
    Event,
    Member,
    RelevancePolicy,
    display_weight,
    is_relevant_at,
)


class InvalidRange(Exception):
    """Period start is after its end."""


class UnknownAuthor(Exception):
    """An event references a member id absent from the directory."""

    def __init__(self, author: str):
        super().__init__(f"unknown author: {author}")
        self.author = author


class UnknownMember(Exception):
    """Catch-up requested for a member not in the directory."""

    def __init__(self, member: str):
        super().__init__(f"unknown member: {member}")
        self.member = member


@dataclass(frozen=True, slots=True)
class Period:
    """Inclusive date range [start, end]."""

    start: date
    end: date

    def __post_init__(self):
        if self.start > self.end:
            raise InvalidRange(f"{self.start} > {self.end}")

    def contains(self, d: date) -> bool:
        return self.start <= d <= self.end


@dataclass(frozen=True, slots=True)
class SummaryQuery:
    period: Period
    hide_stale: bool
    as_of: date


@dataclass(frozen=True, slots=True)
class SummaryEntry:
    event: Event
    author_name: str
    weight: DisplayWeight


@dataclass(frozen=True, slots=True)
class DayGroup:
    date: date
    entries: tuple[SummaryEntry, ...]


@dataclass(frozen=True, slots=True)
class Summary:
    query: SummaryQuery
    days: tuple[DayGroup, ...]
    total_count: int


def includes_event(event: Event, query: SummaryQuery, policy: RelevancePolicy) -> bool:
    """Per-event inclusion predicate: in the period, and not hidden as stale."""
    if not query.period.contains(event.event_date):
        return False
    if query.hide_stale and not is_relevant_at(event, query.as_of, policy):
        return False
    return True


def _entry_sort_key(entry: SummaryEntry):
    # Important items first; created_at then id make the order total.
    return (-int(entry.event.priority), entry.event.created_at, entry.event.id)


def order_entries_within_day(entries: list[SummaryEntry]) -> list[SummaryEntry]:
    """Sort one day's entries by priority desc, created_at asc, id asc."""
    return sorted(entries, key=_entry_sort_key)


def summarize(
    events: list[Event],
    members: dict[str, Member],
    query: SummaryQuery,
    policy: RelevancePolicy,
) -> Summary:
    """Build the day-grouped summary for a query, newest day first.

    Raises UnknownAuthor if any included event's author is not in the
    member directory.
    """
    for e in events:
        if e.author not in members:
            raise UnknownAuthor(e.author)
    included = [e for e in events if includes_event(e, query, policy)]

    entries = [
        SummaryEntry(
            event=e,
            author_name=members[e.author].display_name,
            weight=display_weight(e.priority),
        )
        for e in included
    ]
    entries.sort(key=lambda en: en.event.event_date, reverse=True)

    days = tuple(
        DayGroup(date=d, entries=tuple(order_entries_within_day(list(group))))
        for d, group in groupby(entries, key=lambda en: en.event.event_date)
    )
    return Summary(query=query, days=days, total_count=len(entries))


def catchup(
    events: list[Event],
    members: dict[str, Member],
    member: str,
    since: date,
    as_of: date,
    policy: RelevancePolicy,
    hide_stale: bool = True,
) -> Summary:
    """Summary of everything since an absence began, stale entries hidden by
    default. The member's own events are included as reminders."""
    if member not in members:
        raise UnknownMember(member)
    if since > as_of:
        raise InvalidRange(f"{since} > {as_of}")
    query = SummaryQuery(period=Period(since, as_of), hide_stale=hide_stale, as_of=as_of)
    return summarize(events, members, query, policy)


def summary_to_dict(summary: Summary) -> dict:
    """Deterministic wire/JSON form of a summary."""
    q = summary.query
    return {
        "query": {
            "from": q.period.start.isoformat(),
            "to": q.period.end.isoformat(),
            "hide_stale": q.hide_stale,
            "as_of": q.as_of.isoformat(),
        },
        "days": [
            {
                "date": day.date.isoformat(),
                "entries": [
                    {
                        "event": entry.event.to_payload(),
                        "author_name": entry.author_name,
                        "weight": entry.weight.value,
                    }
                    for entry in day.entries
                ],
            }
            for day in summary.days
        ],
        "total_count": summary.total_count,
    }

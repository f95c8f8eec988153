"""
Durable append-only storage for members and events.

One UTF-8 file `events.log` per data directory; one JSON record per line:

    {"seq": N, "kind": "member"|"event"|"tombstone", "v": 1, "payload": {...}}

The whole log is replayed into memory on open (team-scale data, no index
needed). Deletion appends a tombstone; compaction rewrites the log with
only members and live events, via a temp file and atomic rename.

A trailing line without a terminating newline is the crash signature and
is dropped with a warning; a complete line that fails to parse means real
corruption and refuses to open.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass
from datetime import date, datetime, timezone
from pathlib import Path
from typing import Callable

from .model import (
    Event,
    Member,
    Priority,
    ValidationError,
    format_timestamp,
    parse_timestamp,
    validate_event_input,
)

logger = logging.getLogger(__name__)

LOG_FILENAME = "events.log"
FORMAT_VERSION = 1


class StoreError(Exception):
    pass


class CorruptRecord(StoreError):
    """A complete log line failed to parse; the store refuses to open."""


class UnknownAuthor(StoreError):
    pass


class NotFound(StoreError):
    pass


class Forbidden(StoreError):
    pass


class DuplicateMember(StoreError):
    pass


class InvalidRange(StoreError):
    pass


@dataclass(frozen=True, slots=True)
class CompactStats:
    records_before: int
    records_after: int


def _utc_now_second() -> datetime:
    return datetime.now(timezone.utc).replace(tzinfo=None, microsecond=0)


class EventStore:
    """Replayed-in-memory view over the append-only log.

    Single-writer contract: callers serialize mutations (the API layer
    holds a lock); reads see a consistent snapshot between writes.
    """

    def __init__(self, data_dir: str | Path, now_fn: Callable[[], datetime] = _utc_now_second):
        self.data_dir = Path(data_dir)
        if not self.data_dir.is_dir():
            raise StoreError(f"data dir does not exist: {self.data_dir}")
        self._now_fn = now_fn
        self.log_path = self.data_dir / LOG_FILENAME
        self.members: dict[str, Member] = {}
        self._live_events: dict[int, Event] = {}
        self.next_event_id = 1
        self._next_seq = 1
        self._record_count = 0
        self.warnings: list[str] = []
        self._replay()
        self._fh = open(self.log_path, "a", encoding="utf-8")

    # ------------------------------------------------------------------
    # Replay
    # ------------------------------------------------------------------

    def _replay(self) -> None:
        if not self.log_path.exists():
            return
        raw = self.log_path.read_bytes()
        if not raw:
            return
        lines = raw.split(b"\n")
        if lines[-1] == b"":
            lines.pop()
        elif lines:
            # No terminating newline: the writer died mid-record.
            dropped = lines.pop()
            msg = f"ignoring partial trailing record ({len(dropped)} bytes)"
            logger.warning(msg)
            self.warnings.append(msg)
        for i, line in enumerate(lines, start=1):
            try:
                record = json.loads(line.decode("utf-8"))
                self._apply(record)
            except CorruptRecord:
                raise
            except Exception as exc:
                raise CorruptRecord(f"line {i}: {exc}") from exc
            self._record_count += 1

    def _apply(self, record: dict) -> None:
        seq = record["seq"]
        if seq < self._next_seq:
            raise CorruptRecord(f"seq {seq} not increasing")
        self._next_seq = seq + 1
        kind = record["kind"]
        payload = record["payload"]
        if kind == "member":
            member = Member(id=payload["id"], display_name=payload["display_name"])
            self.members[member.id] = member
        elif kind == "event":
            event = Event.from_payload(payload)
            self._live_events[event.id] = event
            self.next_event_id = max(self.next_event_id, event.id + 1)
        elif kind == "tombstone":
            target = payload["event_id"]
            if target >= self.next_event_id:
                raise CorruptRecord(f"tombstone for unseen event id {target}")
            self._live_events.pop(target, None)
        else:
            raise CorruptRecord(f"unknown record kind {kind!r}")

    # ------------------------------------------------------------------
    # Writes
    # ------------------------------------------------------------------

    def _append_record(self, kind: str, payload: dict) -> None:
        record = {"seq": self._next_seq, "kind": kind, "v": FORMAT_VERSION, "payload": payload}
        self._fh.write(json.dumps(record, separators=(",", ":")) + "\n")
        self._fh.flush()
        os.fsync(self._fh.fileno())
        self._next_seq += 1
        self._record_count += 1

    def add_member(self, member_id: str, display_name: str) -> Member:
        if member_id in self.members:
            raise DuplicateMember(member_id)
        member = Member(id=member_id, display_name=display_name)
        self._append_record("member", {"id": member.id, "display_name": member.display_name})
        self.members[member.id] = member
        return member

    def append_event(
        self,
        author: str,
        description: str,
        priority_level: int,
        event_date: date | str,
        created_at: datetime | None = None,
    ) -> Event:
        """Validate, durably append and return the stored event.

        `created_at` is only supplied by import, which preserves original
        timestamps; normal appends stamp the server clock.
        """
        if author not in self.members:
            raise UnknownAuthor(author)
        now = self._now_fn()
        desc, priority, parsed_date = validate_event_input(
            description, priority_level, event_date, today=now.date()
        )
        event = Event(
            id=self.next_event_id,
            author=author,
            description=desc,
            priority=priority,
            event_date=parsed_date,
            created_at=created_at or now,
        )
        self._append_record("event", event.to_payload())
        self._live_events[event.id] = event
        self.next_event_id = event.id + 1
        return event

    def delete_event(self, event_id: int, requester: str) -> None:
        event = self._live_events.get(event_id)
        if event is None:
            raise NotFound(f"event {event_id}")
        if event.author != requester:
            raise Forbidden(f"{requester} is not the author of event {event_id}")
        self._append_record(
            "tombstone",
            {
                "event_id": event_id,
                "deleted_by": requester,
                "deleted_at": format_timestamp(self._now_fn()),
            },
        )
        del self._live_events[event_id]

    # ------------------------------------------------------------------
    # Reads
    # ------------------------------------------------------------------

    def scan_events(self, start: date | None = None, end: date | None = None) -> list[Event]:
        """Live events with event_date in [start, end] (inclusive), id order."""
        if start is not None and end is not None and start > end:
            raise InvalidRange(f"{start} > {end}")
        return sorted(
            (
                e
                for e in self._live_events.values()
                if (start is None or e.event_date >= start)
                and (end is None or e.event_date <= end)
            ),
            key=lambda e: e.id,
        )

    @property
    def live_count(self) -> int:
        return len(self._live_events)

    def now(self) -> datetime:
        """The store's clock (injectable in tests)."""
        return self._now_fn()

    # ------------------------------------------------------------------
    # Maintenance
    # ------------------------------------------------------------------

    def compact(self) -> CompactStats:
        """Rewrite the log with members and live events only; atomic rename.

        Requires exclusive access (no concurrent writers).
        """
        before = self._record_count
        tmp_path = self.log_path.with_suffix(".log.tmp")
        records = []
        seq = 1
        for member in sorted(self.members.values(), key=lambda m: m.id):
            records.append(
                {"seq": seq, "kind": "member", "v": FORMAT_VERSION,
                 "payload": {"id": member.id, "display_name": member.display_name}}
            )
            seq += 1
        for event in self.scan_events():
            records.append(
                {"seq": seq, "kind": "event", "v": FORMAT_VERSION, "payload": event.to_payload()}
            )
            seq += 1
        with open(tmp_path, "w", encoding="utf-8") as tmp:
            for record in records:
                tmp.write(json.dumps(record, separators=(",", ":")) + "\n")
            tmp.flush()
            os.fsync(tmp.fileno())
        self._fh.close()
        os.replace(tmp_path, self.log_path)
        self._fh = open(self.log_path, "a", encoding="utf-8")
        self._next_seq = seq
        self._record_count = len(records)
        return CompactStats(records_before=before, records_after=len(records))

    def close(self) -> None:
        self._fh.close()

    def __enter__(self) -> "EventStore":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

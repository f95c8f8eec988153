"""Append-only store: replay, tombstones, crash tolerance, compaction."""

import json
from datetime import date, timedelta

import pytest
from hypothesis import given, settings, strategies as st

from happening import store as store_mod
from happening.model import ValidationError
from happening.store import CorruptRecord, EventStore

from conftest import FIXED_NOW, TODAY


def reopen(store, clock):
    store.close()
    return EventStore(store.data_dir, now_fn=clock)


class TestOpen:
    def test_empty_dir(self, store):
        assert store.live_count == 0
        assert store.members == {}
        assert store.next_event_id == 1

    def test_tombstone_hides_event(self, store, clock):
        store.add_member("kurt", "Kurt Reinholdt")
        store.append_event("kurt", "did a thing", 2, TODAY)
        store.delete_event(1, "kurt")
        s = reopen(store, clock)
        assert s.live_count == 0
        assert s.next_event_id == 2
        s.close()

    def test_partial_trailing_line_ignored(self, store, clock, tmp_path):
        store.add_member("kurt", "Kurt Reinholdt")
        for i in range(3):
            store.append_event("kurt", f"thing {i}", 2, TODAY)
        store.append_event("kurt", "will be lost", 2, TODAY)
        store.close()
        log = tmp_path / "events.log"
        raw = log.read_bytes()
        # Cut inside the final line, past its start but before the newline.
        last_line_start = raw.rstrip(b"\n").rfind(b"\n") + 1
        log.write_bytes(raw[: last_line_start + 5])
        s = EventStore(tmp_path, now_fn=clock)
        assert s.live_count == 3
        assert s.warnings
        s.close()

    def test_interior_corruption_is_fatal(self, store, clock, tmp_path):
        store.add_member("kurt", "Kurt Reinholdt")
        store.append_event("kurt", "a thing", 2, TODAY)
        store.close()
        log = tmp_path / "events.log"
        log.write_bytes(b"this is not json\n" + log.read_bytes())
        with pytest.raises(CorruptRecord):
            EventStore(tmp_path, now_fn=clock)

    def test_unknown_payload_fields_ignored(self, store, clock, tmp_path):
        store.add_member("kurt", "Kurt Reinholdt")
        store.append_event("kurt", "a thing", 2, TODAY)
        store.close()
        log = tmp_path / "events.log"
        records = [json.loads(l) for l in log.read_text().splitlines()]
        for r in records:
            r["payload"]["extra"] = True
            r["also_extra"] = 1
        log.write_text("".join(json.dumps(r) + "\n" for r in records))
        s = EventStore(tmp_path, now_fn=clock)
        assert s.live_count == 1
        s.close()


class TestAppend:
    def test_first_id_is_one(self, store_with_member):
        e = store_with_member.append_event("kurt", "first", 1, TODAY)
        assert e.id == 1
        assert e.created_at == FIXED_NOW

    def test_sequential_ids(self, store_with_member):
        ids = [store_with_member.append_event("kurt", f"n{i}", 1, TODAY).id for i in range(2)]
        assert ids == [1, 2]

    def test_no_id_reuse_after_delete_and_reopen(self, store_with_member, clock):
        s = store_with_member
        for i in range(5):
            s.append_event("kurt", f"n{i}", 1, TODAY)
        s.delete_event(5, "kurt")
        s = reopen(s, clock)
        e = s.append_event("kurt", "after reopen", 1, TODAY)
        assert e.id == 6
        s.close()

    def test_unknown_author(self, store):
        with pytest.raises(store_mod.UnknownAuthor):
            store.append_event("ghost", "x", 1, TODAY)

    def test_validation_failure_not_persisted(self, store_with_member, clock):
        with pytest.raises(ValidationError):
            store_with_member.append_event("kurt", "", 9, TODAY)
        s = reopen(store_with_member, clock)
        assert s.live_count == 0
        s.close()


class TestDelete:
    def test_author_can_delete(self, store_with_member):
        store_with_member.append_event("kurt", "oops", 1, TODAY)
        store_with_member.delete_event(1, "kurt")
        assert store_with_member.scan_events() == []

    def test_non_author_forbidden(self, store_with_member):
        store_with_member.add_member("anna", "Anna Lindqvist")
        store_with_member.append_event("kurt", "mine", 1, TODAY)
        with pytest.raises(store_mod.Forbidden):
            store_with_member.delete_event(1, "anna")

    def test_double_delete_not_found(self, store_with_member):
        store_with_member.append_event("kurt", "once", 1, TODAY)
        store_with_member.delete_event(1, "kurt")
        with pytest.raises(store_mod.NotFound):
            store_with_member.delete_event(1, "kurt")


class TestScan:
    def test_fresh_store(self, store):
        assert store.scan_events() == []

    def test_inclusive_bounds(self, store_with_member):
        s = store_with_member
        for d in (date(2016, 5, 1), date(2016, 4, 15), date(2016, 3, 1)):
            s.append_event("kurt", f"on {d}", 2, d)
        got = s.scan_events(date(2016, 4, 1), date(2016, 5, 1))
        assert [e.event_date for e in got] == [date(2016, 5, 1), date(2016, 4, 15)] or \
            sorted(e.event_date for e in got) == [date(2016, 4, 15), date(2016, 5, 1)]
        assert [e.id for e in got] == sorted(e.id for e in got)

    def test_single_day_range(self, store_with_member):
        s = store_with_member
        s.append_event("kurt", "target", 2, date(2016, 5, 1))
        s.append_event("kurt", "other", 2, date(2016, 5, 2))
        got = s.scan_events(date(2016, 5, 1), date(2016, 5, 1))
        assert [e.description for e in got] == ["target"]

    def test_invalid_range(self, store_with_member):
        with pytest.raises(store_mod.InvalidRange):
            store_with_member.scan_events(date(2016, 6, 1), date(2016, 5, 1))


class TestCompact:
    def test_drops_tombstoned_records(self, store_with_member):
        s = store_with_member
        for i in range(10):
            s.append_event("kurt", f"n{i}", 1, TODAY)
        for event_id in (1, 3, 5, 7):
            s.delete_event(event_id, "kurt")
        stats = s.compact()
        assert stats.records_before == 1 + 10 + 4
        assert stats.records_after == 1 + 6

    def test_idempotent(self, store_with_member):
        s = store_with_member
        for i in range(4):
            s.append_event("kurt", f"n{i}", 1, TODAY)
        s.delete_event(2, "kurt")
        first = s.compact()
        second = s.compact()
        assert second.records_before == second.records_after == first.records_after

    def test_preserves_scan_and_survives_reopen(self, store_with_member, clock):
        s = store_with_member
        for i in range(6):
            s.append_event("kurt", f"n{i}", i % 3 + 1, TODAY - timedelta(days=i))
        s.delete_event(4, "kurt")
        before = s.scan_events()
        s.compact()
        assert s.scan_events() == before
        s = reopen(s, clock)
        assert s.scan_events() == before
        s.close()


delete_pattern = st.lists(st.integers(0, 9), max_size=6)


class TestRoundTripProperty:
    @given(
        n_events=st.integers(0, 12),
        deletions=st.lists(st.integers(1, 12), max_size=8),
        do_compact=st.booleans(),
    )
    @settings(max_examples=40, deadline=None)
    def test_reopen_preserves_scan(self, tmp_path_factory, n_events, deletions, do_compact):
        clock = lambda: FIXED_NOW
        data_dir = tmp_path_factory.mktemp("store")
        with EventStore(data_dir, now_fn=clock) as s:
            s.add_member("kurt", "Kurt Reinholdt")
            for i in range(n_events):
                s.append_event("kurt", f"event {i}", i % 3 + 1,
                               TODAY - timedelta(days=i % 40))
            for target in deletions:
                try:
                    s.delete_event(target, "kurt")
                except store_mod.NotFound:
                    pass
            if do_compact:
                s.compact()
            before = s.scan_events()
        with EventStore(data_dir, now_fn=clock) as s:
            assert s.scan_events() == before


class TestTruncationTolerance:
    def test_every_offset_of_final_record(self, store_with_member, clock, tmp_path):
        s = store_with_member
        for i in range(3):
            s.append_event("kurt", f"n{i}", 1, TODAY)
        s.close()
        log = tmp_path / "events.log"
        raw = log.read_bytes()
        final_start = raw.rstrip(b"\n").rfind(b"\n") + 1
        for cut in range(final_start, len(raw)):
            log.write_bytes(raw[:cut])
            with EventStore(tmp_path, now_fn=clock) as s2:
                assert s2.live_count in (2, 3)
        log.write_bytes(raw)

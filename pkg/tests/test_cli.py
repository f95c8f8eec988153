"""CLI: seed, export/import round trips, lock file, serve end-to-end."""

import hashlib
import json
import socket
import subprocess
import sys
import time
from datetime import date, timedelta

import pytest
import requests
from click.testing import CliRunner

from happening.cli import LOCK_FILENAME, cli
from happening.store import EventStore


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(cli, list(args), catch_exceptions=False)


def seed(runner, data_dir):
    result = run(runner, "seed-demo", "--data-dir", str(data_dir))
    assert result.exit_code == 0, result.output
    return result


class TestSeedDemo:
    def test_creates_eight_members(self, runner, tmp_path):
        seed(runner, tmp_path)
        with EventStore(tmp_path) as store:
            assert len(store.members) == 8
            assert store.live_count > 0

    def test_refuses_non_empty(self, runner, tmp_path):
        from happening.cli import main

        seed(runner, tmp_path)
        before = (tmp_path / "events.log").read_bytes()
        with pytest.raises(SystemExit) as exc:
            main(["seed-demo", "--data-dir", str(tmp_path)])
        assert exc.value.code == 2
        assert (tmp_path / "events.log").read_bytes() == before

    def test_deterministic(self, runner, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        a.mkdir(), b.mkdir()
        seed(runner, a)
        seed(runner, b)

        def fingerprint(path):
            records = [json.loads(l) for l in (path / "events.log").read_text().splitlines()]
            for r in records:
                r["payload"].pop("created_at", None)
            return records

        assert fingerprint(a) == fingerprint(b)

    def test_all_priorities_present(self, runner, tmp_path):
        seed(runner, tmp_path)
        with EventStore(tmp_path) as store:
            assert {int(e.priority) for e in store.scan_events()} == {1, 2, 3}


class TestExport:
    def test_empty_csv_has_header_only(self, runner, tmp_path):
        data, out = tmp_path / "data", tmp_path / "out.csv"
        data.mkdir()
        result = run(runner, "export", "--data-dir", str(data),
                     "--format", "csv", "--out", str(out))
        assert result.exit_code == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 1
        assert lines[0].replace('"', "") == "id,author,priority,event_date,created_at,description"

    def test_tombstoned_events_excluded(self, runner, tmp_path):
        data, out = tmp_path / "data", tmp_path / "out.jsonl"
        data.mkdir()
        with EventStore(data) as store:
            store.add_member("kurt", "Kurt")
            for i in range(3):
                store.append_event("kurt", f"n{i}", 1, date.today())
            store.delete_event(2, "kurt")
        result = run(runner, "export", "--data-dir", str(data), "--out", str(out))
        assert result.exit_code == 0
        assert len(out.read_text().splitlines()) == 2


class TestImport:
    def test_round_trip_preserves_scan(self, runner, tmp_path):
        src, dst = tmp_path / "src", tmp_path / "dst"
        src.mkdir(), dst.mkdir()
        seed(runner, src)
        dump = tmp_path / "dump.jsonl"
        run(runner, "export", "--data-dir", str(src), "--out", str(dump))
        result = run(runner, "import", "--data-dir", str(dst), "--in", str(dump))
        assert result.exit_code == 0
        with EventStore(src) as s, EventStore(dst) as d:
            strip_id = lambda store: [
                (e.author, e.description, int(e.priority), e.event_date, e.created_at)
                for e in store.scan_events()
            ]
            assert strip_id(s) == strip_id(d)

    def test_csv_round_trip(self, runner, tmp_path):
        src, dst = tmp_path / "src", tmp_path / "dst"
        src.mkdir(), dst.mkdir()
        seed(runner, src)
        dump = tmp_path / "dump.csv"
        run(runner, "export", "--data-dir", str(src), "--format", "csv", "--out", str(dump))
        result = run(runner, "import", "--data-dir", str(dst), "--in", str(dump),
                     "--format", "csv")
        assert result.exit_code == 0
        with EventStore(src) as s, EventStore(dst) as d:
            assert d.live_count == s.live_count

    def test_malformed_row_is_all_or_nothing(self, runner, tmp_path):
        from happening.cli import RuntimeFailure, main

        data = tmp_path / "data"
        data.mkdir()
        bad = tmp_path / "bad.jsonl"
        good_row = json.dumps({
            "id": 1, "author": "kurt", "description": "ok", "priority": 1,
            "event_date": "2016-05-01", "created_at": "2016-05-01T08:00:00Z",
        })
        bad.write_text(good_row + "\n{broken\n" + good_row + "\n")
        with pytest.raises(SystemExit) as exc:
            main(["import", "--data-dir", str(data), "--in", str(bad)])
        assert exc.value.code == 2
        with EventStore(data) as store:
            assert store.live_count == 0

    def test_jsonl_fixed_point(self, runner, tmp_path):
        # export -> import -> export reaches a byte-stable fixed point
        src = tmp_path / "src"
        src.mkdir()
        seed(runner, src)
        with EventStore(src) as store:
            store.delete_event(3, store.scan_events()[2].author)
        dumps = []
        current = src
        for i in range(3):
            dump = tmp_path / f"dump{i}.jsonl"
            run(runner, "export", "--data-dir", str(current), "--out", str(dump))
            dumps.append(dump.read_bytes())
            nxt = tmp_path / f"gen{i}"
            nxt.mkdir()
            run(runner, "import", "--data-dir", str(nxt), "--in", str(dump))
            current = nxt
        assert dumps[1] == dumps[2]


class TestLockFile:
    def test_refuses_locked_store(self, tmp_path):
        from happening.cli import main

        (tmp_path / LOCK_FILENAME).write_text("12345")
        with pytest.raises(SystemExit) as exc:
            main(["seed-demo", "--data-dir", str(tmp_path)])
        assert exc.value.code == 2


class TestExitCodes:
    def test_usage_error_is_1(self):
        from happening.cli import main

        with pytest.raises(SystemExit) as exc:
            main(["seed-demo"])  # missing --data-dir
        assert exc.value.code == 1

    def test_missing_data_dir_is_2(self, tmp_path):
        from happening.cli import main

        with pytest.raises(SystemExit) as exc:
            main(["export", "--data-dir", str(tmp_path / "nope"),
                  "--out", str(tmp_path / "o.jsonl")])
        assert exc.value.code == 2

    def test_success_is_0(self, tmp_path):
        from happening.cli import main

        with pytest.raises(SystemExit) as exc:
            main(["export", "--data-dir", str(tmp_path), "--out", str(tmp_path / "o.jsonl")])
        assert exc.value.code == 0


def free_port():
    s = socket.socket()
    s.bind(("127.0.0.1", 0))
    port = s.getsockname()[1]
    s.close()
    return port


@pytest.fixture
def served(tmp_path):
    """A real server subprocess over a seeded store with tight relevance windows."""
    runner = CliRunner()
    seed(runner, tmp_path)
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"relevance_windows": {"1": 1, "2": 2, "3": 3}}))
    port = free_port()
    proc = subprocess.Popen(
        [sys.executable, "-m", "happening.cli", "serve",
         "--data-dir", str(tmp_path), "--port", str(port), "--config", str(config)],
        stdout=subprocess.PIPE, stderr=subprocess.STDOUT,
    )
    base = f"http://127.0.0.1:{port}"
    try:
        for _ in range(100):
            try:
                requests.get(base + "/api/health", timeout=1)
                break
            except requests.ConnectionError:
                time.sleep(0.1)
        else:
            raise RuntimeError("server did not come up")
        yield base, tmp_path
    finally:
        proc.terminate()
        proc.wait(timeout=10)


class TestServe:
    def test_health_and_config_windows(self, served):
        base, data_dir = served
        health = requests.get(base + "/api/health").json()
        assert health["status"] == "ok"
        assert health["events"] > 0

        # Configured windows {1:1, 2:2, 3:3}: brute-force which seeded events
        # should survive the stale filter, then compare with the server.
        with open(data_dir / "events.log") as fh:
            events = [json.loads(l)["payload"] for l in fh
                      if json.loads(l)["kind"] == "event"]
        today = date.today()
        start = today - timedelta(days=60)
        expected = {
            e["id"] for e in events
            if (today - date.fromisoformat(e["event_date"])).days <= e["priority"]
        }
        got_summary = requests.get(
            base + f"/api/summary?from={start}&to={today}&as_of={today}&hide_stale=true"
        ).json()
        got = {en["event"]["id"] for day in got_summary["days"] for en in day["entries"]}
        assert got == expected

    def test_serve_does_not_mutate_store(self, served):
        base, data_dir = served
        before = hashlib.sha256((data_dir / "events.log").read_bytes()).hexdigest()
        requests.get(base + f"/api/summary?from=2016-01-01&to=2016-12-31")
        after = hashlib.sha256((data_dir / "events.log").read_bytes()).hexdigest()
        assert before == after

    def test_port_in_use_exits_nonzero(self, served, tmp_path):
        base, data_dir = served
        port = base.rsplit(":", 1)[1]
        other = tmp_path / "other"
        other.mkdir()
        proc = subprocess.run(
            [sys.executable, "-m", "happening.cli", "serve",
             "--data-dir", str(other), "--port", port],
            capture_output=True, timeout=30,
        )
        assert proc.returncode != 0

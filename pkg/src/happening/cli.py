"""
Operator command line: serve, seed-demo, export, import.

Exit codes: 0 success, 1 usage error, 2 runtime failure.
"""

from __future__ import annotations

import csv
import json
import os
import socket
import sys
from contextlib import contextmanager
from pathlib import Path

import click

from .api import create_app
from .config import load_config
from .model import ValidationError, validate_event_input
from .seed import StoreNotEmpty, seed_demo
from .store import EventStore, StoreError

LOCK_FILENAME = "server.lock"

CSV_COLUMNS = ["id", "author", "priority", "event_date", "created_at", "description"]


class RuntimeFailure(Exception):
    """Raised for errors that should exit with status 2."""


@contextmanager
def exclusive_store(data_dir: Path):
    """Refuse to touch the store while a server holds it (lock file)."""
    lock_path = data_dir / LOCK_FILENAME
    if lock_path.exists():
        raise RuntimeFailure(
            f"store at {data_dir} is locked by a running server ({lock_path})"
        )
    with EventStore(data_dir) as store:
        yield store


def _open_data_dir(data_dir: str) -> Path:
    path = Path(data_dir)
    if not path.is_dir():
        raise RuntimeFailure(f"data dir does not exist or is not a directory: {path}")
    return path


@click.group()
def cli():
    """happening: track team activities and summarize them on demand."""


@cli.command()
@click.option("--data-dir", required=True, help="Store directory.")
@click.option("--bind", default="127.0.0.1", show_default=True)
@click.option("--port", default=8080, show_default=True, type=int)
@click.option("--config", "config_path", default=None, type=click.Path(exists=True))
@click.option("--ui-dir", default=None, type=click.Path(), help="Static web UI directory.")
def serve(data_dir, bind, port, config_path, ui_dir):
    """Run the HTTP API and web UI on one port."""
    import uvicorn

    path = _open_data_dir(data_dir)
    config = load_config(config_path)

    # Fail fast with a clean message instead of a uvicorn traceback.
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        probe.bind((bind, port))
    except OSError as exc:
        raise RuntimeFailure(f"cannot bind {bind}:{port}: {exc}")
    finally:
        probe.close()

    if ui_dir is None:
        bundled = Path(__file__).parent / "ui"
        ui_dir = bundled if bundled.is_dir() else None

    lock_path = path / LOCK_FILENAME
    if lock_path.exists():
        raise RuntimeFailure(f"another server already holds {lock_path}")
    lock_path.write_text(str(os.getpid()), encoding="utf-8")
    try:
        with EventStore(path) as store:
            for warning in store.warnings:
                click.echo(f"warning: {warning}", err=True)
            app = create_app(store, config, ui_dir=ui_dir)
            click.echo(
                f"happening serving on http://{bind}:{port} "
                f"({store.live_count} events, {len(store.members)} members, "
                f"data dir {path})"
            )
            uvicorn.run(app, host=bind, port=port, log_level="warning")
    finally:
        lock_path.unlink(missing_ok=True)


@cli.command("seed-demo")
@click.option("--data-dir", required=True, help="Store directory (must be empty).")
def seed_demo_cmd(data_dir):
    """Populate an empty store with a deterministic eight-person demo team."""
    path = _open_data_dir(data_dir)
    with exclusive_store(path) as store:
        try:
            count = seed_demo(store)
        except StoreNotEmpty as exc:
            raise RuntimeFailure(str(exc))
    click.echo(f"seeded {count} events for 8 members into {path}")


@cli.command()
@click.option("--data-dir", required=True)
@click.option("--format", "fmt", type=click.Choice(["jsonl", "csv"]), default="jsonl",
              show_default=True)
@click.option("--out", "out_path", required=True, type=click.Path())
def export(data_dir, fmt, out_path):
    """Write live events (id order) to a jsonl or csv file."""
    path = _open_data_dir(data_dir)
    with exclusive_store(path) as store:
        events = store.scan_events()
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        if fmt == "jsonl":
            for event in events:
                fh.write(json.dumps(event.to_payload(), separators=(",", ":")) + "\n")
        else:
            writer = csv.writer(fh, quoting=csv.QUOTE_NONNUMERIC)
            writer.writerow(CSV_COLUMNS)
            for event in events:
                p = event.to_payload()
                writer.writerow([p["id"], p["author"], p["priority"],
                                 p["event_date"], p["created_at"], p["description"]])
    click.echo(f"exported {len(events)} events to {out_path}")


@cli.command("import")
@click.option("--data-dir", required=True)
@click.option("--in", "in_path", required=True, type=click.Path(exists=True))
@click.option("--format", "fmt", type=click.Choice(["jsonl", "csv"]), default="jsonl",
              show_default=True)
def import_cmd(data_dir, in_path, fmt):
    """Append events from a file; all-or-nothing, fresh ids, original dates."""
    path = _open_data_dir(data_dir)
    rows = _parse_import_file(Path(in_path), fmt)
    with exclusive_store(path) as store:
        # Validate everything before the first append so a bad row cannot
        # leave a partial import behind.
        today = store.now().date()
        for i, row in enumerate(rows, start=1):
            try:
                validate_event_input(row["description"], row["priority"],
                                     row["event_date"], today=today)
            except ValidationError as exc:
                raise RuntimeFailure(f"row {i}: invalid event: {exc}")
        for row in rows:
            if row["author"] not in store.members:
                store.add_member(row["author"], row["author"])
            store.append_event(
                author=row["author"],
                description=row["description"],
                priority_level=row["priority"],
                event_date=row["event_date"],
                created_at=row["created_at"],
            )
    click.echo(f"imported {len(rows)} events into {path}")


def _parse_import_file(in_path: Path, fmt: str) -> list[dict]:
    from .model import parse_timestamp

    rows = []
    if fmt == "jsonl":
        with open(in_path, encoding="utf-8") as fh:
            for i, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    obj = json.loads(line)
                    rows.append({
                        "author": obj["author"],
                        "description": obj["description"],
                        "priority": obj["priority"],
                        "event_date": obj["event_date"],
                        "created_at": parse_timestamp(obj["created_at"]),
                    })
                except (ValueError, KeyError, TypeError) as exc:
                    raise RuntimeFailure(f"row {i}: cannot parse: {exc}")
    else:
        with open(in_path, encoding="utf-8", newline="") as fh:
            reader = csv.DictReader(fh)
            for i, record in enumerate(reader, start=1):
                try:
                    rows.append({
                        "author": record["author"],
                        "description": record["description"],
                        "priority": int(float(record["priority"])),
                        "event_date": record["event_date"],
                        "created_at": parse_timestamp(record["created_at"]),
                    })
                except (ValueError, KeyError, TypeError) as exc:
                    raise RuntimeFailure(f"row {i}: cannot parse: {exc}")
    return rows


def main(argv=None):
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(1)
    except click.ClickException as exc:
        exc.show()
        sys.exit(2)
    except click.exceptions.Abort:
        sys.exit(1)
    except (RuntimeFailure, StoreError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    sys.exit(0)


if __name__ == "__main__":
    main()

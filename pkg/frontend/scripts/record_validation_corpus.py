"""Record server accept/reject outcomes for a validation-input corpus."""
import json, tempfile
from pathlib import Path
from datetime import datetime
from fastapi.testclient import TestClient
from happening.api import create_app
from happening.config import ServerConfig
from happening.store import EventStore

TODAY = "2016-05-10"
clock = lambda: datetime(2016, 5, 10, 8, 30, 0)

cases = []
# descriptions
descs = ["Deployed hotfix 2.1.4", "", "   ", "x", "x" * 280, "x" * 281, "y" * 500,
         "line1\nline2", "bad\x00char", "tab\there", "  trimmed  ", "état déployé ✓"]
for d in descs:
    cases.append({"description": d, "priority": 2, "event_date": TODAY})
# priorities
for p in [1, 2, 3, 0, 4, -1, 99, "2", 1.5, None]:
    cases.append({"description": "priority case", "priority": p, "event_date": TODAY})
# dates
for ed in [TODAY, "2016-05-09", "2016-05-11", "2016-01-01", "2017-01-01", "not-a-date",
           "2016-13-01", "2016-05-32", "", "10.05.2016", "2016/05/10", None]:
    cases.append({"description": "date case", "priority": 1, "event_date": ed})
# combinations
combos = [
    {"description": "", "priority": 4, "event_date": TODAY},
    {"description": "x", "priority": 4, "event_date": "2016-05-11"},
    {"description": "   ", "priority": 0, "event_date": "nope"},
    {"description": "ok", "priority": 3, "event_date": "2016-04-30"},
    {"description": "z" * 281, "priority": 5, "event_date": "2016-06-01"},
    {"description": "fine entry", "priority": 1, "event_date": "2016-05-10"},
    {"description": " \n ", "priority": 2, "event_date": TODAY},
    {"description": "multi\nline\nentry", "priority": 3, "event_date": "2016-05-01"},
    {"description": "x" * 279, "priority": 2, "event_date": "2016-05-08"},
    {"description": "ctrl\x1b[31m", "priority": 2, "event_date": TODAY},
    {"description": "edge", "priority": 3, "event_date": "0001-01-01"},
    {"description": "spacey date", "priority": 2, "event_date": " 2016-05-10"},
    {"description": "boolean priority", "priority": True, "event_date": TODAY},
    {"description": "zero pad", "priority": 2, "event_date": "2016-5-1"},
    {"description": "okay", "priority": 2, "event_date": "2016-02-29"},
    {"description": " ", "priority": 2, "event_date": TODAY},
]
cases.extend(combos)
assert len(cases) == 50, len(cases)

with tempfile.TemporaryDirectory() as tmp:
    store = EventStore(tmp, now_fn=clock)
    cfg = ServerConfig()
    client = TestClient(create_app(store, cfg))
    client.post("/api/members", json={"id": "kurt", "display_name": "Kurt Reinholdt"})
    out = []
    for c in cases:
        r = client.post("/api/events", json={"author": "kurt", **c})
        out.append({
            "input": c,
            "accepted": r.status_code == 201,
            "violations": r.json().get("details", []) if r.status_code != 201 else [],
        })
    store.close()

with open(str(Path(__file__).parent.parent / "tests" / "fixtures" / "validation_corpus.json"), "w") as fh:
    json.dump({"today": TODAY, "cases": out}, fh, indent=2, ensure_ascii=False)
print("wrote", len(out), "cases;", sum(1 for c in out if c["accepted"]), "accepted")

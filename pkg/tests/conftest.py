"""Shared fixtures: a frozen clock and a temp-dir store."""

from datetime import date, datetime

import pytest

from happening.store import EventStore

FIXED_NOW = datetime(2016, 5, 10, 8, 30, 0)
TODAY = FIXED_NOW.date()


@pytest.fixture
def clock():
    return lambda: FIXED_NOW


@pytest.fixture
def store(tmp_path, clock):
    with EventStore(tmp_path, now_fn=clock) as s:
        yield s


@pytest.fixture
def store_with_member(store):
    store.add_member("kurt", "Kurt Reinholdt")
    return store

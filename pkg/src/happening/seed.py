"""
Deterministic demo data: an eight-person team and a month of activity.

Descriptions, dates and priorities are fixed relative to the seed day, so
two runs from empty stores produce identical logs except created_at.
"""

from __future__ import annotations

from datetime import date, timedelta

from .store import EventStore, StoreError


class StoreNotEmpty(StoreError):
    """Refusing to seed over existing data."""


DEMO_MEMBERS = [
    ("kurt", "Kurt Reinholdt"),
    ("anna", "Anna Lindqvist"),
    ("jonas", "Jonas Weber"),
    ("maria", "Maria Keller"),
    ("sven", "Sven Olsson"),
    ("petra", "Petra Hoffmann"),
    ("tobias", "Tobias Brandt"),
    ("elena", "Elena Ricci"),
]

# (author, days before today, priority, description)
DEMO_EVENTS = [
    ("anna", 30, 3, "Kicked off sprint 14; sprint goal is the new billing export"),
    ("kurt", 29, 1, "Fixed a flaky unit test in the payments suite"),
    ("jonas", 28, 2, "Refactored the order service to drop the legacy queue client"),
    ("maria", 27, 3, "Decision: we are migrating the CI pipeline to containers"),
    ("sven", 26, 1, "Cleaned up stale feature branches"),
    ("petra", 25, 2, "Onboarded the new staging environment, credentials in the vault"),
    ("tobias", 24, 3, "Production incident: search index corrupt, restored from snapshot"),
    ("elena", 23, 1, "Updated the README for the reporting module"),
    ("kurt", 21, 2, "Customer demo went well; two follow-up tickets filed"),
    ("anna", 20, 1, "Tidied the sprint board, closed duplicate tickets"),
    ("jonas", 18, 3, "Decision: API v1 is frozen, all new fields go into v2"),
    ("maria", 17, 2, "Load test results published on the team wiki"),
    ("sven", 15, 3, "Unexpected: vendor announced end-of-life for the SMS gateway"),
    ("petra", 14, 1, "Rotated the TLS certificates on staging"),
    ("tobias", 12, 2, "Pair-programmed the export scheduler with Elena"),
    ("elena", 11, 3, "New task force for GDPR data-retention review, kickoff Monday"),
    ("kurt", 9, 1, "Fixed a typo in the invoice footer"),
    ("anna", 8, 2, "Interviewed a backend candidate; writeup in the hiring doc"),
    ("jonas", 6, 3, "Deployed release 2.8 to production"),
    ("maria", 5, 1, "Archived the old retro notes"),
    ("sven", 4, 2, "Database failover drill completed without data loss"),
    ("petra", 3, 3, "Decision: next sprint is a hardening sprint, no new features"),
    ("tobias", 2, 1, "Bumped the linter version, no code changes needed"),
    ("elena", 1, 2, "Draft of the Q3 roadmap shared for comments"),
    ("kurt", 0, 3, "Hotfix 2.8.1 released: checkout race condition resolved"),
]


def seed_demo(store: EventStore, today: date | None = None) -> int:
    """Populate an empty store with the demo team. Returns the event count."""
    if store.members or store.live_count:
        raise StoreNotEmpty("seed-demo requires an empty store")
    today = today or date.today()
    for member_id, display_name in DEMO_MEMBERS:
        store.add_member(member_id, display_name)
    for author, days_ago, priority, description in DEMO_EVENTS:
        store.append_event(
            author=author,
            description=description,
            priority_level=priority,
            event_date=today - timedelta(days=days_ago),
        )
    return len(DEMO_EVENTS)

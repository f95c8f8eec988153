"""
Server configuration: relevance windows, team timezone, auth, CORS.

Loaded from a flat JSON file, with HAPPENING_TOKEN / HAPPENING_TZ
environment overrides.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from datetime import date, datetime
from pathlib import Path
from zoneinfo import ZoneInfo

from .model import DEFAULT_POLICY, Priority, RelevancePolicy

ENV_TOKEN = "HAPPENING_TOKEN"
ENV_TZ = "HAPPENING_TZ"


@dataclass
class ServerConfig:
    policy: RelevancePolicy = DEFAULT_POLICY
    timezone: str = "UTC"
    auth_token: str | None = None
    cors_origins: list[str] = field(default_factory=lambda: ["*"])

    def today(self) -> date:
        """Current calendar date in the team's timezone."""
        return datetime.now(ZoneInfo(self.timezone)).date()


def load_config(path: str | Path | None = None, env: dict[str, str] | None = None) -> ServerConfig:
    """Build the config from an optional JSON file plus environment.

    File keys: relevance_windows ({"1": days, "2": days, "3": days}),
    timezone, auth_token, cors_origins.
    """
    env = os.environ if env is None else env
    config = ServerConfig()
    if path is not None:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        if "relevance_windows" in data:
            windows = {
                Priority(int(level)): int(days)
                for level, days in data["relevance_windows"].items()
            }
            config.policy = RelevancePolicy(windows)
        if "timezone" in data:
            config.timezone = data["timezone"]
        if "auth_token" in data:
            config.auth_token = data["auth_token"]
        if "cors_origins" in data:
            config.cors_origins = list(data["cors_origins"])
    if env.get(ENV_TOKEN):
        config.auth_token = env[ENV_TOKEN]
    if env.get(ENV_TZ):
        config.timezone = env[ENV_TZ]
    ZoneInfo(config.timezone)  # fail fast on a bad timezone name
    return config

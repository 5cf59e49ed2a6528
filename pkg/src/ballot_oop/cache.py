"""Append-only cache of computed counts, one JSON record per line."""

from __future__ import annotations

import json
import logging
import os
import threading
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path

log = logging.getLogger(__name__)

ENV_VAR = "BALLOT_OOP_CACHE_DIR"
FILENAME = "counts.jsonl"


def default_dir() -> Path:
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "ballot_oop"


def resolve_dir(cli_dir: str | os.PathLike | None = None) -> Path:
    """The environment variable wins over ``--cache-dir``, which wins over the default."""
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    if cli_dir:
        return Path(cli_dir)
    return default_dir()


@dataclass(frozen=True)
class CacheEntry:
    statistic: str
    params: tuple
    value: str          # decimal string
    producer: str       # oracle | formula | recurrence
    created_at: str

    @property
    def key(self):
        return (self.statistic, self.params)

    @property
    def count(self) -> int:
        return int(self.value)


class CountCache:
    def __init__(self, directory: str | os.PathLike):
        self.path = Path(directory) / FILENAME
        self._lock = threading.Lock()
        self._entries: dict | None = None

    def _load(self) -> dict:
        if self._entries is not None:
            return self._entries
        entries = {}
        if self.path.exists():
            with open(self.path, encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, 1):
                    if not line.strip():
                        continue
                    try:
                        raw = json.loads(line)
                        entry = CacheEntry(raw["statistic"], tuple(raw["params"]),
                                           str(int(raw["value"])), raw["producer"],
                                           raw["created_at"])
                    except (ValueError, KeyError, TypeError) as exc:
                        log.warning("%s:%d: skipping corrupt cache line (%s)",
                                    self.path, lineno, exc)
                        continue
                    entries.setdefault(entry.key, entry)
        self._entries = entries
        return entries

    def lookup(self, statistic: str, params) -> CacheEntry | None:
        return self._load().get((statistic, tuple(params)))

    def store(self, statistic: str, params, value: int, producer: str) -> CacheEntry:
        """Record a value; an existing key keeps its first value."""
        params = tuple(params)
        with self._lock:
            old = self._load().get((statistic, params))
            if old is not None:
                if old.count != value:
                    raise ValueError(f"cache conflict for {statistic}{params}: "
                                     f"stored {old.value}, new {value}")
                return old
            entry = CacheEntry(statistic, params, str(value), producer,
                               datetime.now(timezone.utc).isoformat(timespec="seconds"))
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as fh:
                rec = asdict(entry)
                rec["params"] = list(params)
                fh.write(json.dumps(rec) + "\n")
            self._entries[entry.key] = entry
            return entry

    def entries(self) -> list[CacheEntry]:
        return list(self._load().values())

    def clear(self):
        with self._lock:
            if self.path.exists():
                self.path.unlink()
            self._entries = {}

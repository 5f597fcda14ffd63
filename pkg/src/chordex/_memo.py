"""Per-call memo tables with an optional soft memory cap.

The cap is read from ``CHORDEX_CACHE_BYTES``. When the estimated size of a
table exceeds it, the table is cleared; callers recompute on a miss, so
eviction only costs time.
"""

from __future__ import annotations

import os

ENV_VAR = "CHORDEX_CACHE_BYTES"


def cache_limit() -> int | None:
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value > 0 else None


class Memo:
    """A dict with an approximate byte budget.

    ``cost`` is the caller's size estimate for one entry; the default is a
    flat per-entry figure that is good enough for a soft limit.
    """

    __slots__ = ("_data", "_bytes", "_limit", "evictions")

    def __init__(self, limit: int | None = None):
        self._data: dict = {}
        self._bytes = 0
        self._limit = cache_limit() if limit is None else limit
        self.evictions = 0

    def get(self, key):
        return self._data.get(key)

    def __contains__(self, key) -> bool:
        return key in self._data

    def __len__(self) -> int:
        return len(self._data)

    def put(self, key, value, cost: int = 128) -> None:
        if self._limit is not None and self._bytes + cost > self._limit:
            self._data.clear()
            self._bytes = 0
            self.evictions += 1
        self._data[key] = value
        self._bytes += cost

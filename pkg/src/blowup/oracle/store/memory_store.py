"""In-process result store, used when no cache directory is configured."""

from typing import Dict, Iterator, Optional

from .base_store import ResultStore


class MemoryResultStore(ResultStore):
    """Dictionary-backed :class:`ResultStore`."""

    def __init__(self) -> None:
        self._records: Dict[str, dict] = {}

    def get(self, key: str) -> Optional[dict]:
        return self._records.get(key)

    def put(self, key: str, record: dict) -> None:
        self._records[key] = dict(record)

    def keys(self) -> Iterator[str]:
        return iter(list(self._records))

    def clear(self) -> int:
        count = len(self._records)
        self._records.clear()
        return count

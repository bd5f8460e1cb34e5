"""JSON-lines file store for oracle results.

Every ``put`` appends one line ``{"key", "timestamp", "record"}``; on load
the last line per key wins, so the file doubles as an audit log.

.. code-block:: python

    from pathlib import Path
    from blowup.oracle.store import JsonlResultStore

    store = JsonlResultStore(Path("~/.cache/blowup").expanduser())
    store.put("ex:5:abc", {"value": 6})
    print(store.get("ex:5:abc"))

"""

import json
import logging
import threading
import time
from pathlib import Path
from typing import Dict, Iterator, Optional

from retry import retry

from .base_store import ResultStore

logger = logging.getLogger(__name__)

CACHE_FILE_NAME = "oracle.jsonl"


class JsonlResultStore(ResultStore):
    """:class:`ResultStore` persisted to ``<cache_dir>/oracle.jsonl``."""

    def __init__(self, cache_dir: Path) -> None:
        """Open (and create if needed) the cache directory.

        :param cache_dir: directory holding the cache file
        """
        self._path = Path(cache_dir) / CACHE_FILE_NAME
        self._lock = threading.Lock()
        self._records: Dict[str, dict] = {}
        self._path.parent.mkdir(parents=True, exist_ok=True)
        self._load()

    @property
    def path(self) -> Path:
        """Location of the JSON-lines file."""
        return self._path

    @retry(OSError, tries=3, delay=0.2)
    def _load(self) -> None:
        self._records.clear()
        if not self._path.exists():
            return
        with self._path.open("r", encoding="utf-8") as handle:
            for number, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    entry = json.loads(line)
                    self._records[entry["key"]] = entry["record"]
                except (json.JSONDecodeError, KeyError, TypeError):
                    logger.warning("Skipping unreadable cache line %s in %s", number, self._path)
        logger.debug("Loaded %s cached records from %s", len(self._records), self._path)

    @retry(OSError, tries=3, delay=0.2)
    def _append(self, line: str) -> None:
        with self._path.open("a", encoding="utf-8") as handle:
            handle.write(line + "\n")

    def get(self, key: str) -> Optional[dict]:
        return self._records.get(key)

    def put(self, key: str, record: dict) -> None:
        entry = {"key": key, "timestamp": time.time(), "record": record}
        line = json.dumps(entry, sort_keys=True)
        with self._lock:
            self._append(line)
            self._records[key] = record
        logger.debug("Cached %s", key)

    def keys(self) -> Iterator[str]:
        return iter(list(self._records))

    @retry(OSError, tries=3, delay=0.2)
    def clear(self) -> int:
        with self._lock:
            count = len(self._records)
            self._path.unlink(missing_ok=True)
            self._records.clear()
        logger.info("Cleared %s cached records from %s", count, self._path)
        return count

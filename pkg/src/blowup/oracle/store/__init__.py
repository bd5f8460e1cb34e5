"""Result stores for the oracle cache."""

from pathlib import Path
from typing import Optional

from .base_store import ResultStore
from .jsonl_store import CACHE_FILE_NAME, JsonlResultStore
from .memory_store import MemoryResultStore


def open_store(cache_dir: Optional[Path]) -> ResultStore:
    """Return a file-backed store for *cache_dir*, or an in-memory one if it is ``None``."""
    if cache_dir is None:
        return MemoryResultStore()
    return JsonlResultStore(cache_dir)

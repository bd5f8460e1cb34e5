"""Runtime settings resolved from the environment and explicit overrides.

``BLOWUP_CACHE_DIR``
    Directory of the oracle cache; ``none`` (or empty) keeps results in memory.
    Defaults to ``~/.cache/blowup``.
``BLOWUP_WORKERS``
    Processes used by the oracle and the definition search; defaults to the
    number of physical cores.
``BLOWUP_PARANOID``
    ``1``/``true``/``yes`` replays cached witnesses before trusting them.
"""

import logging
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Mapping, Optional

import psutil

from .oracle import ResultStore, open_store

logger = logging.getLogger(__name__)

DEFAULT_CACHE_DIR = Path("~/.cache/blowup")
_TRUE = {"1", "true", "yes", "on"}


def default_workers() -> int:
    """Physical core count, at least 1."""
    return max(psutil.cpu_count(logical=False) or 1, 1)


@dataclass(frozen=True)
class Settings:
    """Resolved runtime settings.

    :param cache_dir: cache directory, ``None`` for an in-memory cache
    :param workers: worker processes
    :param paranoid: replay cached oracle results

    """

    cache_dir: Optional[Path]
    workers: int
    paranoid: bool = False

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None, **overrides) -> "Settings":
        """Build settings from *environ* (default ``os.environ``); non-``None`` overrides win.

        :raises ValueError: if ``BLOWUP_WORKERS`` is not a positive integer
        """
        environ = os.environ if environ is None else environ
        raw_dir = environ.get("BLOWUP_CACHE_DIR")
        if raw_dir is None:
            cache_dir: Optional[Path] = DEFAULT_CACHE_DIR.expanduser()
        elif raw_dir.strip().lower() in ("", "none"):
            cache_dir = None
        else:
            cache_dir = Path(raw_dir).expanduser()

        raw_workers = environ.get("BLOWUP_WORKERS")
        if raw_workers is None:
            workers = default_workers()
        else:
            try:
                workers = int(raw_workers)
            except ValueError as err:
                raise ValueError(
                    f"BLOWUP_WORKERS must be an integer, got {raw_workers!r}."
                ) from err
            if workers < 1:
                raise ValueError(f"BLOWUP_WORKERS must be positive, got {workers}.")

        paranoid = environ.get("BLOWUP_PARANOID", "").strip().lower() in _TRUE
        settings = cls(cache_dir=cache_dir, workers=workers, paranoid=paranoid)
        settings = replace(settings, **{k: v for k, v in overrides.items() if v is not None})
        logger.debug("Resolved settings: %s", settings)
        return settings

    def open_store(self) -> ResultStore:
        """Open the result store for :attr:`cache_dir`."""
        return open_store(self.cache_dir)

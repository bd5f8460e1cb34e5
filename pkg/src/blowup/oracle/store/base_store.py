"""Persistence strategies for oracle results."""

from abc import ABC, abstractmethod
from typing import Iterator, Optional


class ResultStore(ABC):
    """Abstract key-value store for JSON-ready oracle records.

    Keys look like ``ex:<n>:<family key>`` or ``nim:<n>:<label>``.
    """

    @abstractmethod
    def get(self, key: str) -> Optional[dict]:
        """Return the latest record stored under *key*.

        :param key: query key
        :return: the record or ``None`` on a miss.
        """

    @abstractmethod
    def put(self, key: str, record: dict) -> None:
        """Store *record* under *key*, replacing any earlier one.

        :param key: query key
        :param record: JSON-serialisable mapping
        """

    @abstractmethod
    def keys(self) -> Iterator[str]:
        """Iterate over the stored keys in insertion order."""

    @abstractmethod
    def clear(self) -> int:
        """Drop every record.

        :return: number of records removed.
        """

    def __contains__(self, key: object) -> bool:
        return isinstance(key, str) and self.get(key) is not None

"""Read and write the graph6 interchange format.

Bit packing is done by networkx. This module checks the input first so that
malformed strings fail with a :class:`Graph6ParseError` carrying the byte
offset, and keeps orders within the kernel's limit.
"""

from typing import List, Tuple

import networkx as nx

from ._base import Graph, MAX_ORDER
from .exceptions import Graph6ParseError

GRAPH6_HEADER = ">>graph6<<"


def to_graph6(graph: Graph, header: bool = False) -> str:
    """Encode *graph* as a graph6 string.

    :param graph: graph to encode
    :param header: prefix the optional ``>>graph6<<`` marker
    :returns: printable ASCII string without trailing newline

    """
    encoded = nx.to_graph6_bytes(graph.to_networkx(), header=header)
    return encoded.decode("ascii").rstrip("\n")


def _check_byte(data: bytes, offset: int) -> int:
    value = data[offset] - 63
    if not 0 <= value < 64:
        raise Graph6ParseError(f"Invalid character {chr(data[offset])!r}.", offset)
    return value


def _decode_order(data: bytes, offset: int) -> Tuple[int, int]:
    if offset >= len(data):
        raise Graph6ParseError("Missing order byte.", offset)
    first = data[offset]
    if not 63 <= first <= 126:
        raise Graph6ParseError(f"Invalid character {chr(first)!r}.", offset)
    if first != 126:
        return first - 63, offset + 1
    if offset + 1 < len(data) and data[offset + 1] == 126:
        raise Graph6ParseError(f"Orders beyond {MAX_ORDER} are not supported.", offset + 1)
    if offset + 4 > len(data):
        raise Graph6ParseError("Truncated order field.", len(data))
    order = 0
    for k in range(offset + 1, offset + 4):
        order = (order << 6) | _check_byte(data, k)
    if order > MAX_ORDER:
        raise Graph6ParseError(
            f"Order {order} exceeds the supported maximum of {MAX_ORDER}.", offset
        )
    return order, offset + 4


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 string.

    Surrounding whitespace and the optional ``>>graph6<<`` header are accepted.

    :param text: encoded graph
    :returns: the decoded graph
    :raises Graph6ParseError: on bad characters, wrong length or nonzero padding;
        the error carries the byte offset of the problem

    """
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as err:
            raise Graph6ParseError("Non-ASCII character.", err.start) from err
    else:
        data = bytes(text)
    data = data.strip()
    start = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER.encode()) else 0
    order, offset = _decode_order(data, start)
    nbits = order * (order - 1) // 2
    expected = (nbits + 5) // 6
    body = data[offset:]
    if len(body) < expected:
        raise Graph6ParseError(
            f"Truncated adjacency data: expected {expected} bytes, got {len(body)}.",
            len(data),
        )
    if len(body) > expected:
        raise Graph6ParseError(
            f"Unexpected trailing data after {expected} adjacency bytes.",
            offset + expected,
        )
    last = 0
    for k in range(offset, len(data)):
        last = _check_byte(data, k)
    padding = expected * 6 - nbits
    if last & ((1 << padding) - 1):
        raise Graph6ParseError("Nonzero padding bits.", len(data) - 1)
    return Graph.from_networkx(nx.from_graph6_bytes(data[start:]))


def read_graph6_lines(text: str) -> List[Graph]:
    """Decode a newline-separated graph6 document, skipping blank lines."""
    return [from_graph6(line) for line in text.splitlines() if line.strip()]

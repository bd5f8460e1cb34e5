"""Small-graph kernel: value type, isomorphism, containment, composition and graph6."""

from typing import Iterable, Optional, Tuple

from ._base import (
    MAX_ORDER,
    ComposeMode,
    Graph,
    bits_to_mask,
    compose,
    disjoint_union,
    iter_bits,
    join,
)
from ._canonical import (
    CanonicalLabel,
    canonical_form,
    canonical_graph,
    canonical_order,
    is_isomorphic,
)
from ._embedding import Embedding, contains_subgraph, iter_embeddings
from ._family import GraphFamily
from ._graph6 import GRAPH6_HEADER, from_graph6, read_graph6_lines, to_graph6
from .exceptions import (
    BlowupError,
    FamilyInvariantError,
    Graph6ParseError,
    GraphSizeError,
    ParameterError,
    ResourceLimitError,
    UnknownTheoremError,
)


def first_member_embedding(
    host: Graph, family: Iterable[Graph], anchor: Optional[int] = None
) -> Optional[Tuple[Graph, Embedding]]:
    """Find the first family member that embeds into *host*.

    :param host: graph searched for copies
    :param family: members tried in iteration order
    :param anchor: only consider copies through this host vertex
    :returns: ``(member, embedding)`` or ``None`` if *host* is family-free

    """
    for member in family:
        embedding = contains_subgraph(host, member, anchor)
        if embedding is not None:
            return member, embedding
    return None

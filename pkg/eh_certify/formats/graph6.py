import logging

import networkx as nx

from eh_certify.errors import FormatError, LimitExceededError
from eh_certify.graph import Graph, from_networkx, to_networkx

_LOGGER = logging.getLogger(__name__)

GRAPH6_MAX_ORDER = 62
HEADER = ">>graph6<<"


def encode_graph6(graph: Graph) -> str:
    """
    Encode a graph as one graph6 line (short form, without header or newline).

    :param graph: Graph of order at most GRAPH6_MAX_ORDER
    :return: graph6 text
    """
    if graph.n > GRAPH6_MAX_ORDER:
        raise LimitExceededError("graph6 order", GRAPH6_MAX_ORDER, graph.n)
    return nx.to_graph6_bytes(to_networkx(graph), header=False).strip().decode('ascii')


def decode_graph6(text: str) -> Graph:
    """
    Decode one graph6 line. An optional ">>graph6<<" header is accepted.

    :param text: graph6 text
    :return: Graph
    """
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise FormatError(0, "empty graph6 string")

    for offset, char in enumerate(line):
        if not 63 <= ord(char) <= 126:
            raise FormatError(offset, f"byte {ord(char)} outside the graph6 range 63..126")

    n = ord(line[0]) - 63
    if n > GRAPH6_MAX_ORDER:
        raise LimitExceededError("graph6 order", GRAPH6_MAX_ORDER, n)
    if n == 0:
        raise FormatError(0, "graph6 string describes a graph without vertices")

    bits = n * (n - 1) // 2
    expected = 1 + -(-bits // 6)
    if len(line) != expected:
        raise FormatError(min(len(line), expected), f"expected {expected} bytes for n={n}, got {len(line)}")
    padding = (expected - 1) * 6 - bits
    if padding and (ord(line[-1]) - 63) & ((1 << padding) - 1):
        raise FormatError(len(line) - 1, "nonzero padding bits")

    graph = from_networkx(nx.from_graph6_bytes(line.encode('ascii')))
    _LOGGER.debug("Decoded graph6 %r", graph)
    return graph

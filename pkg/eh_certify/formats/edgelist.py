"""
Plain edge-list text: a header line "n m", then one "u v" pair per line with 0-indexed
vertex ids. Blank lines and lines starting with '#' are skipped.
"""
import logging
from typing import List, Tuple

from eh_certify.errors import FormatError, InvalidGraphError
from eh_certify.graph import Graph, build_graph

_LOGGER = logging.getLogger(__name__)


def encode_edge_list(graph: Graph) -> str:
    edges = graph.edges()
    lines = [f"{graph.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def decode_edge_list(text: str) -> Graph:
    """
    Parse edge-list text.

    :param text: Edge-list text
    :return: Graph
    """
    rows: List[Tuple[int, Tuple[int, int]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"line {number}", f"expected two integers, got {line!r}")
        try:
            rows.append((number, (int(fields[0]), int(fields[1]))))
        except ValueError as err:
            raise FormatError(f"line {number}", f"expected two integers, got {line!r}") from err

    if not rows:
        raise FormatError("line 1", "missing 'n m' header")
    header_line, (n, m) = rows[0]
    edges = rows[1:]
    if n < 1 or m < 0:
        raise FormatError(f"line {header_line}", f"invalid header n={n} m={m}")
    if len(edges) != m:
        raise FormatError(f"line {header_line}", f"header announces {m} edges, found {len(edges)}")

    for number, (u, v) in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {number}", f"vertex out of range for n={n}")
        if u == v:
            raise FormatError(f"line {number}", f"self-loop at vertex {u}")

    try:
        graph = build_graph(n, [edge for _, edge in edges])
    except InvalidGraphError as err:
        raise FormatError(f"line {header_line}", err.message) from err
    _LOGGER.debug("Decoded edge list %r", graph)
    return graph

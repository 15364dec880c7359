"""
Brute-force induced-subgraph oracles.

Searches visit candidate vertices in ascending id order, so certificates are reproducible.
"""
import logging
from itertools import combinations, permutations
from typing import List, Optional

import numpy as np

from eh_certify.errors import LimitExceededError
from eh_certify.graph import Graph, complement, path_graph
from eh_certify.models import PatternEmbedding, PatternQueryResult

_LOGGER = logging.getLogger(__name__)

PATTERN_SIZE_LIMIT = 10
UNIVERSALITY_LIMIT = 5


def find_induced_path(graph: Graph, k: int) -> PatternQueryResult:
    """
    Search for an induced path on exactly k vertices.

    Partial paths are extended by a neighbor of the last vertex that is neither on the
    path nor adjacent to any earlier path vertex.

    :param graph: Host graph
    :param k: Path order (at least 1)
    :return: Query result; the embedding maps P_k onto root ids
    """
    if k < 1:
        raise ValueError(f"Path order must be positive, got {k}")

    explored = 0
    if k > graph.n:
        return PatternQueryResult(False, None, explored)

    adj = graph.adj
    closed = adj | np.eye(graph.n, dtype=bool)

    def extend(path: List[int], blocked: np.ndarray) -> Optional[List[int]]:
        nonlocal explored
        explored += 1
        if len(path) == k:
            return path
        candidates = adj[path[-1]] & ~blocked
        for v in np.flatnonzero(candidates).tolist():
            found = extend(path + [v], blocked | closed[path[-1]])
            if found:
                return found
        return None

    for start in range(graph.n):
        blocked = np.zeros(graph.n, dtype=bool)
        blocked[start] = True
        path = extend([start], blocked)
        if path:
            _LOGGER.debug("Induced P%d found after %d nodes", k, explored)
            embedding = PatternEmbedding(f"P{k}", path_graph(k), graph.to_root(path))
            return PatternQueryResult(True, embedding, explored)

    _LOGGER.debug("No induced P%d in %r after %d nodes", k, graph, explored)
    return PatternQueryResult(False, None, explored)


def contains_induced(graph: Graph, pattern: Graph, name: Optional[str] = None) -> PatternQueryResult:
    """
    Search for an induced copy of a small pattern graph.

    Pattern vertices are placed in order; a host vertex is a candidate when its
    adjacency to the already placed images matches the pattern exactly and its degree
    and co-degree are large enough for the pattern vertex it would host.

    :param graph: Host graph
    :param pattern: Pattern graph (at most PATTERN_SIZE_LIMIT vertices)
    :param name: Label stored in the embedding
    :return: Query result
    """
    if pattern.n > PATTERN_SIZE_LIMIT:
        raise LimitExceededError("pattern order", PATTERN_SIZE_LIMIT, pattern.n)

    explored = 0
    if pattern.n > graph.n:
        return PatternQueryResult(False, None, explored)

    host_degree = graph.degrees()
    host_codegree = graph.n - 1 - host_degree
    pattern_degree = pattern.degrees()
    pattern_codegree = pattern.n - 1 - pattern_degree
    fits = [(host_degree >= pattern_degree[i]) & (host_codegree >= pattern_codegree[i]) for i in range(pattern.n)]

    def place(mapping: List[int], used: np.ndarray) -> Optional[List[int]]:
        nonlocal explored
        explored += 1
        level = len(mapping)
        if level == pattern.n:
            return mapping
        candidates = fits[level] & ~used
        if level:
            candidates &= np.all(graph.adj[:, mapping] == pattern.adj[level, :level], axis=1)
        for v in np.flatnonzero(candidates).tolist():
            used[v] = True
            found = place(mapping + [v], used)
            used[v] = False
            if found:
                return found
        return None

    mapping = place([], np.zeros(graph.n, dtype=bool))
    if mapping is None:
        return PatternQueryResult(False, None, explored)

    label = name or f"H{pattern.n}"
    return PatternQueryResult(True, PatternEmbedding(label, pattern, graph.to_root(mapping)), explored)


def is_pk_copk_free(graph: Graph, k: int) -> Optional[PatternEmbedding]:
    """
    Check membership in the class of graphs inducing neither P_k nor co-P_k.

    :param graph: Graph
    :param k: Path order (at least 2)
    :return: None if the graph is free; otherwise the first certificate (P_k is searched first)
    """
    if k < 2:
        raise ValueError(f"Path order must be at least 2, got {k}")

    result = find_induced_path(graph, k)
    if result.found:
        return result.embedding

    result = find_induced_path(complement(graph), k)
    if result.found:
        return PatternEmbedding(f"co-P{k}", complement(path_graph(k)), result.embedding.mapping)

    return None


def universality_check(graph: Graph, k: int) -> Optional[Graph]:
    """
    Check whether every labeled graph on k vertices is an induced subgraph.

    :param graph: Graph
    :param k: Pattern order (at most UNIVERSALITY_LIMIT)
    :return: None if universal; otherwise the first missing labeled pattern
    """
    if k > UNIVERSALITY_LIMIT:
        raise LimitExceededError("universality order", UNIVERSALITY_LIMIT, k)
    if k < 1:
        raise ValueError(f"Pattern order must be positive, got {k}")

    pairs = list(combinations(range(k), 2))
    total = 2 ** len(pairs)

    seen = set()
    if k <= graph.n:
        for subset in combinations(range(graph.n), k):
            seen.add(_pattern_code(graph, subset, pairs))
            if len(seen) == total:
                break

    orderings = list(permutations(range(k)))
    for code in range(total):
        pattern = _pattern_graph(k, code, pairs)
        if not any(_pattern_code(pattern, order, pairs) in seen for order in orderings):
            _LOGGER.debug("Missing labeled %d-graph with code %d (%d of %d codes seen)", k, code, len(seen), total)
            return pattern

    _LOGGER.debug("Graph %r is %d-universal", graph, k)
    return None


def _pattern_code(graph: Graph, vertices, pairs) -> int:
    code = 0
    for bit, (i, j) in enumerate(pairs):
        if graph.adj[vertices[i], vertices[j]]:
            code |= 1 << bit
    return code


def _pattern_graph(k: int, code: int, pairs) -> Graph:
    adj = np.zeros((k, k), dtype=bool)
    for bit, (i, j) in enumerate(pairs):
        if code >> bit & 1:
            adj[i, j] = adj[j, i] = True
    return Graph(adj)

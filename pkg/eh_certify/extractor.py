"""
Long induced path or large empty bipartite pair, from a connected graph of bounded
closed degree.

The thresholds stay absolute through the recursion: T is the side size an empty pair
must reach and D bounds every closed degree. A returned path starting at x has at least
⌈n/(2(T+D))⌉ vertices.
"""
import logging
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from eh_certify.errors import PreconditionError
from eh_certify.graph import Graph, VertexSet, components, induced
from eh_certify.models import BipartiteKind, BipartitePairWitness, ExtractorParams, InducedPathWitness

_LOGGER = logging.getLogger(__name__)


def path_or_empty_bipartite(graph: Graph,
                            start: int,
                            params: ExtractorParams,
                            depth_log: Optional[List[int]] = None
                            ) -> Union[InducedPathWitness, BipartitePairWitness]:
    """
    Either an induced path starting at `start` or an empty bipartite pair with both sides >= T.

    :param graph: Connected graph whose closed degrees are all at most D
    :param start: Local id of the start vertex
    :param params: Absolute thresholds T and D
    :param depth_log: If given, receives the graph order at each level of the recursion
    :return: Witness in root ids
    """
    side_target, degree_bound = params
    if side_target < 1 or degree_bound < 1:
        raise ValueError(f"Thresholds must be positive, got T={side_target}, D={degree_bound}")
    if not 0 <= start < graph.n:
        raise PreconditionError("path_or_empty_bipartite", f"start vertex {start} out of range", start)
    if len(components(graph)) != 1:
        raise PreconditionError("path_or_empty_bipartite", "graph is not connected")
    closed_degrees = graph.degrees() + 1
    offender = int(np.argmax(closed_degrees))
    if closed_degrees[offender] > degree_bound:
        raise PreconditionError("path_or_empty_bipartite",
                                f"vertex {offender} has closed degree {closed_degrees[offender]} > D={degree_bound}",
                                offender)

    prefix: List[int] = []
    current, x = graph, start
    while True:
        n = current.n
        if depth_log is not None:
            depth_log.append(n)

        if 3 * side_target + degree_bound >= n:
            tail = [x] if n == 1 else [x, current.neighbors(x)[0]]
            path = InducedPathWitness(tuple(prefix) + current.to_root(tail))
            _LOGGER.debug("Base case at order %d: path of %d vertices", n, len(path.vertices))
            return path

        neighborhood = set(current.closed_neighborhood(x))
        outside = [v for v in range(n) if v not in neighborhood]
        outside_view = induced(current, outside)
        parts = [tuple(outside[v] for v in comp) for comp in components(outside_view)]
        largest = parts[0]

        if len(largest) >= n - degree_bound - side_target:
            largest_set = set(largest)
            y = next(v for v in sorted(neighborhood)
                     if any(u in largest_set for u in current.neighbors(v)))
            _LOGGER.debug("Order %d: component of %d keeps the path going through %d", n, len(largest), y)
            prefix.append(current.to_root([x])[0])
            current = induced(current, [y] + list(largest))
            x = _local_index([y] + list(largest), y)
            assert len(components(current)) == 1
            assert int(current.degrees().max(initial=0)) + 1 <= degree_bound
            continue

        if len(largest) >= side_target:
            rest = sorted(set(outside) - set(largest))
            _LOGGER.debug("Order %d: component of %d against %d others", n, len(largest), len(rest))
            return BipartitePairWitness(BipartiteKind.EMPTY, current.to_root(largest), current.to_root(rest))

        side_a, side_b = split_small_components(parts, side_target, len(outside))
        _LOGGER.debug("Order %d: %d small components split into %d and %d",
                      n, len(parts), len(side_a), len(side_b))
        return BipartitePairWitness(BipartiteKind.EMPTY, current.to_root(side_a), current.to_root(side_b))


def split_small_components(comps: Sequence[Sequence[int]], side_target: int, universe_size: int
                           ) -> Tuple[VertexSet, VertexSet]:
    """
    Pack whole components into side A, in order, until |A| >= T; B gets the rest.

    :param comps: Components in their deterministic order, each of size at most T
    :param side_target: T
    :param universe_size: Total number of vertices over all components (at least 3T)
    :return: (A, B) with T <= |A| < 2T and |B| >= T
    """
    if universe_size < 3 * side_target:
        raise PreconditionError("split_small_components",
                                f"{universe_size} vertices cannot give two sides of {side_target} here")
    for comp in comps:
        if len(comp) > side_target or len(comp) > universe_size - side_target:
            raise PreconditionError("split_small_components",
                                    f"component of {len(comp)} is too large to split around T={side_target}")

    side_a: List[int] = []
    taken = 0
    for comp in comps:
        if len(side_a) >= side_target:
            break
        side_a.extend(comp)
        taken += 1
    side_b = [v for comp in comps[taken:] for v in comp]
    return tuple(sorted(side_a)), tuple(sorted(side_b))


def path_bound(n: int, params: ExtractorParams) -> int:
    """⌈n/(2(T+D))⌉, the guaranteed path order"""
    return -(-n // (2 * (params.side_target + params.degree_bound)))


def _local_index(vertices: Sequence[int], vertex: int) -> int:
    return sorted(set(vertices)).index(vertex)

import logging
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import List, Optional, Sequence

import numpy as np

from eh_certify.errors import LimitExceededError
from eh_certify.graph import Graph, VertexSet, complement
from eh_certify.models import (DeltaBound, HomogeneousKind, HomogeneousSetWitness, HomogeneousStrategy,
                               TrichotomyCase, TrichotomyResult)
from eh_certify.patterns import universality_check

_LOGGER = logging.getLogger(__name__)

EXACT_STRATEGY_LIMIT = 20


def find_epsilon_homogeneous(graph: Graph,
                             epsilon: Fraction,
                             target: int,
                             strategy: HomogeneousStrategy = HomogeneousStrategy.GREEDY_PEEL,
                             kinds: Optional[Sequence[HomogeneousKind]] = None) -> Optional[HomogeneousSetWitness]:
    """
    Find an ε-stable set or ε-clique with at least `target` vertices.

    :param graph: Graph
    :param epsilon: Density allowance in [0, 1]
    :param target: Required size, 1..n
    :param strategy: EXACT (complete, n <= 20), GREEDY_PEEL or TRIVIAL
    :param kinds: Restrict the search to these kinds (both by default)
    :return: Witness in root ids, or None if the strategy found nothing large enough
    """
    epsilon = Fraction(epsilon)
    if not 0 <= epsilon <= 1:
        raise ValueError(f"Epsilon must be in [0, 1], got {epsilon}")
    if not 1 <= target <= graph.n:
        raise ValueError(f"Target must be in [1, {graph.n}], got {target}")
    kinds = tuple(kinds) if kinds else (HomogeneousKind.STABLE, HomogeneousKind.CLIQUE)

    if strategy is HomogeneousStrategy.EXACT:
        found = _exact(graph, epsilon, target, kinds)
    elif strategy is HomogeneousStrategy.GREEDY_PEEL:
        found = _greedy(graph, epsilon, target, kinds)
    elif strategy is HomogeneousStrategy.TRIVIAL:
        found = (HomogeneousKind.STABLE, [0]) if target == 1 and HomogeneousKind.STABLE in kinds else None
    else:
        raise ValueError(f"Invalid strategy {strategy}")

    if found is None:
        _LOGGER.debug("%s strategy found no %s-homogeneous set of size %d", strategy.value, epsilon, target)
        return None

    kind, members = found
    edges = int(graph.adj[np.ix_(members, members)].sum()) // 2
    _LOGGER.debug("%s strategy found %s set of size %d with %d edges", strategy.value, kind.value, len(members), edges)
    return HomogeneousSetWitness(kind, graph.to_root(members), epsilon, edges)


def _exact(graph: Graph, epsilon: Fraction, target: int, kinds):
    if graph.n > EXACT_STRATEGY_LIMIT:
        raise LimitExceededError("exact strategy order", EXACT_STRATEGY_LIMIT, graph.n)

    masks = [sum(1 << u for u in graph.neighbors(v)) for v in range(graph.n)]
    # Largest size first; at equal size a stable set beats a clique
    for size in range(graph.n, target - 1, -1):
        pairs = comb(size, 2)
        allowance = epsilon * pairs
        for kind in (HomogeneousKind.STABLE, HomogeneousKind.CLIQUE):
            if kind not in kinds:
                continue
            for subset in combinations(range(graph.n), size):
                subset_mask = sum(1 << v for v in subset)
                edges = sum((masks[v] & subset_mask).bit_count() for v in subset) // 2
                excess = edges if kind is HomogeneousKind.STABLE else pairs - edges
                if excess <= allowance:
                    return kind, list(subset)
    return None


def _greedy(graph: Graph, epsilon: Fraction, target: int, kinds):
    candidates = []
    if HomogeneousKind.STABLE in kinds:
        candidates.append((HomogeneousKind.STABLE, _peel(graph.adj, epsilon)))
    if HomogeneousKind.CLIQUE in kinds:
        candidates.append((HomogeneousKind.CLIQUE, _peel(complement(graph).adj, epsilon)))

    # Ties go to the stable set
    kind, members = max(candidates, key=lambda candidate: len(candidate[1]))
    if len(members) < target:
        return None
    return kind, members


def _peel(adj: np.ndarray, epsilon: Fraction) -> List[int]:
    """Delete a maximum-degree vertex (smallest id on ties) until the density is at most epsilon"""
    alive = np.ones(adj.shape[0], dtype=bool)
    degree = adj.sum(axis=1).astype(np.int64)
    size = adj.shape[0]
    edges = int(degree.sum()) // 2
    while edges > epsilon * comb(size, 2):
        masked = np.where(alive, degree, -1)
        victim = int(np.argmax(masked))
        alive[victim] = False
        edges -= int(degree[victim])
        degree -= adj[victim]
        size -= 1
    return np.flatnonzero(alive).tolist()


def prune_high_degree(graph: Graph, vertices: Sequence[int], epsilon: Fraction) -> VertexSet:
    """
    Drop, in a single pass, every vertex whose degree inside the set exceeds 2εs.

    The threshold uses the original size s. If the set is ε-stable, at most half of it
    is removed.

    :param graph: Graph
    :param vertices: Nonempty set of local vertex ids
    :param epsilon: Density allowance
    :return: Remaining local vertex ids, ascending
    """
    members = sorted(vertices)
    if not members:
        raise ValueError("Cannot prune an empty vertex set")

    threshold = 2 * Fraction(epsilon) * len(members)
    inner_degree = graph.adj[np.ix_(members, members)].sum(axis=1)
    kept = tuple(v for v, d in zip(members, inner_degree.tolist()) if d <= threshold)
    _LOGGER.debug("Pruned %d of %d vertices above degree %s", len(members) - len(kept), len(members), threshold)
    return kept


def fox_sudakov_delta(k: int, epsilon: Fraction) -> DeltaBound:
    """
    δ = 2^(-15k·log2(1/ε)^2).

    :param k: Pattern order (at least 1)
    :param epsilon: Density allowance in (0, 1]
    :return: δ with its exponent kept exact where possible
    """
    epsilon = Fraction(epsilon)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if not 0 < epsilon <= 1:
        raise ValueError(f"Epsilon must be in (0, 1], got {epsilon}")
    return DeltaBound(k, epsilon)


def trichotomy(graph: Graph,
               k: int,
               epsilon: Fraction,
               strategy: HomogeneousStrategy = HomogeneousStrategy.GREEDY_PEEL) -> TrichotomyResult:
    """
    Either every labeled k-graph is induced, or there is an ε-stable set or ε-clique of
    size at least ⌈δn⌉ with δ from `fox_sudakov_delta`.

    :param graph: Graph
    :param k: Pattern order (at most 5)
    :param epsilon: Density allowance in (0, 1]
    :param strategy: Homogeneous set strategy
    :return: Which case holds, with its witness
    """
    delta = fox_sudakov_delta(k, epsilon)
    missing = universality_check(graph, k)
    if missing is None:
        return TrichotomyResult(TrichotomyCase.UNIVERSAL, None, None)

    target = delta.ceil_times(graph.n)
    witness = find_epsilon_homogeneous(graph, epsilon, target, strategy)
    if witness is None:
        return TrichotomyResult(TrichotomyCase.NONE, None, missing)
    case = TrichotomyCase.STABLE if witness.kind is HomogeneousKind.STABLE else TrichotomyCase.CLIQUE
    return TrichotomyResult(case, witness, missing)

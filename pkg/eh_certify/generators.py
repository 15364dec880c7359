"""
Seeded graph families.

Every graph is drawn from its own PCG64 stream, seeded by SeedSequence(seed,
spawn_key=(index,)), so a corpus is reproducible one graph at a time.
"""
import logging
from fractions import Fraction
from typing import List

import numpy as np

from eh_certify.errors import BudgetExhaustedError, LimitExceededError
from eh_certify.graph import Graph, build_graph, complete_graph, empty_graph, path_graph
from eh_certify.models import Family, GeneratorSpec, RejectionSample
from eh_certify.patterns import is_pk_copk_free

_LOGGER = logging.getLogger(__name__)

REJECTION_ORDER_LIMIT = 40


def stream(seed: int, index: int = 0) -> np.random.Generator:
    """PCG64 generator for graph `index` of the corpus seeded with `seed`"""
    if seed < 0 or index < 0:
        raise ValueError(f"Seed and index must be non-negative, got seed={seed}, index={index}")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))


def generate(spec: GeneratorSpec, index: int = 0) -> Graph:
    """
    Draw graph `index` of the family described by `spec`.

    :param spec: Family and parameters
    :param index: Position in the corpus
    :return: Graph
    """
    if spec.n < 1:
        raise ValueError(f"n must be positive, got {spec.n}")
    p = Fraction(spec.p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must be in [0, 1], got {p}")

    family = spec.family
    n = spec.n
    if family is Family.GNP:
        graph = gnp(n, p, stream(spec.seed, index))
    elif family is Family.COGRAPH:
        graph = random_cograph(n, stream(spec.seed, index))
    elif family is Family.CK_REJECTION:
        graph = rejection_sample_ck(n, spec.k, p, spec.seed, spec.budget, index).graph
    elif family is Family.EMPTY:
        graph = empty_graph(n)
    elif family is Family.PATH:
        graph = path_graph(n)
    elif family is Family.CYCLE:
        if n < 3:
            raise ValueError(f"A cycle needs at least 3 vertices, got {n}")
        graph = build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    elif family is Family.COMPLETE:
        graph = complete_graph(n)
    elif family is Family.COMPLETE_BIPARTITE:
        m = n // 2 if spec.m is None else spec.m
        if not 0 <= m <= n:
            raise ValueError(f"First side must be in [0, {n}], got {m}")
        graph = build_graph(n, [(u, v) for u in range(m) for v in range(m, n)])
    elif family is Family.FRIENDSHIP:
        if n % 2 == 0:
            raise ValueError(f"A friendship graph has an odd order, got {n}")
        triangles = (n - 1) // 2
        edges = []
        for t in range(triangles):
            a, b = 2 * t + 1, 2 * t + 2
            edges.extend([(0, a), (0, b), (a, b)])
        graph = build_graph(n, edges)
    else:
        raise ValueError(f"Invalid family {family}")

    _LOGGER.debug("Generated %s graph %d: %r", family.value, index, graph)
    return graph


def gnp(n: int, p: Fraction, rng: np.random.Generator) -> Graph:
    """Each pair independently present with the exact rational probability p"""
    p = Fraction(p)
    draws = rng.integers(0, p.denominator, size=(n, n)) < p.numerator
    upper = np.triu(draws, 1)
    return Graph(upper | upper.T)


def random_cograph(n: int, rng: np.random.Generator) -> Graph:
    """
    Cograph from a random cotree: each internal node splits its vertices at a uniform
    point and is a union or a join with probability 1/2. Labels are then shuffled.
    """
    adj = np.zeros((n, n), dtype=bool)
    pending: List[range] = [range(n)]
    while pending:
        block = pending.pop()
        if len(block) < 2:
            continue
        cut = block.start + int(rng.integers(1, len(block)))
        left, right = range(block.start, cut), range(cut, block.stop)
        if rng.integers(0, 2):
            adj[left.start:left.stop, right.start:right.stop] = True
            adj[right.start:right.stop, left.start:left.stop] = True
        pending.extend([left, right])

    order = rng.permutation(n)
    return Graph(adj[np.ix_(order, order)])


def rejection_sample_ck(n: int, k: int, p: Fraction, seed: int, budget: int, index: int = 0) -> RejectionSample:
    """
    Draw G(n, p) graphs until one induces neither P_k nor co-P_k.

    :param n: Order (at most REJECTION_ORDER_LIMIT)
    :param k: Forbidden path order
    :param p: Edge probability
    :param seed: Corpus seed
    :param budget: Maximum number of draws
    :param index: Position in the corpus
    :return: Certified graph and the number of draws it took
    """
    if n > REJECTION_ORDER_LIMIT:
        raise LimitExceededError("rejection sampling order", REJECTION_ORDER_LIMIT, n)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if budget < 0:
        raise ValueError(f"Budget must be non-negative, got {budget}")

    rng = stream(seed, index)
    for draw in range(1, budget + 1):
        graph = gnp(n, p, rng)
        if is_pk_copk_free(graph, k) is None:
            _LOGGER.debug("Certified P%d/co-P%d-free graph of order %d after %d draws", k, k, n, draw)
            return RejectionSample(graph, k, draw)

    raise BudgetExhaustedError(budget)

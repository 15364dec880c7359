from fractions import Fraction

import numpy as np
from hypothesis import strategies as st

from eh_certify.generators import generate, stream
from eh_certify.graph import Graph, build_graph, complete_graph, path_graph
from eh_certify.models import Family, GeneratorSpec


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m: int, n: int) -> Graph:
    return build_graph(m + n, [(u, v) for u in range(m) for v in range(m, m + n)])


def two_triangles() -> Graph:
    """Triangles 0-1-2 and 3-4-5 joined by the bridge 2-3"""
    return build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


def disjoint_triangles() -> Graph:
    return build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def spider(legs: int, length: int) -> Graph:
    """Center 0 with `legs` paths of `length` vertices each; leg i uses ids 1 + i*length .. (i+1)*length"""
    edges = []
    for leg in range(legs):
        first = 1 + leg * length
        edges.append((0, first))
        edges.extend((first + j, first + j + 1) for j in range(length - 1))
    return build_graph(1 + legs * length, edges)


def short_spider(legs: int) -> Graph:
    """Center 0, inner vertices 1..legs on the center, outer vertex i + legs hanging off inner vertex i"""
    edges = [(0, i) for i in range(1, legs + 1)] + [(i, i + legs) for i in range(1, legs + 1)]
    return build_graph(1 + 2 * legs, edges)


def k4_minus_edge() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def triangle_with_isolated(isolated: int) -> Graph:
    return build_graph(3 + isolated, [(0, 1), (1, 2), (0, 2)])


def seeded(family: Family, n: int, count: int, seed: int = 7, p: Fraction = Fraction(1, 2)):
    spec = GeneratorSpec(family, n, p, seed=seed)
    return [generate(spec, index) for index in range(count)]


def varied(family: Family, count: int, seed: int, max_n: int, min_n: int = 1, p: Fraction = Fraction(1, 2)):
    """Seeded corpus whose order is drawn per index from min_n..max_n"""
    graphs = []
    for index in range(count):
        n = int(stream(seed, index).integers(min_n, max_n + 1))
        graphs.append(generate(GeneratorSpec(family, n, p, seed=seed), index))
    return graphs


def balanced_cograph(levels: int, rng: np.random.Generator) -> Graph:
    """Cograph on 2**levels vertices whose cotree halves every block; labels shuffled"""
    n = 2 ** levels
    adj = np.zeros((n, n), dtype=bool)
    pending = [range(n)]
    while pending:
        block = pending.pop()
        if len(block) < 2:
            continue
        middle = block.start + len(block) // 2
        left, right = range(block.start, middle), range(middle, block.stop)
        if rng.integers(0, 2):
            adj[left.start:left.stop, right.start:right.stop] = True
            adj[right.start:right.stop, left.start:left.stop] = True
        pending.extend([left, right])
    order = rng.permutation(n)
    return Graph(adj[np.ix_(order, order)])


@st.composite
def small_graphs(draw, min_n: int = 1, max_n: int = 9):
    """Hypothesis strategy for arbitrary simple graphs of small order"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    adj = np.zeros((n, n), dtype=bool)
    rows, cols = np.triu_indices(n, 1)
    adj[rows, cols] = bits
    return Graph(adj | adj.T)


__all__ = ["cycle", "complete_bipartite", "two_triangles", "disjoint_triangles", "spider", "short_spider",
           "k4_minus_edge", "triangle_with_isolated", "seeded", "varied", "balanced_cograph", "small_graphs",
           "complete_graph", "path_graph"]

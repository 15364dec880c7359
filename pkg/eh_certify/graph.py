from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from eh_certify.errors import InvalidGraphError

VertexSet = Tuple[int, ...]


class Graph:
    """
    Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is a symmetric boolean matrix with a zero diagonal. Graphs produced by
    `induced` remember, for each local vertex, the vertex id of the graph they were
    cut from (composed all the way up), so witnesses can be stated in root ids.
    """
    __slots__ = ('_adj', '_origin', '_inverse')

    def __init__(self, adj: np.ndarray, origin: Optional[Sequence[int]] = None):
        matrix = np.array(adj, dtype=bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidGraphError(f"adjacency must be square, got shape {matrix.shape}")
        if matrix.shape[0] < 1:
            raise InvalidGraphError("a graph needs at least one vertex")
        loops = np.flatnonzero(matrix.diagonal())
        if loops.size:
            raise InvalidGraphError(f"self-loop at vertex {loops[0]}", int(loops[0]))
        if not np.array_equal(matrix, matrix.T):
            rows, _ = np.nonzero(matrix != matrix.T)
            raise InvalidGraphError(f"adjacency is not symmetric at vertex {rows[0]}", int(rows[0]))

        if origin is not None:
            origin = tuple(int(v) for v in origin)
            if len(origin) != matrix.shape[0]:
                raise InvalidGraphError("origin must map every vertex")
            if len(set(origin)) != len(origin):
                raise InvalidGraphError("origin must be injective")

        matrix.flags.writeable = False
        self._adj: np.ndarray = matrix
        self._origin: Optional[Tuple[int, ...]] = origin
        self._inverse: Optional[Dict[int, int]] = None

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adj(self) -> np.ndarray:
        """Read-only adjacency matrix"""
        return self._adj

    @property
    def origin(self) -> Optional[Tuple[int, ...]]:
        return self._origin

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def neighbors(self, v: int) -> VertexSet:
        return tuple(np.flatnonzero(self._adj[v]).tolist())

    def closed_neighborhood(self, v: int) -> VertexSet:
        """N[v]: the vertex together with its neighbors"""
        row = self._adj[v].copy()
        row[v] = True
        return tuple(np.flatnonzero(row).tolist())

    def degree(self, v: int) -> int:
        return int(self._adj[v].sum())

    def closed_degree(self, v: int) -> int:
        return self.degree(v) + 1

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1)

    def edge_count(self) -> int:
        return int(self._adj.sum()) // 2

    def edges(self) -> List[Tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(self._adj, 1))
        return list(zip(rows.tolist(), cols.tolist()))

    def to_root(self, vertices: Iterable[int]) -> VertexSet:
        """Translate local vertex ids to ids of the outermost ancestor graph"""
        if self._origin is None:
            return tuple(int(v) for v in vertices)
        return tuple(self._origin[v] for v in vertices)

    def to_local(self, root_ids: Iterable[int]) -> VertexSet:
        """Translate root vertex ids back to this graph's local ids"""
        if self._origin is None:
            local = tuple(int(v) for v in root_ids)
            for v in local:
                if not 0 <= v < self.n:
                    raise InvalidGraphError(f"vertex {v} is not in the graph", v)
            return local

        if self._inverse is None:
            self._inverse = {root: local for local, root in enumerate(self._origin)}
        try:
            return tuple(self._inverse[v] for v in root_ids)
        except KeyError as err:
            raise InvalidGraphError(f"vertex {err.args[0]} is not in the graph", err.args[0]) from err

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._origin == other._origin and np.array_equal(self._adj, other._adj)

    __hash__ = None

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def build_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """
    Build a graph from an edge list. Duplicate edges collapse.

    :param n: Vertex count (at least 1)
    :param edges: Unordered vertex id pairs
    :return: Graph
    """
    if n < 1:
        raise InvalidGraphError(f"a graph needs at least one vertex, got n={n}")

    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        for vertex in (u, v):
            if not 0 <= vertex < n:
                raise InvalidGraphError(f"vertex {vertex} out of range for n={n}", vertex)
        if u == v:
            raise InvalidGraphError(f"self-loop at vertex {u}", u)
        adj[u, v] = adj[v, u] = True

    return Graph(adj)


def empty_graph(n: int) -> Graph:
    return Graph(np.zeros((n, n), dtype=bool))


def complete_graph(n: int) -> Graph:
    return complement(empty_graph(n))


def path_graph(k: int) -> Graph:
    """P_k, the path a_0 - a_1 - ... - a_{k-1}"""
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def complement(graph: Graph) -> Graph:
    """
    Complement of the graph. Origin is preserved.

    :param graph: Graph
    :return: Graph with every off-diagonal entry flipped
    """
    flipped = ~graph.adj
    np.fill_diagonal(flipped, False)
    return Graph(flipped, graph.origin)


def induced(graph: Graph, vertices: Iterable[int]) -> Graph:
    """
    Induced subgraph on the given local vertex ids.

    Local ids of the result follow ascending order of the selected vertices, and
    the origin composes with the parent's so `to_root` reaches the outermost graph.

    :param graph: Parent graph
    :param vertices: Nonempty set of parent vertex ids
    :return: Induced subgraph with back-mapping
    """
    selected = sorted(set(int(v) for v in vertices))
    if not selected:
        raise InvalidGraphError("induced subgraph needs a nonempty vertex set")
    for v in selected:
        if not 0 <= v < graph.n:
            raise InvalidGraphError(f"vertex {v} out of range for n={graph.n}", v)

    index = np.array(selected)
    return Graph(graph.adj[np.ix_(index, index)], graph.to_root(selected))


def components(graph: Graph) -> List[VertexSet]:
    """
    Connected components ordered by size descending, then smallest member ascending.

    :param graph: Graph
    :return: Partition of the vertex ids into components
    """
    adj = graph.adj
    seen = np.zeros(graph.n, dtype=bool)
    result = []
    for root in range(graph.n):
        if seen[root]:
            continue
        member = np.zeros(graph.n, dtype=bool)
        member[root] = True
        frontier = member.copy()
        while frontier.any():
            reached = adj[frontier].any(axis=0) & ~member
            member |= reached
            frontier = reached
        seen |= member
        result.append(tuple(np.flatnonzero(member).tolist()))

    result.sort(key=lambda comp: (-len(comp), comp[0]))
    return result


def is_connected(graph: Graph) -> bool:
    return len(components(graph)) == 1


def to_networkx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges())
    return result


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """Build a graph from a networkx graph, relabelling nodes 0..n-1 in node order"""
    if nx_graph.is_directed() or nx_graph.is_multigraph():
        raise InvalidGraphError("only simple undirected graphs are supported")
    labels = {node: idx for idx, node in enumerate(nx_graph.nodes())}
    return build_graph(len(labels), [(labels[u], labels[v]) for u, v in nx_graph.edges()])

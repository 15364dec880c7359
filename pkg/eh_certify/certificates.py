"""
Independent verifiers for every witness type.

Verifiers only query adjacency of the graph they are given and recount everything
themselves; witness bookkeeping (stated sizes, edge counts) is never trusted.
Checks run in a fixed order: range, distinctness, adjacency, count.
"""
import logging
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from eh_certify.graph import Graph
from eh_certify.models import (BipartiteKind, BipartitePairWitness, HomogeneousKind, HomogeneousSetWitness,
                               InducedPathWitness, PatternEmbedding, Verdict, Violation, Witness)

_LOGGER = logging.getLogger(__name__)


def verify_induced_path(graph: Graph, witness: InducedPathWitness) -> Verdict:
    """
    Check that the vertices form an induced path in the listed order.

    :param graph: Graph the witness ids refer to
    :param witness: Path witness
    :return: Verdict
    """
    path = list(witness.vertices)
    rejection = _check_range(graph, path, "path") or _check_distinct(path, "path")
    if rejection:
        return rejection

    block = graph.adj[np.ix_(path, path)]
    expected = np.eye(len(path), k=1, dtype=bool) | np.eye(len(path), k=-1, dtype=bool)
    mismatch = np.argwhere(np.triu(block != expected, 1))
    if mismatch.size:
        i, j = mismatch[0]
        if j == i + 1:
            message = f"consecutive vertices {path[i]} and {path[j]} are not adjacent"
        else:
            message = f"vertices {path[i]} and {path[j]} at positions {i} and {j} are adjacent"
        return Verdict(False, Violation.ADJACENCY, message)

    return Verdict(True, None, f"induced path on {len(path)} vertices", (len(path),))


def verify_bipartite_pair(graph: Graph, witness: BipartitePairWitness) -> Verdict:
    """
    Check disjointness of the sides and the cross-edge condition.

    :param graph: Graph the witness ids refer to
    :param witness: Bipartite pair witness
    :return: Verdict with side sizes
    """
    side_x, side_y = list(witness.x), list(witness.y)
    rejection = (_check_range(graph, side_x, "X") or _check_range(graph, side_y, "Y")
                 or _check_distinct(side_x, "X") or _check_distinct(side_y, "Y"))
    if rejection:
        return rejection

    overlap = sorted(set(side_x) & set(side_y))
    if overlap:
        return Verdict(False, Violation.DISTINCTNESS, f"X and Y share vertex {overlap[0]}")

    cross = graph.adj[np.ix_(side_x, side_y)]
    if witness.kind is BipartiteKind.COMPLETE:
        offending = np.argwhere(~cross)
        condition = "not adjacent"
    else:
        offending = np.argwhere(cross)
        condition = "adjacent"
    if offending.size:
        i, j = offending[0]
        return Verdict(False, Violation.ADJACENCY,
                       f"{witness.kind.value} pair has {side_x[i]} and {side_y[j]} {condition}")

    sizes = (len(side_x), len(side_y))
    return Verdict(True, None, f"{witness.kind.value} pair with sides {sizes}", sizes)


def verify_homogeneous(graph: Graph, witness: HomogeneousSetWitness) -> Verdict:
    """
    Recount the edges inside the set and compare with ε·C(|S|, 2) exactly.

    :param graph: Graph the witness ids refer to
    :param witness: Homogeneous set witness
    :return: Verdict
    """
    members = list(witness.vertices)
    epsilon = Fraction(witness.epsilon)
    rejection = _check_range(graph, members, "set")
    if rejection:
        return rejection
    if not 0 <= epsilon <= 1:
        return Verdict(False, Violation.RANGE, f"epsilon {epsilon} outside [0, 1]")
    rejection = _check_distinct(members, "set")
    if rejection:
        return rejection

    edges = int(graph.adj[np.ix_(members, members)].sum()) // 2
    if edges != witness.edge_count:
        return Verdict(False, Violation.COUNT,
                       f"edge_count bookkeeping mismatch: stated {witness.edge_count}, recounted {edges}")

    pairs = comb(len(members), 2)
    allowance = epsilon * pairs
    if witness.kind is HomogeneousKind.STABLE:
        excess, label = edges, "edges"
    else:
        excess, label = pairs - edges, "missing edges"
    if excess > allowance:
        return Verdict(False, Violation.COUNT, f"{excess} {label} exceed {allowance} = {epsilon}*C({len(members)},2)")

    return Verdict(True, None, f"{witness.kind.value} set of {len(members)} with {excess} {label}",
                   (len(members),))


def verify_embedding(graph: Graph, witness: PatternEmbedding) -> Verdict:
    """
    Check that the map is injective and preserves adjacency and non-adjacency.

    :param graph: Host graph the mapping refers to
    :param witness: Pattern embedding
    :return: Verdict
    """
    mapping = list(witness.mapping)
    if len(mapping) != witness.pattern.n:
        return Verdict(False, Violation.RANGE,
                       f"map covers {len(mapping)} of {witness.pattern.n} pattern vertices")
    rejection = _check_range(graph, mapping, "map") or _check_distinct(mapping, "map")
    if rejection:
        return rejection

    mismatch = np.argwhere(np.triu(graph.adj[np.ix_(mapping, mapping)] != witness.pattern.adj, 1))
    if mismatch.size:
        i, j = mismatch[0]
        relation = "adjacent" if witness.pattern.has_edge(i, j) else "non-adjacent"
        return Verdict(False, Violation.ADJACENCY,
                       f"pattern vertices {i}, {j} are {relation} but images {mapping[i]}, {mapping[j]} are not")

    return Verdict(True, None, f"induced {witness.pattern_name}", (len(mapping),))


def verify(graph: Graph, witness: Witness) -> Verdict:
    """Dispatch to the verifier matching the witness type"""
    if isinstance(witness, InducedPathWitness):
        verdict = verify_induced_path(graph, witness)
    elif isinstance(witness, BipartitePairWitness):
        verdict = verify_bipartite_pair(graph, witness)
    elif isinstance(witness, HomogeneousSetWitness):
        verdict = verify_homogeneous(graph, witness)
    elif isinstance(witness, PatternEmbedding):
        verdict = verify_embedding(graph, witness)
    else:
        raise TypeError(f"Unknown witness type {type(witness).__name__}")

    _LOGGER.debug("Verified %s: %s", type(witness).__name__, verdict)
    return verdict


def localize(graph: Graph, witness: Witness) -> Witness:
    """
    Translate a witness stated in root ids into the local ids of an induced view.

    :param graph: View whose origin maps local ids to root ids
    :param witness: Witness in root ids
    :return: Same witness in local ids
    """
    if graph.origin is None:
        return witness
    if isinstance(witness, InducedPathWitness):
        return InducedPathWitness(graph.to_local(witness.vertices))
    if isinstance(witness, BipartitePairWitness):
        return BipartitePairWitness(witness.kind, graph.to_local(witness.x), graph.to_local(witness.y))
    if isinstance(witness, HomogeneousSetWitness):
        return witness._replace(vertices=graph.to_local(witness.vertices))
    if isinstance(witness, PatternEmbedding):
        return witness._replace(mapping=graph.to_local(witness.mapping))
    raise TypeError(f"Unknown witness type {type(witness).__name__}")


def _check_range(graph: Graph, vertices: Sequence[int], label: str):
    if not vertices:
        return Verdict(False, Violation.RANGE, f"{label} is empty")
    for v in vertices:
        if not 0 <= v < graph.n:
            return Verdict(False, Violation.RANGE, f"{label} vertex {v} out of range for n={graph.n}")
    return None


def _check_distinct(vertices: Sequence[int], label: str):
    seen = set()
    for v in vertices:
        if v in seen:
            return Verdict(False, Violation.DISTINCTNESS, f"{label} repeats vertex {v}")
        seen.add(v)
    return None

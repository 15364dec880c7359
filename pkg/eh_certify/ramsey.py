import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from eh_certify import certificates
from eh_certify.errors import InvalidGraphError, InvalidWitnessError, LimitExceededError, PreconditionError
from eh_certify.graph import Graph, VertexSet, complement, components, induced, path_graph
from eh_certify.models import (AlphaOmega, BipartiteKind, BipartiteOracle, BipartitePairWitness,
                               CographDecomposition, CotreeKind, ExponentCertificate, P4FreeResult,
                               PatternEmbedding, Verdict, Violation)
from eh_certify.patterns import contains_induced, find_induced_path

_LOGGER = logging.getLogger(__name__)

EXACT_ORACLE_LIMIT = 32


def exponent_for(c: Fraction) -> ExponentCertificate:
    """
    c' = log 2 / log(1/c), the exponent with c^c' = 1/2.

    When 1/c = 2^m the exponent is exactly 1/m and c^(1/m) >= 1/2 is checked as
    c >= 2^-m in rational arithmetic; otherwise only the float value is reported.

    :param c: Rational in (0, 1)
    :return: Exponent certificate
    """
    c = Fraction(c)
    if not 0 < c < 1:
        raise ValueError(f"c must be in (0, 1), got {c}")

    value = math.log(2) / math.log(float(1 / c))
    inverse = 1 / c
    if inverse.denominator == 1 and not inverse.numerator & (inverse.numerator - 1):
        power = inverse.numerator.bit_length() - 1
        return ExponentCertificate(c, value, Fraction(1, power), c >= Fraction(1, 2 ** power))
    return ExponentCertificate(c, value, None, None)


def cograph_decompose(graph: Graph) -> Union[CographDecomposition, PatternEmbedding]:
    """
    Cotree of a P4-free graph.

    :param graph: Graph
    :return: Decomposition with root-id leaves, or an induced P4 if the graph is not a cograph
    """
    if graph.n == 1:
        return CographDecomposition(CotreeKind.LEAF, (), graph.to_root([0])[0])

    for kind, view in ((CotreeKind.UNION, graph), (CotreeKind.JOIN, complement(graph))):
        parts = components(view)
        if len(parts) > 1:
            children = []
            for part in parts:
                child = cograph_decompose(induced(graph, part))
                if isinstance(child, PatternEmbedding):
                    return child
                children.append(child)
            return CographDecomposition(kind, tuple(children))

    # Connected and co-connected on two or more vertices: an induced P4 exists
    obstruction = find_induced_path(graph, 4).embedding
    _LOGGER.debug("Not a cograph: %r induces P4 at %s", graph, obstruction.mapping)
    return PatternEmbedding("P4", obstruction.pattern, obstruction.mapping)


def cograph_alpha_omega(graph: Graph) -> Union[AlphaOmega, PatternEmbedding]:
    """
    Maximum stable set and maximum clique of a cograph.

    Stable sets add up over union nodes and the best child wins at join nodes; cliques
    are dual. Equal sizes resolve to the lexicographically smallest vertex list.

    :param graph: Graph
    :return: Exact maxima in root ids, or an induced P4
    """
    tree = cograph_decompose(graph)
    if isinstance(tree, PatternEmbedding):
        return tree
    result = _alpha_omega(tree)
    _LOGGER.debug("Cograph of order %d: alpha=%d omega=%d", graph.n, len(result.stable), len(result.clique))
    return result


def _alpha_omega(node: CographDecomposition) -> AlphaOmega:
    if node.kind is CotreeKind.LEAF:
        return AlphaOmega((node.vertex,), (node.vertex,))

    parts = [_alpha_omega(child) for child in node.children]
    stables = [part.stable for part in parts]
    cliques = [part.clique for part in parts]
    if node.kind is CotreeKind.UNION:
        return AlphaOmega(_merge(stables), _best(cliques))
    return AlphaOmega(_best(stables), _merge(cliques))


def _merge(sets: Sequence[VertexSet]) -> VertexSet:
    return tuple(sorted(v for members in sets for v in members))


def _best(sets: Sequence[VertexSet]) -> VertexSet:
    return min(sets, key=lambda members: (-len(members), members))


def exact_bipartite_oracle(c: Fraction) -> BipartiteOracle:
    """
    Desk-scale oracle returning an empty or complete pair with both sides exactly ⌈c·n⌉.

    Component structure of the graph and its complement is tried first; otherwise
    sides are searched exhaustively, X growing in id order while the pool of vertices
    related to all of X stays large enough.

    :param c: Rational in (0, 1)
    :return: Oracle usable with `p4free_extract` on graphs of at most 32 vertices
    """
    c = Fraction(c)
    if not 0 < c < 1:
        raise ValueError(f"c must be in (0, 1), got {c}")

    def find(graph: Graph) -> BipartitePairWitness:
        if graph.n > EXACT_ORACLE_LIMIT:
            raise LimitExceededError("exact oracle order", EXACT_ORACLE_LIMIT, graph.n)
        side = math.ceil(c * graph.n)

        for kind, view in ((BipartiteKind.EMPTY, graph), (BipartiteKind.COMPLETE, complement(graph))):
            sides = _pack_components(components(view), side)
            if sides is not None:
                return BipartitePairWitness(kind, graph.to_root(sides[0]), graph.to_root(sides[1]))

        for kind in (BipartiteKind.EMPTY, BipartiteKind.COMPLETE):
            sides = _search_sides(graph, kind, side)
            if sides is not None:
                return BipartitePairWitness(kind, graph.to_root(sides[0]), graph.to_root(sides[1]))

        raise PreconditionError("exact_bipartite_oracle", f"no empty or complete {side}-bipartite pair in {graph!r}")

    return BipartiteOracle(c, find)


def _pack_components(parts: List[VertexSet], side: int) -> Optional[Tuple[List[int], List[int]]]:
    if len(parts) < 2:
        return None
    packed: List[int] = []
    for index, part in enumerate(parts):
        packed.extend(part)
        if len(packed) >= side:
            rest = [v for other in parts[index + 1:] for v in other]
            if len(rest) < side:
                return None
            return sorted(packed)[:side], sorted(rest)[:side]
    return None


def _search_sides(graph: Graph, kind: BipartiteKind, side: int) -> Optional[Tuple[List[int], List[int]]]:
    n = graph.n
    if 2 * side > n:
        return None
    related = []
    for v in range(n):
        mask = 0
        for u in range(n):
            if u != v and graph.has_edge(u, v) == (kind is BipartiteKind.COMPLETE):
                mask |= 1 << u
        related.append(mask)

    def grow(chosen: List[int], start: int, pool: int) -> Optional[List[int]]:
        if len(chosen) == side:
            return chosen
        for v in range(start, n - (side - len(chosen)) + 1):
            narrowed = pool & related[v]
            if narrowed.bit_count() >= side:
                found = grow(chosen + [v], v + 1, narrowed)
                if found:
                    return found
        return None

    side_x = grow([], 0, (1 << n) - 1)
    if side_x is None:
        return None
    pool = (1 << n) - 1
    for v in side_x:
        pool &= related[v]
    side_y = [u for u in range(n) if pool >> u & 1][:side]
    return side_x, side_y


def p4free_extract(graph: Graph, oracle: BipartiteOracle) -> P4FreeResult:
    """
    Grow a P4-free induced subgraph by recursing into both sides of oracle pairs.

    Any induced P4 in the union would need three vertices on one side or would cross a
    homogeneous cut, so the union of P4-free sides stays P4-free.

    :param graph: Graph
    :param oracle: Bipartite pair oracle
    :return: Root ids of the P4-free set and the shallowest recursion depth reached
    """
    vertices, depth = _extract(graph, oracle)
    found = contains_induced(induced(graph, graph.to_local(vertices)), path_graph(4), "P4")
    if found.found:
        raise InvalidWitnessError(found.embedding,
                                  Verdict(False, Violation.ADJACENCY, "extracted set induces P4"))
    _LOGGER.debug("Extracted P4-free set of %d from order %d at depth %d", len(vertices), graph.n, depth)
    return P4FreeResult(vertices, depth)


def _extract(view: Graph, oracle: BipartiteOracle) -> Tuple[VertexSet, int]:
    if view.n < oracle.smallest_order():
        return view.to_root([0]), 0

    witness = oracle.find(view)
    required = oracle.required_side(view.n)
    try:
        local = certificates.localize(view, witness)
    except InvalidGraphError as err:
        raise InvalidWitnessError(witness, Verdict(False, Violation.RANGE, err.message)) from err
    verdict = certificates.verify_bipartite_pair(view, local)
    if verdict.accepted and min(verdict.sizes) < required:
        verdict = Verdict(False, Violation.COUNT, f"sides {verdict.sizes} below {required}")
    if not verdict.accepted:
        raise InvalidWitnessError(witness, verdict)

    left, left_depth = _extract(induced(view, local.x), oracle)
    right, right_depth = _extract(induced(view, local.y), oracle)
    return tuple(sorted(left + right)), 1 + min(left_depth, right_depth)

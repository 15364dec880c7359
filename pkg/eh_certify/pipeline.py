"""
Linear bipartite witnesses for graphs without induced P_k and co-P_k, and the resulting
polynomial clique or stable set.

A run either returns a verified empty/complete bipartite pair or an induced P_k (co-P_k)
certificate showing the input is outside the class. Every returned witness is checked
against the input graph before it leaves this module.
"""
import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from eh_certify import certificates
from eh_certify.errors import InvalidWitnessError, PatternFoundError, PreconditionError
from eh_certify.extractor import path_or_empty_bipartite
from eh_certify.graph import Graph, VertexSet, complement, components, induced, path_graph
from eh_certify.homogeneous import find_epsilon_homogeneous, fox_sudakov_delta, prune_high_degree
from eh_certify.models import (BipartiteKind, BipartiteOracle, BipartitePairWitness, CographDecomposition,
                               ExtractionReport, ExtractionTrace, ExtractorParams, GuaranteeTier, HomogeneousKind,
                               HomogeneousReport, HomogeneousSetWitness, HomogeneousStrategy, InducedPathWitness,
                               Outcome, PatternEmbedding, PipelineConstants, Verdict, Violation, Witness)
from eh_certify.patterns import is_pk_copk_free
from eh_certify.ramsey import cograph_alpha_omega, cograph_decompose, p4free_extract

_LOGGER = logging.getLogger(__name__)

PATTERN_SCREEN_LIMIT = 40


def choose_constants(k: int, epsilon: Optional[Fraction] = None, c: Optional[Fraction] = None) -> PipelineConstants:
    """
    Constants for forbidden path order k. By default ε = c = 1/(6k), which makes the
    path bound 1/(2(2ε+c)) exactly k.

    :param k: Forbidden path order (at least 2)
    :param epsilon: Override for ε
    :param c: Override for c
    :return: Pipeline constants
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    epsilon = Fraction(epsilon) if epsilon is not None else Fraction(1, 6 * k)
    c = Fraction(c) if c is not None else Fraction(1, 6 * k)
    if not 0 < epsilon <= 1 or not 0 < c < 1:
        raise ValueError(f"Need 0 < epsilon <= 1 and 0 < c < 1, got epsilon={epsilon}, c={c}")
    if 1 / (2 * (2 * epsilon + c)) < k:
        raise ValueError(f"epsilon={epsilon} and c={c} give a path bound below k={k}")

    delta = fox_sudakov_delta(k, epsilon)
    c_k = delta.scaled(c / 2)
    c_prime = float(-1 / c_k.log2())
    n_min = delta.smallest_n_above_one()
    constants = PipelineConstants(k, epsilon, c, delta, c_k, c_prime, n_min)
    _LOGGER.debug("Constants for k=%d: epsilon=%s c=%s delta=%s c_k=%s", k, epsilon, c, delta, c_k)
    return constants


def extract_linear_bipartite(graph: Graph,
                             k: int,
                             strategy: HomogeneousStrategy = HomogeneousStrategy.GREEDY_PEEL,
                             constants: Optional[PipelineConstants] = None,
                             screen: bool = True) -> ExtractionReport:
    """
    Find an empty or complete bipartite pair, or an induced P_k / co-P_k.

    Stages: (0) brute-force pattern screen on small graphs, (1) ε-homogeneous set of size
    at least ⌈δn⌉, complementing when it is an ε-clique, (2) pruning of vertices with
    degree above 2εs, (3) component split or the path-or-empty-bipartite extractor,
    (4) assembly in root ids, with kinds flipped back after complementing.

    :param graph: Graph of order at least 2
    :param k: Forbidden path order
    :param strategy: Stage 1 strategy
    :param constants: Defaults to choose_constants(k)
    :param screen: Run the stage 0 pattern screen when n <= PATTERN_SCREEN_LIMIT
    :return: Report whose witness verifies against `graph`
    """
    if graph.n < 2:
        raise PreconditionError("extract_linear_bipartite", f"need at least 2 vertices, got {graph.n}")
    constants = constants or choose_constants(k)
    n = graph.n

    if screen and n <= PATTERN_SCREEN_LIMIT:
        embedding = is_pk_copk_free(graph, k)
        if embedding is not None:
            _LOGGER.debug("Screen found induced %s", embedding.pattern_name)
            trace = ExtractionTrace(notes=("pattern screen",))
            return _finish(graph, Outcome.PATTERN_CERTIFICATE, embedding, constants, trace, False,
                           GuaranteeTier.CERTIFICATE)

    target = constants.delta.ceil_times(n)
    homogeneous = find_epsilon_homogeneous(graph, constants.epsilon, target, strategy)
    if homogeneous is None:
        return _trivial(graph, constants, ExtractionTrace(stage_one_target=target, notes=("stage one failed",)))

    complemented = homogeneous.kind is HomogeneousKind.CLIQUE
    host = complement(graph) if complemented else graph
    stable = graph.to_local(homogeneous.vertices)
    _LOGGER.debug("Stage 1: %s set of %d (target %d)", homogeneous.kind.value, len(stable), target)

    pruned = prune_high_degree(host, stable, constants.epsilon)
    degree_bound = math.floor(2 * constants.epsilon * len(stable)) + 1
    side_target = math.ceil(constants.c * len(pruned))
    view = induced(host, pruned)
    parts = components(view)
    notes: List[str] = []
    _LOGGER.debug("Stage 2: %d of %d kept, T=%d, D=%d, %d components",
                  len(pruned), len(stable), side_target, degree_bound, len(parts))

    trace = ExtractionTrace(stage_one_target=target,
                            stable_size=len(stable),
                            pruned_size=len(pruned),
                            side_target=side_target,
                            degree_bound=degree_bound,
                            component_sizes=tuple(len(part) for part in parts))

    outcome = None
    if len(parts) > 1:
        sides = _split_components(parts, side_target)
        if sides is not None:
            notes.append("component split")
            outcome = BipartitePairWitness(BipartiteKind.EMPTY, view.to_root(sides[0]), view.to_root(sides[1]))
        else:
            notes.append("largest component")
            view = induced(view, parts[0])

    depth_log: List[int] = []
    if outcome is None:
        outcome = path_or_empty_bipartite(view, 0, ExtractorParams(side_target, degree_bound), depth_log)
    trace = trace._replace(recursion_depth=len(depth_log), notes=tuple(notes))

    if isinstance(outcome, InducedPathWitness):
        trace = trace._replace(path_length=len(outcome.vertices))
        if len(outcome.vertices) < k:
            return _trivial(graph, constants,
                            trace._replace(notes=trace.notes + (f"path of {len(outcome.vertices)} < {k}",)))
        mapping = outcome.vertices[:k]
        if complemented:
            embedding = PatternEmbedding(f"co-P{k}", complement(path_graph(k)), mapping)
        else:
            embedding = PatternEmbedding(f"P{k}", path_graph(k), mapping)
        return _finish(graph, Outcome.PATTERN_CERTIFICATE, embedding, constants, trace, complemented,
                       GuaranteeTier.CERTIFICATE)

    witness = outcome.flipped() if complemented else outcome
    tier = GuaranteeTier.LINEAR if n >= constants.n_min else GuaranteeTier.DESK
    if tier is GuaranteeTier.LINEAR:
        required = constants.c_k.ceil_times(n)
        if min(len(witness.x), len(witness.y)) < required:
            raise InvalidWitnessError(witness, Verdict(False, Violation.COUNT, f"sides below {required}"))
    return _finish(graph, Outcome.BIPARTITE_WITNESS, witness, constants, trace, complemented, tier)


def _split_components(parts: Sequence[VertexSet], side_target: int) -> Optional[Tuple[List[int], List[int]]]:
    """Two sides of at least T made of whole components, if they exist"""
    total = sum(len(part) for part in parts)
    largest = parts[0]
    if side_target <= len(largest) <= total - side_target:
        return list(largest), sorted(v for part in parts[1:] for v in part)
    if len(largest) >= side_target:
        return None

    side_a: List[int] = []
    taken = 0
    for part in parts:
        if len(side_a) >= side_target:
            break
        side_a.extend(part)
        taken += 1
    side_b = [v for part in parts[taken:] for v in part]
    if len(side_b) < side_target:
        return None
    return sorted(side_a), sorted(side_b)


def _trivial(graph: Graph, constants: PipelineConstants, trace: ExtractionTrace) -> ExtractionReport:
    """Fallback 1-pair on the first two vertices"""
    kind = BipartiteKind.COMPLETE if graph.has_edge(0, 1) else BipartiteKind.EMPTY
    witness = BipartitePairWitness(kind, graph.to_root([0]), graph.to_root([1]))
    _LOGGER.debug("Falling back to trivial %s 1-pair: %s", kind.value, trace.notes)
    return _finish(graph, Outcome.TRIVIAL_WITNESS, witness, constants, trace, False, GuaranteeTier.TRIVIAL)


def _finish(graph: Graph,
            outcome: Outcome,
            witness: Witness,
            constants: PipelineConstants,
            trace: ExtractionTrace,
            complemented: bool,
            tier: GuaranteeTier) -> ExtractionReport:
    verdict = certificates.verify(graph, certificates.localize(graph, witness))
    if not verdict.accepted:
        raise InvalidWitnessError(witness, verdict)
    return ExtractionReport(outcome, witness, constants, trace, complemented, tier)


def pipeline_oracle(k: int,
                    strategy: HomogeneousStrategy = HomogeneousStrategy.GREEDY_PEEL,
                    constants: Optional[PipelineConstants] = None,
                    screen: bool = True) -> BipartiteOracle:
    """
    Bipartite oracle backed by `extract_linear_bipartite`.

    A pattern certificate aborts the caller's recursion with PatternFoundError.
    """
    constants = constants or choose_constants(k)

    def find(graph: Graph) -> BipartitePairWitness:
        report = extract_linear_bipartite(graph, k, strategy, constants, screen)
        if report.outcome is Outcome.PATTERN_CERTIFICATE:
            raise PatternFoundError(report.witness)
        return report.witness

    return BipartiteOracle(constants.c_k, find, min_order=2)


def eh_homogeneous(graph: Graph,
                   k: int,
                   strategy: HomogeneousStrategy = HomogeneousStrategy.GREEDY_PEEL,
                   screen: bool = True) -> HomogeneousReport:
    """
    Clique or stable set through a P4-free induced subgraph.

    A cograph input is its own P4-free subgraph; otherwise the subgraph is grown with the
    pipeline oracle. The larger of the exact maximum clique and stable set of that
    subgraph is returned as an ε = 0 witness.

    :param graph: Graph
    :param k: Forbidden path order
    :param strategy: Stage 1 strategy of the oracle
    :param screen: Pattern screen in the oracle
    :return: Report with the witness (or a P_k / co-P_k certificate) and the n^(c'/2) bound
    """
    constants = choose_constants(k)
    bound = graph.n ** (constants.c_prime / 2)

    if isinstance(cograph_decompose(graph), CographDecomposition):
        extracted, depth = graph.to_root(range(graph.n)), 0
    else:
        try:
            extracted, depth = p4free_extract(graph, pipeline_oracle(k, strategy, constants, screen))
        except PatternFoundError as err:
            _LOGGER.debug("Recursion stopped by induced %s", err.embedding.pattern_name)
            return HomogeneousReport(err.embedding, 0, bound, (), 0, constants)

    sets = cograph_alpha_omega(induced(graph, graph.to_local(extracted)))
    if len(sets.stable) >= len(sets.clique):
        kind, members = HomogeneousKind.STABLE, sets.stable
    else:
        kind, members = HomogeneousKind.CLIQUE, sets.clique
    edges = len(members) * (len(members) - 1) // 2 if kind is HomogeneousKind.CLIQUE else 0
    witness = HomogeneousSetWitness(kind, members, Fraction(0), edges)

    verdict = certificates.verify(graph, certificates.localize(graph, witness))
    if not verdict.accepted:
        raise InvalidWitnessError(witness, verdict)
    _LOGGER.debug("Homogeneous %s set of %d from P4-free set of %d (bound %.3f)",
                  kind.value, len(members), len(extracted), bound)
    return HomogeneousReport(witness, len(members), bound, extracted, depth, constants)

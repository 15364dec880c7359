from typing import List, Optional

import asyncio

from eh_certify.certificates import verify
from eh_certify.generators import generate, rejection_sample_ck
from eh_certify.graph import Graph, build_graph, complement, induced
from eh_certify.models import (ExtractionReport, GeneratorSpec, HomogeneousReport, HomogeneousStrategy,
                               PipelineConstants, RejectionSample, Verdict, Witness)
from eh_certify.pipeline import choose_constants, eh_homogeneous, extract_linear_bipartite

__all__ = [
    "Graph", "build_graph", "complement", "induced", "verify", "generate", "rejection_sample_ck",
    "choose_constants", "extract_linear_bipartite", "eh_homogeneous", "GeneratorSpec", "RejectionSample",
    "async_extract_linear_bipartite", "async_eh_homogeneous", "async_verify", "async_extract_many",
]


async def async_extract_linear_bipartite(graph: Graph,
                                         k: int,
                                         strategy: HomogeneousStrategy = HomogeneousStrategy.GREEDY_PEEL,
                                         constants: Optional[PipelineConstants] = None,
                                         screen: bool = True) -> ExtractionReport:
    """
    Run `extract_linear_bipartite` in the default executor.

    :param graph: Graph of order at least 2
    :param k: Forbidden path order
    :param strategy: Homogeneous set strategy
    :param constants: Defaults to choose_constants(k)
    :param screen: Brute-force pattern screen on small graphs
    :return: Verified report
    """
    loop = asyncio.get_running_loop()
    return await loop.run_in_executor(None, extract_linear_bipartite, graph, k, strategy, constants, screen)


async def async_eh_homogeneous(graph: Graph,
                               k: int,
                               strategy: HomogeneousStrategy = HomogeneousStrategy.GREEDY_PEEL,
                               screen: bool = True) -> HomogeneousReport:
    """
    Run `eh_homogeneous` in the default executor.

    :param graph: Graph
    :param k: Forbidden path order
    :param strategy: Homogeneous set strategy
    :param screen: Brute-force pattern screen on small graphs
    :return: Verified report
    """
    loop = asyncio.get_running_loop()
    return await loop.run_in_executor(None, eh_homogeneous, graph, k, strategy, screen)


async def async_verify(graph: Graph, witness: Witness) -> Verdict:
    loop = asyncio.get_running_loop()
    return await loop.run_in_executor(None, verify, graph, witness)


async def async_extract_many(graphs: List[Graph],
                             k: int,
                             strategy: HomogeneousStrategy = HomogeneousStrategy.GREEDY_PEEL) -> List[ExtractionReport]:
    """
    Run `extract_linear_bipartite` over several graphs concurrently.

    :return: Reports in the order of `graphs`
    """
    constants = choose_constants(k)
    return list(await asyncio.gather(*(async_extract_linear_bipartite(graph, k, strategy, constants)
                                       for graph in graphs)))

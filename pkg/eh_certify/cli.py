"""
Command line interface.

Exit statuses: 0 success, 1 failed verification or operation, 2 usage error.
"""
import argparse
import asyncio
import csv
import json
import logging
import sys
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from eh_certify import certificates
from eh_certify.errors import (BudgetExhaustedError, FormatError, InvalidGraphError, InvalidWitnessError,
                               LimitExceededError, PreconditionError)
from eh_certify.extractor import path_bound, path_or_empty_bipartite
from eh_certify.formats.edgelist import decode_edge_list, encode_edge_list
from eh_certify.formats.graph6 import decode_graph6, encode_graph6
from eh_certify.formats.witness import (constants_to_dict, format_rational, loads_witness, report_to_dict,
                                        witness_to_dict)
from eh_certify.generators import generate
from eh_certify.graph import Graph
from eh_certify.models import (BipartitePairWitness, ExtractorParams, Family, GeneratorSpec, HomogeneousStrategy,
                               PatternEmbedding)
from eh_certify.patterns import is_pk_copk_free
from eh_certify.pipeline import choose_constants, eh_homogeneous, extract_linear_bipartite
from eh_certify.ramsey import cograph_alpha_omega, exact_bipartite_oracle, exponent_for, p4free_extract

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

BENCH_COLUMNS = ["index", "n", "m", "outcome", "guarantee", "size_x", "size_y", "required_side", "verified",
                 "seconds"]


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_USAGE if err.code else EXIT_OK

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    try:
        return args.handler(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, InvalidGraphError, PreconditionError, LimitExceededError, BudgetExhaustedError,
            InvalidWitnessError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_FAILURE


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from err


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eh-certify",
                                     description="Certified bipartite witnesses and homogeneous sets "
                                                 "for graphs without induced P_k and co-P_k")
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="generate a seeded graph")
    _add_family_arguments(gen)
    gen.add_argument("--index", type=int, default=0)
    gen.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    gen.add_argument("--out", default="-")
    gen.set_defaults(handler=_gen)

    check = commands.add_parser("check", help="brute-force P_k / co-P_k check")
    _add_graph_arguments(check)
    check.add_argument("--k", type=int, required=True)
    check.set_defaults(handler=_check)

    extract = commands.add_parser("extract", help="run one extraction step")
    modes = extract.add_subparsers(dest="mode", required=True)
    walk = modes.add_parser("path-or-bipartite", help="induced path or empty bipartite pair")
    _add_graph_arguments(walk)
    walk.add_argument("--start", type=int, default=0)
    walk.add_argument("--T", dest="side_target", type=int, required=True)
    walk.add_argument("--D", dest="degree_bound", type=int, required=True)
    walk.set_defaults(handler=_extract_walk)
    p4free = modes.add_parser("p4free", help="P4-free induced subgraph from the exact oracle")
    _add_graph_arguments(p4free)
    p4free.add_argument("--c", type=_rational, default=Fraction(1, 2))
    p4free.set_defaults(handler=_extract_p4free)
    cograph = modes.add_parser("cograph-ramsey", help="maximum clique and stable set of a cograph")
    _add_graph_arguments(cograph)
    cograph.set_defaults(handler=_extract_cograph)

    pipeline = commands.add_parser("pipeline", help="linear bipartite witness or pattern certificate")
    _add_graph_arguments(pipeline)
    pipeline.add_argument("--k", type=int, required=True)
    pipeline.add_argument("--strategy", choices=[s.value for s in HomogeneousStrategy],
                          default=HomogeneousStrategy.GREEDY_PEEL.value)
    pipeline.add_argument("--no-screen", dest="screen", action="store_false")
    pipeline.add_argument("--homogeneous", action="store_true", help="go on to a clique or stable set")
    pipeline.add_argument("--out", default="-")
    pipeline.set_defaults(handler=_pipeline)

    verify = commands.add_parser("verify", help="verify a witness JSON file against a graph")
    _add_graph_arguments(verify)
    verify.add_argument("--witness", required=True)
    verify.set_defaults(handler=_verify)

    constants = commands.add_parser("constants", help="print the pipeline constants")
    constants.add_argument("--k", type=int, required=True)
    constants.add_argument("--epsilon", type=_rational)
    constants.add_argument("--c", type=_rational)
    constants.set_defaults(handler=_constants)

    bench = commands.add_parser("bench", help="run the pipeline over a generated corpus, CSV out")
    _add_family_arguments(bench)
    bench.add_argument("--count", type=int, default=10)
    bench.add_argument("--strategy", choices=[s.value for s in HomogeneousStrategy],
                       default=HomogeneousStrategy.GREEDY_PEEL.value)
    bench.add_argument("--out", default="-")
    bench.set_defaults(handler=_bench)

    return parser


def _add_graph_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--graph", "--input", dest="graph", required=True, help="graph file, '-' for stdin")
    parser.add_argument("--format", choices=["graph6", "edges"], default="graph6")


def _add_family_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--family", choices=[f.value for f in Family], required=True)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--p", type=_rational, default=Fraction(1, 2))
    parser.add_argument("--k", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--budget", type=int, default=1000)
    parser.add_argument("--m", type=int)


def _spec(args) -> GeneratorSpec:
    return GeneratorSpec(Family(args.family), args.n, args.p, args.k, args.seed, args.budget, args.m)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_text(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _read_graph(args) -> Graph:
    text = _read_text(args.graph)
    if args.format == "edges":
        return decode_edge_list(text)
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError(0, "empty graph6 input")
    return decode_graph6(lines[0])


def _print_json(data: Dict[str, Any], path: str = "-"):
    _write_text(path, json.dumps(data, indent=2) + "\n")


def _gen(args) -> int:
    graph = generate(_spec(args), args.index)
    text = encode_edge_list(graph) if args.format == "edges" else encode_graph6(graph) + "\n"
    _write_text(args.out, text)
    return EXIT_OK


def _check(args) -> int:
    graph = _read_graph(args)
    embedding = is_pk_copk_free(graph, args.k)
    if embedding is None:
        _print_json({"free": True, "k": args.k})
        return EXIT_OK
    _print_json({"free": False, "k": args.k, "certificate": witness_to_dict(embedding)})
    return EXIT_FAILURE


def _extract_walk(args) -> int:
    graph = _read_graph(args)
    params = ExtractorParams(args.side_target, args.degree_bound)
    witness = path_or_empty_bipartite(graph, args.start, params)
    verdict = certificates.verify(graph, witness)
    _print_json({"witness": witness_to_dict(witness),
                 "path_bound": path_bound(graph.n, params),
                 "verdict": str(verdict)})
    return EXIT_OK if verdict.accepted else EXIT_FAILURE


def _extract_p4free(args) -> int:
    graph = _read_graph(args)
    result = p4free_extract(graph, exact_bipartite_oracle(args.c))
    exponent = exponent_for(args.c)
    _print_json({"vertices": list(result.vertices),
                 "size": len(result.vertices),
                 "depth": result.depth,
                 "c": format_rational(args.c),
                 "c_prime": exponent.value,
                 "bound": graph.n ** exponent.value / 2})
    return EXIT_OK


def _extract_cograph(args) -> int:
    graph = _read_graph(args)
    result = cograph_alpha_omega(graph)
    if isinstance(result, PatternEmbedding):
        _print_json({"cograph": False, "certificate": witness_to_dict(result)})
        return EXIT_FAILURE
    _print_json({"cograph": True, "stable": list(result.stable), "clique": list(result.clique)})
    return EXIT_OK


def _pipeline(args) -> int:
    graph = _read_graph(args)
    strategy = HomogeneousStrategy(args.strategy)
    if args.homogeneous:
        report = eh_homogeneous(graph, args.k, strategy, args.screen)
    else:
        report = extract_linear_bipartite(graph, args.k, strategy, screen=args.screen)
    _print_json(report_to_dict(report), args.out)
    return EXIT_OK


def _verify(args) -> int:
    graph = _read_graph(args)
    witness = loads_witness(_read_text(args.witness))
    verdict = certificates.verify(graph, witness)
    print(verdict)
    return EXIT_OK if verdict.accepted else EXIT_FAILURE


def _constants(args) -> int:
    _print_json(constants_to_dict(choose_constants(args.k, args.epsilon, args.c)))
    return EXIT_OK


def _bench(args) -> int:
    if args.count < 0:
        raise ValueError(f"count must be non-negative, got {args.count}")
    spec = _spec(args)
    strategy = HomogeneousStrategy(args.strategy)
    rows = asyncio.run(_bench_rows(spec, args.count, strategy))

    if args.out == "-":
        _write_rows(sys.stdout, rows)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            _write_rows(handle, rows)
    return EXIT_OK if all(row["verified"] == "true" for row in rows) else EXIT_FAILURE


async def _bench_rows(spec: GeneratorSpec, count: int, strategy: HomogeneousStrategy) -> List[Dict[str, Any]]:
    loop = asyncio.get_running_loop()
    constants = choose_constants(spec.k)
    jobs = [loop.run_in_executor(None, _bench_row, spec, index, strategy, constants) for index in range(count)]
    # gather keeps submission order
    return list(await asyncio.gather(*jobs))


def _bench_row(spec: GeneratorSpec, index: int, strategy: HomogeneousStrategy, constants) -> Dict[str, Any]:
    started = time.perf_counter()
    graph = generate(spec, index)
    report = extract_linear_bipartite(graph, spec.k, strategy, constants)
    verdict = certificates.verify(graph, report.witness)
    elapsed = time.perf_counter() - started

    if isinstance(report.witness, BipartitePairWitness):
        sizes = (len(report.witness.x), len(report.witness.y))
    else:
        sizes = (len(report.witness.mapping), 0)
    _LOGGER.debug("Bench graph %d: %s in %.4fs", index, report.outcome.value, elapsed)
    return {"index": index,
            "n": graph.n,
            "m": graph.edge_count(),
            "outcome": report.outcome.value,
            "guarantee": report.guarantee.value,
            "size_x": sizes[0],
            "size_y": sizes[1],
            "required_side": constants.c_k.ceil_times(graph.n),
            "verified": "true" if verdict.accepted else "false",
            "seconds": f"{elapsed:.6f}"}


def _write_rows(handle, rows: List[Dict[str, Any]]):
    writer = csv.DictWriter(handle, fieldnames=BENCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


if __name__ == "__main__":
    sys.exit(main())

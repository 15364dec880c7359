"""
JSON form of witnesses and reports.

  path:        {"type": "path", "vertices": [...]}
  bipartite:   {"type": "bipartite", "kind": "empty"|"complete", "X": [...], "Y": [...]}
  homogeneous: {"type": "homogeneous", "kind": "stable"|"clique", "vertices": [...],
                "epsilon": "num/den", "edge_count": int}
  embedding:   {"type": "embedding", "pattern": name, "pattern_graph6": text, "map": [...]}

Rationals are always written as "num/den" strings.
"""
import json
from fractions import Fraction
from typing import Any, Dict, List

from eh_certify.errors import FormatError
from eh_certify.formats.graph6 import decode_graph6, encode_graph6
from eh_certify.models import (BipartiteKind, BipartitePairWitness, ExtractionReport, HomogeneousKind,
                               HomogeneousReport, HomogeneousSetWitness, InducedPathWitness, PatternEmbedding,
                               PipelineConstants, Witness)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def witness_to_dict(witness: Witness) -> Dict[str, Any]:
    if isinstance(witness, InducedPathWitness):
        return {"type": "path", "vertices": list(witness.vertices)}
    if isinstance(witness, BipartitePairWitness):
        return {"type": "bipartite", "kind": witness.kind.value, "X": list(witness.x), "Y": list(witness.y)}
    if isinstance(witness, HomogeneousSetWitness):
        return {"type": "homogeneous",
                "kind": witness.kind.value,
                "vertices": list(witness.vertices),
                "epsilon": format_rational(witness.epsilon),
                "edge_count": witness.edge_count}
    if isinstance(witness, PatternEmbedding):
        return {"type": "embedding",
                "pattern": witness.pattern_name,
                "pattern_graph6": encode_graph6(witness.pattern),
                "map": list(witness.mapping)}
    raise TypeError(f"Unknown witness type {type(witness).__name__}")


def witness_from_dict(data: Dict[str, Any]) -> Witness:
    """
    Rebuild a witness from its JSON object. Field contents are not checked against any
    graph here; that is the verifiers' job.

    :param data: Parsed JSON object
    :return: Witness
    """
    if not isinstance(data, dict):
        raise FormatError("$", "witness must be a JSON object")
    kind = _field(data, "type", str)

    if kind == "path":
        return InducedPathWitness(_vertices(data, "vertices"))
    if kind == "bipartite":
        return BipartitePairWitness(_enum(BipartiteKind, data), _vertices(data, "X"), _vertices(data, "Y"))
    if kind == "homogeneous":
        try:
            epsilon = Fraction(_field(data, "epsilon", str))
        except (ValueError, ZeroDivisionError) as err:
            raise FormatError("epsilon", f"not a rational: {data['epsilon']!r}") from err
        edge_count = _field(data, "edge_count", int)
        return HomogeneousSetWitness(_enum(HomogeneousKind, data), _vertices(data, "vertices"), epsilon, edge_count)
    if kind == "embedding":
        pattern = decode_graph6(_field(data, "pattern_graph6", str))
        return PatternEmbedding(_field(data, "pattern", str), pattern, _vertices(data, "map"))
    raise FormatError("type", f"unknown witness type {kind!r}")


def dumps_witness(witness: Witness) -> str:
    return json.dumps(witness_to_dict(witness), indent=2)


def loads_witness(text: str) -> Witness:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise FormatError(err.pos, f"invalid JSON: {err.msg}") from err
    return witness_from_dict(data)


def constants_to_dict(constants: PipelineConstants) -> Dict[str, Any]:
    return {"k": constants.k,
            "epsilon": format_rational(constants.epsilon),
            "c": format_rational(constants.c),
            "delta": str(constants.delta),
            "delta_log2": float(constants.delta.log2()),
            "c_k": str(constants.c_k),
            "c_k_log2": float(constants.c_k.log2()),
            "c_prime": constants.c_prime,
            "n_min": str(constants.n_min),
            "path_bound": format_rational(constants.path_bound)}


def report_to_dict(report: Any) -> Dict[str, Any]:
    """JSON object for an ExtractionReport or a HomogeneousReport"""
    if isinstance(report, ExtractionReport):
        trace = report.trace
        return {"outcome": report.outcome.value,
                "guarantee": report.guarantee.value,
                "complemented": report.complemented,
                "witness": witness_to_dict(report.witness),
                "constants": constants_to_dict(report.constants),
                "trace": {"stage_one_target": trace.stage_one_target,
                          "stable_size": trace.stable_size,
                          "pruned_size": trace.pruned_size,
                          "side_target": trace.side_target,
                          "degree_bound": trace.degree_bound,
                          "component_sizes": list(trace.component_sizes),
                          "recursion_depth": trace.recursion_depth,
                          "path_length": trace.path_length,
                          "notes": list(trace.notes)}}
    if isinstance(report, HomogeneousReport):
        return {"witness": witness_to_dict(report.witness),
                "achieved": report.achieved,
                "bound": report.bound,
                "extracted": list(report.extracted),
                "depth": report.depth,
                "constants": constants_to_dict(report.constants)}
    raise TypeError(f"Unknown report type {type(report).__name__}")


def _field(data: Dict[str, Any], name: str, expected: type) -> Any:
    if name not in data:
        raise FormatError(name, "missing field")
    value = data[name]
    if not isinstance(value, expected) or isinstance(value, bool):
        raise FormatError(name, f"expected {expected.__name__}, got {type(value).__name__}")
    return value


def _vertices(data: Dict[str, Any], name: str) -> tuple:
    values: List[Any] = _field(data, name, list)
    for position, value in enumerate(values):
        if not isinstance(value, int) or isinstance(value, bool):
            raise FormatError(f"{name}[{position}]", f"expected an integer vertex id, got {value!r}")
    return tuple(values)


def _enum(enum_type, data: Dict[str, Any]):
    value = _field(data, "kind", str)
    try:
        return enum_type(value)
    except ValueError as err:
        raise FormatError("kind", f"unknown kind {value!r}") from err

import eh_certify
from eh_certify.errors import PreconditionError
from eh_certify.formats.witness import dumps_witness
from eh_certify.models import Family, GeneratorSpec, Outcome

try:
    # Seeded random cograph: never contains an induced P4
    graph = eh_certify.generate(GeneratorSpec(Family.COGRAPH, 30, seed=1))

    # Linear bipartite pair, or a P4 / co-P4 if the graph had one
    report = eh_certify.extract_linear_bipartite(graph, k=4)
    print()
    print(f"Outcome: {report.outcome.value}, guarantee: {report.guarantee.value}")
    if report.outcome is not Outcome.PATTERN_CERTIFICATE:
        print(dumps_witness(report.witness))

    # Clique or stable set grown through a P4-free subgraph
    homogeneous = eh_certify.eh_homogeneous(graph, k=4)
    print()
    print(f"{homogeneous.witness.kind.value} set of {homogeneous.achieved} vertices")

    # Witnesses can always be checked on their own
    print(eh_certify.verify(graph, homogeneous.witness))

except PreconditionError as err:
    # Catch and print inputs the pipeline does not accept
    print(f"Precondition failed in {err.operation}: {err.message}", err)

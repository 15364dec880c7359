import math
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal, localcontext
from enum import Enum
from fractions import Fraction
from typing import Callable, List, NamedTuple, Optional, Tuple, Union

from eh_certify.graph import Graph, VertexSet


class BipartiteKind(Enum):
    """Cross-edge pattern of a bipartite pair"""
    EMPTY = 'empty'
    COMPLETE = 'complete'

    def flipped(self) -> 'BipartiteKind':
        return BipartiteKind.COMPLETE if self is BipartiteKind.EMPTY else BipartiteKind.EMPTY


class HomogeneousKind(Enum):
    """Sparse or dense homogeneous set"""
    STABLE = 'stable'
    CLIQUE = 'clique'

    def flipped(self) -> 'HomogeneousKind':
        return HomogeneousKind.CLIQUE if self is HomogeneousKind.STABLE else HomogeneousKind.STABLE


class InducedPathWitness(NamedTuple):
    """Induced path, listed from its start vertex"""
    vertices: VertexSet

    @property
    def start(self) -> int:
        return self.vertices[0]


class BipartitePairWitness(NamedTuple):
    """Disjoint sides X, Y with all (complete) or no (empty) edges across"""
    kind: BipartiteKind
    x: VertexSet
    y: VertexSet

    def flipped(self) -> 'BipartitePairWitness':
        return BipartitePairWitness(self.kind.flipped(), self.x, self.y)


class HomogeneousSetWitness(NamedTuple):
    """ε-stable set or ε-clique; ε = 0 is an exact stable set or clique"""
    kind: HomogeneousKind
    vertices: VertexSet
    epsilon: Fraction
    edge_count: int


class PatternEmbedding(NamedTuple):
    """Induced copy of `pattern`: pattern vertex i sits at host vertex mapping[i]"""
    pattern_name: str
    pattern: Graph
    mapping: VertexSet


Witness = Union[InducedPathWitness, BipartitePairWitness, HomogeneousSetWitness, PatternEmbedding]


class Violation(Enum):
    """Verifier conditions, in the order they are checked"""
    RANGE = 'range'
    DISTINCTNESS = 'distinctness'
    ADJACENCY = 'adjacency'
    COUNT = 'count'


class Verdict(NamedTuple):
    """Verifier outcome; names the first violated condition when rejecting"""
    accepted: bool
    violation: Optional[Violation]
    message: str
    sizes: Tuple[int, ...] = ()

    def __str__(self):
        if self.accepted:
            return f"accepted {self.message}".strip()
        return f"rejected [{self.violation.value}] {self.message}"


class PatternQueryResult(NamedTuple):
    """Outcome of a brute-force induced-pattern search"""
    found: bool
    embedding: Optional[PatternEmbedding]
    nodes_explored: int


class HomogeneousStrategy(Enum):
    """How ε-homogeneous sets are searched for"""
    EXACT = 'exact'
    GREEDY_PEEL = 'greedy'
    TRIVIAL = 'trivial'


class TrichotomyCase(Enum):
    """Which branch of the universal-or-homogeneous dichotomy holds"""
    UNIVERSAL = 'universal'
    STABLE = 'stable'
    CLIQUE = 'clique'
    NONE = 'none'


class TrichotomyResult(NamedTuple):
    """Case that holds, with its witness and the first missing labeled pattern if any"""
    case: TrichotomyCase
    witness: Optional[HomogeneousSetWitness]
    missing: Optional[Graph]


class DeltaBound(NamedTuple):
    """
    The quantity scale · 2^(-15k · log2(1/ε)^2).

    The exponent is an exact integer when 1/ε is a power of two; otherwise it is
    evaluated in high-precision decimal arithmetic, never as a float.
    """
    k: int
    epsilon: Fraction
    scale: Fraction = Fraction(1)

    def log2_argument_exact(self) -> Optional[int]:
        """log2(1/ε) if it is an integer"""
        inverse = 1 / self.epsilon
        if inverse.denominator != 1:
            return None
        numerator = inverse.numerator
        if numerator & (numerator - 1):
            return None
        return numerator.bit_length() - 1

    def exact_exponent(self) -> Optional[int]:
        """The exponent -15k · log2(1/ε)^2 when it is an integer"""
        log2_argument = self.log2_argument_exact()
        if log2_argument is None:
            return None
        return -15 * self.k * log2_argument * log2_argument

    def exponent(self, precision: int = 60) -> Decimal:
        exact = self.exact_exponent()
        if exact is not None:
            return Decimal(exact)
        with localcontext() as ctx:
            ctx.prec = precision
            log2_argument = _to_decimal(1 / self.epsilon).ln() / Decimal(2).ln()
            return -15 * self.k * log2_argument * log2_argument

    def value(self) -> Optional[Fraction]:
        """Exact value, available when the exponent is an integer"""
        exact = self.exact_exponent()
        if exact is None:
            return None
        return self.scale / (2 ** -exact)

    def log2(self, precision: int = 60) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = precision
            return _to_decimal(self.scale).ln() / Decimal(2).ln() + self.exponent(precision)

    def scaled(self, factor: Fraction) -> 'DeltaBound':
        return DeltaBound(self.k, self.epsilon, self.scale * Fraction(factor))

    def ceil_times(self, n: int) -> int:
        """⌈value · n⌉"""
        exact = self.value()
        if exact is not None:
            return math.ceil(exact * n)
        with localcontext() as ctx:
            ctx.prec = 60
            product = _to_decimal(self.scale) * Decimal(2) ** self.exponent() * n
            return int(product.to_integral_value(rounding=ROUND_CEILING))

    def smallest_n_above_one(self) -> int:
        """Smallest n with value · n > 1"""
        exact = self.value()
        if exact is not None:
            return math.floor(1 / exact) + 1
        digits = int(-self.log2() * Decimal('0.30103')) + 40
        with localcontext() as ctx:
            ctx.prec = max(digits, 60)
            reciprocal = Decimal(2) ** -self.exponent(ctx.prec) / _to_decimal(self.scale)
            return int(reciprocal.to_integral_value(rounding=ROUND_FLOOR)) + 1

    def __str__(self):
        exact = self.exact_exponent()
        if exact is not None:
            power = f"2^{exact}"
        else:
            power = f"2^(-{15 * self.k}*log2({_format_fraction(1 / self.epsilon)})^2)"
        if self.scale == 1:
            return power
        return f"{_format_fraction(self.scale)}*{power}"


class ExtractorParams(NamedTuple):
    """
    Absolute thresholds of the path-or-empty-bipartite extractor.

    side_target is T (the c·n side size), degree_bound is D (the ε·n closed degree bound).
    """
    side_target: int
    degree_bound: int


class CotreeKind(Enum):
    """Cotree node type"""
    LEAF = 'leaf'
    UNION = 'union'
    JOIN = 'join'


class CographDecomposition(NamedTuple):
    """Cotree node; leaves hold a root vertex id"""
    kind: CotreeKind
    children: Tuple['CographDecomposition', ...] = ()
    vertex: Optional[int] = None

    def leaves(self) -> List[int]:
        if self.kind is CotreeKind.LEAF:
            return [self.vertex]
        return [leaf for child in self.children for leaf in child.leaves()]


class AlphaOmega(NamedTuple):
    """Maximum stable set and maximum clique"""
    stable: VertexSet
    clique: VertexSet


class BipartiteOracle(NamedTuple):
    """
    Produces a bipartite pair with both sides at least ⌈c·n⌉ on any graph of order
    at least min_order (defaults to ⌈1/c⌉, required when c is a DeltaBound).
    """
    c: Union[Fraction, DeltaBound]
    find: Callable[[Graph], BipartitePairWitness]
    min_order: Optional[int] = None

    def smallest_order(self) -> int:
        if self.min_order is not None:
            return self.min_order
        return math.ceil(1 / self.c)

    def required_side(self, n: int) -> int:
        if isinstance(self.c, DeltaBound):
            return self.c.ceil_times(n)
        return math.ceil(self.c * n)


class ExponentCertificate(NamedTuple):
    """c' = log 2 / log(1/c), with the defining relation c^c' >= 1/2 checked exactly when possible"""
    c: Fraction
    value: float
    exact: Optional[Fraction]
    holds: Optional[bool]


class P4FreeResult(NamedTuple):
    """P4-free vertex set in root ids and the shallowest recursion depth"""
    vertices: VertexSet
    depth: int


class PipelineConstants(NamedTuple):
    """Parameters governing one extraction run"""
    k: int
    epsilon: Fraction
    c: Fraction
    delta: DeltaBound
    c_k: DeltaBound
    c_prime: float
    n_min: int

    @property
    def path_bound(self) -> Fraction:
        """1/(2(2ε+c))"""
        return 1 / (2 * (2 * self.epsilon + self.c))


class Outcome(Enum):
    """What kind of witness a pipeline run produced"""
    BIPARTITE_WITNESS = 'bipartite-witness'
    PATTERN_CERTIFICATE = 'pattern-certificate'
    TRIVIAL_WITNESS = 'trivial-witness'


class GuaranteeTier(Enum):
    """Which guarantee a report's witness carries"""
    CERTIFICATE = 'certificate'  # forbidden pattern found
    LINEAR = 'linear'  # sides at least ⌈c_k·n⌉
    DESK = 'desk'  # verified, below the asymptotic regime
    TRIVIAL = 'trivial'  # 1-pair fallback


class ExtractionTrace(NamedTuple):
    """Per-stage sizes of one pipeline run"""
    stage_one_target: int = 0
    stable_size: int = 0
    pruned_size: int = 0
    side_target: int = 0
    degree_bound: int = 0
    component_sizes: Tuple[int, ...] = ()
    recursion_depth: int = 0
    path_length: int = 0
    notes: Tuple[str, ...] = ()


class ExtractionReport(NamedTuple):
    """Verified outcome of one linear bipartite extraction"""
    outcome: Outcome
    witness: Witness
    constants: PipelineConstants
    trace: ExtractionTrace
    complemented: bool
    guarantee: GuaranteeTier


class HomogeneousReport(NamedTuple):
    """Result of the full Erdős–Hajnal composition"""
    witness: Union[HomogeneousSetWitness, PatternEmbedding]
    achieved: int
    bound: float
    extracted: VertexSet
    depth: int
    constants: PipelineConstants


class Family(Enum):
    """Seeded graph families"""
    GNP = 'gnp'
    COGRAPH = 'cograph'
    EMPTY = 'empty'
    PATH = 'path'
    CYCLE = 'cycle'
    COMPLETE = 'complete'
    COMPLETE_BIPARTITE = 'complete-bipartite'
    FRIENDSHIP = 'friendship'
    CK_REJECTION = 'ck-rejection'


class GeneratorSpec(NamedTuple):
    """
    Seeded graph family description.

    m is the first side of a complete bipartite graph (defaults to n // 2); k and
    budget are used by rejection sampling.
    """
    family: Family
    n: int
    p: Fraction = Fraction(1, 2)
    k: int = 4
    seed: int = 0
    budget: int = 1000
    m: Optional[int] = None


class RejectionSample(NamedTuple):
    """Graph certified free of induced P_k and co-P_k by brute force"""
    graph: Graph
    k: int
    draws: int


def _to_decimal(value: Fraction) -> Decimal:
    return Decimal(value.numerator) / Decimal(value.denominator)


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"

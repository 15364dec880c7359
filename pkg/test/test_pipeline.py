import unittest
from fractions import Fraction

import asyncio

import eh_certify
import test.test_data as test_data
from eh_certify import certificates
from eh_certify.errors import PatternFoundError, PreconditionError
from eh_certify.graph import complement, complete_graph, empty_graph, path_graph
from eh_certify.models import (BipartiteKind, BipartitePairWitness, Family, GuaranteeTier, HomogeneousKind,
                               HomogeneousStrategy, Outcome, PatternEmbedding)
from eh_certify.patterns import is_pk_copk_free
from eh_certify.pipeline import choose_constants, eh_homogeneous, extract_linear_bipartite, pipeline_oracle


class ChooseConstantsTest(unittest.TestCase):

    def test_k5(self):
        constants = choose_constants(5)
        self.assertEqual(constants.epsilon, Fraction(1, 30))
        self.assertEqual(constants.c, Fraction(1, 30))
        self.assertEqual(constants.path_bound, 5)
        self.assertEqual(str(constants.delta), "2^(-75*log2(30)^2)")
        self.assertEqual(constants.c_k.scale, Fraction(1, 60))
        self.assertGreater(constants.n_min, 10 ** 500)
        self.assertGreater(constants.c_prime, 0)

    def test_k2(self):
        constants = choose_constants(2)
        self.assertEqual(constants.epsilon, Fraction(1, 12))
        self.assertEqual(constants.path_bound, 2)

    def test_epsilon_decreasing(self):
        epsilons = [choose_constants(k).epsilon for k in range(2, 9)]
        self.assertEqual(epsilons, sorted(epsilons, reverse=True))

    def test_overrides(self):
        constants = choose_constants(2, epsilon=Fraction(1, 16), c=Fraction(1, 8))
        self.assertEqual(constants.delta.exact_exponent(), -480)
        self.assertEqual(constants.n_min, 2 ** 480 + 1)
        with self.assertRaises(ValueError):
            choose_constants(5, epsilon=Fraction(1, 4), c=Fraction(1, 4))

    def test_invalid_k(self):
        with self.assertRaises(ValueError):
            choose_constants(1)


class ExtractLinearBipartiteTest(unittest.TestCase):

    def test_p5_certificate(self):
        report = extract_linear_bipartite(path_graph(5), 5)
        self.assertIs(report.outcome, Outcome.PATTERN_CERTIFICATE)
        self.assertIs(report.guarantee, GuaranteeTier.CERTIFICATE)
        self.assertEqual(report.witness.pattern_name, "P5")

    def test_complete_graph(self):
        report = extract_linear_bipartite(complete_graph(10), 5)
        self.assertIs(report.outcome, Outcome.BIPARTITE_WITNESS)
        self.assertTrue(report.complemented)
        self.assertEqual(report.witness, BipartitePairWitness(BipartiteKind.COMPLETE, (0,), tuple(range(1, 10))))
        self.assertIs(report.guarantee, GuaranteeTier.DESK)
        self.assertEqual(report.trace.component_sizes, (1,) * 10)

    def test_complementation_coherence(self):
        report = extract_linear_bipartite(empty_graph(10), 5)
        self.assertFalse(report.complemented)
        self.assertEqual(report.witness, BipartitePairWitness(BipartiteKind.EMPTY, (0,), tuple(range(1, 10))))
        flipped = extract_linear_bipartite(complement(empty_graph(10)), 5)
        self.assertEqual(flipped.witness, report.witness.flipped())

    def test_extractor_finds_long_path(self):
        report = extract_linear_bipartite(path_graph(60), 5, screen=False)
        self.assertIs(report.outcome, Outcome.PATTERN_CERTIFICATE)
        self.assertEqual(report.witness.mapping, (0, 1, 2, 3, 4))
        self.assertEqual(report.trace.stable_size, 60)
        self.assertEqual(report.trace.side_target, 2)
        self.assertEqual(report.trace.degree_bound, 5)
        self.assertGreaterEqual(report.trace.path_length, 5)

    def test_extractor_finds_long_co_path(self):
        graph = complement(path_graph(60))
        report = extract_linear_bipartite(graph, 5, screen=False)
        self.assertIs(report.outcome, Outcome.PATTERN_CERTIFICATE)
        self.assertTrue(report.complemented)
        self.assertEqual(report.witness.pattern_name, "co-P5")
        self.assertTrue(certificates.verify(graph, report.witness).accepted)

    def test_trivial_fallback(self):
        report = extract_linear_bipartite(path_graph(3), 5, HomogeneousStrategy.TRIVIAL)
        self.assertIs(report.outcome, Outcome.TRIVIAL_WITNESS)
        self.assertIs(report.guarantee, GuaranteeTier.TRIVIAL)
        self.assertEqual(report.witness, BipartitePairWitness(BipartiteKind.COMPLETE, (0,), (1,)))

    def test_exact_strategy(self):
        report = extract_linear_bipartite(test_data.complete_bipartite(4, 4), 5, HomogeneousStrategy.EXACT)
        self.assertTrue(certificates.verify(test_data.complete_bipartite(4, 4), report.witness).accepted)

    def test_needs_two_vertices(self):
        with self.assertRaises(PreconditionError):
            extract_linear_bipartite(empty_graph(1), 4)

    def test_random_cographs_never_certify(self):
        for graph in test_data.seeded(Family.COGRAPH, 40, 10, seed=21):
            report = extract_linear_bipartite(graph, 4)
            self.assertIsNot(report.outcome, Outcome.PATTERN_CERTIFICATE)
            self.assertTrue(certificates.verify(graph, report.witness).accepted)

    def test_certificates_are_sound(self):
        for graph in test_data.seeded(Family.GNP, 14, 15, seed=4):
            for screen in (True, False):
                report = extract_linear_bipartite(graph, 4, screen=screen)
                self.assertTrue(certificates.verify(graph, report.witness).accepted)
                if report.outcome is Outcome.PATTERN_CERTIFICATE:
                    self.assertIsNotNone(is_pk_copk_free(graph, 4))

    def test_certified_free_graphs(self):
        for index in range(3):
            sample = eh_certify.rejection_sample_ck(10, 5, Fraction(1, 10), 17, 2000, index)
            for screen in (True, False):
                report = extract_linear_bipartite(sample.graph, 5, screen=screen)
                self.assertIsNot(report.outcome, Outcome.PATTERN_CERTIFICATE)

    def test_rejection_corpus_never_certifies(self):
        for index in range(200):
            n = 10 + index % 31
            sample = eh_certify.rejection_sample_ck(n, 5, Fraction(1, 2 * n), 19, 1000, index)
            report = extract_linear_bipartite(sample.graph, 5)
            self.assertIsNot(report.outcome, Outcome.PATTERN_CERTIFICATE)
            self.assertTrue(certificates.verify(sample.graph, report.witness).accepted)

    def test_cograph_corpus_never_certifies(self):
        for graph in test_data.varied(Family.COGRAPH, 200, seed=23, max_n=40, min_n=2):
            report = extract_linear_bipartite(graph, 4)
            self.assertIsNot(report.outcome, Outcome.PATTERN_CERTIFICATE)
            self.assertTrue(certificates.verify(graph, report.witness).accepted)

    def test_dense_corpus_certificates_are_sound(self):
        for graph in test_data.varied(Family.GNP, 200, seed=29, max_n=40, min_n=5):
            for screen in (True, False):
                report = extract_linear_bipartite(graph, 5, screen=screen)
                self.assertTrue(certificates.verify(graph, report.witness).accepted)
                if report.outcome is Outcome.PATTERN_CERTIFICATE:
                    self.assertIsNotNone(is_pk_copk_free(graph, 5))

    def test_async_many(self):
        graphs = [path_graph(5), complete_graph(6), empty_graph(4)]
        reports = asyncio.run(eh_certify.async_extract_many(graphs, 5))
        self.assertEqual([r.outcome for r in reports],
                         [Outcome.PATTERN_CERTIFICATE, Outcome.BIPARTITE_WITNESS, Outcome.BIPARTITE_WITNESS])


class EhHomogeneousTest(unittest.TestCase):

    def test_edgeless(self):
        report = eh_homogeneous(empty_graph(7), 4)
        self.assertIs(report.witness.kind, HomogeneousKind.STABLE)
        self.assertEqual(report.witness.vertices, tuple(range(7)))
        self.assertEqual(report.depth, 0)

    def test_complete(self):
        report = eh_homogeneous(complete_graph(10), 5)
        self.assertIs(report.witness.kind, HomogeneousKind.CLIQUE)
        self.assertEqual(report.achieved, 10)
        self.assertEqual(report.witness.edge_count, 45)
        self.assertEqual(report.witness.epsilon, 0)

    def test_five_cycle(self):
        report = eh_homogeneous(test_data.cycle(5), 5)
        self.assertEqual(report.witness.vertices, (1, 4))
        self.assertIs(report.witness.kind, HomogeneousKind.STABLE)
        self.assertEqual(report.extracted, (1, 4))
        self.assertEqual(report.depth, 1)

    def test_random_cograph(self):
        graph = test_data.seeded(Family.COGRAPH, 64, 1, seed=2)[0]
        report = eh_homogeneous(graph, 4)
        self.assertGreaterEqual(report.achieved, 8)
        self.assertTrue(certificates.verify(graph, report.witness).accepted)
        self.assertGreaterEqual(report.achieved, report.bound)

    def test_pattern_propagates(self):
        report = eh_homogeneous(path_graph(6), 5)
        self.assertIsInstance(report.witness, PatternEmbedding)
        self.assertEqual(report.witness.pattern_name, "P5")
        self.assertEqual(report.achieved, 0)

    def test_random_graphs_verify(self):
        for graph in test_data.seeded(Family.GNP, 12, 10, seed=8):
            report = eh_homogeneous(graph, 4)
            self.assertTrue(certificates.verify(graph, report.witness).accepted)

    def test_async(self):
        report = asyncio.run(eh_certify.async_eh_homogeneous(complete_graph(5), 4))
        self.assertEqual(report.achieved, 5)

    def test_oracle_raises_on_certificate(self):
        oracle = pipeline_oracle(5)
        with self.assertRaises(PatternFoundError) as ctx:
            oracle.find(path_graph(5))
        self.assertEqual(ctx.exception.embedding.pattern_name, "P5")


if __name__ == '__main__':
    unittest.main()

import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

import test.test_data as test_data
from eh_certify import certificates
from eh_certify.errors import LimitExceededError
from eh_certify.graph import build_graph, complement, complete_graph, path_graph
from eh_certify.models import Family
from eh_certify.patterns import contains_induced, find_induced_path, is_pk_copk_free, universality_check


class FindInducedPathTest(unittest.TestCase):

    def test_path_contains_itself(self):
        result = find_induced_path(path_graph(7), 7)
        self.assertTrue(result.found)
        self.assertEqual(result.embedding.mapping, (0, 1, 2, 3, 4, 5, 6))
        self.assertGreater(result.nodes_explored, 0)

    def test_five_cycle_has_no_p5(self):
        self.assertFalse(find_induced_path(test_data.cycle(5), 5).found)

    def test_six_cycle_has_p5(self):
        result = find_induced_path(test_data.cycle(6), 5)
        self.assertTrue(result.found)
        self.assertEqual(result.embedding.mapping, (0, 1, 2, 3, 4))

    def test_k_above_order(self):
        self.assertFalse(find_induced_path(path_graph(3), 4).found)

    def test_invalid_k(self):
        with self.assertRaises(ValueError):
            find_induced_path(path_graph(3), 0)

    @settings(max_examples=80, deadline=None)
    @given(test_data.small_graphs(), st.integers(min_value=1, max_value=6))
    def test_agrees_with_generic_search(self, graph, k):
        by_path = find_induced_path(graph, k)
        by_pattern = contains_induced(graph, path_graph(k))
        self.assertEqual(by_path.found, by_pattern.found)
        if by_path.found:
            self.assertTrue(certificates.verify(graph, by_path.embedding).accepted)
            self.assertTrue(find_induced_path(graph, max(k - 1, 1)).found)

    def test_agrees_with_generic_search_on_seeded_corpus(self):
        for index, graph in enumerate(test_data.varied(Family.GNP, 2000, seed=31, max_n=9)):
            k = 1 + index % 6
            self.assertEqual(find_induced_path(graph, k).found, contains_induced(graph, path_graph(k)).found)


class ContainsInducedTest(unittest.TestCase):

    def test_edge(self):
        self.assertTrue(contains_induced(test_data.cycle(4), complete_graph(2)).found)
        self.assertFalse(contains_induced(complement(complete_graph(4)), complete_graph(2)).found)

    def test_four_cycle_is_a_cograph(self):
        self.assertFalse(contains_induced(test_data.cycle(4), path_graph(4)).found)

    def test_five_cycle_identity(self):
        result = contains_induced(test_data.cycle(5), test_data.cycle(5), "C5")
        self.assertTrue(result.found)
        self.assertEqual(result.embedding.mapping, (0, 1, 2, 3, 4))
        self.assertEqual(result.embedding.pattern_name, "C5")

    def test_pattern_limit(self):
        with self.assertRaises(LimitExceededError) as ctx:
            contains_induced(path_graph(12), path_graph(11))
        self.assertEqual(ctx.exception.limit, 10)


class MembershipTest(unittest.TestCase):

    def test_five_cycle_is_free(self):
        self.assertIsNone(is_pk_copk_free(test_data.cycle(5), 5))

    def test_p5_certificate(self):
        embedding = is_pk_copk_free(path_graph(5), 5)
        self.assertEqual(embedding.pattern_name, "P5")
        self.assertTrue(certificates.verify(path_graph(5), embedding).accepted)

    def test_co_p5_certificate(self):
        graph = complement(path_graph(5))
        embedding = is_pk_copk_free(graph, 5)
        self.assertEqual(embedding.pattern_name, "co-P5")
        self.assertTrue(certificates.verify(graph, embedding).accepted)

    def test_invalid_k(self):
        with self.assertRaises(ValueError):
            is_pk_copk_free(path_graph(3), 1)


class UniversalityTest(unittest.TestCase):

    def test_complete_graph_misses_non_edge(self):
        missing = universality_check(complete_graph(4), 2)
        self.assertEqual(missing.n, 2)
        self.assertEqual(missing.edge_count(), 0)

    def test_five_cycle_is_2_universal(self):
        self.assertIsNone(universality_check(test_data.cycle(5), 2))

    def test_random_graph_is_3_universal(self):
        graph = test_data.seeded(Family.GNP, 20, 1, seed=3, p=Fraction(1, 2))[0]
        self.assertIsNone(universality_check(graph, 3))

    def test_small_graph_is_not_universal(self):
        missing = universality_check(build_graph(2, [(0, 1)]), 3)
        self.assertEqual(missing.n, 3)

    def test_limit(self):
        with self.assertRaises(LimitExceededError):
            universality_check(path_graph(8), 6)

import unittest
from fractions import Fraction

import numpy as np

import test.test_data as test_data
from eh_certify import certificates
from eh_certify.errors import InvalidGraphError
from eh_certify.graph import (Graph, build_graph, complement, complete_graph, components, empty_graph, from_networkx,
                              induced, is_connected, path_graph, to_networkx)
from eh_certify.models import Family, PatternEmbedding


class GraphTest(unittest.TestCase):

    def test_build_graph(self):
        graph = build_graph(4, [(0, 1), (1, 2), (1, 0)])
        self.assertEqual(graph.n, 4)
        self.assertEqual(graph.edge_count(), 2)
        self.assertEqual(graph.edges(), [(0, 1), (1, 2)])
        self.assertEqual(graph.neighbors(1), (0, 2))
        self.assertEqual(graph.closed_neighborhood(1), (0, 1, 2))
        self.assertEqual(graph.degree(3), 0)
        self.assertEqual(graph.closed_degree(1), 3)
        self.assertEqual(f"{graph!r}", "Graph(n=4, m=2)")

    def test_invalid_graphs(self):
        with self.assertRaises(InvalidGraphError):
            build_graph(0, [])
        with self.assertRaises(InvalidGraphError) as ctx:
            build_graph(3, [(1, 1)])
        self.assertEqual(ctx.exception.vertex, 1)
        with self.assertRaises(InvalidGraphError) as ctx:
            build_graph(3, [(0, 3)])
        self.assertEqual(ctx.exception.vertex, 3)
        with self.assertRaises(InvalidGraphError):
            Graph(np.array([[False, True], [False, False]]))
        with self.assertRaises(InvalidGraphError):
            Graph(np.zeros((2, 3), dtype=bool))

    def test_adjacency_is_read_only(self):
        graph = path_graph(3)
        with self.assertRaises(ValueError):
            graph.adj[0, 2] = True

    def test_induced_composes_origin(self):
        graph = path_graph(6)
        view = induced(graph, [5, 1, 2, 3])
        self.assertEqual(view.n, 4)
        self.assertEqual(view.to_root([0, 3]), (1, 5))
        self.assertTrue(view.has_edge(0, 1))
        self.assertFalse(view.has_edge(2, 3))

        inner = induced(view, [1, 3])
        self.assertEqual(inner.to_root([0, 1]), (2, 5))
        self.assertEqual(inner.to_local([5]), (1,))
        with self.assertRaises(InvalidGraphError):
            inner.to_local([1])

    def test_induced_rejects_bad_sets(self):
        with self.assertRaises(InvalidGraphError):
            induced(path_graph(3), [])
        with self.assertRaises(InvalidGraphError):
            induced(path_graph(3), [0, 3])

    def test_complement(self):
        self.assertEqual(complement(complete_graph(5)).edge_count(), 0)
        self.assertEqual(complement(empty_graph(5)), complete_graph(5))
        view = induced(path_graph(5), [0, 2, 4])
        flipped = complement(view)
        self.assertEqual(flipped.origin, (0, 2, 4))
        self.assertEqual(flipped.edge_count(), 3)
        self.assertEqual(complement(complement(test_data.cycle(7))), test_data.cycle(7))

    def test_components(self):
        graph = build_graph(6, [(0, 1), (3, 4), (4, 5)])
        self.assertEqual(components(graph), [(3, 4, 5), (0, 1), (2,)])
        self.assertFalse(is_connected(graph))
        self.assertTrue(is_connected(test_data.cycle(5)))
        self.assertEqual(components(empty_graph(3)), [(0,), (1,), (2,)])

    def test_networkx_conversion(self):
        graph = test_data.two_triangles()
        nx_graph = to_networkx(graph)
        self.assertEqual(nx_graph.number_of_nodes(), 6)
        self.assertEqual(nx_graph.number_of_edges(), 7)
        self.assertEqual(from_networkx(nx_graph), graph)

    def test_equality_includes_origin(self):
        graph = path_graph(4)
        self.assertNotEqual(induced(graph, [0, 1]), path_graph(2))
        self.assertEqual(induced(graph, [0, 1, 2, 3]), Graph(graph.adj, (0, 1, 2, 3)))


class GraphInvariantTest(unittest.TestCase):

    def test_degrees_in_graph_and_complement(self):
        for graph in test_data.seeded(Family.GNP, 25, 30, seed=3) + test_data.seeded(Family.COGRAPH, 40, 10):
            total = graph.degrees() + complement(graph).degrees()
            self.assertTrue(np.all(total == graph.n - 1))

    def test_complement_of_p4_is_p4(self):
        flipped = complement(path_graph(4))
        self.assertEqual(flipped.edges(), [(0, 2), (0, 3), (1, 3)])
        # c-a-d-b with a-b-c-d = 0-1-2-3
        embedding = PatternEmbedding("P4", path_graph(4), (2, 0, 3, 1))
        self.assertTrue(certificates.verify(flipped, embedding).accepted)

    def test_induced_five_cycle_prefix_is_p3(self):
        view = induced(test_data.cycle(5), [0, 1, 2])
        self.assertTrue(np.array_equal(view.adj, path_graph(3).adj))
        self.assertEqual(view.origin, (0, 1, 2))

    def test_components_partition(self):
        graphs = (test_data.seeded(Family.GNP, 30, 40, seed=8, p=Fraction(1, 20))
                  + test_data.seeded(Family.GNP, 12, 20, seed=8, p=Fraction(1, 5)))
        for graph in graphs:
            parts = components(graph)
            members = [v for part in parts for v in part]
            self.assertEqual(sorted(members), list(range(graph.n)))
            self.assertEqual(len(members), len(set(members)))
            for index, part in enumerate(parts):
                self.assertTrue(is_connected(induced(graph, part)))
                others = [v for other in parts[index + 1:] for v in other]
                if others:
                    self.assertFalse(graph.adj[np.ix_(part, others)].any())
            keys = [(-len(part), min(part)) for part in parts]
            self.assertEqual(keys, sorted(keys))
            self.assertEqual(is_connected(graph), len(parts) == 1)

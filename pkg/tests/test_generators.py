import networkx as nx
import numpy as np
import pytest

from src.errors import GenerationError
from src.generators import (caterpillar, complete_binary_tree, complete_graph, cycle_graph, enumerate_connected_graphs,
                            erdos_renyi_connected, from_networkx, path_graph, random_tree, star_graph, watts_strogatz)
from src.graph import diameter, is_connected, is_tree


@pytest.mark.parametrize("factory", [
    lambda seed: random_tree(10, seed),
    lambda seed: erdos_renyi_connected(25, seed),
    lambda seed: watts_strogatz(30, seed, k=4, p=0.3),
])
def test_generators_are_deterministic(factory):
    assert factory(1).edges() == factory(1).edges()


def test_different_seeds_give_different_trees():
    assert random_tree(30, 1).edges() != random_tree(30, 2).edges()


@pytest.mark.parametrize("n", [1, 2, 3, 10, 100])
def test_random_tree_is_tree(n):
    assert is_tree(random_tree(n, seed=n))


def test_random_tree_covers_all_labelled_trees_on_four_vertices():
    shapes = {tuple(random_tree(4, seed).edges()) for seed in range(2000)}
    assert len(shapes) == 16


@pytest.mark.parametrize("seed", range(5))
def test_erdos_renyi_is_connected(seed):
    g = erdos_renyi_connected(64, seed)
    assert is_connected(g)
    assert g.n == 64


def test_erdos_renyi_gives_up_on_empty_probability():
    with pytest.raises(GenerationError):
        erdos_renyi_connected(5, seed=0, p=0.0)


def test_ring_lattice_diameter():
    g = watts_strogatz(16, 3, k=4, p=0.0)
    assert diameter(g) == 4
    assert all(g.degree(u) == 4 for u in range(16))


@pytest.mark.parametrize("n,k", [(16, 3), (16, 0), (4, 4)])
def test_watts_strogatz_rejects_bad_k(n, k):
    with pytest.raises(GenerationError):
        watts_strogatz(n, 0, k=k, p=0.1)


@pytest.mark.parametrize("seed", range(5))
def test_watts_strogatz_keeps_edge_count(seed):
    g = watts_strogatz(40, seed, k=4, p=0.5)
    assert g.m == 80
    assert nx.is_connected(nx.Graph(g.edges()))


def test_fixtures():
    assert diameter(star_graph(7)) == 2
    assert diameter(path_graph(6)) == 5
    assert complete_graph(5).m == 10
    assert cycle_graph(6).m == 6
    assert is_tree(complete_binary_tree(15))
    assert diameter(complete_binary_tree(15)) == 6
    assert caterpillar(3, 2).n == 9


def test_enumerate_connected_graphs_counts():
    # число связных помеченных графов на 1..4 вершинах
    assert [sum(1 for _ in enumerate_connected_graphs(n)) for n in range(1, 5)] == [1, 1, 4, 38]


@pytest.mark.parametrize("n,seed", [(2, 0), (9, 5), (40, 11)])
def test_random_tree_decodes_seeded_prufer_sequence(n, seed):
    expected = np.random.default_rng(seed).integers(0, n, size=n - 2).tolist()
    assert nx.to_prufer_sequence(nx.Graph(random_tree(n, seed).edges())) == expected


def test_from_networkx_keeps_edges():
    g = from_networkx(nx.petersen_graph())
    assert g.n == 10
    assert g.m == 15
    assert diameter(g) == 2

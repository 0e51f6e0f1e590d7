import pytest

from src.categories import is_internally_connected, is_shattered, memdim
from src.constructions import construct_auto
from src.domain import Graph
from src.errors import SizeGuardError
from src.generators import complete_graph, cycle_graph, enumerate_connected_graphs, path_graph
from src.graph import diameter, is_path, is_tree
from src.oracle import brute_force_min_memdim, find_ic_shattered_failure
from src.routing import verify_all_pairs


@pytest.mark.parametrize("g,expected", [
    (path_graph(2), 1),
    (path_graph(3), 2),
    (complete_graph(3), 1),
])
def test_oracle_examples(g, expected):
    system, value = brute_force_min_memdim(g, 4)
    assert value == expected == memdim(system)
    assert verify_all_pairs(g, system).works


def test_oracle_on_single_vertex():
    system, value = brute_force_min_memdim(Graph.from_edges(1, []), 2)
    assert value == 0
    assert len(system) == 0


def test_oracle_returns_none_below_optimum():
    assert brute_force_min_memdim(path_graph(4), 2) is None


@pytest.mark.parametrize("g,max_dim", [
    (path_graph(7), 2),
    (path_graph(3), 5),
])
def test_oracle_size_guard(g, max_dim):
    with pytest.raises(SizeGuardError):
        brute_force_min_memdim(g, max_dim)


@pytest.mark.slow
def test_oracle_lower_bound_on_all_small_graphs():
    for n in range(1, 5):
        for g in enumerate_connected_graphs(n):
            system, value = brute_force_min_memdim(g, 4)
            diam = diameter(g)
            assert value >= diam
            assert verify_all_pairs(g, system).works
            if is_path(g) and n >= 2:
                assert value == diam == n - 1
            _, constructed = construct_auto(g)
            assert memdim(constructed) >= value


@pytest.mark.parametrize("n", [2, 3])
def test_oracle_lower_bound_without_connectivity(n):
    for g in enumerate_connected_graphs(n):
        _, value = brute_force_min_memdim(g, 4, connected_only=False)
        assert value >= diameter(g)


def test_oracle_on_paths_matches_path_length():
    for n in range(2, 6):
        _, value = brute_force_min_memdim(path_graph(n), 4)
        assert value == n - 1


@pytest.mark.slow
def test_counterexample_search_finds_failure():
    found = find_ic_shattered_failure(max_n=8, trials=10**6, seed=7)
    assert found is not None
    g, system = found
    assert g.n <= 8
    assert is_internally_connected(g, system).ok
    assert is_shattered(g, system).ok
    assert not verify_all_pairs(g, system).works
    assert not is_tree(g)


def test_counterexample_search_on_trees_finds_nothing():
    assert find_ic_shattered_failure(max_n=6, trials=3000, seed=7, trees_only=True) is None


def test_counterexample_search_size_guard():
    with pytest.raises(SizeGuardError):
        find_ic_shattered_failure(max_n=9, trials=10)


def test_oracle_over_all_subsets_size_guard():
    with pytest.raises(SizeGuardError):
        brute_force_min_memdim(cycle_graph(6), 4, connected_only=False)

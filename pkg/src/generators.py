"""
Генераторы графов для бенчмарка и тестов.

Случайные графы строит networkx. Зёрна для него выдаёт numpy.random.Generator
(np.random.default_rng(seed), PCG64): каждая попытка получает своё зерно из потока,
поэтому при одинаковом seed рёбра совпадают побитно.
"""
import logging
import math
from itertools import combinations
from typing import Iterator

import networkx as nx
import numpy as np

from src.domain import Graph
from src.errors import GenerationError
from src.graph import is_connected

logger = logging.getLogger(__name__)

MAX_TRIES = 1000


def _attempt_seeds(seed: int) -> Iterator[int]:
    rng = np.random.default_rng(seed)
    for _ in range(MAX_TRIES):
        yield int(rng.integers(2**32))


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """Переводит граф networkx с вершинами 0..n-1 в Graph."""
    return Graph.from_edges(nx_graph.number_of_nodes(), nx_graph.edges())


def random_tree(n: int, seed: int) -> Graph:
    """
    Равномерно случайное помеченное дерево через случайную последовательность Прюфера.

    Параметры:
        n (int): Количество вершин, n >= 1.
        seed (int): Зерно генератора.

    Returns:
        Graph: Дерево на вершинах 0..n-1.
    """
    if n < 1:
        raise GenerationError(f"Tree needs at least one vertex, got n={n}")
    if n == 1:
        return Graph.from_edges(1, [])
    rng = np.random.default_rng(seed)
    sequence = rng.integers(0, n, size=n - 2).tolist()
    return from_networkx(nx.from_prufer_sequence(sequence))


def erdos_renyi_connected(n: int, seed: int, p: float | None = None) -> Graph:
    """
    Связный граф G(n, p): выборка повторяется с новым зерном, пока граф не станет связным.

    Параметры:
        n (int): Количество вершин.
        seed (int): Зерно генератора.
        p (float | None): Вероятность ребра; по умолчанию min(1, 2 * ln(n) / n).

    Exceptions:
        GenerationError: Неверные параметры или связный граф не найден за MAX_TRIES попыток.
    """
    if n < 1:
        raise GenerationError(f"G(n, p) needs at least one vertex, got n={n}")
    if p is None:
        p = min(1.0, 2 * math.log(n) / n) if n > 1 else 1.0
    if not 0.0 <= p <= 1.0:
        raise GenerationError(f"Edge probability must lie in [0, 1], got {p}")
    for attempt, attempt_seed in enumerate(_attempt_seeds(seed), start=1):
        candidate = nx.gnp_random_graph(n, p, seed=attempt_seed)
        if nx.is_connected(candidate):
            logger.debug("G(%d, %.3f): связный граф с попытки %d", n, p, attempt)
            return from_networkx(candidate)
    raise GenerationError(f"No connected G({n}, {p}) after {MAX_TRIES} attempts")


def watts_strogatz(n: int, seed: int, k: int = 4, p: float = 0.1) -> Graph:
    """
    Связный граф малого мира Уоттса-Строгаца.

    Кольцевая решётка, где каждая вершина соединена с k / 2 соседями с каждой стороны;
    затем каждое ребро с вероятностью p перенаправляется в случайную вершину без петель
    и кратных рёбер. Выборка повторяется с новым зерном, пока граф не станет связным.

    Exceptions:
        GenerationError: Если k нечётно, k < 2, k >= n, p вне [0, 1] или связный граф
            не найден за MAX_TRIES попыток.
    """
    if k % 2 or k < 2 or k >= n:
        raise GenerationError(f"Watts-Strogatz needs even k with 2 <= k < n, got k={k}, n={n}")
    if not 0.0 <= p <= 1.0:
        raise GenerationError(f"Rewiring probability must lie in [0, 1], got {p}")
    for attempt, attempt_seed in enumerate(_attempt_seeds(seed), start=1):
        candidate = nx.watts_strogatz_graph(n, k, p, seed=attempt_seed)
        if nx.is_connected(candidate):
            logger.debug("WS(%d, %d, %.3f): связный граф с попытки %d", n, k, p, attempt)
            return from_networkx(candidate)
    raise GenerationError(f"No connected Watts-Strogatz graph ({n}, {k}, {p}) after {MAX_TRIES} attempts")


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Звезда на n вершинах: центр 0 и листья 1..n-1."""
    return Graph.from_edges(n, [(0, leaf) for leaf in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GenerationError(f"Cycle needs at least three vertices, got n={n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_binary_tree(n: int) -> Graph:
    """Полное бинарное дерево в нумерации кучи: родитель вершины i - (i - 1) // 2."""
    return Graph.from_edges(n, [((i - 1) // 2, i) for i in range(1, n)])


def caterpillar(spine: int, legs: int) -> Graph:
    """Путь 0..spine-1, к каждой вершине которого подвешено legs листьев."""
    edges = [(i, i + 1) for i in range(spine - 1)]
    leaf = spine
    for i in range(spine):
        for _ in range(legs):
            edges.append((i, leaf))
            leaf += 1
    return Graph.from_edges(leaf, edges)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """
    Перебирает все связные помеченные графы на n вершинах (без отсечения изоморфных).

    Подмножества рёбер полного графа перебираются как битовые маски.
    """
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))
        if is_connected(g):
            yield g

"""
Кратчайшие пути, диаметр, связность, BFS-остовы и запросы к корневым деревьям.

Обход в ширину всегда посещает соседей по возрастанию номера, а все ничьи
разрешаются в пользу меньшего номера, поэтому результаты детерминированы.
"""
from collections import deque

import numpy as np

from src.domain import Graph, RootedTree
from src.errors import ConstructionError, DisconnectedGraphError


def bfs_distances(g: Graph, s: int) -> list[int | None]:
    """
    Возвращает число рёбер кратчайшего пути от s до каждой вершины.

    Параметры:
        g (Graph): Граф.
        s (int): Исходная вершина.

    Returns:
        list[int | None]: Расстояния; None для недостижимых вершин.
    """
    dist: list[int | None] = [None] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def _bfs_with_parents(g: Graph, s: int) -> tuple[list[int], list[int]]:
    dist = [-1] * g.n
    parent = [-1] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] == -1:
                dist[v] = dist[u] + 1
                parent[v] = u
                queue.append(v)
    return dist, parent


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return all(d is not None for d in bfs_distances(g, 0))


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        reached = sum(1 for d in bfs_distances(g, 0) if d is not None)
        raise DisconnectedGraphError(f"Graph is disconnected: vertex 0 reaches {reached} of {g.n} vertices")


def all_pairs_distances(g: Graph) -> np.ndarray:
    """
    Матрица кратчайших расстояний n x n (BFS из каждой вершины); -1 для недостижимых пар.
    """
    table = np.full((g.n, g.n), -1, dtype=np.int32)
    for s in range(g.n):
        dist, _ = _bfs_with_parents(g, s)
        table[s] = dist
    return table


def diameter(g: Graph) -> int:
    """
    Наибольшая длина кратчайшего пути по всем парам вершин.

    Exceptions:
        DisconnectedGraphError: Если граф несвязный.
    """
    require_connected(g)
    best = 0
    for s in range(g.n):
        dist, _ = _bfs_with_parents(g, s)
        best = max(best, max(dist, default=0))
    return best


def double_sweep(g: Graph) -> tuple[int, int, list[int]]:
    """
    Двойной проход BFS: от вершины 0 к самой дальней вершине a, затем от a к самой дальней b.

    Returns:
        tuple[int, int, list[int]]: Концы a и b и кратчайший путь от a до b по родителям BFS.
            На деревьях длина пути равна диаметру.
    """
    require_connected(g)
    dist0, _ = _bfs_with_parents(g, 0)
    a = max(range(g.n), key=lambda v: (dist0[v], -v))
    dist_a, parent = _bfs_with_parents(g, a)
    b = max(range(g.n), key=lambda v: (dist_a[v], -v))
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return a, b, path


def choose_bfs_root(g: Graph) -> int:
    """
    Выбирает корень BFS-остова как середину пути, найденного двойным проходом.

    При нечётной длине пути из двух центральных вершин берётся вершина с меньшим номером.

    Exceptions:
        ConstructionError: Для пустого графа.
        DisconnectedGraphError: Для несвязного графа.
    """
    if g.n == 0:
        raise ConstructionError("Empty graph has no root")
    _, _, path = double_sweep(g)
    length = len(path) - 1
    if length % 2 == 0:
        return path[length // 2]
    return min(path[length // 2], path[length // 2 + 1])


def bfs_spanning_tree(g: Graph, root: int) -> RootedTree:
    """
    Строит остовное дерево обходом в ширину из root.

    Глубина каждой вершины в дереве равна её расстоянию до root в графе; дети
    упорядочены по возрастанию номера. Диаметр дерева не больше 2 * diam(g).

    Exceptions:
        DisconnectedGraphError: Если граф несвязный.
    """
    require_connected(g)
    seen = [False] * g.n
    seen[root] = True
    children: list[list[int]] = [[] for _ in range(g.n)]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                children[u].append(v)
                queue.append(v)
    return RootedTree.from_children(root, children)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_path(g: Graph) -> bool:
    return is_tree(g) and all(g.degree(u) <= 2 for u in range(g.n))


def path_order(g: Graph) -> list[int]:
    """
    Вершины пути по порядку, начиная с конца с меньшим номером.

    Exceptions:
        ConstructionError: Если граф не является путём.
    """
    if not is_path(g):
        raise ConstructionError("Graph is not a simple path")
    start = min(u for u in range(g.n) if g.degree(u) <= 1)
    order = [start]
    previous = None
    while len(order) < g.n:
        current = order[-1]
        step = next(v for v in g.adjacency[current] if v != previous)
        previous = current
        order.append(step)
    return order


def is_ancestor(t: RootedTree, u: int, v: int) -> bool:
    """Является ли u предком v; каждая вершина считается предком самой себя."""
    while t.depth[v] > t.depth[u]:
        v = t.parent[v]
    return u == v


def lca(t: RootedTree, u: int, v: int) -> int:
    while t.depth[u] > t.depth[v]:
        u = t.parent[u]
    while t.depth[v] > t.depth[u]:
        v = t.parent[v]
    while u != v:
        u = t.parent[u]
        v = t.parent[v]
    return u


def ancestors(t: RootedTree, v: int) -> list[int]:
    """Собственные предки v от родителя до корня (сама v не входит)."""
    result = []
    p = t.parent[v]
    while p is not None:
        result.append(p)
        p = t.parent[p]
    return result


def tree_diameter(t: RootedTree) -> int:
    return diameter(t.as_graph())

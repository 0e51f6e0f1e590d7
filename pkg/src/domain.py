"""
Доменные типы: граф, корневое дерево, система категорий и результаты маршрутизации.

Все типы неизменяемы после создания; конструкторы проверяют инварианты,
поэтому любой объект, полученный из этого модуля, можно передавать
в алгоритмы без повторных проверок.
"""
import logging
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from src.errors import ConstructionError, IdMismatchError, InputFormatError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """
    Неориентированный простой граф на вершинах 0..n-1.

    Атрибуты:
        n (int): Количество вершин.
        adjacency (tuple[tuple[int, ...], ...]): Для каждой вершины отсортированный
            по возрастанию список соседей без повторов и петель.

    Методы:
        from_edges(n, edges): Строит граф по списку рёбер с проверкой петель и кратных рёбер.
        neighbors(u): Возвращает соседей вершины u.
        has_edge(u, v): Проверяет наличие ребра {u, v}.
        edges(): Возвращает рёбра (u, v) с u < v в лексикографическом порядке.
    """
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Vertex count must be non-negative, got {self.n}")
        if len(self.adjacency) != self.n:
            raise ValueError(f"Expected {self.n} adjacency lists, got {len(self.adjacency)}")
        for u, nbrs in enumerate(self.adjacency):
            for i, v in enumerate(nbrs):
                if not 0 <= v < self.n:
                    raise ValueError(f"Neighbor {v} of vertex {u} is out of range")
                if v == u:
                    raise ValueError(f"Self-loop at vertex {u}")
                if i and nbrs[i - 1] >= v:
                    raise ValueError(f"Neighbors of vertex {u} must be sorted and unique")
                if not self.has_edge(v, u):
                    raise ValueError(f"Edge {u}-{v} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """
        Строит граф по списку неориентированных рёбер.

        Параметры:
            n (int): Количество вершин.
            edges (Iterable[tuple[int, int]]): Рёбра в виде пар вершин.

        Returns:
            Graph: Граф с отсортированными списками смежности.

        Exceptions:
            InputFormatError: Если встречена петля, повторное ребро или вершина вне диапазона.
        """
        adjacency: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputFormatError(f"edge {u}-{v} references a vertex outside 0..{n - 1}")
            if u == v:
                raise InputFormatError(f"self-loop at vertex {u}")
            if v in adjacency[u]:
                raise InputFormatError(f"duplicate edge {u}-{v}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(n, tuple(tuple(sorted(nbrs)) for nbrs in adjacency))

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]


@dataclass(frozen=True)
class RootedTree:
    """
    Корневое дерево, заданное массивами родителей и детей.

    Вершина без детей имеет высоту 0; отсутствующему ребёнку условно
    приписывается высота -1 (см. height_of).

    Атрибуты:
        root (int): Корень дерева.
        parent (tuple[int | None, ...]): Родитель каждой вершины (None у корня).
        children (tuple[tuple[int, ...], ...]): Упорядоченные дети; у бинарного
            дерева слот 0 - левый ребёнок, слот 1 - правый.
        depth (tuple[int, ...]): Расстояние от корня в рёбрах.
        height (tuple[int, ...]): Длина самого длинного пути вниз до потомка.
        subtree_size (tuple[int, ...]): Число потомков, включая саму вершину.
        binary (bool): Признак бинарного дерева (не более двух детей у каждой вершины).

    Методы:
        from_children(root, children, binary): Проверяющий конструктор.
        left(v), right(v): Левый и правый ребёнок или None.
        height_of(v): Высота вершины, -1 для None.
        bfs_order(): Вершины в порядке обхода в ширину от корня.
    """
    root: int
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]
    depth: tuple[int, ...]
    height: tuple[int, ...]
    subtree_size: tuple[int, ...]
    binary: bool = False

    @classmethod
    def from_children(cls, root: int, children: list[list[int]], binary: bool = False) -> "RootedTree":
        """
        Строит дерево по спискам детей и вычисляет глубины, высоты и размеры поддеревьев.

        Параметры:
            root (int): Корень.
            children (list[list[int]]): Для каждой вершины упорядоченный список детей.
            binary (bool): Требовать ли не более двух детей у каждой вершины.

        Returns:
            RootedTree: Проверенное дерево.

        Exceptions:
            ConstructionError: Если родительские связи содержат цикл, не покрывают
                все вершины или дерево не бинарное при binary=True.
        """
        n = len(children)
        if not 0 <= root < n:
            raise ConstructionError(f"Root {root} is outside 0..{n - 1}")
        parent: list[int | None] = [None] * n
        depth = [-1] * n
        depth[root] = 0
        order = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if binary and len(children[u]) > 2:
                raise ConstructionError(f"Vertex {u} has {len(children[u])} children in a binary tree")
            for c in children[u]:
                if depth[c] != -1:
                    raise ConstructionError(f"Vertex {c} is reached twice; parent pointers are not a tree")
                parent[c] = u
                depth[c] = depth[u] + 1
                order.append(c)
                queue.append(c)
        if len(order) != n:
            raise ConstructionError(f"Tree rooted at {root} spans {len(order)} of {n} vertices")

        height = [0] * n
        size = [1] * n
        for u in reversed(order):
            p = parent[u]
            if p is not None:
                height[p] = max(height[p], height[u] + 1)
                size[p] += size[u]
        return cls(
            root=root,
            parent=tuple(parent),
            children=tuple(tuple(c) for c in children),
            depth=tuple(depth),
            height=tuple(height),
            subtree_size=tuple(size),
            binary=binary,
        )

    @property
    def n(self) -> int:
        return len(self.parent)

    def left(self, v: int) -> int | None:
        kids = self.children[v]
        return kids[0] if kids else None

    def right(self, v: int) -> int | None:
        kids = self.children[v]
        return kids[1] if len(kids) > 1 else None

    def height_of(self, v: int | None) -> int:
        return -1 if v is None else self.height[v]

    def bfs_order(self) -> list[int]:
        order = [self.root]
        for u in order:
            order.extend(self.children[u])
        return order

    def subtree(self, v: int) -> list[int]:
        """Вершины поддерева v в порядке обхода в ширину (по неубыванию глубины)."""
        order = [v]
        for u in order:
            order.extend(self.children[u])
        return order

    def edges(self) -> list[tuple[int, int]]:
        return [(p, v) for v, p in enumerate(self.parent) if p is not None]

    def as_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges())


@dataclass(frozen=True)
class CategorySystem:
    """
    Система категорий S - множество непустых подмножеств вершин - и обратный индекс cat(u).

    Атрибуты:
        n (int): Количество вершин графа, к которому относится система.
        categories (tuple[tuple[int, ...], ...]): Категории, каждая отсортирована и без повторов;
            равных категорий нет.
        member_index (tuple[tuple[int, ...], ...]): Для каждой вершины отсортированные
            номера категорий, в которые она входит.

    Методы:
        from_sets(n, sets): Собирает систему, склеивая повторы и отбрасывая пустые множества.
        cat(u): Номера категорий вершины u.
    """
    n: int
    categories: tuple[tuple[int, ...], ...]
    member_index: tuple[tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        if len(self.member_index) != self.n:
            raise ValueError("Member index must have one row per vertex")
        if len(set(self.categories)) != len(self.categories):
            raise ValueError("Categories must be pairwise distinct")
        total = 0
        for c, members in enumerate(self.categories):
            if not members:
                raise ValueError(f"Category {c} is empty")
            for u in members:
                if not 0 <= u < self.n:
                    raise IdMismatchError(f"Category {c} references vertex {u}, graph has n={self.n}")
                row = self.member_index[u]
                i = bisect_left(row, c)
                if i == len(row) or row[i] != c:
                    raise ValueError(f"Member index is missing category {c} for vertex {u}")
            total += len(members)
        if total != sum(len(row) for row in self.member_index):
            raise ValueError("Member index lists categories that do not contain the vertex")

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "CategorySystem":
        """
        Собирает систему категорий из произвольных множеств вершин.

        Повторяющиеся множества склеиваются (S - множество подмножеств), пустые
        отбрасываются с предупреждением. Порядок категорий - порядок первого появления.

        Параметры:
            n (int): Количество вершин.
            sets (Iterable[Iterable[int]]): Исходные множества.

        Returns:
            CategorySystem: Система без повторов и пустых категорий.

        Exceptions:
            IdMismatchError: Если множество содержит вершину вне 0..n-1.
        """
        seen: set[tuple[int, ...]] = set()
        categories: list[tuple[int, ...]] = []
        empty = duplicates = 0
        for raw in sets:
            members = tuple(sorted(set(raw)))
            if not members:
                empty += 1
                continue
            if members[0] < 0 or members[-1] >= n:
                bad = members[0] if members[0] < 0 else members[-1]
                raise IdMismatchError(f"Category references vertex {bad}, graph has n={n}")
            if members in seen:
                duplicates += 1
                continue
            seen.add(members)
            categories.append(members)
        if empty:
            logger.warning("Отброшено пустых категорий: %d", empty)
        if duplicates:
            logger.debug("Склеено повторяющихся категорий: %d", duplicates)

        index: list[list[int]] = [[] for _ in range(n)]
        for c, members in enumerate(categories):
            for u in members:
                index[u].append(c)
        return cls(n, tuple(categories), tuple(tuple(row) for row in index))

    def cat(self, u: int) -> tuple[int, ...]:
        return self.member_index[u]

    def __len__(self) -> int:
        return len(self.categories)

    def as_frozensets(self) -> set[frozenset[int]]:
        return {frozenset(c) for c in self.categories}


class Outcome(Enum):
    DELIVERED = "delivered"
    STUCK = "stuck"


@dataclass(frozen=True)
class RouteResult:
    """
    Траектория одного сообщения при жадной маршрутизации.

    Атрибуты:
        source (int): Отправитель.
        target (int): Получатель.
        path (tuple[int, ...]): Пройденные вершины, начиная с source.
        distances (tuple[int, ...]): Значение d(v, target) в каждой вершине пути.
        outcome (Outcome): Доставлено или застряло.
        reason (str): Пояснение для застрявшего сообщения, пустое для доставленного.
    """
    source: int
    target: int
    path: tuple[int, ...]
    distances: tuple[int, ...]
    outcome: Outcome
    reason: str = ""

    @property
    def delivered(self) -> bool:
        return self.outcome is Outcome.DELIVERED

    @property
    def stuck_at(self) -> int | None:
        return None if self.delivered else self.path[-1]

    @property
    def hops(self) -> int:
        return len(self.path) - 1


@dataclass(frozen=True)
class VerificationReport:
    """
    Итог проверки маршрутизации для всех упорядоченных пар.

    Атрибуты:
        works (bool): У каждой вершины, кроме цели, есть строго более близкий сосед - для каждой цели.
        first_failure (tuple[int, int] | None): Лексикографически наименьшая пара (u, t) без такого соседа.
        pairs_checked (int): Число проверенных упорядоченных пар u != t.
        max_route_len (int): Наибольшая длина доставленного маршрута.
        mean_route_len (float): Средняя длина доставленных маршрутов.
        max_stretch (float): Наибольшее отношение длины маршрута к длине кратчайшего пути.
        delivered_pairs (int): Число пар, доставленных при стандартном выборе соседа.
    """
    works: bool
    first_failure: tuple[int, int] | None
    pairs_checked: int
    max_route_len: int
    mean_route_len: float
    max_stretch: float
    delivered_pairs: int

    def __post_init__(self):
        if self.works != (self.first_failure is None):
            raise ValueError("works must be true exactly when there is no failing pair")


@dataclass(frozen=True)
class ShapeNode:
    """
    Узел формы взвешенно-сбалансированного бинарного дерева.

    Лист хранит номер элемента (item), внутренний узел - двух детей.
    """
    item: int | None = None
    left: "ShapeNode | None" = None
    right: "ShapeNode | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.item is not None

    def leaves(self) -> list[int]:
        if self.is_leaf:
            return [self.item]
        return self.left.leaves() + self.right.leaves()

    def leaf_depths(self, depth: int = 0) -> dict[int, int]:
        if self.is_leaf:
            return {self.item: depth}
        depths = self.left.leaf_depths(depth + 1)
        depths.update(self.right.leaf_depths(depth + 1))
        return depths

    @property
    def height(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + max(self.left.height, self.right.height)

    @property
    def internal_count(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + self.left.internal_count + self.right.internal_count


@dataclass(frozen=True)
class Embedding:
    """
    Вложение корневого дерева T в бинарное дерево B с сохранением отношения предок-потомок.

    Исходные вершины сохраняют свои номера в B; фиктивные вершины получают номера n, n+1, ...

    Атрибуты:
        binary (RootedTree): Бинарное дерево B.
        forward_map (tuple[int, ...]): Образ каждой вершины T в B.
        real_flags (tuple[bool, ...]): Для каждой вершины B - является ли она образом вершины T.
        owner (tuple[int, ...]): Для каждой вершины B - вершина T, детей которой она группирует
            (для исходной вершины - она сама).
    """
    binary: RootedTree
    forward_map: tuple[int, ...]
    real_flags: tuple[bool, ...]
    owner: tuple[int, ...]

    @property
    def dummy_count(self) -> int:
        return sum(1 for flag in self.real_flags if not flag)


@dataclass(frozen=True)
class BenchRecord:
    """
    Одна строка бенчмарка: размер графа, диаметр, memdim построенной системы и статистика маршрутов.
    """
    generator: str
    seed: int
    n: int
    m: int
    diam: int
    memdim: int
    bound: int
    max_route: int
    mean_route: float
    max_stretch: float
    works: bool = True

    @property
    def ratio(self) -> float:
        return self.memdim / self.bound if self.bound else float(self.memdim)

    def to_row(self) -> list[str]:
        return [
            self.generator,
            str(self.seed),
            str(self.n),
            str(self.m),
            str(self.diam),
            str(self.memdim),
            str(self.bound),
            str(self.max_route),
            f"{self.mean_route:.3f}",
            f"{self.max_stretch:.3f}",
        ]

"""
Построение систем категорий, при которых жадная маршрутизация гарантированно работает.

Конструкции:
    - путь: множества A_i и B_i, memdim ровно diam;
    - звезда: по два множества на лист;
    - бинарное дерево: поддеревья S_v и семейства L_v, R_v, memdim <= 3 * (h + 1)^2;
    - произвольное дерево: вложение в бинарное дерево через взвешенно-сбалансированные
      формы и перенос категорий обратно;
    - связный граф: конструкция для дерева на BFS-остове.
"""
import logging
from enum import Enum
from typing import Iterator, NamedTuple

from src.domain import CategorySystem, Embedding, Graph, RootedTree, ShapeNode
from src.errors import ConstructionError
from src.graph import bfs_spanning_tree, choose_bfs_root, is_path, is_tree, path_order, require_connected
from src.weight_balanced import build_weight_balanced

logger = logging.getLogger(__name__)


class DummyPolicy(Enum):
    """
    Способ переноса категорий бинарного дерева B обратно на исходное дерево T.

    DELETE - фиктивные вершины просто удаляются из категорий. Категория с корнем
    в фиктивной вершине может при этом распасться на несвязные части, и маршрутизация
    перестаёт работать (пример - звезда с четырьмя листьями).
    CONTRACT - фиктивная вершина заменяется своим владельцем; семейства L/R с корнями
    в фиктивных вершинах объединяются по (владелец, уровень, сторона, глубина).
    """
    DELETE = "delete"
    CONTRACT = "contract"


class HostFamily(NamedTuple):
    """Одна категория конструкции для бинарного дерева вместе с её происхождением."""
    kind: str
    root: int
    depth_index: int | None
    members: list[int]


class TreeBuild(NamedTuple):
    system: CategorySystem
    embedding: Embedding
    host_system: CategorySystem


class GraphBuild(NamedTuple):
    system: CategorySystem
    tree: RootedTree


def construct_path_categories(g: Graph) -> CategorySystem:
    """
    Конструкция для пути: для позиции i множества A_i = {0..i-1} и B_i = {i+1..n-1}.

    Позиция 0 - конец пути с меньшим номером. Каждая вершина лежит ровно в n - 1
    множествах, поэтому memdim = diam.

    Exceptions:
        ConstructionError: Если граф не является путём.
    """
    order = path_order(g)
    sets = []
    for i in range(len(order)):
        if i > 0:
            sets.append(order[:i])
        if i < len(order) - 1:
            sets.append(order[i + 1:])
    return CategorySystem.from_sets(g.n, sets)


def construct_star_categories(g: Graph) -> CategorySystem:
    """
    Конструкция для звезды: для каждого листа x категории {x} и {x, центр}.

    Центр входит в категорию каждого листа, так что memdim растёт линейно.

    Exceptions:
        ConstructionError: Если граф не звезда хотя бы с двумя листьями.
    """
    centres = [u for u in range(g.n) if g.degree(u) == g.n - 1]
    if g.n < 3 or not is_tree(g) or not centres:
        raise ConstructionError("Graph is not a star with at least two leaves")
    centre = centres[0]
    sets = []
    for leaf in g.neighbors(centre):
        sets.append([leaf])
        sets.append([leaf, centre])
    return CategorySystem.from_sets(g.n, sets)


def _binary_tree_families(t: RootedTree) -> Iterator[HostFamily]:
    for v in t.bfs_order():
        yield HostFamily("S", v, None, t.subtree(v))
    for v in t.bfs_order():
        left, right = t.left(v), t.right(v)
        for kind, near, far in (("L", left, right), ("R", right, left)):
            if near is None:
                continue
            near_nodes = t.subtree(near)
            far_nodes = t.subtree(far) if far is not None else []
            taken = 0
            for i in range(t.depth[v], t.depth[v] + t.height[near] + 1):
                while taken < len(near_nodes) and t.depth[near_nodes[taken]] <= i:
                    taken += 1
                yield HostFamily(kind, v, i, [v] + near_nodes[:taken] + far_nodes)


def construct_binary_tree_categories(t: RootedTree) -> CategorySystem:
    """
    Конструкция для бинарного дерева.

    Для каждой вершины v: S_v - все потомки v (включая v); L_{v,i} - v, вершины левого
    поддерева глубины не больше i и всё правое поддерево, для
    depth(v) <= i <= depth(v) + height(left(v)); R_{v,i} - симметрично. Высота
    отсутствующего ребёнка равна -1, поэтому соответствующее семейство пусто.

    Exceptions:
        ConstructionError: Если у какой-то вершины больше двух детей.
    """
    if any(len(kids) > 2 for kids in t.children):
        raise ConstructionError("Binary-tree construction needs at most two children per vertex")
    return CategorySystem.from_sets(t.n, (family.members for family in _binary_tree_families(t)))


def binary_memdim_bound(height: int) -> int:
    """Верхняя граница memdim конструкции для бинарного дерева высоты height."""
    return 3 * (height + 1) ** 2


def embed_into_binary_tree(t: RootedTree) -> Embedding:
    """
    Вкладывает корневое дерево в бинарное с сохранением отношения предок-потомок.

    Вершины, у которых не больше двух детей, копируются как есть (единственный ребёнок
    становится левым). Вершина u с k > 2 детьми становится корнем взвешенно-
    сбалансированной формы над своими детьми (по возрастанию номера, вес ребёнка -
    размер его поддерева); внутренние узлы формы - новые фиктивные вершины.

    Returns:
        Embedding: Бинарное дерево, тождественное отображение исходных вершин и владельцы
            фиктивных вершин.
    """
    n = t.n
    host_children: list[list[int]] = [[] for _ in range(n)]
    owner = list(range(n))

    def materialise(node: ShapeNode, kids: list[int], u: int) -> int:
        if node.is_leaf:
            return kids[node.item]
        dummy = len(host_children)
        host_children.append([])
        owner.append(u)
        host_children[dummy] = [materialise(node.left, kids, u), materialise(node.right, kids, u)]
        return dummy

    for u in t.bfs_order():
        kids = sorted(t.children[u])
        if len(kids) <= 2:
            host_children[u] = kids
            continue
        shape = build_weight_balanced([t.subtree_size[c] for c in kids])
        host_children[u] = [materialise(shape.left, kids, u), materialise(shape.right, kids, u)]

    binary = RootedTree.from_children(t.root, host_children, binary=True)
    embedding = Embedding(
        binary=binary,
        forward_map=tuple(range(n)),
        real_flags=tuple(h < n for h in range(binary.n)),
        owner=tuple(owner),
    )
    logger.debug("Вложение: %d исходных и %d фиктивных вершин", n, embedding.dummy_count)
    return embedding


def build_tree_system(t: RootedTree, dummies: DummyPolicy = DummyPolicy.CONTRACT) -> TreeBuild:
    """
    Полный конвейер для дерева: вложение, конструкция для бинарного дерева, перенос на T.

    Параметры:
        t (RootedTree): Корневое дерево.
        dummies (DummyPolicy): Способ обработки фиктивных вершин.

    Returns:
        TreeBuild: Система на T, вложение и система на бинарном дереве.
    """
    embedding = embed_into_binary_tree(t)
    host = embedding.binary
    real = embedding.real_flags
    families = list(_binary_tree_families(host))
    host_system = CategorySystem.from_sets(host.n, (family.members for family in families))

    sets: list[list[int] | set[int]] = []
    merged: dict[tuple[int, int, str, int], set[int]] = {}
    for family in families:
        restricted = [x for x in family.members if real[x]]
        if real[family.root] or dummies is DummyPolicy.DELETE:
            if restricted:
                sets.append(restricted)
            continue
        if family.kind == "S":
            # свидетеля S_d заменяет S_c настоящего ребёнка c
            continue
        owner = embedding.owner[family.root]
        key = (owner, host.depth[family.root], family.kind, family.depth_index)
        bucket = merged.get(key)
        if bucket is None:
            bucket = merged[key] = {owner}
            sets.append(bucket)
        bucket.update(restricted)

    system = CategorySystem.from_sets(t.n, sets)
    return TreeBuild(system, embedding, host_system)


def construct_tree_categories(t: RootedTree, dummies: DummyPolicy = DummyPolicy.CONTRACT) -> CategorySystem:
    """Система категорий для произвольного корневого дерева (см. build_tree_system)."""
    return build_tree_system(t, dummies).system


def root_tree(g: Graph) -> RootedTree:
    """
    Корневое дерево для графа-дерева с корнем в середине пути двойного прохода.

    Exceptions:
        ConstructionError: Если граф не дерево.
    """
    if not is_tree(g):
        raise ConstructionError("Graph is not a tree")
    return bfs_spanning_tree(g, choose_bfs_root(g))


def construct_graph_categories(g: Graph, dummies: DummyPolicy = DummyPolicy.CONTRACT) -> GraphBuild:
    """
    Система категорий для связного графа: конструкция для дерева на BFS-остове.

    Соседи в остове - подмножество соседей в графе, поэтому у каждой вершины
    сохраняется строго более близкий сосед и маршрутизация работает в исходном графе.

    Exceptions:
        ConstructionError: Для пустого графа.
        DisconnectedGraphError: Для несвязного графа.
    """
    if g.n == 0:
        raise ConstructionError("Graph has no vertices")
    require_connected(g)
    tree = bfs_spanning_tree(g, choose_bfs_root(g))
    system = construct_tree_categories(tree, dummies)
    logger.info("Построено категорий: %d для графа n=%d, m=%d", len(system), g.n, g.m)
    return GraphBuild(system, tree)


def construct_auto(g: Graph) -> tuple[str, CategorySystem]:
    """
    Выбирает конструкцию по форме графа: путь, дерево или общий граф.

    Граф из одной вершины обрабатывается конструкцией для дерева (одна категория {0}).

    Returns:
        tuple[str, CategorySystem]: Имя выбранной конструкции и система категорий.
    """
    if g.n == 0:
        raise ConstructionError("Graph has no vertices")
    if g.n > 1 and is_path(g):
        return "path", construct_path_categories(g)
    if is_tree(g):
        return "tree", construct_tree_categories(root_tree(g))
    return "graph", construct_graph_categories(g).system

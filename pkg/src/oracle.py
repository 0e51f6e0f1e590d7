"""
Переборные оракулы для маленьких графов.

Множества вершин кодируются битовыми масками int: бит u установлен, если вершина u
входит в множество. Проверки на масках работают без numpy и быстрее на n <= 8.
"""
import logging
from typing import Sequence

import numpy as np

from src.domain import CategorySystem, Graph
from src.errors import SizeGuardError
from src.generators import enumerate_connected_graphs, random_tree
from src.graph import is_tree, require_connected

logger = logging.getLogger(__name__)

MAX_ORACLE_N = 6
# для перебора по всем 2^n - 1 подмножествам
MAX_UNRESTRICTED_N = 5
MAX_ORACLE_DIM = 4
MAX_SEARCH_N = 8
EXHAUSTIVE_SEARCH_N = 4


def _neighbour_masks(g: Graph) -> list[int]:
    return [sum(1 << v for v in nbrs) for nbrs in g.adjacency]


def _members(mask: int) -> list[int]:
    return [u for u in range(mask.bit_length()) if mask >> u & 1]


def _is_connected_mask(mask: int, nbr_masks: Sequence[int]) -> bool:
    seen = frontier = mask & -mask
    while frontier:
        v = frontier.bit_length() - 1
        frontier &= ~(1 << v)
        new = nbr_masks[v] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def candidate_subsets(g: Graph, connected_only: bool = True) -> list[int]:
    """
    Маски непустых подмножеств вершин, кроме множества всех вершин, по возрастанию.

    Множество всех вершин не меняет ни одного расстояния d(u, t), поэтому не перебирается.
    """
    full = (1 << g.n) - 1
    nbr_masks = _neighbour_masks(g)
    return [
        mask for mask in range(1, full)
        if not connected_only or _is_connected_mask(mask, nbr_masks)
    ]


def works_masks(n: int, nbr_masks: Sequence[int], family: Sequence[int]) -> bool:
    """Работает ли маршрутизация для семейства масок: у каждой u != t есть более близкий сосед."""
    for t in range(n):
        containing = [c for c in family if c >> t & 1]
        dist = [sum(1 for c in containing if not c >> u & 1) for u in range(n)]
        for u in range(n):
            if u == t:
                continue
            nbrs = nbr_masks[u]
            if not any(dist[v] < dist[u] for v in range(n) if nbrs >> v & 1):
                return False
    return True


def shattered_masks(n: int, nbr_masks: Sequence[int], family: Sequence[int]) -> bool:
    """Для каждой пары s != t есть множество с t, без s, задевающее соседей s."""
    for s in range(n):
        reach = nbr_masks[s]
        covered = 0
        for c in family:
            if not c >> s & 1 and c & reach:
                covered |= c
        if covered | (1 << s) != (1 << n) - 1:
            return False
    return True


def brute_force_min_memdim(
    g: Graph, max_dim: int, connected_only: bool = True
) -> tuple[CategorySystem, int] | None:
    """
    Ищет систему категорий наименьшей memdim, при которой маршрутизация работает.

    Перебор с итеративным углублением по D = 0..max_dim: на каждом уровне каждое
    подмножество-кандидат либо берётся, либо пропускается, и ни одна вершина не может
    войти больше чем в D множеств. Ветка отсекается, если какую-то пару (s, t) уже
    нельзя разделить множеством, содержащим t без s (иначе d(s, t) = 0 и s застревает).

    Параметры:
        g (Graph): Связный граф, n <= 6.
        max_dim (int): Наибольшая допустимая memdim, не больше 4.
        connected_only (bool): Перебирать только связные подмножества; без этого n <= 5.

    Returns:
        tuple[CategorySystem, int] | None: Оптимальная система и её memdim либо None,
            если системы с memdim <= max_dim нет.

    Exceptions:
        SizeGuardError: Если n > 6 (n > 5 при connected_only=False) или max_dim > 4.
        DisconnectedGraphError: Если граф несвязный.
    """
    if g.n > MAX_ORACLE_N:
        raise SizeGuardError(f"Oracle is limited to n <= {MAX_ORACLE_N}, got n={g.n}")
    if not connected_only and g.n > MAX_UNRESTRICTED_N:
        raise SizeGuardError(f"Oracle over all subsets is limited to n <= {MAX_UNRESTRICTED_N}, got n={g.n}")
    if not 0 <= max_dim <= MAX_ORACLE_DIM:
        raise SizeGuardError(f"Oracle is limited to 0 <= max_dim <= {MAX_ORACLE_DIM}, got {max_dim}")
    require_connected(g)
    n = g.n
    if n <= 1:
        return CategorySystem.from_sets(n, []), 0

    full = (1 << n) - 1
    nbr_masks = _neighbour_masks(g)
    candidates = candidate_subsets(g, connected_only)

    # suffix[i][t] - вершины s, которые можно отделить от t кандидатами с номером >= i
    suffix = [[0] * n for _ in range(len(candidates) + 1)]
    for i in range(len(candidates) - 1, -1, -1):
        row = list(suffix[i + 1])
        for t in _members(candidates[i]):
            row[t] |= full & ~candidates[i]
        suffix[i] = row

    def search(i: int, cap: int, counts: list[int], separated: list[int], chosen: list[int]) -> list[int] | None:
        for t in range(n):
            if (separated[t] | suffix[i][t] | (1 << t)) != full:
                return None
        if i == len(candidates):
            return list(chosen) if works_masks(n, nbr_masks, chosen) else None
        mask = candidates[i]
        members = _members(mask)
        if all(counts[u] < cap for u in members):
            for u in members:
                counts[u] += 1
            chosen.append(mask)
            updated = list(separated)
            for t in members:
                updated[t] |= full & ~mask
            found = search(i + 1, cap, counts, updated, chosen)
            chosen.pop()
            for u in members:
                counts[u] -= 1
            if found is not None:
                return found
        return search(i + 1, cap, counts, separated, chosen)

    for cap in range(max_dim + 1):
        found = search(0, cap, [0] * n, [0] * n, [])
        logger.debug("Оракул: memdim <= %d %s", cap, "найдена" if found is not None else "невозможна")
        if found is not None:
            system = CategorySystem.from_sets(n, (_members(mask) for mask in found))
            return system, cap
    return None


def _random_connected_subset(rng: np.random.Generator, n: int, nbr_masks: Sequence[int]) -> int:
    size = int(rng.integers(1, n + 1))
    mask = 1 << int(rng.integers(n))
    frontier_bits = nbr_masks[mask.bit_length() - 1] & ~mask
    while mask.bit_count() < size and frontier_bits:
        options = _members(frontier_bits)
        v = options[int(rng.integers(len(options)))]
        mask |= 1 << v
        frontier_bits = (frontier_bits | nbr_masks[v]) & ~mask
    return mask


def _random_graph(rng: np.random.Generator, n: int, trees_only: bool) -> Graph:
    tree = random_tree(n, int(rng.integers(2**32)))
    edges = set(tree.edges())
    if not trees_only:
        extra = int(rng.integers(1, n + 1))
        for _ in range(extra):
            u, v = sorted(int(x) for x in rng.choice(n, size=2, replace=False))
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def _is_failure(n: int, nbr_masks: Sequence[int], family: Sequence[int]) -> bool:
    return shattered_masks(n, nbr_masks, family) and not works_masks(n, nbr_masks, family)


def find_ic_shattered_failure(
    max_n: int = MAX_SEARCH_N, trials: int = 10**6, seed: int = 7, trees_only: bool = False
) -> tuple[Graph, CategorySystem] | None:
    """
    Ищет пару (G, S), которая внутренне связна и shattered, но маршрутизация не работает.

    Сначала перебираются все семейства связных подмножеств на всех связных графах
    с n <= 4, затем случайные графы и семейства до max_n вершин. Каждая проверенная
    пара расходует одну попытку из trials. Все категории - связные подмножества,
    поэтому внутренняя связность выполняется по построению.

    Параметры:
        max_n (int): Наибольшее число вершин, не больше 8.
        trials (int): Бюджет проверок.
        seed (int): Зерно случайной фазы.
        trees_only (bool): Искать только на деревьях (там контрпримеров нет).

    Returns:
        tuple[Graph, CategorySystem] | None: Первая найденная пара или None.

    Exceptions:
        SizeGuardError: Если max_n > 8.
    """
    if max_n > MAX_SEARCH_N:
        raise SizeGuardError(f"Counterexample search is limited to n <= {MAX_SEARCH_N}, got {max_n}")
    spent = 0

    for n in range(2, min(EXHAUSTIVE_SEARCH_N, max_n) + 1):
        for g in enumerate_connected_graphs(n):
            if is_tree(g) != trees_only:
                continue
            nbr_masks = _neighbour_masks(g)
            subsets = candidate_subsets(g) + [(1 << n) - 1]
            for choice in range(1, 1 << len(subsets)):
                if spent >= trials:
                    logger.info("Бюджет исчерпан на переборе: %d проверок", spent)
                    return None
                spent += 1
                family = [subsets[i] for i in range(len(subsets)) if choice >> i & 1]
                if _is_failure(n, nbr_masks, family):
                    logger.info("Контрпример найден перебором за %d проверок: n=%d, m=%d", spent, g.n, g.m)
                    return g, CategorySystem.from_sets(n, (_members(mask) for mask in family))

    rng = np.random.default_rng(seed)
    low = EXHAUSTIVE_SEARCH_N + 1 if max_n > EXHAUSTIVE_SEARCH_N else 2
    while spent < trials:
        spent += 1
        n = int(rng.integers(low, max_n + 1))
        g = _random_graph(rng, n, trees_only)
        nbr_masks = _neighbour_masks(g)
        size = int(rng.integers(1, 2 * n + 1))
        family = sorted({_random_connected_subset(rng, n, nbr_masks) for _ in range(size)})
        if _is_failure(n, nbr_masks, family):
            logger.info("Контрпример найден случайным поиском за %d проверок: n=%d, m=%d", spent, g.n, g.m)
            return g, CategorySystem.from_sets(n, (_members(mask) for mask in family))
    logger.info("Контрпример не найден за %d проверок", spent)
    return None

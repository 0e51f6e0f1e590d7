"""
Жадная категорийная маршрутизация (ROUTING): один шаг, траектория одного сообщения
и проверка всех упорядоченных пар.

Маршрутизация "работает", если для каждой цели t у каждой вершины u != t есть сосед v
с d(v, t) < d(u, t). Так как d - неотрицательное целое и строго убывает вдоль пути,
при этом условии сообщение доставляется при любом жадном выборе соседа.
"""
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from src.categories import cat_distance, categorical_distances
from src.domain import CategorySystem, Graph, Outcome, RouteResult, VerificationReport
from src.graph import all_pairs_distances, require_connected

logger = logging.getLogger(__name__)

REASON_NO_CLOSER = "no neighbour is strictly closer to the target"
REASON_INDISTINGUISHABLE = "indistinguishable from target (d=0)"


class TieBreakPolicy:
    """
    Базовый класс правила выбора среди соседей, которые строго ближе к цели.

    Методы:
        __call__(candidates): Выбирает вершину из списка пар (d(v, t), v).
        choose(distances, eligible): Векторная версия для таблиц следующих прыжков.
    """
    def __call__(self, candidates: list[tuple[int, int]]) -> int:
        raise NotImplementedError("Subclasses must implement this method")

    def choose(self, distances: np.ndarray, eligible: np.ndarray) -> np.ndarray:
        raise NotImplementedError("Subclasses must implement this method")


class DefaultTieBreak(TieBreakPolicy):
    """Сосед с наименьшим d(v, t), при равенстве - с наименьшим номером."""
    def __call__(self, candidates: list[tuple[int, int]]) -> int:
        return min(candidates)[1]

    def choose(self, distances: np.ndarray, eligible: np.ndarray) -> np.ndarray:
        # строки соседей идут по возрастанию номера, argmin берёт первое вхождение
        keys = np.where(eligible, distances, np.iinfo(np.int32).max)
        picked = np.argmin(keys, axis=0)
        return np.where(eligible.any(axis=0), picked, -1)


class AdversarialTieBreak(TieBreakPolicy):
    """Сосед с наибольшим допустимым d(v, t), при равенстве - с наибольшим номером."""
    def __call__(self, candidates: list[tuple[int, int]]) -> int:
        return max(candidates)[1]

    def choose(self, distances: np.ndarray, eligible: np.ndarray) -> np.ndarray:
        keys = np.where(eligible, distances, -1)[::-1]
        picked = keys.shape[0] - 1 - np.argmax(keys, axis=0)
        return np.where(eligible.any(axis=0), picked, -1)


DEFAULT_POLICY = DefaultTieBreak()


def greedy_step(
    g: Graph, s: CategorySystem, u: int, t: int, policy: TieBreakPolicy = DEFAULT_POLICY
) -> int | None:
    """
    Один шаг правила жадной маршрутизации.

    Параметры:
        g (Graph): Граф.
        s (CategorySystem): Система категорий.
        u (int): Текущая вершина, u != t.
        t (int): Цель.
        policy (TieBreakPolicy): Правило выбора среди строго более близких соседей.

    Returns:
        int | None: Следующая вершина или None, если строго более близкого соседа нет.
    """
    if u == t:
        return None
    current = cat_distance(s, u, t)
    candidates = [(d, v) for v in g.neighbors(u) if (d := cat_distance(s, v, t)) < current]
    if not candidates:
        return None
    return policy(candidates)


def route(
    g: Graph, s: CategorySystem, src: int, t: int, policy: TieBreakPolicy = DEFAULT_POLICY
) -> RouteResult:
    """
    Моделирует доставку одного сообщения от src к t.

    Путь завершается не более чем за d(src, t) шагов, так как d строго убывает.
    Застревание - нормальный исход, а не ошибка.
    """
    path = [src]
    distances = [cat_distance(s, src, t)]
    while path[-1] != t:
        nxt = greedy_step(g, s, path[-1], t, policy)
        if nxt is None:
            reason = REASON_INDISTINGUISHABLE if distances[-1] == 0 else REASON_NO_CLOSER
            return RouteResult(src, t, tuple(path), tuple(distances), Outcome.STUCK, reason)
        path.append(nxt)
        distances.append(cat_distance(s, nxt, t))
    return RouteResult(src, t, tuple(path), tuple(distances), Outcome.DELIVERED)


def _neighbour_layout(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    flat = np.fromiter((v for nbrs in g.adjacency for v in nbrs), dtype=np.int64)
    starts = np.zeros(g.n, dtype=np.int64)
    if g.n > 1:
        starts[1:] = np.cumsum([len(nbrs) for nbrs in g.adjacency])[:-1]
    return flat, starts


def _dead_ends(
    distances: np.ndarray, flat: np.ndarray, starts: np.ndarray, columns: slice
) -> tuple[int, int] | None:
    block = distances[:, columns]
    best = np.minimum.reduceat(block[flat], starts, axis=0)
    dead = best >= block
    offset = columns.start
    targets = np.arange(offset, columns.stop)
    dead[targets, targets - offset] = False
    hits = np.argwhere(dead)
    if not len(hits):
        return None
    u, t = hits[0]
    return int(u), int(t) + offset


def next_hop_table(g: Graph, distances: np.ndarray, policy: TieBreakPolicy = DEFAULT_POLICY) -> np.ndarray:
    """
    Таблица следующих прыжков: hop[u, t] - сосед, выбранный policy, или -1.

    Параметры:
        g (Graph): Граф.
        distances (np.ndarray): Матрица d(u, t) из categorical_distances.
        policy (TieBreakPolicy): Правило выбора соседа.
    """
    hop = np.full((g.n, g.n), -1, dtype=np.int64)
    for u, nbrs in enumerate(g.adjacency):
        if not nbrs:
            continue
        nbr_index = np.asarray(nbrs, dtype=np.int64)
        candidate = distances[nbr_index]
        eligible = candidate < distances[u][np.newaxis, :]
        picked = policy.choose(candidate, eligible)
        hop[u] = np.where(picked >= 0, nbr_index[np.clip(picked, 0, None)], -1)
        hop[u, u] = -1
    return hop


def route_lengths(hop: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Проводит все пары по таблице прыжков одновременно.

    Returns:
        tuple[np.ndarray, np.ndarray]: Длины маршрутов и маска доставленных пар
            (диагональ считается доставленной с длиной 0).
    """
    n = hop.shape[0]
    targets = np.broadcast_to(np.arange(n)[np.newaxis, :], (n, n))
    current = np.broadcast_to(np.arange(n)[:, np.newaxis], (n, n)).copy()
    lengths = np.zeros((n, n), dtype=np.int64)
    stuck = np.zeros((n, n), dtype=bool)
    active = current != targets
    for _ in range(n * n + 1):
        if not active.any():
            break
        nxt = hop[current, targets]
        newly_stuck = active & (nxt < 0)
        stuck |= newly_stuck
        moving = active & ~newly_stuck
        current[moving] = nxt[moving]
        lengths[moving] += 1
        active = moving & (current != targets)
    return lengths, ~stuck


def route_all(g: Graph, s: CategorySystem, policy: TieBreakPolicy = DEFAULT_POLICY) -> tuple[np.ndarray, np.ndarray]:
    """Длины маршрутов и маска доставки для всех пар при заданном правиле выбора."""
    return route_lengths(next_hop_table(g, categorical_distances(s), policy))


def verify_all_pairs(g: Graph, s: CategorySystem, num_threads: int | None = None) -> VerificationReport:
    """
    Проверяет, что маршрутизация работает для всех упорядоченных пар, и собирает статистику.

    Условие works - отсутствие тупиков: у каждой u != t есть строго более близкий сосед.
    Статистика маршрутов считается для стандартного правила выбора соседа.

    Параметры:
        g (Graph): Связный граф.
        s (CategorySystem): Система категорий.
        num_threads (int | None): Число потоков для поиска тупиков по блокам целей.

    Returns:
        VerificationReport: Итог проверки и статистика.

    Exceptions:
        DisconnectedGraphError: Если граф несвязный.
    """
    require_connected(g)
    n = g.n
    if n <= 1:
        return VerificationReport(True, None, 0, 0, 0.0, 0.0, 0)

    distances = categorical_distances(s)
    flat, starts = _neighbour_layout(g)
    if num_threads and num_threads > 1:
        bounds = np.linspace(0, n, num=min(num_threads, n) + 1, dtype=int)
        blocks = [slice(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
        with ThreadPoolExecutor(max_workers=num_threads) as executor:
            failures = [f for f in executor.map(lambda cols: _dead_ends(distances, flat, starts, cols), blocks) if f]
        first_failure = min(failures) if failures else None
    else:
        first_failure = _dead_ends(distances, flat, starts, slice(0, n))

    lengths, delivered = route_lengths(next_hop_table(g, distances))
    off_diagonal = ~np.eye(n, dtype=bool)
    ok = delivered & off_diagonal
    sp = all_pairs_distances(g)
    if ok.any():
        route_len = lengths[ok]
        max_route = int(route_len.max())
        mean_route = float(route_len.mean())
        max_stretch = float((route_len / sp[ok]).max())
    else:
        max_route, mean_route, max_stretch = 0, 0.0, 0.0

    report = VerificationReport(
        works=first_failure is None,
        first_failure=first_failure,
        pairs_checked=n * (n - 1),
        max_route_len=max_route,
        mean_route_len=mean_route,
        max_stretch=max_stretch,
        delivered_pairs=int(ok.sum()),
    )
    logger.debug("Проверено пар: %d, works=%s", report.pairs_checked, report.works)
    return report

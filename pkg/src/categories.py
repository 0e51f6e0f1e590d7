"""
Предикаты и метрики систем категорий: membership dimension, категорийное
расстояние d(u, t) = |cat(t) \\ cat(u)|, внутренняя связность и свойство shattered.
"""
from typing import NamedTuple

import numpy as np

from src.domain import CategorySystem, Graph


class CheckResult(NamedTuple):
    """
    Результат проверки свойства.

    Атрибуты:
        ok (bool): Выполняется ли свойство.
        violation: Первый нарушающий объект (номер категории или пара вершин) либо None.
    """
    ok: bool
    violation: int | tuple[int, int] | None = None


def memdim(s: CategorySystem) -> int:
    """Наибольшее число категорий, содержащих одну вершину; 0 для пустой системы."""
    return max((len(row) for row in s.member_index), default=0)


def cat_distance(s: CategorySystem, u: int, t: int) -> int:
    """Число категорий цели t, в которые не входит u."""
    own = set(s.cat(u))
    return sum(1 for c in s.cat(t) if c not in own)


def incidence_matrix(s: CategorySystem) -> np.ndarray:
    """
    Матрица принадлежности n x |S| (1.0, если вершина входит в категорию).

    Хранится в float64, чтобы произведения считались через BLAS; все значения -
    небольшие целые и представимы точно.
    """
    matrix = np.zeros((s.n, len(s.categories)), dtype=np.float64)
    for c, members in enumerate(s.categories):
        matrix[list(members), c] = 1.0
    return matrix


def categorical_distances(s: CategorySystem) -> np.ndarray:
    """
    Матрица D размера n x n, где D[u, t] = d(u, t) = |cat(t)| - |cat(u) ∩ cat(t)|.

    Строка - текущая вершина, столбец - цель.
    """
    matrix = incidence_matrix(s)
    shared = matrix @ matrix.T
    sizes = np.array([len(row) for row in s.member_index], dtype=np.float64)
    return np.rint(sizes[np.newaxis, :] - shared).astype(np.int32)


def adjacency_matrix(g: Graph) -> np.ndarray:
    matrix = np.zeros((g.n, g.n), dtype=np.float64)
    for u, nbrs in enumerate(g.adjacency):
        matrix[u, list(nbrs)] = 1.0
    return matrix


def is_internally_connected(g: Graph, s: CategorySystem) -> CheckResult:
    """
    Проверяет, что каждая категория индуцирует связный подграф.

    Returns:
        CheckResult: ok и номер первой категории с несвязным индуцированным подграфом.
    """
    inside = [False] * g.n
    for c, members in enumerate(s.categories):
        for u in members:
            inside[u] = True
        reached = {members[0]}
        stack = [members[0]]
        while stack:
            u = stack.pop()
            for v in g.adjacency[u]:
                if inside[v] and v not in reached:
                    reached.add(v)
                    stack.append(v)
        for u in members:
            inside[u] = False
        if len(reached) != len(members):
            return CheckResult(False, c)
    return CheckResult(True)


def is_shattered(g: Graph, s: CategorySystem) -> CheckResult:
    """
    Проверяет свойство shattered: для каждой пары s != t у s есть сосед u и категория C,
    содержащая u и t, но не s (u может совпадать с t).

    Свидетели считаются сразу для всех пар двумя матричными произведениями:
    сначала для каждой вершины отмечаются категории, содержащие её соседа, но не её саму,
    затем эти отметки сопоставляются с категориями целей.

    Returns:
        CheckResult: ok и лексикографически наименьшая нарушающая пара (s, t).
    """
    if g.n <= 1:
        return CheckResult(True)
    membership = incidence_matrix(s)
    neighbour_in = (adjacency_matrix(g) @ membership) > 0
    usable = (neighbour_in & (membership == 0)).astype(np.float64)
    witnesses = usable @ membership.T
    np.fill_diagonal(witnesses, 1.0)
    missing = np.argwhere(witnesses == 0)
    if len(missing):
        first = missing[0]
        return CheckResult(False, (int(first[0]), int(first[1])))
    return CheckResult(True)

"""
Взвешенно-сбалансированные бинарные деревья над последовательностью элементов.

Элемент i занимает отрезок [s_i, s_i + w_i) внутри [0, W), где s_i - сумма весов
предыдущих элементов. Узел, покрывающий двоичный отрезок [lo, hi), отправляет влево
элементы, середина отрезка которых лежит левее (lo + hi) / 2. Уровни, на которых
все элементы оказываются по одну сторону, пропускаются. Два элемента в одном двоичном
отрезке длины L отличаются серединами меньше чем на L, но не меньше чем на w_i / 2,
поэтому элемент i становится листом на глубине не больше floor(log2(W / w_i)) + 2.
"""
from fractions import Fraction
from typing import Sequence

from src.domain import ShapeNode
from src.errors import ConstructionError


def depth_bound(weights: Sequence[int], i: int) -> int:
    """Гарантированная верхняя граница глубины листа i: floor(log2(W / w_i)) + 2."""
    total = sum(weights)
    ratio = total // weights[i]
    return ratio.bit_length() - 1 + 2


def build_weight_balanced(weights: Sequence[int]) -> ShapeNode:
    """
    Строит форму бинарного дерева, листья которой - номера элементов по порядку.

    Параметры:
        weights (Sequence[int]): Положительные целые веса.

    Returns:
        ShapeNode: Корень формы; единственный элемент даёт лист глубины 0.

    Exceptions:
        ConstructionError: Для пустого списка или неположительного веса.
    """
    if not weights:
        raise ConstructionError("Weight-balanced tree needs at least one item")
    if any(w < 1 for w in weights):
        raise ConstructionError(f"Weights must be positive integers, got {list(weights)}")

    # удвоенные координаты середин: 2 * s_i + w_i внутри [0, 2W)
    midpoints = []
    start = 0
    for w in weights:
        midpoints.append(2 * start + w)
        start += w

    def build(items: list[int], lo: Fraction, hi: Fraction) -> ShapeNode:
        if len(items) == 1:
            return ShapeNode(item=items[0])
        while True:
            cut = (lo + hi) / 2
            split = sum(1 for i in items if midpoints[i] < cut)
            if 0 < split < len(items):
                break
            if split:
                hi = cut
            else:
                lo = cut
        return ShapeNode(left=build(items[:split], lo, cut), right=build(items[split:], cut, hi))

    return build(list(range(len(weights))), Fraction(0), Fraction(2 * start))

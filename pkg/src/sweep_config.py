from typing import Any, NamedTuple


class SweepConfig(NamedTuple):
    """
    Конфигурация одной серии бенчмарка.

    Для каждого размера из sizes строится seeds экземпляров с зёрнами
    base_seed, base_seed + 1, ..., base_seed + seeds - 1.

    Атрибуты:
        generator (str): Имя генератора из GENERATORS_MAP.
        sizes (tuple[int, ...]): Числа вершин.
        seeds (int): Количество зёрен на размер.
        params (dict[str, Any]): Дополнительные параметры генератора (например, k и p для "ws").
        base_seed (int, по умолчанию 0): Первое зерно серии.
    """
    generator: str
    sizes: tuple[int, ...]
    seeds: int
    params: dict[str, Any] = {}
    base_seed: int = 0

    def instances(self) -> list[tuple[str, int, int, dict[str, Any]]]:
        return [
            (self.generator, n, self.base_seed + i, dict(self.params))
            for n in self.sizes
            for i in range(self.seeds)
        ]

"""
Бенчмарк конструкции для связных графов: memdim против (diam + ceil(log2 n))^2.

Экземпляры независимы, поэтому серия может считаться в пуле процессов; строки
результата всегда упорядочены по (generator, n, seed), так что вывод не зависит
от числа процессов.
"""
import csv
import logging
from multiprocessing import Pool
from pathlib import Path
from typing import Any, NamedTuple, Sequence, TextIO

from src.categories import memdim
from src.config import GENERATORS_MAP, SEEDED_GENERATORS
from src.constructions import construct_auto
from src.domain import BenchRecord, Graph
from src.errors import ConstructionError, GenerationError
from src.graph import diameter
from src.routing import verify_all_pairs
from src.sweep_config import SweepConfig

logger = logging.getLogger(__name__)

CSV_HEADER = ["generator", "seed", "n", "m", "diam", "memdim", "bound", "max_route", "mean_route", "max_stretch"]


class BucketSummary(NamedTuple):
    """
    Сводка по экземплярам одного генератора и одного размера.

    Атрибуты:
        generator (str): Имя генератора.
        n (int): Число вершин.
        count (int): Число экземпляров.
        max_ratio (float): Наибольшее memdim / bound.
        max_memdim (int): Наибольшая memdim.
    """
    generator: str
    n: int
    count: int
    max_ratio: float
    max_memdim: int


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length() if n > 1 else 0


def theoretical_bound(diam: int, n: int) -> int:
    """(diam + ceil(log2 n))^2 - знаменатель колонки ratio."""
    return (diam + ceil_log2(n)) ** 2


def make_graph(generator: str, n: int, seed: int, params: dict[str, Any] | None = None) -> Graph:
    """
    Строит граф генератором из реестра GENERATORS_MAP.

    Exceptions:
        GenerationError: Для неизвестного генератора или неверных параметров.
    """
    if generator not in GENERATORS_MAP:
        raise GenerationError(f"Unknown generator {generator!r}; known: {', '.join(GENERATORS_MAP)}")
    factory = GENERATORS_MAP[generator]
    params = params or {}
    try:
        if generator in SEEDED_GENERATORS:
            return factory(n, seed, **params)
        return factory(n, **params)
    except TypeError as e:
        raise GenerationError(f"Bad parameters for generator {generator!r}: {e}") from e


def bench_instance(instance: tuple[str, int, int, dict[str, Any]]) -> BenchRecord:
    """
    Строит граф, систему категорий, проверяет маршрутизацию и собирает строку бенчмарка.

    Система строится через construct_auto: на пути это точная конструкция для пути,
    на любом другом графе - конструкция для дерева на BFS-остове.

    Exceptions:
        ConstructionError: Если построенная система не прошла проверку.
    """
    generator, n, seed, params = instance
    g = make_graph(generator, n, seed, params)
    _, system = construct_auto(g)
    report = verify_all_pairs(g, system)
    if not report.works:
        raise ConstructionError(
            f"Constructed system fails on {generator} n={n} seed={seed}: pair {report.first_failure}"
        )
    diam = diameter(g)
    return BenchRecord(
        generator=generator,
        seed=seed,
        n=g.n,
        m=g.m,
        diam=diam,
        memdim=memdim(system),
        bound=theoretical_bound(diam, g.n),
        max_route=report.max_route_len,
        mean_route=report.mean_route_len,
        max_stretch=report.max_stretch,
        works=report.works,
    )


def run_bench(sweeps: Sequence[SweepConfig], workers: int | None = None) -> list[BenchRecord]:
    """
    Прогоняет все экземпляры серий и возвращает строки, упорядоченные по (generator, n, seed).

    Параметры:
        sweeps (Sequence[SweepConfig]): Серии бенчмарка.
        workers (int | None): Число процессов; None или 1 - последовательный запуск.

    Returns:
        list[BenchRecord]: Результаты.

    Exceptions:
        ConstructionError: Если хотя бы один экземпляр не прошёл проверку (прогон прерывается).
        GenerationError: Ошибки генераторов пробрасываются.
    """
    instances = [instance for sweep in sweeps for instance in sweep.instances()]
    logger.info("Бенчмарк: %d экземпляров", len(instances))
    if workers and workers > 1:
        with Pool(processes=workers) as pool:
            records = pool.map(bench_instance, instances, chunksize=len(instances) // workers or 1)
    else:
        records = [bench_instance(instance) for instance in instances]
    records.sort(key=lambda r: (r.generator, r.n, r.seed))
    logger.info("Бенчмарк завершён: max ratio = %.3f", max((r.ratio for r in records), default=0.0))
    return records


def write_csv(records: Sequence[BenchRecord], target: Path | TextIO) -> None:
    """Пишет CSV с заголовком CSV_HEADER в файл по пути или в открытый текстовый поток."""
    if not isinstance(target, (str, Path)):
        _write_rows(records, target)
        return
    with open(target, "w", newline="", encoding="utf-8") as f:
        _write_rows(records, f)


def _write_rows(records: Sequence[BenchRecord], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow(record.to_row())


def bench_summary(records: Sequence[BenchRecord]) -> list[BucketSummary]:
    """Сводки по корзинам (generator, n) в порядке строк бенчмарка."""
    buckets: dict[tuple[str, int], list[BenchRecord]] = {}
    for record in records:
        buckets.setdefault((record.generator, record.n), []).append(record)
    return [
        BucketSummary(
            generator=generator,
            n=n,
            count=len(group),
            max_ratio=max(r.ratio for r in group),
            max_memdim=max(r.memdim for r in group),
        )
        for (generator, n), group in sorted(buckets.items())
    ]


def ratio_trend(records: Sequence[BenchRecord]) -> float | None:
    """
    Отношение max ratio в корзине наибольшего n к max ratio в корзине наименьшего n.

    Returns:
        float | None: Отношение или None, если размер один.
    """
    by_n: dict[int, float] = {}
    for record in records:
        by_n[record.n] = max(by_n.get(record.n, 0.0), record.ratio)
    if len(by_n) < 2:
        return None
    smallest, largest = min(by_n), max(by_n)
    return by_n[largest] / by_n[smallest] if by_n[smallest] else None


def plot_bench(records: Sequence[BenchRecord], path: Path) -> None:
    """Сохраняет диаграмму рассеяния memdim против (diam + ceil(log2 n))^2 по генераторам."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(10, 6))
    for generator in sorted({r.generator for r in records}):
        group = [r for r in records if r.generator == generator]
        ax.scatter([r.bound for r in group], [r.memdim for r in group], label=generator, marker="o")
    ax.set_xlabel("(diam + ceil(log2 n))^2")
    ax.set_ylabel("memdim")
    ax.set_title("Membership dimension vs bound")
    ax.legend()
    fig.savefig(path)
    plt.close(fig)
    logger.info("График сохранён в %s", path)

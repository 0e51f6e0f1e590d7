import argparse
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from src.config import DEFAULT_CONFIG_FILE, GENERATOR_PARAMS, GENERATORS_MAP, METHODS


def existing_file(value: str) -> Path:
    path = Path(value)
    if not path.is_file():
        raise argparse.ArgumentTypeError(f"{path} not a file")
    return path


def non_negative_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer")
    if number < 0:
        raise argparse.ArgumentTypeError(f"{value} must be non-negative")
    return number


def int_list(value: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not a comma-separated list of integers")
    if not sizes or any(n < 1 for n in sizes):
        raise argparse.ArgumentTypeError(f"{value!r} must list positive sizes")
    return sizes


def key_value(value: str) -> tuple[str, Any]:
    key, sep, raw = value.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"{value!r} is not KEY=VALUE")
    try:
        return key, json.loads(raw)
    except json.JSONDecodeError:
        return key, raw


@dataclass
class RunConfig:
    """
    Параметры одного запуска CLI, собранные из аргументов командной строки.

    Атрибуты:
        command (str): Подкоманда: construct, check, route, bench, oracle или generate.
        graph (Path | None): Файл графа.
        categories (Path | None): Файл категорий.
        source (int | None), target (int | None): Концы маршрута для route.
        method (str): Конструкция для construct.
        seed (int): Зерно (для bench - первое зерно серии).
        generator (str): Имя генератора для bench и generate.
        sizes (tuple[int, ...]): Числа вершин для bench и generate.
        seeds (int): Количество зёрен на размер в bench.
        params (dict[str, Any]): Параметры генератора.
        max_dim (int): Предел memdim для oracle.
        connected_only (bool): Перебирать в oracle только связные подмножества.
        out (Path | None): Выходной файл; None - стандартный вывод.
        config (Path | None): JSON-файл серий бенчмарка.
        workers (int | None): Число процессов бенчмарка.
        plot (Path | None): Куда сохранить график бенчмарка.
        save_config (Path | None): Куда сохранить серии, которые реально прогонялись.
        quiet (bool): Понизить уровень журнала до WARNING.
    """
    command: str
    graph: Path | None = None
    categories: Path | None = None
    source: int | None = None
    target: int | None = None
    method: str = "auto"
    seed: int = 0
    generator: str = "tree"
    sizes: tuple[int, ...] = ()
    seeds: int = 1
    params: dict[str, Any] = field(default_factory=dict)
    max_dim: int = 4
    connected_only: bool = True
    out: Path | None = None
    config: Path | None = None
    workers: int | None = None
    plot: Path | None = None
    save_config: Path | None = None
    quiet: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            command=args.command,
            graph=getattr(args, "graph", None),
            categories=getattr(args, "categories", None),
            source=getattr(args, "src", None),
            target=getattr(args, "dst", None),
            method=getattr(args, "method", "auto"),
            seed=args.seed,
            generator=getattr(args, "gen", "tree"),
            sizes=getattr(args, "n", None) or (),
            seeds=getattr(args, "seeds", 1),
            params=dict(getattr(args, "param", None) or []),
            max_dim=getattr(args, "max_dim", 4),
            connected_only=not getattr(args, "all_subsets", False),
            out=getattr(args, "out", None),
            config=getattr(args, "config", None),
            workers=getattr(args, "workers", None),
            plot=getattr(args, "plot", None),
            save_config=getattr(args, "save_config", None),
            quiet=args.quiet,
        )


def generator_help() -> str:
    """Подсказка по генераторам и их параметрам --param для справки подкоманд."""
    lines = ["Генераторы и параметры по умолчанию:"]
    for name in GENERATORS_MAP:
        lines.append(f"  {name:<10}{GENERATOR_PARAMS[name] or '-'}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=non_negative_int, default=0, help="Зерно генератора случайных чисел.")
    common.add_argument("--quiet", action="store_true", help="Выводить в журнал только предупреждения и ошибки.")

    parser = argparse.ArgumentParser(description="Категорийная жадная маршрутизация в графах.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    construct = subparsers.add_parser("construct", parents=[common], help="Построить систему категорий.")
    construct.add_argument("graph", type=existing_file, help="Файл графа.")
    construct.add_argument("--method", choices=METHODS, default="auto", help="Конструкция.")
    construct.add_argument("--out", type=Path, default=None, help="Файл категорий (по умолчанию stdout).")

    check = subparsers.add_parser("check", parents=[common], help="Проверить систему категорий.")
    check.add_argument("graph", type=existing_file, help="Файл графа.")
    check.add_argument("categories", type=existing_file, help="Файл категорий.")

    route = subparsers.add_parser("route", parents=[common], help="Провести одно сообщение.")
    route.add_argument("graph", type=existing_file, help="Файл графа.")
    route.add_argument("categories", type=existing_file, help="Файл категорий.")
    route.add_argument("src", type=non_negative_int, help="Отправитель.")
    route.add_argument("dst", type=non_negative_int, help="Получатель.")

    bench = subparsers.add_parser(
        "bench", parents=[common], help="Бенчмарк memdim против диаметра.", epilog=generator_help(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    bench.add_argument("--gen", choices=sorted(GENERATORS_MAP), default="tree", help="Генератор графов.")
    bench.add_argument("--n", type=int_list, default=(16, 32, 64), help="Размеры через запятую.")
    bench.add_argument("--seeds", type=non_negative_int, default=5, help="Количество зёрен на размер.")
    bench.add_argument("--param", type=key_value, action="append", help="Параметр генератора KEY=VALUE.")
    bench.add_argument(
        "--config", type=existing_file, default=None,
        help=f"JSON-файл серий бенчмарка (например, {DEFAULT_CONFIG_FILE}).",
    )
    bench.add_argument("--workers", type=non_negative_int, default=None, help="Число процессов.")
    bench.add_argument("--out", type=Path, default=None, help="CSV-файл (по умолчанию stdout).")
    bench.add_argument("--plot", type=Path, default=None, help="PNG-файл с графиком.")
    bench.add_argument("--save-config", type=Path, default=None, help="Сохранить серии в JSON-файл.")

    oracle = subparsers.add_parser("oracle", parents=[common], help="Точная минимальная memdim перебором.")
    oracle.add_argument("graph", type=existing_file, help="Файл графа (n <= 6).")
    oracle.add_argument("--max-dim", type=non_negative_int, default=4, help="Предел memdim (не больше 4).")
    oracle.add_argument(
        "--all-subsets", action="store_true", help="Перебирать и несвязные подмножества (только n <= 5)."
    )

    generate = subparsers.add_parser(
        "generate", parents=[common], help="Сгенерировать граф.", epilog=generator_help(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    generate.add_argument("--gen", choices=sorted(GENERATORS_MAP), default="tree", help="Генератор графов.")
    generate.add_argument("--n", type=int_list, required=True, help="Число вершин.")
    generate.add_argument("--param", type=key_value, action="append", help="Параметр генератора KEY=VALUE.")
    generate.add_argument("--out", type=Path, default=None, help="Файл графа (по умолчанию stdout).")
    return parser


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """
    Функция для парсинга аргументов командной строки.

    Ошибки разбора (неизвестная подкоманда, несуществующий файл, отрицательное зерно)
    завершают процесс с кодом 2 средствами argparse.

    Returns:
        argparse.Namespace: Объект с парсированными аргументами командной строки.
    """
    return build_parser().parse_args(argv)

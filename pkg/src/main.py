import logging
import sys

from src.bench import bench_summary, make_graph, plot_bench, ratio_trend, run_bench, theoretical_bound, write_csv
from src.categories import is_internally_connected, is_shattered, memdim
from src.cli import RunConfig, parse_args
from src.config_utils import load_config_from_file, save_config_to_file
from src.constructions import (construct_auto, construct_graph_categories, construct_path_categories,
                               construct_star_categories, construct_tree_categories, root_tree)
from src.domain import CategorySystem, Graph
from src.errors import CategoryRoutingError, ConstructionError, IdMismatchError
from src.graph import diameter, require_connected
from src.oracle import brute_force_min_memdim
from src.routing import route, verify_all_pairs
from src.sweep_config import SweepConfig
from src.utils import GraphIO

logging.basicConfig()
logging.getLogger().setLevel(logging.INFO)
logger = logging.getLogger(__name__)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def build_system(g: Graph, method: str) -> tuple[str, CategorySystem]:
    """Строит систему категорий выбранной конструкцией; auto выбирает её по форме графа."""
    if g.n == 0:
        raise ConstructionError("Graph has no vertices")
    require_connected(g)
    if method == "auto":
        return construct_auto(g)
    if method == "path":
        return method, construct_path_categories(g)
    if method == "tree":
        return method, construct_tree_categories(root_tree(g))
    if method == "star":
        return method, construct_star_categories(g)
    return method, construct_graph_categories(g).system


def cmd_construct(config: RunConfig) -> int:
    g = GraphIO.read_graph(config.graph)
    method, system = build_system(g, config.method)
    diam = diameter(g)
    if config.out is None:
        sys.stdout.write(GraphIO.format_categories(system))
    else:
        GraphIO.write_categories(system, config.out)
        print(f"Категории записаны в файл: {config.out}")
    print(f"Метод: {method}; категорий: {len(system)}")
    print(f"memdim={memdim(system)} diam={diam} bound={theoretical_bound(diam, g.n)}")
    return 0


def cmd_check(config: RunConfig) -> int:
    g = GraphIO.read_graph(config.graph)
    system = GraphIO.read_categories(config.categories, g.n)
    require_connected(g)
    connected = is_internally_connected(g, system)
    shattered = is_shattered(g, system)
    report = verify_all_pairs(g, system)

    print(f"Внутренняя связность: {'да' if connected.ok else f'нет (категория {connected.violation})'}")
    print(f"Shattered: {'да' if shattered.ok else f'нет (пара {shattered.violation})'}")
    print(f"Маршрутизация работает: {'да' if report.works else 'нет'}")
    if not report.works:
        u, t = report.first_failure
        print(f"failing pair: {u} -> {t}")
    fields = [
        f"works={_flag(report.works)}",
        f"shattered={_flag(shattered.ok)}",
        f"internally_connected={_flag(connected.ok)}",
        f"memdim={memdim(system)}",
        f"pairs={report.pairs_checked}",
        f"max_route={report.max_route_len}",
        f"mean_route={report.mean_route_len:.3f}",
        f"max_stretch={report.max_stretch:.3f}",
    ]
    if report.first_failure is not None:
        fields.append(f"failing_pair={report.first_failure[0]},{report.first_failure[1]}")
    print(" ".join(fields))
    return 0 if report.works else 1


def cmd_route(config: RunConfig) -> int:
    g = GraphIO.read_graph(config.graph)
    system = GraphIO.read_categories(config.categories, g.n)
    for vertex in (config.source, config.target):
        if vertex >= g.n:
            raise IdMismatchError(f"vertex {vertex} is outside the graph (n={g.n})")
    result = route(g, system, config.source, config.target)
    for k, (u, d) in enumerate(zip(result.path, result.distances)):
        print(f"hop {k}: {u} (d={d})")
    if result.delivered:
        print(f"delivered in {result.hops} hops")
        return 0
    print(f"stuck at vertex {result.stuck_at}: {result.reason}")
    return 1


def cmd_bench(config: RunConfig) -> int:
    if config.config is not None:
        sweeps = load_config_from_file(config.config)
    else:
        sweeps = [SweepConfig(config.generator, config.sizes, config.seeds, config.params, config.seed)]
    records = run_bench(sweeps, config.workers)
    if config.out is None:
        write_csv(records, sys.stdout)
    else:
        write_csv(records, config.out)
        print(f"CSV сохранён: {config.out} ({len(records)} строк)")
        for bucket in bench_summary(records):
            print(f"{bucket.generator} n={bucket.n}: экземпляров {bucket.count}, "
                  f"max memdim {bucket.max_memdim}, max ratio {bucket.max_ratio:.3f}")
        trend = ratio_trend(records)
        if trend is not None:
            print(f"Рост ratio (наибольший n / наименьший n): {trend:.3f}")
    if config.plot is not None:
        plot_bench(records, config.plot)
    if config.save_config is not None:
        save_config_to_file(sweeps, config.save_config)
    return 0


def cmd_oracle(config: RunConfig) -> int:
    g = GraphIO.read_graph(config.graph)
    result = brute_force_min_memdim(g, config.max_dim, config.connected_only)
    if result is None:
        print(f"no system with memdim <= {config.max_dim}")
        return 1
    system, value = result
    print(f"min memdim = {value}")
    sys.stdout.write(GraphIO.format_categories(system))
    return 0


def cmd_generate(config: RunConfig) -> int:
    if len(config.sizes) != 1:
        raise ConstructionError(f"generate expects a single --n, got {list(config.sizes)}")
    g = make_graph(config.generator, config.sizes[0], config.seed, config.params)
    if config.out is None:
        sys.stdout.write(GraphIO.format_graph(g))
    else:
        GraphIO.write_graph(g, config.out)
        print(f"Граф записан в файл: {config.out} (n={g.n}, m={g.m})")
    return 0


COMMANDS = {
    "construct": cmd_construct,
    "check": cmd_check,
    "route": cmd_route,
    "bench": cmd_bench,
    "oracle": cmd_oracle,
    "generate": cmd_generate,
}


def run(argv: list[str] | None = None) -> int:
    """
    Разбирает аргументы, выполняет подкоманду и возвращает код завершения.

    Коды: 0 - успех, 1 - отрицательный результат (маршрутизация не работает, сообщение
    застряло), 2 - ошибка разбора, 3 - несвязный граф, 4 - номер вершины вне графа,
    5 - превышен предел размера оракула.
    """
    config = RunConfig.from_args(parse_args(argv))
    if config.quiet:
        logging.getLogger().setLevel(logging.WARNING)
    try:
        return COMMANDS[config.command](config)
    except CategoryRoutingError as e:
        print(f"Ошибка: {e}", file=sys.stderr)
        return e.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

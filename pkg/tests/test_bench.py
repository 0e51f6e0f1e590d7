import csv
import io
import os
import time

import pytest

from src.bench import (CSV_HEADER, bench_instance, bench_summary, ceil_log2, make_graph, plot_bench, ratio_trend,
                       run_bench, theoretical_bound, write_csv)
from src.config import DEFAULT_CONFIG_FILE
from src.config_utils import load_config_from_file, save_config_to_file
from src.domain import BenchRecord
from src.errors import GenerationError, InputFormatError
from src.sweep_config import SweepConfig

os.makedirs("tests/output", exist_ok=True)

RATIO_CEILING = 12
# рост max ratio от наименьшего n к наибольшему; на bench_config.json измерено около 1.13
RATIO_TREND_CEILING = 1.5
# наибольший ratio на bench_config.json около 0.54 (G(n, p), n = 256)
MEASURED_MAX_RATIO = 0.54


@pytest.mark.parametrize("n,expected", [(1, 0), (2, 1), (3, 2), (8, 3), (9, 4), (256, 8)])
def test_ceil_log2(n, expected):
    assert ceil_log2(n) == expected


def test_theoretical_bound():
    assert theoretical_bound(2, 3) == 16
    assert theoretical_bound(0, 1) == 0


def test_record_row_formatting():
    record = BenchRecord("tree", 3, 10, 9, 4, 12, 64, 4, 2.12345, 1.5)
    assert record.to_row() == ["tree", "3", "10", "9", "4", "12", "64", "4", "2.123", "1.500"]
    assert record.ratio == 12 / 64


def test_tree_sweep_gives_one_row_per_instance():
    records = run_bench([SweepConfig("tree", (16, 32), 3)])
    assert len(records) == 6
    assert [(r.n, r.seed) for r in records] == [(16, 0), (16, 1), (16, 2), (32, 0), (32, 1), (32, 2)]
    for record in records:
        assert record.works
        assert record.memdim >= record.diam
        assert record.max_route <= record.memdim


def test_path_rows_are_tight():
    records = run_bench([SweepConfig("path", (2, 5, 17, 40), 1)])
    assert all(r.memdim == r.diam == r.n - 1 for r in records)


def test_rows_sorted_across_generators():
    records = run_bench([SweepConfig("ws", (16, 12), 2, {"k": 4, "p": 0.1}), SweepConfig("er", (20,), 2)])
    assert [(r.generator, r.n, r.seed) for r in records] == [
        ("er", 20, 0), ("er", 20, 1), ("ws", 12, 0), ("ws", 12, 1), ("ws", 16, 0), ("ws", 16, 1),
    ]


def test_process_pool_gives_same_records():
    sweeps = [SweepConfig("er", (16, 24), 2, {}, 5)]
    assert run_bench(sweeps, workers=2) == run_bench(sweeps)


def test_csv_output():
    records = run_bench([SweepConfig("tree", (8,), 2)])
    stream = io.StringIO()
    write_csv(records, stream)
    rows = list(csv.reader(io.StringIO(stream.getvalue())))
    assert stream.getvalue().splitlines()[0] == "generator,seed,n,m,diam,memdim,bound,max_route,mean_route,max_stretch"
    assert rows[0] == CSV_HEADER
    assert len(rows) == 3
    assert all(len(row[8].split(".")[1]) == 3 for row in rows[1:])


def test_unknown_generator():
    with pytest.raises(GenerationError):
        make_graph("lattice", 10, 0)
    with pytest.raises(GenerationError):
        make_graph("ws", 10, 0, {"q": 1})


def test_bench_summary_and_trend():
    records = [
        BenchRecord("tree", 0, 8, 7, 4, 10, 49, 3, 1.0, 1.0),
        BenchRecord("tree", 1, 8, 7, 3, 8, 36, 3, 1.0, 1.0),
        BenchRecord("tree", 0, 16, 15, 6, 20, 100, 4, 1.0, 1.0),
    ]
    summary = bench_summary(records)
    assert [(b.n, b.count, b.max_memdim) for b in summary] == [(8, 2, 10), (16, 1, 20)]
    assert [b.max_ratio for b in summary] == pytest.approx([8 / 36, 0.2])
    assert ratio_trend(records) == pytest.approx(0.2 / (8 / 36))
    assert ratio_trend(records[:1]) is None


def test_sweep_config_file(tmp_path):
    sweeps = [SweepConfig("ws", (16, 32), 2, {"k": 4, "p": 0.1}, 7)]
    path = tmp_path / "sweep.json"
    save_config_to_file(sweeps, path)
    assert load_config_from_file(path) == sweeps


@pytest.mark.parametrize("text", ["{", "[{\"generator\": \"nope\", \"n\": [8], \"seeds\": 1}]", "[{\"n\": [8]}]"])
def test_bad_sweep_config(tmp_path, text):
    path = tmp_path / "sweep.json"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(InputFormatError):
        load_config_from_file(path)


def test_plot_is_written():
    records = run_bench([SweepConfig("tree", (8, 16), 2), SweepConfig("complete", (6,), 1)])
    plot_bench(records, "tests/output/bench_memdim_vs_bound.png")
    assert os.path.exists("tests/output/bench_memdim_vs_bound.png")


def test_bench_instance_on_star():
    record = bench_instance(("star", 9, 0, {}))
    assert record.diam == 2
    assert record.m == 8


@pytest.mark.performance
def test_default_sweep_stays_under_ratio_ceiling():
    sweeps = load_config_from_file(DEFAULT_CONFIG_FILE)
    start_time = time.time()
    records = run_bench(sweeps)
    elapsed_time = time.time() - start_time

    assert len(records) >= 100
    assert all(r.works for r in records)
    assert all(r.memdim >= r.diam for r in records)
    assert all(r.max_route <= r.memdim for r in records)
    assert max(r.ratio for r in records) <= RATIO_CEILING
    assert max(r.ratio for r in records) < 2 * MEASURED_MAX_RATIO
    assert ratio_trend(records) <= RATIO_TREND_CEILING
    assert elapsed_time < 60

    # Для вывода воспользоваться опцией -s при запуске теста
    print(f"{'Generator':<12}{'n':<8}{'Count':<8}{'Max ratio':<12}")
    for bucket in bench_summary(records):
        print(f"{bucket.generator:<12}{bucket.n:<8}{bucket.count:<8}{bucket.max_ratio:<12.3f}")
    print(f"Max ratio: {max(r.ratio for r in records):.3f}")
    print(f"Ratio trend (largest n / smallest n): {ratio_trend(records):.3f}")
    print(f"Elapsed: {elapsed_time:.2f} s")

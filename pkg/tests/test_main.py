"""
Тесты командной строки.

Описание:
Каждая подкоманда запускается через main() с подменённым sys.argv; проверяются
вывод и код завершения (0 - успех, 1 - отрицательный результат, 2 - ошибка разбора,
3 - несвязный граф, 4 - номер вершины вне графа, 5 - предел размера оракула).
"""
import io
from unittest.mock import patch

import pytest

from src.main import main


def run_main(*args: str) -> tuple[int, str, str]:
    # Подменяем sys.argv и перехватываем вывод
    test_args = ["main.py", *args]
    with patch("sys.argv", test_args), \
            patch("sys.stdout", new_callable=io.StringIO) as mock_stdout, \
            patch("sys.stderr", new_callable=io.StringIO) as mock_stderr:
        with pytest.raises(SystemExit) as e:
            main()
    return e.value.code, mock_stdout.getvalue(), mock_stderr.getvalue()


def category_lines(output: str) -> list[str]:
    return [line for line in output.splitlines() if line and line[0].isdigit()]


def test_construct_path(write_file):
    graph = write_file("path3.txt", "0 1\n1 2\n")
    code, output, _ = run_main("construct", str(graph), "--quiet")
    assert code == 0
    assert len(category_lines(output)) == 4
    assert "Метод: path" in output
    assert "memdim=2 diam=2" in output


def test_construct_single_vertex(write_file):
    graph = write_file("single.txt", "# n=1\n")
    code, output, _ = run_main("construct", str(graph), "--quiet")
    assert code == 0
    assert category_lines(output) == ["0"]


def test_construct_then_check(write_file, tmp_path):
    graph = write_file("cycle.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n1 3\n")
    categories = tmp_path / "cycle.cat"
    code, output, _ = run_main("construct", str(graph), "--out", str(categories), "--quiet")
    assert code == 0
    assert f"Категории записаны в файл: {categories}" in output

    code, output, _ = run_main("check", str(graph), str(categories), "--quiet")
    assert code == 0
    assert "works=true shattered=true internally_connected=true" in output
    assert "pairs=20" in output


def test_check_reports_failure(write_file):
    graph = write_file("path3.txt", "0 1\n1 2\n")
    categories = write_file("one.cat", "0 1 2\n")
    code, output, _ = run_main("check", str(graph), str(categories))
    assert code == 1
    assert "shattered=false" in output
    assert "works=false" in output
    assert "failing pair: 0 -> 1" in output
    assert "failing_pair=0,1" in output


def test_check_rejects_unknown_vertex(write_file):
    graph = write_file("path3.txt", "0 1\n1 2\n")
    categories = write_file("bad.cat", "0 1\n5\n")
    code, _, error = run_main("check", str(graph), str(categories))
    assert code == 4
    assert "line 2" in error


def test_route_trace(write_file):
    graph = write_file("path3.txt", "0 1\n1 2\n")
    categories = write_file("path3.cat", "1 2\n0\n2\n0 1\n")
    code, output, _ = run_main("route", str(graph), str(categories), "0", "2")
    assert code == 0
    assert output.splitlines() == ["hop 0: 0 (d=2)", "hop 1: 1 (d=1)", "hop 2: 2 (d=0)", "delivered in 2 hops"]


def test_route_to_itself(write_file):
    graph = write_file("path3.txt", "0 1\n1 2\n")
    categories = write_file("path3.cat", "1 2\n0\n2\n0 1\n")
    code, output, _ = run_main("route", str(graph), str(categories), "1", "1")
    assert code == 0
    assert output.splitlines() == ["hop 0: 1 (d=0)", "delivered in 0 hops"]


def test_route_gets_stuck(write_file):
    graph = write_file("path3.txt", "0 1\n1 2\n")
    categories = write_file("one.cat", "0 1 2\n")
    code, output, _ = run_main("route", str(graph), str(categories), "0", "2")
    assert code == 1
    assert "stuck at vertex 0" in output


def test_route_vertex_outside_graph(write_file):
    graph = write_file("path3.txt", "0 1\n1 2\n")
    categories = write_file("path3.cat", "1 2\n0\n2\n0 1\n")
    code, _, _ = run_main("route", str(graph), str(categories), "0", "7")
    assert code == 4


def test_oracle_on_path(write_file):
    graph = write_file("path3.txt", "0 1\n1 2\n")
    code, output, _ = run_main("oracle", str(graph), "--quiet")
    assert code == 0
    assert "min memdim = 2" in output


def test_oracle_below_optimum(write_file):
    graph = write_file("path4.txt", "0 1\n1 2\n2 3\n")
    code, output, _ = run_main("oracle", str(graph), "--max-dim", "2", "--quiet")
    assert code == 1
    assert "no system with memdim <= 2" in output


def test_oracle_size_guard(write_file):
    graph = write_file("path50.txt", "".join(f"{i} {i + 1}\n" for i in range(49)))
    code, _, error = run_main("oracle", str(graph))
    assert code == 5
    assert "Ошибка" in error


def test_oracle_all_subsets_size_guard(write_file):
    graph = write_file("cycle6.txt", "".join(f"{i} {(i + 1) % 6}\n" for i in range(6)))
    code, _, _ = run_main("oracle", str(graph), "--all-subsets")
    assert code == 5


@pytest.mark.parametrize("text,expected_code", [
    ("0 x\n", 2),
    ("0 1\n1 1\n", 2),
    ("0 1\n1 ²\n", 2),
    ("# n=4\n0 1\n2 3\n", 3),
])
def test_bad_graph_files(write_file, text, expected_code):
    graph = write_file("bad.txt", text)
    code, _, _ = run_main("construct", str(graph))
    assert code == expected_code


def test_graph_file_with_bad_bytes(tmp_path):
    graph = tmp_path / "bad.txt"
    graph.write_bytes(b"0 1\n1 \xff\n")
    code, _, error = run_main("construct", str(graph))
    assert code == 2
    assert "UTF-8" in error


def test_argument_errors():
    code, _, _ = run_main("construct", "no_such_graph.txt")
    assert code == 2
    code, _, _ = run_main("frobnicate")
    assert code == 2


def test_generate(tmp_path):
    code, output, _ = run_main("generate", "--gen", "path", "--n", "5")
    assert code == 0
    assert output.splitlines() == ["# n=5", "0 1", "1 2", "2 3", "3 4"]

    graph = tmp_path / "tree.txt"
    code, output, _ = run_main("generate", "--gen", "tree", "--n", "12", "--seed", "3", "--out", str(graph))
    assert code == 0
    assert "n=12, m=11" in output
    assert graph.read_text(encoding="utf-8").startswith("# n=12\n")


def test_bench_to_stdout():
    code, output, _ = run_main("bench", "--gen", "tree", "--n", "16,32", "--seeds", "3", "--quiet")
    assert code == 0
    lines = output.splitlines()
    assert lines[0] == "generator,seed,n,m,diam,memdim,bound,max_route,mean_route,max_stretch"
    assert len(lines) == 7


def test_bench_with_files(tmp_path):
    out = tmp_path / "bench.csv"
    saved = tmp_path / "sweep.json"
    code, output, _ = run_main(
        "bench", "--gen", "ws", "--n", "12", "--seeds", "2", "--param", "k=4", "--param", "p=0.2",
        "--out", str(out), "--save-config", str(saved), "--quiet",
    )
    assert code == 0
    assert "(2 строк)" in output
    assert len(out.read_text(encoding="utf-8").splitlines()) == 3

    code, output, _ = run_main("bench", "--config", str(saved), "--quiet")
    assert code == 0
    assert len(output.splitlines()) == 3


def test_bench_help_lists_generator_parameters():
    code, output, _ = run_main("bench", "--help")
    assert code == 0
    assert "k=4, p=0.1" in output
    assert "bench_config.json" in output

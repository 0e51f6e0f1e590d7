from pathlib import Path

import pytest

from src.domain import Graph
from src.generators import complete_graph, cycle_graph, path_graph, star_graph


@pytest.fixture
def path3() -> Graph:
    return path_graph(3)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def star5() -> Graph:
    """Центр 0 и четыре листа."""
    return star_graph(5)


@pytest.fixture
def write_file(tmp_path):
    """Записывает текст во временный файл и возвращает путь к нему."""
    def write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write

import re
from pathlib import Path

from src.domain import CategorySystem, Graph
from src.errors import IdMismatchError, InputFormatError

_DIRECTIVE = re.compile(r"^#\s*n\s*=\s*([0-9]+)\s*$")
_VERTEX_ID = re.compile(r"[0-9]+")


def _tokens(raw: str) -> list[str]:
    return raw.split("#", 1)[0].split()


def _read_text(path: Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise InputFormatError(f"{path} is not valid UTF-8 (byte {e.start})") from e


def _parse_id(token: str, line: int) -> int:
    if not _VERTEX_ID.fullmatch(token):
        raise InputFormatError(f"expected a non-negative decimal vertex id, got {token!r}", line)
    return int(token)


class GraphIO:
    """
    Чтение и запись текстовых файлов графов и систем категорий.

    Формат графа: строки UTF-8, '#' начинает комментарий, каждая строка данных - два
    номера вершин "u v" через пробел. Необязательная директива "# n=<k>" задаёт число
    вершин (нужна для изолированных вершин и графа из одной вершины). Без директивы
    n = 1 + наибольший номер, и каждый номер 0..n-1 обязан встретиться в каком-то ребре.

    Формат категорий: каждая строка данных - список номеров вершин одной категории.
    Повторы склеиваются, пустые строки пропускаются, номер >= n - ошибка.

    Методы:
        parse_graph(text): Разбирает текст файла графа.
        parse_categories(text, n): Разбирает текст файла категорий для графа на n вершинах.
        read_graph(path), read_categories(path, n): То же для файлов.
        format_graph(g), format_categories(s): Текстовое представление для записи.
        write_graph(g, path), write_categories(s, path): Запись в файл.
    """

    @staticmethod
    def parse_graph(text: str) -> Graph:
        """
        Разбирает текст файла графа.

        Returns:
            Graph: Граф на вершинах 0..n-1.

        Exceptions:
            InputFormatError: С номером строки - для неверной строки, петли, повторного ребра
                или номера вне объявленного диапазона; без номера - для пропусков в номерах.
        """
        declared: int | None = None
        edges: list[tuple[int, int]] = []
        seen: dict[tuple[int, int], int] = {}
        for line, raw in enumerate(text.splitlines(), start=1):
            directive = _DIRECTIVE.match(raw.strip())
            if directive:
                declared = int(directive.group(1))
                continue
            tokens = _tokens(raw)
            if not tokens:
                continue
            if len(tokens) != 2:
                raise InputFormatError(f"expected two vertex ids, got {len(tokens)} tokens", line)
            u, v = (_parse_id(token, line) for token in tokens)
            if u == v:
                raise InputFormatError(f"self-loop at vertex {u}", line)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputFormatError(f"duplicate edge {u}-{v} (first seen on line {seen[key]})", line)
            seen[key] = line
            edges.append((u, v))

        if declared is not None:
            for (u, v), line in seen.items():
                if v >= declared:
                    raise InputFormatError(f"vertex {v} is outside the declared n={declared}", line)
            return Graph.from_edges(declared, edges)

        n = 1 + max((v for _, v in seen), default=-1)
        present = {u for edge in seen for u in edge}
        missing = [u for u in range(n) if u not in present]
        if missing:
            raise InputFormatError(f"vertex ids are not dense: {missing[0]} never appears (declare '# n=<k>')")
        return Graph.from_edges(n, edges)

    @staticmethod
    def parse_categories(text: str, n: int) -> CategorySystem:
        """
        Разбирает текст файла категорий.

        Exceptions:
            InputFormatError: Для токена, который не является номером вершины.
            IdMismatchError: Для номера вершины >= n.
        """
        sets = []
        for line, raw in enumerate(text.splitlines(), start=1):
            tokens = _tokens(raw)
            if not tokens:
                continue
            members = [_parse_id(token, line) for token in tokens]
            bad = [u for u in members if u >= n]
            if bad:
                raise IdMismatchError(f"line {line}: vertex {bad[0]} is outside the graph (n={n})")
            sets.append(members)
        return CategorySystem.from_sets(n, sets)

    @staticmethod
    def read_graph(path: Path) -> Graph:
        return GraphIO.parse_graph(_read_text(path))

    @staticmethod
    def read_categories(path: Path, n: int) -> CategorySystem:
        return GraphIO.parse_categories(_read_text(path), n)

    @staticmethod
    def format_graph(g: Graph) -> str:
        lines = [f"# n={g.n}"]
        lines.extend(f"{u} {v}" for u, v in g.edges())
        return "\n".join(lines) + "\n"

    @staticmethod
    def format_categories(s: CategorySystem) -> str:
        return "".join(" ".join(map(str, members)) + "\n" for members in s.categories)

    @staticmethod
    def write_graph(g: Graph, path: Path) -> None:
        Path(path).write_text(GraphIO.format_graph(g), encoding="utf-8")

    @staticmethod
    def write_categories(s: CategorySystem, path: Path) -> None:
        Path(path).write_text(GraphIO.format_categories(s), encoding="utf-8")

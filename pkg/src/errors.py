"""
Исключения библиотеки категорийной маршрутизации.

Каждое исключение несёт код завершения, который возвращает CLI, поэтому
тестовым обвязкам на shell не нужно разбирать вывод.
"""


class CategoryRoutingError(ValueError):
    """
    Базовое исключение библиотеки.

    Атрибуты:
        exit_code (int): Код завершения процесса для CLI.
    """
    exit_code = 1


class InputFormatError(CategoryRoutingError):
    """
    Ошибка разбора файла графа или файла категорий.

    Атрибуты:
        line (int | None): Номер строки (с единицы), в которой найдена ошибка.
    """
    exit_code = 2

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(CategoryRoutingError):
    exit_code = 3


class IdMismatchError(CategoryRoutingError):
    exit_code = 4


class SizeGuardError(CategoryRoutingError):
    exit_code = 5


class ConstructionError(CategoryRoutingError):
    """Входные данные не подходят для выбранной конструкции (например, граф не путь)."""
    exit_code = 1


class GenerationError(CategoryRoutingError):
    """Неверные параметры генератора или исчерпан лимит попыток."""
    exit_code = 1

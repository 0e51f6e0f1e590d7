import json
import logging

from src.config import GENERATORS_MAP
from src.errors import InputFormatError
from src.sweep_config import SweepConfig

logger = logging.getLogger(__name__)


def load_config_from_file(config_file_path):
    """
    Загружает серии бенчмарка из JSON-файла.

    Файл - список объектов вида {"generator": "ws", "params": {"k": 4, "p": 0.1},
    "n": [16, 32], "seeds": 5, "base_seed": 0}; поля params и base_seed необязательны.

    Параметры:
        config_file_path (str или Path): Путь к файлу конфигурации.

    Returns:
        list[SweepConfig]: Серии в порядке файла.

    Exceptions:
        InputFormatError: Если файл не читается, это не JSON нужной формы или генератор неизвестен.
    """
    try:
        with open(config_file_path, "r", encoding="utf-8") as f:
            configs = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputFormatError(f"cannot load sweep config {config_file_path}: {e}") from e
    if not isinstance(configs, list):
        raise InputFormatError("sweep config must be a JSON list of sweeps")

    sweeps = []
    for i, conf in enumerate(configs):
        try:
            sweep = SweepConfig(
                generator=conf["generator"],
                sizes=tuple(int(n) for n in conf["n"]),
                seeds=int(conf["seeds"]),
                params=dict(conf.get("params", {})),
                base_seed=int(conf.get("base_seed", 0)),
            )
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise InputFormatError(f"sweep #{i + 1}: malformed entry ({e!r})") from e
        if sweep.generator not in GENERATORS_MAP:
            raise InputFormatError(f"sweep #{i + 1}: unknown generator {sweep.generator!r}")
        sweeps.append(sweep)
    logger.info("Загружено серий: %d из %s", len(sweeps), config_file_path)
    return sweeps


def save_config_to_file(configs, output_file):
    """
    Сохраняет серии бенчмарка в JSON-файл в формате load_config_from_file.

    Параметры:
        configs (list[SweepConfig]): Серии, которые нужно сохранить.
        output_file (str или Path): Путь к файлу.
    """
    serialized_configs = [
        {
            "generator": conf.generator,
            "params": conf.params,
            "n": list(conf.sizes),
            "seeds": conf.seeds,
            "base_seed": conf.base_seed,
        }
        for conf in configs
    ]
    with open(output_file, "w", encoding="utf-8") as f:
        json.dump(serialized_configs, f, indent=4)
    logger.info("Конфигурация сохранена в файл: %s", output_file)

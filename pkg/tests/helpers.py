import io
import json
from pathlib import Path
from typing import Any

import numpy as np

from steklame.utils.csv_output import read_table


def write_json(path: str | Path, payload: dict[str, Any]) -> Path:
    path = Path(path)
    with open(path, "w") as f:
        json.dump(payload, f)
    return path


def read_csv_rows(content: str) -> list[dict[str, str]]:
    return read_table(io.StringIO(content))


def column(rows: list[dict[str, str]], name: str) -> np.ndarray:
    return np.array([float(row[name]) for row in rows])


def central_difference(func, x: float, step: float) -> float:
    return (func(x + step) - func(x - step)) / (2 * step)

import csv
import hashlib
import json
from typing import Any, Iterable, Sequence, TextIO

from steklame import __version__
from steklame.constants import FILE_ENCODING


def config_digest(payload: dict[str, Any]) -> str:
    canonical = json.dumps(payload, sort_keys=True, default=str)
    return hashlib.sha256(canonical.encode(FILE_ENCODING)).hexdigest()[:12]


def metadata_line(digest: str) -> str:
    return f"# steklame {__version__} config={digest}\n"


class CsvTable:
    """CSV writer emitting a metadata comment line before the header."""

    def __init__(self, stream: TextIO, columns: Sequence[str], digest: str) -> None:
        self._stream = stream
        self._writer = csv.writer(stream, lineterminator="\n")
        stream.write(metadata_line(digest))
        self._writer.writerow(columns)

    def write(self, row: Iterable[Any]) -> None:
        self._writer.writerow(row)

    def write_rows(self, rows: Iterable[Iterable[Any]]) -> None:
        self._writer.writerows(rows)

    def comment(self, text: str) -> None:
        self._stream.write(f"# {text}\n")


def read_table(stream: TextIO) -> list[dict[str, str]]:
    """Rows of a table written by ``CsvTable``, comment lines skipped."""
    lines = (line for line in stream if not line.startswith("#"))
    return list(csv.DictReader(lines))

import io

from steklame import __version__
from steklame.utils.csv_output import CsvTable, config_digest, read_table


def test_csv_table_layout():
    stream = io.StringIO()
    table = CsvTable(stream, ["index", "value"], "abc123")
    table.write([1, 0.5])
    table.comment("note")
    table.write_rows([[2, 1.5], [3, 2.5]])

    lines = stream.getvalue().splitlines()
    assert lines[0] == f"# steklame {__version__} config=abc123"
    assert lines[1] == "index,value"
    assert lines[3] == "# note"

    stream.seek(0)
    rows = read_table(stream)
    assert [row["index"] for row in rows] == ["1", "2", "3"]
    assert rows[2]["value"] == "2.5"


def test_config_digest_ignores_key_order():
    first = config_digest({"lambda": 1.0, "mu": 0.5})
    second = config_digest({"mu": 0.5, "lambda": 1.0})
    assert first == second
    assert len(first) == 12
    assert config_digest({"lambda": 1.0, "mu": 0.25}) != first

import csv
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


def load_table(name):
    """Word-keyed reference table: {word: {column: int}}."""
    with open(DATA / f"{name}.csv", newline="") as fh:
        rows = list(csv.DictReader(fh))
    out = {}
    for r in rows:
        word = r.pop("word")
        r.pop("rank", None)
        assert word not in out, f"duplicate word {word} in {name}"
        out[word] = {k: int(v) for k, v in r.items()}
    return out


@pytest.fixture(scope="session")
def tables():
    return {name: load_table(name) for name in ("g4_2", "g3_2", "g3_3", "g4_3")}


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])

from __future__ import annotations

import random
from pathlib import Path

import pytest

from maxfis.core import TransactionDb
from maxfis.dataio import parse_matrix

DATA = Path(__file__).resolve().parent.parent / "data"
EXAMPLE_PATH = DATA / "example_matrix.txt"

# the 12-itemset reported for the 10 x 20 example matrix at 20% support
EXAMPLE_ANSWER = (2, 3, 4, 5, 6, 12, 13, 14, 15, 16, 17, 20)  # 1-based labels


def example_answer_indices() -> tuple[int, ...]:
    return tuple(i - 1 for i in EXAMPLE_ANSWER)


@pytest.fixture(scope="session")
def example_db() -> TransactionDb:
    return parse_matrix(EXAMPLE_PATH.read_text())


def random_db(rng: random.Random, max_items: int = 10, max_tx: int = 20) -> TransactionDb:
    """Small random database; density varies per instance so both sparse and dense cases occur."""
    n = rng.randint(1, max_items)
    m = rng.randint(0, max_tx)
    p = rng.uniform(0.1, 0.9)
    masks = [sum(1 << i for i in range(n) if rng.random() < p) for _ in range(m)]
    return TransactionDb.from_masks(masks, n)


# acceptance reporting: one PASS/FAIL line per criterion at the end of the run

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        prev = _CRITERIA.get(number, (title, "PASS"))[1]
        status = "PASS" if report.passed and prev == "PASS" else "FAIL"
        _CRITERIA[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")

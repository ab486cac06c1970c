import pytest

from stablecp.instance import from_lists

GOLDEN_MEN = [
    [1, 3, 6, 2, 4, 5],
    [4, 6, 1, 2, 5, 3],
    [1, 4, 5, 3, 6, 2],
    [6, 5, 3, 4, 2, 1],
    [2, 3, 1, 4, 5, 6],
    [3, 1, 2, 6, 5, 4],
]
GOLDEN_WOMEN = [
    [1, 5, 6, 3, 2, 4],
    [2, 4, 6, 1, 3, 5],
    [4, 3, 6, 2, 5, 1],
    [1, 3, 5, 4, 2, 6],
    [3, 2, 6, 1, 4, 5],
    [5, 1, 3, 6, 4, 2],
]
GOLDEN_GS_MEN = {1: (1,), 2: (2,), 3: (4,), 4: (6, 5, 3), 5: (5, 6), 6: (3, 6, 5)}
GOLDEN_GS_WOMEN = {1: (1,), 2: (2,), 3: (4, 6), 4: (3,), 5: (6, 4, 5), 6: (5, 6, 4)}
MAN_OPTIMAL = ((1, 1), (2, 2), (3, 4), (4, 6), (5, 5), (6, 3))
WOMAN_OPTIMAL = ((1, 1), (2, 2), (3, 4), (4, 3), (5, 6), (6, 5))

GOLDEN_TEXT = "6\n" + "".join(
    f"{k}: {' '.join(map(str, row))}\n" for rows in (GOLDEN_MEN, GOLDEN_WOMEN) for k, row in enumerate(rows, 1)
)


@pytest.fixture
def golden():
    return from_lists(GOLDEN_MEN, GOLDEN_WOMEN)


@pytest.fixture
def golden_file(tmp_path):
    path = tmp_path / "golden.txt"
    path.write_text(GOLDEN_TEXT)
    return path


_CRITERIA = {}


def record_criterion(number, description, passed):
    _CRITERIA[number] = (description, passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        description, passed = _CRITERIA[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {description}")

import pytest

from weylkit import build

_VERDICTS: dict[int, tuple[str, bool]] = {}


class Criterion:
    def __init__(self, number: int, title: str):
        self.number = number
        self.title = title

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        _VERDICTS[self.number] = (self.title, exc_type is None)
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_VERDICTS):
        title, ok = _VERDICTS[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}")


@pytest.fixture(scope="session")
def c2():
    return build("C2")


@pytest.fixture(scope="session")
def a2():
    return build("A2")

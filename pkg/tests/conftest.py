import numpy as np
import pytest

_ACCEPTANCE = []


@pytest.fixture
def acceptance_log():
    """Record one human-readable line per acceptance criterion."""

    def log(number, title, passed, detail):
        _ACCEPTANCE.append((number, title, passed, detail))

    return log


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(_ACCEPTANCE):
        tag = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{tag}] {number}. {title}: {detail}")


@pytest.fixture
def rng():
    return np.random.default_rng(20121015)

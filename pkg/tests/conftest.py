import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from crystal_kit import G2Crystal, HatD4Crystal, build_graph  # noqa: E402


@pytest.fixture(scope="session")
def g2_graphs():
    return {l: build_graph(G2Crystal(l)) for l in range(4)}


@pytest.fixture(scope="session")
def hat_graphs():
    return {l: build_graph(HatD4Crystal(l)) for l in range(4)}


ACCEPTANCE_RESULTS: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        status, text = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {text}")

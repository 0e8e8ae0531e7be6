import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from prodquot.genvec import parse_vector  # noqa: E402
from prodquot.groups import catalogue  # noqa: E402

from helpers import ACCEPTANCE, fixture_entries  # noqa: E402


@pytest.fixture(scope="session")
def cat():
    return catalogue()


@pytest.fixture(scope="session")
def fixtures(cat):
    """(entry, group, v1, v2) for every explicit vector pair."""
    out = []
    for e in fixture_entries():
        G = cat.get(e["group"])
        out.append((e, G, parse_vector(G, e["S1"]), parse_vector(G, e["S2"])))
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])

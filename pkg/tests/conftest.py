import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from raman_hsps import thermal_occupancy  # noqa: E402


@pytest.fixture(scope="session")
def n_room():
    """Occupancy at 300 K, 50 THz."""
    return thermal_occupancy(nu_v=50e12, temperature=300.0)


_ACCEPTANCE = {}


@pytest.fixture
def acceptance():
    """Record one verdict line per acceptance criterion."""

    def record(number, ok, detail):
        _ACCEPTANCE[number] = (bool(ok), detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")

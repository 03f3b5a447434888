import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from mcturan.graphs import clique_pattern, cycle_pattern  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def k3():
    return clique_pattern(3)


@pytest.fixture
def k4():
    return clique_pattern(4)


@pytest.fixture
def c5():
    return cycle_pattern(5)


@pytest.fixture(autouse=True)
def _no_user_cache(monkeypatch):
    # keep tests independent of a cache directory configured in the shell
    monkeypatch.delenv("MCTURAN_CACHE_DIR", raising=False)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(VERDICTS):
        terminalreporter.write_line(VERDICTS[key])

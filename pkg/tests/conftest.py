import os
import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from mock_sparql import MockEndpoint

FIXTURES = Path(__file__).parent / "fixtures"
REPO = Path(__file__).resolve().parents[1]
MINICORPUS = REPO / "data" / "minicorpus"

# example generation is derandomized so every run explores the same cases
settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repro"))

SEED = int(os.environ.get("IICONFORGE_TEST_SEED", "20240101"))


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture
def endpoint():
    mock = MockEndpoint()
    yield mock
    mock.close()


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL", rep.duration))
    if lines:
        terminalreporter.section("acceptance criteria")
        for title, verdict, duration in sorted(lines):
            terminalreporter.write_line(f"{verdict}  criterion {title}  ({duration:.2f}s)")

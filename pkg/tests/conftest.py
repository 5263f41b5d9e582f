import os

import pytest
from hypothesis import HealthCheck, settings

from ecbench.curves import load_curve

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def toy_w():
    return load_curve("toy_w23")


@pytest.fixture(scope="session")
def toy_b():
    return load_curve("toy_b3")


@pytest.fixture(scope="session")
def toy_ed():
    return load_curve("toy_ed13")


@pytest.fixture(scope="session")
def secp():
    return load_curve("secp160r1")


@pytest.fixture(scope="session")
def sect():
    return load_curve("sect163r2")


@pytest.fixture(scope="session")
def ed160():
    return load_curve("edwards160")


ACCEPTANCE_LINES = []


@pytest.fixture
def ac_report(capsys):
    """Record and print one PASS/FAIL line for an acceptance criterion."""
    def report(tag, ok, detail):
        line = f"{tag} {'PASS' if ok else 'FAIL'}: {detail}"
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print("\n" + line)
        return ok
    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from polydendrite.specfile import load_spec

SPECS = Path(__file__).resolve().parent.parent / "specs"

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def spec_dir():
    return SPECS


@pytest.fixture(scope="session")
def vicsek():
    return load_spec(SPECS / "vicsek.spec")


@pytest.fixture(scope="session")
def vicsek_dihedral():
    return load_spec(SPECS / "vicsek_dihedral.spec")


@pytest.fixture(scope="session")
def gasket():
    return load_spec(SPECS / "gasket.spec")


@pytest.fixture(scope="session")
def vicsek_no_center():
    return load_spec(SPECS / "vicsek_no_center.spec")


# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {n:2d}: {text}")

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from homgroups.catalog import cyclic_group, cyclic_twist, trivial_group, twisted_corpus  # noqa: E402

SAMPLES = Path(__file__).resolve().parent.parent / "samples"

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_ac"):
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda s: int(s.split("_")[1][2:])):
        label = name[len("test_"):]
        verdict = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {label}")


@pytest.fixture(scope="session")
def corpus4():
    return twisted_corpus(4)


@pytest.fixture(scope="session")
def corpus6():
    return twisted_corpus(6)


@pytest.fixture
def z3():
    return cyclic_twist(3, 2)


@pytest.fixture
def z4():
    return cyclic_twist(4, 2)


@pytest.fixture
def c2():
    return cyclic_group(2)


@pytest.fixture
def trivial():
    return trivial_group()


@pytest.fixture
def samples():
    return SAMPLES

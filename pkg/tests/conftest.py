import pytest

from crossorder import documents
from crossorder.numberfield import NumberField, verify_galois
from crossorder.selftest import fixtures_dir, load_manifest
from crossorder.splitting import PrimeSplitting

QI_POLY = [1, 0, 1]
QI_AUTOS = [[0, 1], [0, -1]]
KLEIN_POLY = [1, 0, -10, 0, 1]
KLEIN_AUTOS = [[0, 1], [0, -1], [0, 10, 0, -1], [0, -10, 0, 1]]


def qi_galois():
    return verify_galois(NumberField(QI_POLY), QI_AUTOS)


def klein_galois():
    return verify_galois(NumberField(KLEIN_POLY), KLEIN_AUTOS)


def load_fixture(name):
    return documents.load_path(fixtures_dir() / name)


def valid_fixture_names():
    return [e["file"] for e in load_manifest()["fixtures"] if "expect" in e]


@pytest.fixture(scope="session")
def qi():
    return qi_galois()


@pytest.fixture(scope="session")
def klein():
    return klein_galois()


@pytest.fixture(scope="session")
def qi5(qi):
    return PrimeSplitting(qi, 5)


@pytest.fixture(scope="session")
def qi3(qi):
    return PrimeSplitting(qi, 3)


@pytest.fixture(scope="session")
def klein5(klein):
    return PrimeSplitting(klein, 5)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)

from pathlib import Path

import pytest

from sstkit import parse_hdt0l, parse_sst

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def read_fixture(name: str) -> str:
    return (FIXTURES / name).read_text()


@pytest.fixture(scope="session")
def t1():
    return parse_sst(read_fixture("t1.sst"))


@pytest.fixture(scope="session")
def t2():
    return parse_sst(read_fixture("t2.sst"))


@pytest.fixture(scope="session")
def example_instance():
    return parse_hdt0l(read_fixture("example.hdt0l"))

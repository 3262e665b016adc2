import pytest

import extbound as eb


@pytest.fixture(scope="session")
def corpora():
    return {name: eb.fixture_corpus(name) for name in eb.FIXTURE_NAMES}


@pytest.fixture(scope="session")
def a2(corpora):
    return corpora["A2"].algebra


@pytest.fixture(scope="session")
def loop2(corpora):
    return corpora["LOOP2"].algebra


@pytest.fixture(scope="session")
def nak3(corpora):
    return corpora["NAK3"].algebra


@pytest.fixture(scope="session")
def cnak2(corpora):
    return corpora["CNAK2"].algebra

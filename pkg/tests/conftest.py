from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fdimlab import GF, algebra_from_presentation, corpus  # noqa: E402


@pytest.fixture(scope="session")
def c3():
    return algebra_from_presentation(corpus.load("C3"))


@pytest.fixture(scope="session")
def d4():
    return algebra_from_presentation(corpus.load("D4"))


@pytest.fixture(scope="session")
def a2():
    return algebra_from_presentation(corpus.load("A2"))


@pytest.fixture(scope="session")
def a2_gf2():
    return algebra_from_presentation(corpus.load("A2", GF(2)))


@pytest.fixture(scope="session")
def c3_gf2():
    return algebra_from_presentation(corpus.load("C3", GF(2)))


@pytest.fixture(scope="session")
def d4_gf2():
    return algebra_from_presentation(corpus.load("D4", GF(2)))


@pytest.fixture(scope="session")
def all_algebras():
    return {n: algebra_from_presentation(corpus.load(n)) for n in corpus.names()}

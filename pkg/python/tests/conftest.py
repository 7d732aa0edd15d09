"""
Pytest configuration and fixtures.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from lambda_playground.terms.core import CA, CV  # noqa: E402
from lambda_playground.terms.syntax import parse_term  # noqa: E402
from lambda_playground.reduce.combinators import K_DB, S_DB, X_DB  # noqa: E402

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: expensive acceptance gates (deselect with -m 'not slow')")


@pytest.fixture
def tree():
    """Parse a binary tree (type or X-combinator term)."""
    return lambda text: parse_term(text, "tree")


@pytest.fixture
def sk():
    """Parse an SK tree."""
    return lambda text: parse_term(text, "sk")


@pytest.fixture
def db():
    """Parse a de Bruijn term."""
    return lambda text: parse_term(text, "db")


@pytest.fixture
def s_compressed():
    """The S combinator in compressed de Bruijn form."""
    return CA(3, CA(0, CV(0, 2), CV(0, 0)), CA(0, CV(0, 1), CV(0, 0)))


@pytest.fixture
def y_compressed():
    """The Y combinator in compressed de Bruijn form."""
    half = CA(1, CV(0, 1), CA(0, CV(0, 0), CV(0, 0)))
    return CA(1, half, half)


@pytest.fixture
def combinators():
    """de Bruijn forms of K, S and X."""
    return {"k": K_DB, "s": S_DB, "x": X_DB}


@pytest.fixture
def omega(db):
    """A term without a normal form."""
    return db("a(l(a(v(0),v(0))),l(a(v(0),v(0))))")

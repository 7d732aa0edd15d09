"""
Generators checked against counting recurrences computed independently.
"""

from functools import lru_cache

import pytest
from scipy.special import comb

from lambda_playground.generate.trees import gen_motzkin, gen_sk, gen_tree
from lambda_playground.generate.lambdas import gen_db, gen_nf


@lru_cache(maxsize=None)
def terms_below(n: int, k: int) -> int:
    """de Bruijn terms of size n whose free indices are all below k."""
    if n == 0:
        return k
    apps = sum(terms_below(i, k) * terms_below(n - 1 - i, k) for i in range(n))
    return terms_below(n - 1, k + 1) + apps


@lru_cache(maxsize=None)
def neutral(n: int, k: int) -> int:
    """Normal forms headed by a variable."""
    if n == 0:
        return k
    return sum(neutral(i, k) * normal(n - 1 - i, k) for i in range(n))


@lru_cache(maxsize=None)
def normal(n: int, k: int) -> int:
    if n == 0:
        return k
    return neutral(n, k) + normal(n - 1, k + 1)


@lru_cache(maxsize=None)
def motzkin(m: int) -> int:
    if m < 2:
        return 1
    return motzkin(m - 1) + sum(motzkin(i) * motzkin(m - 2 - i) for i in range(m - 1))


def count(gen, n, **kwargs) -> int:
    return sum(1 for _ in gen(n, **kwargs))


@pytest.mark.parametrize("n", range(1, 7))
def test_closed_terms_match_recurrence(n):
    assert count(gen_db, n) == terms_below(n, 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_normal_forms_match_recurrence(n):
    assert count(gen_nf, n) == normal(n, 0)


def test_trees_match_closed_form():
    for n in range(9):
        assert count(gen_tree, n) == comb(2 * n, n, exact=True) // (n + 1)


def test_sk_trees_match_closed_form():
    for n in range(6):
        assert count(gen_sk, n) == 2 ** (n + 1) * comb(2 * n, n, exact=True) // (n + 1)


def test_motzkin_trees_match_recurrence():
    for n in range(1, 10):
        assert count(gen_motzkin, n) == motzkin(n - 1)


def test_recurrence_values():
    """Sanity check of the oracles themselves."""
    assert [terms_below(n, 0) for n in range(1, 6)] == [1, 3, 14, 82, 579]
    assert [motzkin(m) for m in range(7)] == [1, 1, 2, 4, 9, 21, 51]


if __name__ == '__main__':
    pytest.main([__file__, '-v'])

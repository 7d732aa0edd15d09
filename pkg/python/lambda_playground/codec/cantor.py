"""
Generalized Cantor tupling between N^k and N.

A k-tuple becomes a strictly increasing k-set through prefix sums, and the
k-set becomes a natural number through the combinatorial number system of
degree k: {c1 < ... < ck} -> C(c1,1) + ... + C(ck,k). The image is a
polynomial of degree k in the tuple's members, so ranks stay proportionate
to the sizes of the inputs.
"""

from typing import List, Sequence

from lambda_playground.errors import ContractError
from lambda_playground.codec.catalan import binomial


def list_to_set(xs: Sequence[int]) -> List[int]:
    """[2,0,1,4] -> [2,3,5,10]: each member adds one more than its predecessor."""
    out, prev = [], -1
    for x in xs:
        prev = x + prev + 1
        out.append(prev)
    return out


def set_to_list(xs: Sequence[int]) -> List[int]:
    """
    Inverse of list_to_set.

    Raises:
        ContractError: xs is not strictly increasing over the naturals
    """
    out, prev = [], -1
    for x in xs:
        if x <= prev:
            raise ContractError(f"not a strictly increasing set: {list(xs)}")
        out.append(x - prev - 1)
        prev = x
    return out


def from_kset(xs: Sequence[int]) -> int:
    return sum(binomial(x, i + 1) for i, x in enumerate(xs))


def _rough_limit(k: int, n: int, i: int) -> int:
    # first i in k, 2k, 4k, ... with C(i, k) > n
    while binomial(i, k) <= n:
        i *= 2
    return i


def _binary_search(k: int, n: int, lo: int, hi: int) -> int:
    while lo < hi:
        mid = (lo + hi) // 2
        if binomial(mid, k) > n:
            hi = mid
        else:
            lo = mid + 1
    return lo


def _upper_binomial(k: int, n: int) -> int:
    """Smallest m with C(m, k) > n."""
    top = _rough_limit(k, n + k, k)
    return _binary_search(k, n, top // 2, top)


def to_kset(k: int, n: int) -> List[int]:
    """
    The k combinatorial digits of n, in increasing order.

    Args:
        k: Degree, number of digits
        n: Natural number

    Returns:
        Strictly increasing list of k naturals whose from_kset is n
    """
    digits: List[int] = []
    for degree in range(k, 0, -1):
        digit = _upper_binomial(degree, n) - 1
        n -= binomial(digit, degree)
        digits.insert(0, digit)
    return digits


def from_cantor(ns: Sequence[int]) -> int:
    """Rank of a tuple of naturals among the tuples of its length."""
    return from_kset(list_to_set(ns))


def to_cantor(k: int, n: int) -> List[int]:
    """
    The k-tuple of rank n.

    Raises:
        ContractError: k is 0 and n is not
    """
    if k == 0 and n > 0:
        raise ContractError("the only 0-tuple has rank 0")
    return set_to_list(to_kset(k, n))

"""
Balanced parentheses and their ranking.

A binary tree is written as a self-delimiting word of 0 (open) and 1
(close) digits. Words of length 2I+2 are ranked lexicographically among
themselves and shifted by the number of shorter words, which makes the
ranking a bijection onto the naturals.
"""

from typing import List, Sequence

from lambda_playground.errors import UnbalancedError
from lambda_playground.terms.core import BinTree, LEAF, Node

ParenWord = List[int]


def tree_to_parens(t: BinTree) -> ParenWord:
    """
    Parentheses word of a tree: x is 01, and a right spine X1>...>Xk>x is
    0, the words of X1..Xk, then 1.
    """
    out = [0]
    while isinstance(t, Node):
        out.extend(tree_to_parens(t.left))
        t = t.right
    out.append(1)
    return out


t2p = tree_to_parens


def parens_to_tree(word: Sequence[int]) -> BinTree:
    """
    Inverse of tree_to_parens.

    Raises:
        UnbalancedError: the word is not the image of a tree
    """
    pos = 0

    def tree() -> BinTree:
        nonlocal pos
        if pos >= len(word) or word[pos] != 0:
            raise UnbalancedError(f"expected 0 at position {pos}")
        pos += 1
        lefts = []
        while True:
            if pos >= len(word):
                raise UnbalancedError("word ends inside an open parenthesis")
            if word[pos] == 1:
                pos += 1
                break
            lefts.append(tree())
        result: BinTree = LEAF
        for left in reversed(lefts):
            result = Node(left, result)
        return result

    result = tree()
    if pos != len(word):
        raise UnbalancedError(f"trailing digits at position {pos}")
    return result


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, dividing as early as possible; 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    p = 1
    for i in range(k):
        p = (n - i) * p // (i + 1)
    return p


def catalan(n: int) -> int:
    c = 1
    for i in range(1, n + 1):
        c = 2 * (2 * i - 1) * c // (i + 1)
    return c


def _bin_dif(n: int, x: int, y: int) -> int:
    top = 2 * n - x
    r = n - (x + y) // 2
    return binomial(top, r) - binomial(top, r - 1)


def _local_rank(n: int, word: Sequence[int]) -> int:
    lo, y = 0, 0
    for x in range(1, 2 * n):
        if word[x] == 0:
            y += 1
        else:
            lo += _bin_dif(n, x, y + 1)
            y -= 1
    return lo


def _local_unrank(n: int, rank: int) -> ParenWord:
    digits = [0] * (2 * n + 1)
    lo, y = 0, 0
    for x in range(1, 2 * n + 1):
        bound = lo + _bin_dif(n, x, y + 1)
        if rank < bound:
            y += 1
        else:
            lo = bound
            y -= 1
            digits[x] = 1
    return digits


def rank_catalan(word: Sequence[int]) -> int:
    """
    Rank of a balanced word among all words, shorter words first.

    Raises:
        UnbalancedError: the word is not balanced
    """
    if len(word) < 2:
        raise UnbalancedError("a parentheses word has at least two digits")
    parens_to_tree(word)
    inner = (len(word) - 2) // 2
    return sum(catalan(i) for i in range(inner)) + _local_rank(inner, word)


def unrank_catalan(rank: int) -> ParenWord:
    """The balanced word of the given rank."""
    if rank < 0:
        raise UnbalancedError("ranks are natural numbers")
    shift, inner = 0, 0
    while shift + catalan(inner) <= rank:
        shift += catalan(inner)
        inner += 1
    digits = _local_unrank(inner, rank - shift)
    return [0] + digits[1:] + [1]


def rank_type(t: BinTree) -> int:
    return rank_catalan(tree_to_parens(t))


def unrank_type(rank: int) -> BinTree:
    return parens_to_tree(unrank_catalan(rank))

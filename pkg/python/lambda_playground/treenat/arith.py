"""
Binary trees as natural numbers.

The bijection maps x to 0 and A>B to cons(n(A), n(B)), where cons(i, j)
prepends a block of i+1 equal binary digits to j. Successor and
predecessor work on the trees directly, one block of digits at a time.
"""

from lambda_playground.errors import ContractError
from lambda_playground.terms.core import BinTree, LEAF, Leaf, Node

ONE = Node(LEAF, LEAF)

# largest block length cons accepts; beyond it the number has over a million digits
MAX_BLOCK = 1 << 20


def cons(i: int, j: int) -> int:
    """
    2^(i+1)*j for odd j, 2^(i+1)*(j+1)-1 for even j.

    Raises:
        ContractError: negative argument, or i of MAX_BLOCK or more
    """
    if i < 0 or j < 0:
        raise ContractError(f"cons expects naturals, got ({i}, {j})")
    if i >= MAX_BLOCK:
        raise ContractError(f"cons block of {i + 1} digits is too large")
    d = (j + 1) % 2
    return (1 << (i + 1)) * (j + d) - d


def decons(k: int):
    """
    Inverse of cons, through the dyadic valuation of k (or k+1 when odd).

    Raises:
        ContractError: k is not positive
    """
    if k <= 0:
        raise ContractError(f"decons expects a positive natural, got {k}")
    b = k % 2
    kb = k + b
    i = (kb & -kb).bit_length() - 1
    return max(0, i - 1), (kb >> i) - b


def nat_of_tree(t: BinTree) -> int:
    """
    Natural number of a tree.

    The value grows as a tower of exponentials along left branches, so only
    shallow left spines have a representable value.

    Raises:
        ContractError: the value is too large to build
    """
    lefts = []
    while isinstance(t, Node):
        lefts.append(t.left)
        t = t.right
    k = 0
    for left in reversed(lefts):
        k = cons(nat_of_tree(left), k)
    return k


def tree_of_nat(k: int) -> BinTree:
    """Tree of a natural number; 0 is x."""
    if k < 0:
        raise ContractError(f"not a natural: {k}")
    if k == 0:
        return LEAF
    i, j = decons(k)
    return Node(tree_of_nat(i), tree_of_nat(j))


def parity(t: BinTree) -> int:
    """Parity of the number t stands for; blocks alternate along the right spine."""
    p = 0
    while isinstance(t, Node):
        p = 1 - p
        t = t.right
    return p


def even(t: BinTree) -> bool:
    return parity(t) == 0


def odd(t: BinTree) -> bool:
    return parity(t) == 1


def tree_succ(t: BinTree) -> BinTree:
    """Successor, as a tree."""
    match t:
        case Leaf():
            return ONE
        case Node(x, Leaf()):
            return Node(x, ONE)
        case Node(x, xs):
            return _succ_block(parity(t), x, xs)


def _succ_block(p: int, x: BinTree, xs: BinTree) -> BinTree:
    match p, x, xs:
        case 0, Leaf(), Node(y, ys):
            return Node(tree_succ(y), ys)
        case 0, Node(), _:
            return Node(LEAF, Node(tree_pred(x), xs))
        case 1, _, Node(Leaf(), Node(y, ys)):
            return Node(x, Node(tree_succ(y), ys))
        case 1, _, Node(y, ys):
            return Node(x, Node(LEAF, Node(tree_pred(y), ys)))
    raise ContractError("successor applied to a malformed tree")


def tree_pred(t: BinTree) -> BinTree:
    """
    Predecessor, as a tree.

    Raises:
        ContractError: t is x
    """
    match t:
        case Node(Leaf(), Leaf()):
            return LEAF
        case Node(x, Node(Leaf(), Leaf())):
            return Node(x, LEAF)
        case Node(x, xs):
            return _pred_block(parity(t), x, xs)
    raise ContractError("predecessor of zero")


def _pred_block(p: int, x: BinTree, xs: BinTree) -> BinTree:
    match p, x, xs:
        case 0, _, Node(Leaf(), Node(y, ys)):
            return Node(x, Node(tree_succ(y), ys))
        case 0, _, Node(Node() as y, ys):
            return Node(x, Node(LEAF, Node(tree_pred(y), ys)))
        case 1, Leaf(), Node(y, ys):
            return Node(tree_succ(y), ys)
        case 1, Node(), _:
            return Node(LEAF, Node(tree_pred(x), xs))
    raise ContractError("predecessor applied to a malformed tree")


def tree_add(a: BinTree, b: BinTree) -> BinTree:
    return tree_of_nat(nat_of_tree(a) + nat_of_tree(b))


def tree_sub(a: BinTree, b: BinTree) -> BinTree:
    """
    Difference a - b, through the naturals.

    Raises:
        ContractError: b is larger than a
    """
    diff = nat_of_tree(a) - nat_of_tree(b)
    if diff < 0:
        raise ContractError("subtraction below zero")
    return tree_of_nat(diff)

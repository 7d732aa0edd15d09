"""
Size-bounded enumeration of tree families.

Every generator threads a size budget: an inner generator yields pairs
(tree, budget_left) and a node that costs one unit passes budget - 1 to its
children. Exact-size enumeration keeps the trees that used up the whole
budget; up-to-size enumeration keeps them all. Alternatives are tried in a
fixed order (leaves before nodes) so enumerations are stable.
"""

from typing import Iterator, Tuple, TypeVar

from lambda_playground.terms.core import (
    Ap, Bin, BinTree, K, LEAF, MotzkinTree, Node, S, SkTerm, U_LEAF, Un,
)

EXACT = "exact"
UPTO = "upto"
MODES = (EXACT, UPTO)

T = TypeVar("T")
Budgeted = Iterator[Tuple[T, int]]


def select(stream: Budgeted, mode: str) -> Iterator[T]:
    """Drop the budget; in exact mode keep only the results that spent it all."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")
    for term, left in stream:
        if mode == UPTO or left == 0:
            yield term


def gen_tree_by_depth(depth: int) -> Iterator[BinTree]:
    """All binary trees of depth at most depth."""
    yield LEAF
    if depth > 0:
        for left in gen_tree_by_depth(depth - 1):
            for right in gen_tree_by_depth(depth - 1):
                yield Node(left, right)


def _trees(budget: int) -> Budgeted:
    yield LEAF, budget
    if budget > 0:
        for left, b1 in _trees(budget - 1):
            for right, b2 in _trees(b1):
                yield Node(left, right), b2


def gen_tree(n: int, mode: str = EXACT) -> Iterator[BinTree]:
    """
    Binary trees with n internal nodes (or at most n in upto mode).

    Args:
        n: Number of internal nodes
        mode: "exact" or "upto"

    Returns:
        Iterator over trees, x before x>x
    """
    return select(_trees(n), mode)


# simple types are binary trees over the single base type x
gen_type = gen_tree


def _motzkin(budget: int, leaf_cost: int) -> Budgeted:
    if budget >= leaf_cost:
        yield U_LEAF, budget - leaf_cost
    if budget > 0:
        for child, b1 in _motzkin(budget - 1, leaf_cost):
            yield Un(child), b1
        for left, b1 in _motzkin(budget - 1, leaf_cost):
            for right, b2 in _motzkin(b1, leaf_cost):
                yield Bin(left, right), b2


def gen_motzkin(n: int, mode: str = EXACT, schroder: bool = False) -> Iterator[MotzkinTree]:
    """
    Binary-unary trees where every node, leaves included, costs one unit.

    With schroder=True leaves are free, which gives the trees counted by the
    large Schroder numbers.
    """
    return select(_motzkin(n, 0 if schroder else 1), mode)


def _sk(budget: int) -> Budgeted:
    yield K, budget
    yield S, budget
    if budget > 0:
        for left, b1 in _sk(budget - 1):
            for right, b2 in _sk(b1):
                yield Ap(left, right), b2


def gen_sk(n: int, mode: str = EXACT) -> Iterator[SkTerm]:
    """SK trees with n application nodes (or at most n in upto mode)."""
    return select(_sk(n), mode)

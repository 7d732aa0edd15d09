"""
Unit tests for tree naturals and the tree ranking of de Bruijn terms.
"""

import pytest

from lambda_playground.errors import ContractError
from lambda_playground.terms.core import A, L, LEAF, Node, V
from lambda_playground.terms.syntax import print_term
from lambda_playground.treenat.arith import (
    MAX_BLOCK, cons, decons, even, nat_of_tree, odd, parity, tree_add,
    tree_of_nat, tree_pred, tree_sub, tree_succ,
)
from lambda_playground.treenat.ranking import rank_db, unrank_db
from lambda_playground.generate.trees import UPTO, gen_tree
from lambda_playground.generate.lambdas import gen_db


def test_cons_and_decons():
    assert cons(4, 63) == 2016
    assert decons(2016) == (4, 63)
    assert [cons(0, j) for j in range(4)] == [1, 2, 5, 6]
    for k in range(1, 500):
        assert cons(*decons(k)) == k


def test_cons_contract():
    with pytest.raises(ContractError):
        cons(-1, 0)
    with pytest.raises(ContractError):
        decons(0)
    with pytest.raises(ContractError):
        cons(MAX_BLOCK, 0)


def test_small_trees(tree):
    assert tree_of_nat(0) == LEAF
    assert tree_of_nat(1) == tree("x>x")
    assert tree_of_nat(2) == tree("x>(x>x)")
    assert tree_of_nat(3) == tree("(x>x)>x")
    assert tree_of_nat(10) == tree("x>(x>(x>(x>x)))")
    assert tree_succ(tree_of_nat(10)) == tree("(x>x)>(x>(x>x))")


def test_trees_and_naturals_are_a_bijection():
    for k in range(2001):
        assert nat_of_tree(tree_of_nat(k)) == k
    for t in gen_tree(5, UPTO):
        assert tree_of_nat(nat_of_tree(t)) == t


def test_left_spines_outgrow_the_naturals(tree):
    """Each left nesting exponentiates the value; past size 5 it cannot be built."""
    assert nat_of_tree(tree("(((x>x)>x)>x)>x")) == 65535
    deep = tree("(((((x>x)>x)>x)>x)>x)>x")
    with pytest.raises(ContractError):
        nat_of_tree(deep)
    with pytest.raises(ContractError):
        unrank_db(Node(deep, LEAF))
    assert unrank_db(Node(deep, LEAF), tree_indices=True) == V(deep)


def test_successor_and_predecessor():
    """Arithmetic on trees agrees with arithmetic on the naturals they encode."""
    for k in range(500):
        t = tree_of_nat(k)
        assert tree_succ(t) == tree_of_nat(k + 1), f"succ({k})"
        assert tree_pred(tree_succ(t)) == t, f"pred(succ({k}))"


def test_predecessor_of_zero():
    with pytest.raises(ContractError):
        tree_pred(LEAF)


def test_parity():
    for k in range(300):
        t = tree_of_nat(k)
        assert parity(t) == k % 2
        assert even(t) == (k % 2 == 0)
        assert odd(t) == (k % 2 == 1)


def test_add_and_sub():
    assert nat_of_tree(tree_add(tree_of_nat(40), tree_of_nat(2))) == 42
    assert nat_of_tree(tree_sub(tree_of_nat(40), tree_of_nat(2))) == 38
    with pytest.raises(ContractError):
        tree_sub(tree_of_nat(2), tree_of_nat(40))


def test_ranking_cases():
    """Variable zero is x, binders prepend x, other variables end in x."""
    assert rank_db(V(0)) == LEAF
    assert rank_db(L(V(0))) == Node(LEAF, LEAF)
    assert rank_db(V(3)) == Node(tree_of_nat(3), LEAF)
    ranked = rank_db(A(V(0), V(0)))
    assert ranked == Node(tree_succ(LEAF), tree_succ(LEAF))


def test_ranking_inverts_on_terms():
    for t in gen_db(6, UPTO):
        assert unrank_db(rank_db(t)) == t, f"failed on {print_term(t)}"
    for t in (V(0), V(7), A(V(2), L(V(5)))):
        assert unrank_db(rank_db(t)) == t


def test_every_small_tree_decodes():
    for t in gen_tree(5, UPTO):
        assert rank_db(unrank_db(t)) == t


def test_every_tree_decodes_with_tree_indices():
    trees = list(gen_tree(8, UPTO))
    assert len(trees) == 2056
    for t in trees:
        assert rank_db(unrank_db(t, tree_indices=True), tree_indices=True) == t


def test_tree_indices_variant():
    """With tree indices the ranking skips the index conversion."""
    t = A(V(tree_of_nat(3)), L(V(LEAF)))
    plain = A(V(3), L(V(0)))
    assert rank_db(t, tree_indices=True) == rank_db(plain)
    assert unrank_db(rank_db(plain), tree_indices=True) == t


if __name__ == '__main__':
    pytest.main([__file__, '-v'])

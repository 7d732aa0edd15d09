"""
De Bruijn terms ranked onto tree naturals.

    v(0)   <-> x
    l(A)   <-> x > rank(A)
    v(K>0) <-> t(K) > x
    a(A,B) <-> succ(rank(A)) > succ(rank(B))

Application branches are shifted by one so they never start or end with
x, which keeps the four cases disjoint. Both directions take time linear
in the size of the term.
"""

from lambda_playground.terms.core import A, BinTree, DbTerm, L, LEAF, Leaf, Node, V
from lambda_playground.treenat.arith import (
    nat_of_tree, tree_of_nat, tree_pred, tree_succ,
)


def rank_db(t: DbTerm, tree_indices: bool = False) -> BinTree:
    """
    Tree natural of a de Bruijn term, open terms included.

    Args:
        t: de Bruijn term
        tree_indices: Indices are already tree naturals and are used as is
    """
    if isinstance(t, V):
        index = t.index if tree_indices else tree_of_nat(t.index)
        return LEAF if isinstance(index, Leaf) else Node(index, LEAF)
    if isinstance(t, L):
        return Node(LEAF, rank_db(t.body, tree_indices))
    return Node(tree_succ(rank_db(t.fun, tree_indices)),
                tree_succ(rank_db(t.arg, tree_indices)))


def unrank_db(t: BinTree, tree_indices: bool = False) -> DbTerm:
    """
    Inverse of rank_db; every tree decodes to a term.

    With int indices a variable branch is turned into its natural number,
    which only works for small branches; tree_indices=True decodes every
    tree.

    Raises:
        ContractError: int indices and a variable branch too large to convert
    """
    if isinstance(t, Leaf):
        return V(LEAF if tree_indices else 0)
    if isinstance(t.left, Leaf):
        return L(unrank_db(t.right, tree_indices))
    if isinstance(t.right, Leaf):
        return V(t.left if tree_indices else nat_of_tree(t.left))
    return A(unrank_db(tree_pred(t.left), tree_indices),
             unrank_db(tree_pred(t.right), tree_indices))

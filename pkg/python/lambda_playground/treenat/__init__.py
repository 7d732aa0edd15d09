"""Binary trees as natural numbers, and a tree ranking of de Bruijn terms."""

from lambda_playground.treenat.arith import (
    cons, decons, even, nat_of_tree, odd, parity, tree_add, tree_of_nat,
    tree_pred, tree_sub, tree_succ,
)
from lambda_playground.treenat.ranking import rank_db, unrank_db

"""
SK and X combinator trees: evaluators and expansion into de Bruijn terms.

X is Rosser's one-point basis, X = \\f.f K S K. A binary tree read as an
X-combinator expression has leaves X and nodes for application.
"""

import logging

from lambda_playground.terms.core import (
    A, Ap, Atom, BinTree, DbTerm, K, L, LEAF, Leaf, Node, S, SkTerm, V,
)
from lambda_playground.reduce.debruijn import as_fuel, nf_reduce

logger = logging.getLogger(__name__)

K_DB = L(L(V(1)))
S_DB = L(L(L(A(A(V(2), V(0)), A(V(1), V(0))))))
X_DB = L(A(A(A(V(0), K_DB), S_DB), K_DB))

# X-trees behaving as the classic combinators
K_TREE = Node(Node(LEAF, LEAF), LEAF)
S_TREE = Node(LEAF, Node(LEAF, LEAF))
SKK_TREE = Node(Node(S_TREE, K_TREE), K_TREE)


def eval_sk(t: SkTerm, fuel=None) -> SkTerm:
    """
    Evaluate an SK tree: both subtrees first, then the application.

    Args:
        t: SK tree
        fuel: Fuel, step limit, or None

    Raises:
        FuelExhausted: more than the allowed number of S/K rewrites
    """
    fuel = as_fuel(fuel)
    if isinstance(t, Atom):
        return t
    return app_sk(eval_sk(t.left, fuel), eval_sk(t.right, fuel), fuel)


def app_sk(f: SkTerm, g: SkTerm, fuel=None) -> SkTerm:
    """Apply evaluated f to evaluated g: s x y z -> x z (y z), k x y -> x."""
    fuel = as_fuel(fuel)
    if isinstance(f, Ap) and isinstance(f.left, Ap) and f.left.left == S:
        fuel.spend()
        x, y = f.left.right, f.right
        return app_sk(app_sk(x, g, fuel), app_sk(y, g, fuel), fuel)
    if isinstance(f, Ap) and f.left == K:
        fuel.spend()
        return f.right
    return Ap(f, g)


def sk_to_db(t: SkTerm) -> DbTerm:
    """Replace leaves by the de Bruijn forms of S and K."""
    if isinstance(t, Atom):
        return S_DB if t == S else K_DB
    return A(sk_to_db(t.left), sk_to_db(t.right))


def _is_k_head(f: BinTree) -> bool:
    # ((x>x)>x)>X
    return isinstance(f, Node) and f.left == K_TREE


def _is_s_head(f: BinTree) -> bool:
    # ((x>(x>x))>X)>Y
    return (isinstance(f, Node) and isinstance(f.left, Node)
            and f.left.left == S_TREE)


def eval_x(t: BinTree, fuel=None) -> BinTree:
    """Evaluate an X-combinator tree, subtrees first."""
    fuel = as_fuel(fuel)
    if isinstance(t, Leaf):
        return t
    return app_x(eval_x(t.left, fuel), eval_x(t.right, fuel), fuel)


def app_x(f: BinTree, g: BinTree, fuel=None) -> BinTree:
    """Apply evaluated X-trees, with the K-tree and S-tree heads as rewrite rules."""
    fuel = as_fuel(fuel)
    if _is_k_head(f):
        fuel.spend()
        return f.right
    if _is_s_head(f):
        fuel.spend()
        x, y = f.left.right, f.right
        return app_x(app_x(x, g, fuel), app_x(y, g, fuel), fuel)
    return Node(f, g)


def x_to_db(t: BinTree) -> DbTerm:
    """
    Expand an X-combinator tree into a closed de Bruijn term.

    The expansion of a tree with N internal nodes has size 15N+14.
    """
    if isinstance(t, Leaf):
        return X_DB
    return A(x_to_db(t.left), x_to_db(t.right))


def eval_as_t(t: BinTree, fuel=None) -> DbTerm:
    """Evaluate as an X-tree, then expand."""
    return x_to_db(eval_x(t, fuel))


def eval_as_b(t: BinTree, fuel=None) -> DbTerm:
    """Expand, then normalize as a lambda term."""
    return nf_reduce(x_to_db(t), fuel)

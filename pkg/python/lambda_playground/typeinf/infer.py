"""
Simple-type inference for every term species.

All engines share the unifier in unify.py. Named and de Bruijn terms are
typed structurally; SK trees borrow the well-known types of S and K; X
trees either borrow the type of their lambda expansion or unify copies of
the principal type of X at each leaf.
"""

import logging
from functools import lru_cache
from typing import List, Optional, Sequence, Union

from lambda_playground.errors import UntypableError
from lambda_playground.terms.core import (
    Atom, BinTree, CA, CompTerm, CV, DbTerm, L, Lam, Leaf, Node, S,
    SkTerm, StdTerm, V, Var, compressed_to_db,
)
from lambda_playground.reduce.combinators import X_DB, x_to_db
from lambda_playground.typeinf.unify import (
    Bindings, Meta, TypeExpr, bind_base, freshen, unify,
)

logger = logging.getLogger(__name__)

# K: A>(B>A)
K_SCHEME = Node(Meta(-1), Node(Meta(-2), Meta(-1)))
# S: (A>(B>C))>((A>B)>(A>C))
S_SCHEME = Node(
    Node(Meta(-1), Node(Meta(-2), Meta(-3))),
    Node(Node(Meta(-1), Meta(-2)), Node(Meta(-1), Meta(-3))),
)

X_MODES = ("borrowed", "direct")


def _apply(fun_type: TypeExpr, arg_type: TypeExpr, bs: Bindings,
           occurs_check: bool = True) -> TypeExpr:
    result = bs.fresh()
    if unify(fun_type, Node(arg_type, result), bs, occurs_check) is None:
        raise UntypableError("argument type does not match the function type")
    return result


def infer_std(t: StdTerm) -> TypeExpr:
    """
    Most general type of a named term.

    Each free name gets one metavariable shared by all its occurrences.

    Returns:
        Resolved type, metavariables left in place

    Raises:
        UntypableError: clash or occurs-check failure
    """
    bs = Bindings()
    free = {}

    def walk(u: StdTerm, env: dict) -> TypeExpr:
        if isinstance(u, Var):
            if u.name in env:
                return env[u.name]
            if u.name not in free:
                free[u.name] = bs.fresh()
            return free[u.name]
        if isinstance(u, Lam):
            arg = bs.fresh()
            return Node(arg, walk(u.body, {**env, u.name: arg}))
        return _apply(walk(u.fun, env), walk(u.arg, env), bs)

    return bs.resolve(walk(t, {}))


def principal_db(t: DbTerm, context: Sequence[TypeExpr] = (),
                 bindings: Bindings = None) -> TypeExpr:
    """
    Most general type of a de Bruijn term.

    Args:
        t: de Bruijn term
        context: Types of the free indices 0, 1, ... beyond the term's binders
        bindings: Substitution to extend, a fresh one by default

    Raises:
        UntypableError: untypable, or an index with no binder and no context entry
    """
    bs = bindings if bindings is not None else Bindings()

    def walk(u: DbTerm, ctx: List[TypeExpr]) -> TypeExpr:
        if isinstance(u, V):
            if u.index >= len(ctx):
                raise UntypableError(f"index {u.index} is not bound")
            return ctx[u.index]
        if isinstance(u, L):
            arg = bs.fresh()
            return Node(arg, walk(u.body, [arg] + ctx))
        return _apply(walk(u.fun, ctx), walk(u.arg, ctx), bs)

    return bs.resolve(walk(t, list(context)))


def infer_db(t: DbTerm, free: int = 0) -> Node:
    """
    Simple type of a de Bruijn term over the single base type x.

    Args:
        t: de Bruijn term, closed unless free > 0
        free: Number of free indices given fresh types

    Returns:
        Ground type

    Raises:
        UntypableError: not typable
    """
    bs = Bindings()
    context = [bs.fresh() for _ in range(free)]
    return bind_base(principal_db(t, context, bs))


def infer_compressed(t: CompTerm) -> Node:
    return infer_db(compressed_to_db(t))


def typable(t: Union[DbTerm, CompTerm]) -> bool:
    """True iff the closed lambda term has a simple type."""
    if isinstance(t, (CV, CA)):
        t = compressed_to_db(t)
    try:
        infer_db(t)
    except UntypableError:
        return False
    return True


def _axiom(atom: Atom) -> TypeExpr:
    return S_SCHEME if atom == S else K_SCHEME


def infer_sk(t: SkTerm) -> TypeExpr:
    """
    Most general type of an SK tree from the types of S and K.

    Raises:
        UntypableError: not typable
    """
    bs = Bindings()

    def walk(u: SkTerm) -> TypeExpr:
        if isinstance(u, Atom):
            return freshen(_axiom(u), bs)
        return _apply(walk(u.left), walk(u.right), bs)

    return bs.resolve(walk(t))


def infer_sk_simple(t: SkTerm) -> Node:
    return bind_base(infer_sk(t))


def typable_sk(t: SkTerm) -> bool:
    try:
        infer_sk(t)
    except UntypableError:
        return False
    return True


@lru_cache(maxsize=1)
def x_scheme() -> TypeExpr:
    """Principal type of the X combinator's lambda form."""
    return principal_db(X_DB)


def principal_x(t: BinTree, mode: str = "borrowed") -> TypeExpr:
    """
    Most general type of an X-combinator tree.

    Args:
        t: Binary tree read as an X-combinator expression
        mode: "borrowed" types the lambda expansion; "direct" unifies a fresh
            copy of the principal type of X at every leaf

    Raises:
        UntypableError: not typable
    """
    if mode == "borrowed":
        return principal_db(x_to_db(t))
    if mode != "direct":
        raise ValueError(f"unknown mode {mode!r}, expected one of {X_MODES}")
    bs = Bindings()
    scheme = x_scheme()

    def walk(u: BinTree) -> TypeExpr:
        if isinstance(u, Leaf):
            return freshen(scheme, bs)
        return _apply(walk(u.left), walk(u.right), bs)

    return bs.resolve(walk(t))


def infer_x(t: BinTree, mode: str = "borrowed") -> Node:
    """Simple type of an X-combinator tree, see principal_x."""
    return bind_base(principal_x(t, mode))


def typable_x(t: BinTree, mode: str = "borrowed") -> bool:
    try:
        infer_x(t, mode)
    except UntypableError:
        return False
    return True


def try_infer(infer, t, *args) -> Optional[Node]:
    """Result of infer(t, *args), or None when t is untypable."""
    try:
        return infer(t, *args)
    except UntypableError:
        return None


def useless_type(t: SkTerm) -> TypeExpr:
    """
    Type of an SK tree found without the occurs check.

    Unification over rational trees never fails here, so every tree gets a
    type. Cycles are cut at the metavariable closing them.

    Raises:
        UntypableError: unification reports a failure
    """
    bs = Bindings()

    def check(u: SkTerm, ty: TypeExpr):
        if isinstance(u, Atom):
            if unify(ty, freshen(_axiom(u), bs), bs, occurs_check=False) is None:
                raise UntypableError(f"{u.name} does not fit its position")
            return
        arg = bs.fresh()
        check(u.left, Node(arg, ty))
        check(u.right, arg)

    root = bs.fresh()
    check(t, root)
    return bs.resolve(root)

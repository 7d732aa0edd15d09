"""
Term representations shared by the whole playground.

Three notations for lambda terms (named, de Bruijn, compressed de Bruijn),
unlabeled binary trees (simple types, X-combinator trees and tree naturals
at once), SK-combinator trees and binary-unary Motzkin skeletons, together
with sizes, closedness checks and the bijections between lambda notations.
"""

import itertools
import re
from dataclasses import dataclass
from typing import Tuple, Union

from lambda_playground.errors import ContractError


# de Bruijn terms

@dataclass(frozen=True, slots=True)
class V:
    """Variable given by its de Bruijn index."""
    index: int


@dataclass(frozen=True, slots=True)
class L:
    """Lambda binder."""
    body: "DbTerm"


@dataclass(frozen=True, slots=True)
class A:
    """Application."""
    fun: "DbTerm"
    arg: "DbTerm"


DbTerm = Union[V, L, A]


# compressed de Bruijn terms: k counts the binders folded into the node

@dataclass(frozen=True, slots=True)
class CV:
    k: int
    n: int


@dataclass(frozen=True, slots=True)
class CA:
    k: int
    x: "CompTerm"
    y: "CompTerm"


CompTerm = Union[CV, CA]


# named terms with canonical variable names x0, x1, ... (free ones f0, f1, ...)

@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Lam:
    name: str
    body: "StdTerm"


@dataclass(frozen=True, slots=True)
class App:
    fun: "StdTerm"
    arg: "StdTerm"


StdTerm = Union[Var, Lam, App]


# binary trees: leaf x, node >

@dataclass(frozen=True, slots=True)
class Leaf:
    pass


@dataclass(frozen=True, slots=True)
class Node:
    left: "BinTree"
    right: "BinTree"


BinTree = Union[Leaf, Node]

LEAF = Leaf()


# SK-combinator trees

@dataclass(frozen=True, slots=True)
class Atom:
    """Combinator constant, `s` or `k`."""
    name: str


@dataclass(frozen=True, slots=True)
class Ap:
    left: "SkTerm"
    right: "SkTerm"


SkTerm = Union[Atom, Ap]

S = Atom("s")
K = Atom("k")


@dataclass(frozen=True, slots=True)
class Hole:
    """Numbered placeholder standing for a removed subtree of an SK trunk."""
    ident: int


# Motzkin (binary-unary) trees

@dataclass(frozen=True, slots=True)
class U:
    pass


@dataclass(frozen=True, slots=True)
class Un:
    child: "MotzkinTree"


@dataclass(frozen=True, slots=True)
class Bin:
    left: "MotzkinTree"
    right: "MotzkinTree"


MotzkinTree = Union[U, Un, Bin]

U_LEAF = U()

_FREE_NAME = re.compile(r"f(\d+)")


def term_size(t) -> int:
    """
    Size of a term.

    De Bruijn terms count L and A nodes, compressed terms the size of their
    expansion, named terms Lam and App nodes, binary and SK trees their
    internal nodes, Motzkin trees every node.
    """
    if isinstance(t, V):
        return 0
    if isinstance(t, L):
        return 1 + term_size(t.body)
    if isinstance(t, A):
        return 1 + term_size(t.fun) + term_size(t.arg)
    if isinstance(t, CV):
        return t.k
    if isinstance(t, CA):
        return t.k + 1 + term_size(t.x) + term_size(t.y)
    if isinstance(t, (Leaf, Atom, Var, Hole)):
        return 0
    if isinstance(t, Node):
        return 1 + term_size(t.left) + term_size(t.right)
    if isinstance(t, Ap):
        return 1 + term_size(t.left) + term_size(t.right)
    if isinstance(t, Lam):
        return 1 + term_size(t.body)
    if isinstance(t, App):
        return 1 + term_size(t.fun) + term_size(t.arg)
    if isinstance(t, U):
        return 1
    if isinstance(t, Un):
        return 1 + term_size(t.child)
    if isinstance(t, Bin):
        return 1 + term_size(t.left) + term_size(t.right)
    raise TypeError(f"not a term: {t!r}")


def is_closed(t: Union[DbTerm, CompTerm]) -> bool:
    """True iff every index points to an enclosing binder."""
    if isinstance(t, (CV, CA)):
        return _is_closed_comp(t, 0)
    return _is_closed_db(t, 0)


def _is_closed_db(t: DbTerm, depth: int) -> bool:
    if isinstance(t, V):
        return t.index < depth
    if isinstance(t, L):
        return _is_closed_db(t.body, depth + 1)
    return _is_closed_db(t.fun, depth) and _is_closed_db(t.arg, depth)


def _is_closed_comp(t: CompTerm, depth: int) -> bool:
    if isinstance(t, CV):
        return t.n < depth + t.k
    inner = depth + t.k
    return _is_closed_comp(t.x, inner) and _is_closed_comp(t.y, inner)


def is_normal(t: DbTerm) -> bool:
    """True iff t contains no beta-redex."""
    if isinstance(t, V):
        return True
    if isinstance(t, L):
        return is_normal(t.body)
    if isinstance(t.fun, L):
        return False
    return is_normal(t.fun) and is_normal(t.arg)


def db_to_std(t: DbTerm) -> StdTerm:
    """
    Name the binders of a de Bruijn term.

    Binders get x0, x1, ... in the order they are met walking the term
    left to right. An index i pointing past the d enclosing binders becomes
    the free name f(i - d).

    Args:
        t: de Bruijn term, open terms allowed

    Returns:
        Named term, alpha-canonical
    """
    counter = itertools.count()

    def walk(u: DbTerm, names: Tuple[str, ...]) -> StdTerm:
        if isinstance(u, V):
            if u.index < len(names):
                return Var(names[u.index])
            return Var(f"f{u.index - len(names)}")
        if isinstance(u, L):
            name = f"x{next(counter)}"
            return Lam(name, walk(u.body, (name,) + names))
        return App(walk(u.fun, names), walk(u.arg, names))

    return walk(t, ())


def std_to_db(t: StdTerm) -> DbTerm:
    """
    Inverse of db_to_std.

    A name refers to its innermost binder. Unbound names must have the
    free form fN.

    Raises:
        ContractError: a name is neither bound nor of the form fN
    """
    def walk(u: StdTerm, names: Tuple[str, ...]) -> DbTerm:
        if isinstance(u, Var):
            if u.name in names:
                return V(names.index(u.name))
            m = _FREE_NAME.fullmatch(u.name)
            if m is None:
                raise ContractError(f"unbound variable {u.name}")
            return V(len(names) + int(m.group(1)))
        if isinstance(u, Lam):
            return L(walk(u.body, (u.name,) + names))
        return A(walk(u.fun, names), walk(u.arg, names))

    return walk(t, ())


def db_to_compressed(t: DbTerm) -> CompTerm:
    """Fold each maximal run of binders into the node it wraps."""
    k = 0
    while isinstance(t, L):
        k += 1
        t = t.body
    if isinstance(t, V):
        return CV(k, t.index)
    return CA(k, db_to_compressed(t.fun), db_to_compressed(t.arg))


def compressed_to_db(t: CompTerm) -> DbTerm:
    """Unfold the binder counts of a compressed term."""
    if isinstance(t, CV):
        r: DbTerm = V(t.n)
    else:
        r = A(compressed_to_db(t.x), compressed_to_db(t.y))
    for _ in range(t.k):
        r = L(r)
    return r


def compressed_to_std(t: CompTerm) -> StdTerm:
    return db_to_std(compressed_to_db(t))


def std_to_compressed(t: StdTerm) -> CompTerm:
    return db_to_compressed(std_to_db(t))

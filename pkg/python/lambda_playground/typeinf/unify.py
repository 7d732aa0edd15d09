"""
Unification of simple types with metavariables.

Types are binary trees (Leaf is the base type x, Node is the arrow) whose
leaves may also be metavariables. A Bindings object holds the current
substitution together with a trail, so enumerators can take a mark before
an alternative and undo back to it afterwards.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Union

from lambda_playground.terms.core import LEAF, Leaf, Node
from lambda_playground.terms.syntax import hole_name


@dataclass(frozen=True, slots=True)
class Meta:
    """Type metavariable."""
    ident: int


TypeExpr = Union[Leaf, Node, Meta]


class Bindings:
    """
    Substitution from metavariables to types, with an undo trail.

    Bindings are never overwritten; undo(mark) removes every binding made
    since mark() returned.
    """

    def __init__(self):
        self._map: Dict[int, TypeExpr] = {}
        self._trail: List[int] = []
        self._ids = itertools.count()

    def fresh(self) -> Meta:
        return Meta(next(self._ids))

    def walk(self, t: TypeExpr) -> TypeExpr:
        """Follow bindings until an unbound metavariable or a non-variable."""
        while isinstance(t, Meta):
            bound = self._map.get(t.ident)
            if bound is None:
                return t
            t = bound
        return t

    def bind(self, m: Meta, t: TypeExpr):
        self._map[m.ident] = t
        self._trail.append(m.ident)

    def mark(self) -> int:
        return len(self._trail)

    def undo(self, mark: int):
        while len(self._trail) > mark:
            del self._map[self._trail.pop()]

    def occurs(self, m: Meta, t: TypeExpr) -> bool:
        stack = [t]
        while stack:
            u = self.walk(stack.pop())
            if isinstance(u, Meta):
                if u.ident == m.ident:
                    return True
            elif isinstance(u, Node):
                stack.append(u.left)
                stack.append(u.right)
        return False

    def resolve(self, t: TypeExpr, _active: FrozenSet[int] = frozenset()) -> TypeExpr:
        """
        Apply the substitution everywhere in t.

        On cyclic bindings the metavariable closing a cycle is left in place.
        """
        if isinstance(t, Meta):
            if t.ident in _active:
                return t
            bound = self._map.get(t.ident)
            if bound is None:
                return t
            return self.resolve(bound, _active | {t.ident})
        if isinstance(t, Node):
            return Node(self.resolve(t.left, _active), self.resolve(t.right, _active))
        return t

    def __len__(self) -> int:
        return len(self._map)


def unify(a: TypeExpr, b: TypeExpr, bindings: Bindings,
          occurs_check: bool = True) -> Optional[Bindings]:
    """
    Extend bindings with a most general unifier of a and b.

    Without the occurs check unification works on rational trees: a pair
    already under comparison is assumed equal, so cyclic bindings terminate.

    Args:
        a, b: Types to unify
        bindings: Substitution to extend in place
        occurs_check: Reject bindings of a metavariable to a type containing it

    Returns:
        bindings on success; None on failure, with bindings left as they were
    """
    mark = bindings.mark()
    if _unify(a, b, bindings, occurs_check):
        return bindings
    bindings.undo(mark)
    return None


def _unify(a: TypeExpr, b: TypeExpr, bs: Bindings, occurs_check: bool) -> bool:
    seen = set()
    stack = [(a, b)]
    while stack:
        a, b = stack.pop()
        if not occurs_check:
            if (a, b) in seen:
                continue
            seen.add((a, b))
        a = bs.walk(a)
        b = bs.walk(b)
        if a is b:
            continue
        if isinstance(a, Meta):
            if isinstance(b, Meta) and a.ident == b.ident:
                continue
            if occurs_check and bs.occurs(a, b):
                return False
            bs.bind(a, b)
        elif isinstance(b, Meta):
            if occurs_check and bs.occurs(b, a):
                return False
            bs.bind(b, a)
        elif isinstance(a, Node) and isinstance(b, Node):
            stack.append((a.right, b.right))
            stack.append((a.left, b.left))
        elif not (isinstance(a, Leaf) and isinstance(b, Leaf)):
            return False
    return True


def freshen(t: TypeExpr, bindings: Bindings, renaming: Dict[int, Meta] = None) -> TypeExpr:
    """Copy a type scheme, giving its metavariables fresh names."""
    if renaming is None:
        renaming = {}
    if isinstance(t, Meta):
        if t.ident not in renaming:
            renaming[t.ident] = bindings.fresh()
        return renaming[t.ident]
    if isinstance(t, Node):
        return Node(freshen(t.left, bindings, renaming), freshen(t.right, bindings, renaming))
    return t


def instance_of(ty: TypeExpr, scheme: TypeExpr, bindings: Bindings = None) -> bool:
    """
    True iff ty unifies with a fresh copy of scheme.

    For a ground ty this holds exactly when ty is an instance of scheme.
    The bindings are left as they were.
    """
    bs = bindings if bindings is not None else Bindings()
    mark = bs.mark()
    found = unify(freshen(scheme, bs), ty, bs) is not None
    bs.undo(mark)
    return found


def bind_base(t: TypeExpr, bindings: Bindings = None) -> Node:
    """Replace every metavariable of t (after substitution) by the base type x."""
    if bindings is not None:
        t = bindings.resolve(t)
    if isinstance(t, Node):
        return Node(bind_base(t.left), bind_base(t.right))
    return LEAF


def print_type(t: TypeExpr, bindings: Bindings = None) -> str:
    """
    Render a type; metavariables are named A, B, C, ... by first occurrence.

    Compound children of an arrow are always parenthesized.
    """
    if bindings is not None:
        t = bindings.resolve(t)
    names: Dict[int, str] = {}
    out: List[str] = []

    def emit(u: TypeExpr, wrap: bool):
        if isinstance(u, Meta):
            if u.ident not in names:
                names[u.ident] = hole_name(len(names))
            out.append(names[u.ident])
        elif isinstance(u, Leaf):
            out.append("x")
        else:
            if wrap:
                out.append("(")
            emit(u.left, True)
            out.append(">")
            emit(u.right, True)
            if wrap:
                out.append(")")

    emit(t, False)
    return "".join(out)

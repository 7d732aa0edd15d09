"""
Generation of simply-typed terms together with their types.

gen_typed interleaves term construction with type inference: every leaf
and lambda unifies its candidate type on the spot, so partial terms that
cannot be typed are abandoned before they grow. Bindings are undone when
an alternative is left, mirroring backtracking.
"""

import logging
from collections import defaultdict
from typing import Dict, Iterator, List, Optional, Tuple

from lambda_playground.terms.core import (
    A, BinTree, CompTerm, DbTerm, L, Node, SkTerm, V,
)
from lambda_playground.typeinf.infer import (
    infer_db, infer_sk, infer_sk_simple, try_infer, typable,
)
from lambda_playground.typeinf.unify import Bindings, TypeExpr, bind_base, instance_of, unify
from lambda_playground.generate.lambdas import gen_compressed, gen_db
from lambda_playground.generate.trees import EXACT, MODES, UPTO, gen_sk, gen_type

logger = logging.getLogger(__name__)

TypedTerm = Tuple[DbTerm, BinTree]


def _typed(ty: TypeExpr, ctx: List[TypeExpr], budget: int, bs: Bindings):
    # results are valid only until the consumer advances the generator
    for i, candidate in enumerate(ctx):
        mark = bs.mark()
        if unify(ty, candidate, bs) is not None:
            yield V(i), budget
            bs.undo(mark)
    if budget == 0:
        return
    arg = bs.fresh()
    for fun, b1 in _typed(Node(arg, ty), ctx, budget - 1, bs):
        for x, b2 in _typed(arg, ctx, b1, bs):
            yield A(fun, x), b2
    mark = bs.mark()
    dom, cod = bs.fresh(), bs.fresh()
    if unify(ty, Node(dom, cod), bs) is not None:
        for body, b1 in _typed(cod, [dom] + ctx, budget - 1, bs):
            yield L(body), b1
        bs.undo(mark)


def _run_typed(n: int, mode: str, goal: Optional[BinTree], free: int) -> Iterator[TypedTerm]:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")
    bs = Bindings()
    root = bs.fresh() if goal is None else goal
    ctx = [bs.fresh() for _ in range(free)]
    for term, left in _typed(root, ctx, n, bs):
        if mode == UPTO or left == 0:
            yield term, bind_base(root, bs)


def gen_typed(n: int, mode: str = EXACT, goal: BinTree = None) -> Iterator[TypedTerm]:
    """
    Closed simply-typed de Bruijn terms of size n with their types.

    Args:
        n: Size
        mode: "exact" or "upto"
        goal: Ground type to start from; the enumeration then yields the
            terms whose principal type can be instantiated to goal

    Returns:
        Iterator over (term, type) pairs
    """
    return _run_typed(n, mode, goal, 0)


def gen_typed_naive(n: int, mode: str = EXACT) -> Iterator[TypedTerm]:
    """Generate closed terms first, then keep the typable ones."""
    for term in gen_db(n, mode):
        ty = try_infer(infer_db, term)
        if ty is not None:
            yield term, ty


def gen_typed_with_free(n: int, max_free: int) -> Iterator[TypedTerm]:
    """
    Simply-typed terms of size n with up to max_free free indices.

    Each count of free indices 0..max_free is enumerated in turn, so a
    term with fewer free indices also shows up under larger counts.
    """
    for free in range(max_free + 1):
        yield from _run_typed(n, EXACT, None, free)


def _by_type(pairs, n: int):
    buckets: Dict[BinTree, List] = defaultdict(list)
    for term, ty in pairs:
        buckets[ty].append(term)
    for ty in gen_type(n):
        for term in buckets.get(ty, ()):
            yield term, ty


def gen_by_type(n: int) -> Iterator[TypedTerm]:
    """
    For each type of size n, the closed terms of size at most n having it.

    Types come in gen_type order; terms of one type in gen_typed order.
    """
    return _by_type(gen_typed(n, UPTO), n)


def gen_typed_sk(n: int, mode: str = EXACT) -> Iterator[Tuple[SkTerm, BinTree]]:
    for term in gen_sk(n, mode):
        ty = try_infer(infer_sk_simple, term)
        if ty is not None:
            yield term, ty


def gen_untypable_sk(n: int, mode: str = EXACT) -> Iterator[SkTerm]:
    for term in gen_sk(n, mode):
        if try_infer(infer_sk_simple, term) is None:
            yield term


def gen_by_type_sk(n: int) -> Iterator[Tuple[SkTerm, BinTree]]:
    """
    For each type of size n, the SK trees of size at most n having it.

    A tree has a ground type when that type is an instance of the tree's
    principal type, so one tree may show up under several types.
    """
    schemes = [(term, scheme) for term in gen_sk(n, UPTO)
               if (scheme := try_infer(infer_sk, term)) is not None]
    bs = Bindings()
    for ty in gen_type(n):
        for term, scheme in schemes:
            if instance_of(ty, scheme, bs):
                yield term, ty


def gen_typable(n: int, mode: str = EXACT) -> Iterator[CompTerm]:
    """Closed compressed terms of size n that have a simple type."""
    return filter(typable, gen_compressed(n, mode))

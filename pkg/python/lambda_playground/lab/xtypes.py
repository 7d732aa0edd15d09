"""
Binary trees read both as X-combinator terms and as their own types.
"""

import logging
from typing import Iterator, List, Tuple

import numpy as np
import pandas as pd

from lambda_playground.terms.core import BinTree, DbTerm, term_size
from lambda_playground.typeinf.infer import infer_x, principal_x, try_infer
from lambda_playground.typeinf.unify import Bindings, instance_of
from lambda_playground.reduce.combinators import x_to_db
from lambda_playground.generate.trees import gen_tree
from lambda_playground.treenat.ranking import rank_db
from lambda_playground.utils.tables import make_frame

logger = logging.getLogger(__name__)


def iter_type(t: BinTree, max_steps: int = 100) -> Tuple[List[BinTree], int]:
    """
    Infer the type of t, read it as a tree, and repeat.

    Stops at an untypable tree, at a type met before, or after max_steps.

    Returns:
        The types found in order and their number
    """
    types: List[BinTree] = []
    seen = set()
    while len(types) < max_steps:
        ty = try_infer(infer_x, t)
        if ty is None or ty in seen:
            break
        types.append(ty)
        seen.add(ty)
        t = ty
    return types, len(types)


def iter_stats(max_size: int, max_steps: int = 100) -> pd.DataFrame:
    """
    Averages over all trees of each size 0..max_size of the number of
    iterated-type steps and of the mean size of the start and its types.
    """
    rows = []
    for n in range(max_size + 1):
        stats = []
        for t in gen_tree(n):
            types, steps = iter_type(t, max_steps)
            stats.append((steps, np.mean([term_size(u) for u in [t] + types])))
        avg_steps, avg_size = np.mean(stats, axis=0)
        logger.info(f"size {n}: {len(stats)} trees, {avg_steps:.4f} steps")
        rows.append((n, avg_steps, avg_size))
    return make_frame(rows, ["size", "avg_steps", "avg_size"]).round(4)


def gen_self_typed(n: int) -> Iterator[BinTree]:
    """X-trees of size n that are an instance of their own principal type."""
    bs = Bindings()
    for t in gen_tree(n):
        scheme = try_infer(principal_x, t)
        if scheme is not None and instance_of(t, scheme, bs):
            yield t


def inflate_b2b(t: DbTerm) -> DbTerm:
    """Read the rank of a term as an X-tree and expand it to lambda form."""
    return x_to_db(rank_db(t))


def inflate_t2t(t: BinTree) -> BinTree:
    """Expand an X-tree to lambda form and rank it back to a tree."""
    return rank_db(x_to_db(t))

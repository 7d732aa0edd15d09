"""
Orbits of the eval-or-successor map on de Bruijn terms.

A typable term that is not in normal form steps to its normal form; any
other term steps to the next term in tree-natural rank order.
"""

import logging
from typing import List

import pandas as pd

from lambda_playground.terms.core import DbTerm, term_size
from lambda_playground.terms.syntax import print_term
from lambda_playground.typeinf.infer import typable
from lambda_playground.reduce.debruijn import nf_reduce
from lambda_playground.treenat.arith import tree_succ
from lambda_playground.treenat.ranking import rank_db, unrank_db
from lambda_playground.utils.tables import make_frame

logger = logging.getLogger(__name__)


def eval_or_next(t: DbTerm, fuel=None) -> DbTerm:
    if typable(t):
        normal = nf_reduce(t, fuel)
        if normal != t:
            return normal
    return unrank_db(tree_succ(rank_db(t)))


def orbit(t: DbTerm, steps: int, fuel=None) -> List[DbTerm]:
    """
    Trajectory of t under eval_or_next.

    Args:
        t: Starting term
        steps: Number of steps taken
        fuel: Step bound for each normalization

    Returns:
        steps + 1 terms, the start first
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    terms = [t]
    for i in range(steps):
        terms.append(eval_or_next(terms[-1], fuel))
        logger.debug(f"step {i + 1}: size {term_size(terms[-1])}")
    return terms


def orbit_frame(terms: List[DbTerm]) -> pd.DataFrame:
    return make_frame(
        ((i, term_size(t), print_term(t)) for i, t in enumerate(terms)),
        ["step", "size", "term"],
    )

"""
Type-pattern queries over the typed generator.

Starting the generator from a ground goal type yields every term whose
principal type can be instantiated to the goal; a second inference pass
drops the ones whose principal type is strictly more general.
"""

import logging
from typing import Iterator, List

from lambda_playground.terms.core import BinTree, DbTerm, term_size
from lambda_playground.typeinf.infer import infer_db
from lambda_playground.generate.trees import EXACT, UPTO
from lambda_playground.generate.typed import gen_typed

logger = logging.getLogger(__name__)

GROWTH_MATCHES = ("exact", "instance")


def query_typed(n: int, ty: BinTree, mode: str = EXACT) -> Iterator[DbTerm]:
    """
    Closed terms of size n (or at most n) whose simple type is exactly ty.

    Args:
        n: Size
        ty: Ground type
        mode: "exact" or "upto"
    """
    for term, _ in gen_typed(n, mode, goal=ty):
        if infer_db(term) == ty:
            yield term


def type_siblings(t: DbTerm) -> Iterator[DbTerm]:
    """
    Terms no larger than t sharing its type, t included.

    Raises:
        UntypableError: t has no simple type
    """
    return query_typed(term_size(t), infer_db(t), UPTO)


def growth_sequence(ty: BinTree, max_size: int, match: str = "exact") -> List[int]:
    """
    Number of inhabitants of ty at each size 1..max_size.

    Args:
        ty: Ground type
        max_size: Largest size counted
        match: "exact" counts terms whose type is ty; "instance" counts terms
            whose principal type has ty as an instance

    Returns:
        One count per size
    """
    if match not in GROWTH_MATCHES:
        raise ValueError(f"unknown match {match!r}, expected one of {GROWTH_MATCHES}")
    counts = []
    for n in range(1, max_size + 1):
        if match == "exact":
            count = sum(1 for _ in query_typed(n, ty))
        else:
            count = sum(1 for _ in gen_typed(n, EXACT, goal=ty))
        logger.debug(f"size {n}: {count} inhabitants")
        counts.append(count)
    return counts

"""
Censuses of typed terms and densities of typable combinator trees.

Per-size work is done by module-level functions so it can be sharded over
ray workers; counts are merged in size order.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Tuple

import pandas as pd

from lambda_playground.terms.syntax import print_term
from lambda_playground.typeinf.infer import typable_sk, typable_x, useless_type
from lambda_playground.generate.trees import gen_sk, gen_tree
from lambda_playground.generate.typed import gen_typed
from lambda_playground.utils.parallel import map_sizes
from lambda_playground.utils.tables import make_frame

logger = logging.getLogger(__name__)


@dataclass
class CensusRow:
    """Type counts of the closed typed terms of one size, or of all sizes up to it."""
    size: int
    scope: str
    distinct_types: int
    terms: int
    top_types: List[Tuple[str, int]] = field(default_factory=list)

    @property
    def ratio(self) -> float:
        return self.distinct_types / self.terms if self.terms else 0.0


def _type_counts(n: int) -> Counter:
    counts = Counter(print_term(ty) for _, ty in gen_typed(n))
    logger.info(f"size {n}: {sum(counts.values())} terms, {len(counts)} types")
    return counts


def _row(size: int, scope: str, counts: Counter, top_k: int) -> CensusRow:
    return CensusRow(size, scope, len(counts), sum(counts.values()),
                     counts.most_common(top_k))


def type_census(max_size: int, top_k: int = 2, jobs: int = 1) -> List[CensusRow]:
    """
    Distinct types and term counts for sizes 1..max_size.

    Args:
        max_size: Largest term size
        top_k: Number of most frequent types kept per row
        jobs: Ray workers used for the per-size counts

    Returns:
        One "exact" row per size followed by the cumulative "upto" row
    """
    if max_size < 1:
        raise ValueError("census needs max_size >= 1")
    per_size = map_sizes(_type_counts, range(1, max_size + 1), jobs)
    rows = [_row(n, "exact", c, top_k) for n, c in enumerate(per_size, start=1)]
    total: Counter = Counter()
    for counts in per_size:
        total.update(counts)
    rows.append(_row(max_size, "upto", total, top_k))
    return rows


def census_frame(rows: List[CensusRow]) -> pd.DataFrame:
    return make_frame(
        ((r.size, r.scope, r.distinct_types, r.terms, round(r.ratio, 4),
          " ".join(f"{count}:{ty}" for ty, count in r.top_types))
         for r in rows),
        ["size", "scope", "types", "terms", "ratio", "top_types"],
    )


def _sk_row(n: int) -> Tuple[int, int, int]:
    typed = total = 0
    for t in gen_sk(n):
        total += 1
        typed += typable_sk(t)
    logger.info(f"SK size {n}: {typed}/{total} typable")
    return n, typed, total


def _x_row(n: int) -> Tuple[int, int, int]:
    typed = total = 0
    for t in gen_tree(n):
        total += 1
        typed += typable_x(t)
    logger.info(f"X size {n}: {typed}/{total} typable")
    return n, typed, total


def _density_frame(rows) -> pd.DataFrame:
    df = make_frame(rows, ["size", "typed", "total"])
    df["ratio"] = (df["typed"] / df["total"]).round(4)
    return df


def sk_density(max_size: int, jobs: int = 1) -> pd.DataFrame:
    """Typable SK trees among all SK trees, sizes 0..max_size."""
    return _density_frame(map_sizes(_sk_row, range(max_size + 1), jobs))


def x_density(max_size: int, jobs: int = 1) -> pd.DataFrame:
    """Typable X-combinator trees among all binary trees, sizes 0..max_size."""
    return _density_frame(map_sizes(_x_row, range(max_size + 1), jobs))


def _useless_row(n: int) -> Tuple[int, int, int, int]:
    total = typed = accepted = 0
    for t in gen_sk(n):
        total += 1
        typed += typable_sk(t)
        useless_type(t)
        accepted += 1
    return n, typed, accepted, total


def useless_counts(max_size: int) -> pd.DataFrame:
    """
    SK trees typed with and without the occurs check, sizes 0..max_size.

    Without the occurs check every tree receives a type, so `accepted`
    always equals `total`.
    """
    return make_frame(map(_useless_row, range(max_size + 1)),
                      ["size", "typed", "accepted", "total"])

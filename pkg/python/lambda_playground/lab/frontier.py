"""
Well-typed frontier and typeless trunk of SK trees.

The frontier is the list of maximal typable subtrees. Cutting them out
leaves a trunk whose leaves are numbered holes; grafting the frontier back
into the holes restores the tree.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np
import pandas as pd

from lambda_playground.terms.core import Ap, Atom, Hole, SkTerm, term_size
from lambda_playground.typeinf.infer import typable_sk
from lambda_playground.reduce.combinators import eval_sk
from lambda_playground.generate.trees import gen_sk
from lambda_playground.utils.tables import make_frame

logger = logging.getLogger(__name__)

Equation = Tuple[int, SkTerm]


@dataclass(frozen=True)
class FrontierDecomposition:
    trunk: SkTerm
    equations: Tuple[Equation, ...]

    def members(self) -> List[SkTerm]:
        return [member for _, member in self.equations]

    def graft(self) -> SkTerm:
        return fuse_frontier(self.trunk, self.equations)

    def trunk_size(self) -> int:
        return term_size(self.trunk)

    def frontier_size(self) -> int:
        return sum(term_size(m) for m in self.members())


def well_typed_frontier(t: SkTerm) -> FrontierDecomposition:
    """
    Split t into its typeless trunk and its well-typed frontier.

    Holes are numbered in pre-order. A typable t gives a single-hole trunk.
    """
    equations: List[Equation] = []

    def cut(u: SkTerm) -> SkTerm:
        if typable_sk(u):
            hole = Hole(len(equations))
            equations.append((hole.ident, u))
            return hole
        return Ap(cut(u.left), cut(u.right))

    trunk = cut(t)
    return FrontierDecomposition(trunk, tuple(equations))


def extract_frontier(t: SkTerm) -> List[SkTerm]:
    return well_typed_frontier(t).members()


def fuse_frontier(trunk: SkTerm, equations: Sequence[Equation]) -> SkTerm:
    """Replace every hole of the trunk by the subtree its equation gives."""
    fill: Dict[int, SkTerm] = dict(equations)

    def graft(u: SkTerm) -> SkTerm:
        if isinstance(u, Hole):
            return fill.get(u.ident, u)
        if isinstance(u, Atom):
            return u
        return Ap(graft(u.left), graft(u.right))

    return graft(trunk)


def simplify_sk(t: SkTerm, fuel=None) -> SkTerm:
    """
    Normalize every member of the frontier and graft the results back.

    Members are typable, so their normalization terminates even when t
    itself has no normal form.
    """
    dec = well_typed_frontier(t)
    normal = [(ident, eval_sk(member, fuel)) for ident, member in dec.equations]
    return fuse_frontier(dec.trunk, normal)


def frontier_stats(max_size: int) -> pd.DataFrame:
    """
    Average trunk and frontier sizes over all SK trees of sizes 1..max_size.

    Returns:
        Frame with columns size, avg_trunk, avg_frontier, trunk_pct, frontier_pct
    """
    rows = []
    for n in range(1, max_size + 1):
        sizes = np.array([
            (dec.trunk_size(), dec.frontier_size())
            for dec in map(well_typed_frontier, gen_sk(n))
        ])
        trunk, front = sizes.mean(axis=0)
        logger.info(f"size {n}: {len(sizes)} trees, trunk {trunk:.2f}, frontier {front:.2f}")
        rows.append((n, trunk, front, 100 * trunk / n, 100 * front / n))
    df = make_frame(rows, ["size", "avg_trunk", "avg_frontier", "trunk_pct", "frontier_pct"])
    return df.round(4)

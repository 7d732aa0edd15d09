"""
Ranking and unranking of compressed de Bruijn terms.

A term splits into its Catalan skeleton (the application structure, as a
binary tree) and the list of labels met depth-first: two per leaf (binder
count, index) and one per application (binder count). The rank pairs the
skeleton's Catalan rank with the Cantor rank of the labels.
"""

import logging
from typing import Callable, Iterator, List, Sequence, Tuple

import numpy as np

from lambda_playground.errors import ContractError, NotFoundError, UnbalancedError
from lambda_playground.terms.core import (
    BinTree, CA, CompTerm, CV, LEAF, Leaf, Node, is_closed,
)
from lambda_playground.typeinf.infer import typable
from lambda_playground.codec.cantor import from_cantor, to_cantor
from lambda_playground.codec.catalan import (
    ParenWord, parens_to_tree, rank_catalan, tree_to_parens, unrank_catalan,
)

logger = logging.getLogger(__name__)

KINDS = ("open", "closed", "typed")


def _skeleton(t: CompTerm, labels: List[int]) -> BinTree:
    if isinstance(t, CV):
        labels.extend((t.k, t.n))
        return LEAF
    labels.append(t.k)
    left = _skeleton(t.x, labels)
    return Node(left, _skeleton(t.y, labels))


def to_skel(t: CompTerm) -> Tuple[ParenWord, List[int]]:
    """Split a term into its skeleton's parentheses word and its labels."""
    labels: List[int] = []
    skeleton = _skeleton(t, labels)
    return tree_to_parens(skeleton), labels


def from_skel(word: Sequence[int], labels: Sequence[int]) -> CompTerm:
    """
    Rebuild a term from a skeleton word and its labels.

    Raises:
        UnbalancedError: the labels do not fit the skeleton
    """
    skeleton = parens_to_tree(word)
    pos = 0

    def take() -> int:
        nonlocal pos
        if pos >= len(labels):
            raise UnbalancedError("too few labels for the skeleton")
        pos += 1
        return labels[pos - 1]

    def build(s: BinTree) -> CompTerm:
        if isinstance(s, Leaf):
            k = take()
            return CV(k, take())
        k = take()
        x = build(s.left)
        return CA(k, x, build(s.right))

    term = build(skeleton)
    if pos != len(labels):
        raise UnbalancedError("too many labels for the skeleton")
    return term


def rank_term(t: CompTerm) -> int:
    """Natural number of a compressed term, open terms included."""
    word, labels = to_skel(t)
    return from_cantor([rank_catalan(word), from_cantor(labels)])


def unrank_term(rank: int) -> CompTerm:
    """The compressed term of the given rank."""
    cat_code, vars_code = to_cantor(2, rank)
    word = unrank_catalan(cat_code)
    inner = (len(word) - 2) // 2
    return from_skel(word, to_cantor(3 * inner + 2, vars_code))


def closed_typable(t: CompTerm) -> bool:
    return is_closed(t) and typable(t)


FILTERS = {
    "open": lambda t: True,
    "closed": is_closed,
    "typed": closed_typable,
}


def ogen(max_rank: int) -> Iterator[CompTerm]:
    """Terms of ranks 0..max_rank."""
    return map(unrank_term, range(max_rank + 1))


def cgen(max_rank: int) -> Iterator[CompTerm]:
    return filter(is_closed, ogen(max_rank))


def tgen(max_rank: int) -> Iterator[CompTerm]:
    return filter(typable, cgen(max_rank))


def random_below(bits: int, rng: np.random.Generator) -> int:
    """Uniform natural below 2**bits, of any size."""
    nbytes = (bits + 7) // 8
    return int.from_bytes(rng.bytes(nbytes), "big") >> (8 * nbytes - bits)


def ran_term(kind: str, bits: int, seed: int = None,
             rng: np.random.Generator = None) -> CompTerm:
    """
    Random term from unranking a random natural.

    Draws n uniformly in [2**bits, 2**(bits+1)) and returns the first term
    of rank n, n+1, ..., n + 2**bits passing the filter of kind.

    Args:
        kind: "open", "closed" or "typed" (closed and typable)
        bits: Bit size of the drawn rank
        seed: Seed of a fresh generator, used when rng is not given
        rng: numpy random generator

    Raises:
        NotFoundError: no term in the window passes the filter
    """
    if kind not in FILTERS:
        raise ValueError(f"unknown kind {kind!r}, expected one of {KINDS}")
    if bits < 1:
        raise ContractError("bits must be positive")
    if rng is None:
        rng = np.random.default_rng(seed)
    accept: Callable[[CompTerm], bool] = FILTERS[kind]
    width = 1 << bits
    start = width + random_below(bits, rng)
    for rank in range(start, start + width + 1):
        term = unrank_term(rank)
        if accept(term):
            logger.debug(f"rank {rank} accepted after {rank - start + 1} draws")
            return term
    raise NotFoundError(f"no {kind} term among ranks {start}..{start + width}")


def ran_open(bits: int, seed: int = None) -> CompTerm:
    return ran_term("open", bits, seed)


def ran_closed(bits: int, seed: int = None) -> CompTerm:
    return ran_term("closed", bits, seed)


def ran_typed(bits: int, seed: int = None) -> CompTerm:
    return ran_term("typed", bits, seed)

"""
Registry of the enumerable families, by name.

Each family knows its smallest meaningful size and how to enumerate its
members of a given size. Members are terms, or (term, annotation) pairs
for the families that produce a type or a code along with each term.
"""

from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Dict, Iterator, Optional

from lambda_playground.errors import DomainError
from lambda_playground.typeinf.infer import typable_x
from lambda_playground.generate.trees import (
    EXACT, UPTO, gen_motzkin, gen_sk, gen_tree, gen_tree_by_depth,
)
from lambda_playground.generate.lambdas import (
    gen_affine, gen_blc, gen_bounded_unary, gen_compressed, gen_db,
    gen_lambda_std, gen_linear, gen_nf, gen_standard,
)
from lambda_playground.generate.typed import (
    gen_by_type, gen_by_type_sk, gen_typable, gen_typed, gen_typed_sk,
    gen_typed_with_free, gen_untypable_sk,
)


@dataclass(frozen=True)
class Family:
    name: str
    min_size: int
    enumerate: Callable[..., Iterator[Any]]
    pairs: bool = False
    has_upto: bool = True
    options: tuple = field(default=())


def _x_typed(n: int, mode: str) -> Iterator[Any]:
    return filter(typable_x, gen_tree(n, mode))


def _exact_only(fn: Callable[[int], Iterator[Any]], n: int, mode: str) -> Iterator[Any]:
    return fn(n)


FAMILIES: Dict[str, Family] = {f.name: f for f in (
    Family("tree", 0, gen_tree),
    Family("depth", 0, partial(_exact_only, gen_tree_by_depth), has_upto=False),
    Family("motzkin", 1, gen_motzkin),
    Family("schroder", 0, partial(gen_motzkin, schroder=True)),
    Family("lambda", 1, gen_lambda_std),
    Family("db", 1, gen_db),
    Family("db-varcost", 1, partial(gen_db, variables_cost=True)),
    Family("compressed", 1, gen_compressed),
    Family("standard", 1, gen_standard),
    Family("nf", 1, gen_nf),
    Family("linear", 1, gen_linear),
    Family("affine", 1, gen_affine),
    Family("bounded", 1, lambda n, mode, height=1: gen_bounded_unary(height, n, mode),
           options=("height",)),
    Family("blc", 2, partial(_exact_only, gen_blc), pairs=True, has_upto=False),
    Family("typable", 1, gen_typable),
    Family("typed", 1, gen_typed, pairs=True),
    Family("typed-free", 1, lambda n, mode, free=1: gen_typed_with_free(n, free),
           pairs=True, has_upto=False, options=("free",)),
    Family("by-type", 1, partial(_exact_only, gen_by_type), pairs=True, has_upto=False),
    Family("sk", 0, gen_sk),
    Family("sk-typed", 0, gen_typed_sk, pairs=True),
    Family("sk-untypable", 0, gen_untypable_sk),
    Family("by-type-sk", 1, partial(_exact_only, gen_by_type_sk), pairs=True,
           has_upto=False),
    Family("x-typed", 0, _x_typed),
)}


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise DomainError(f"unknown family {name!r}, expected one of {sorted(FAMILIES)}")


def family_members(name: str, n: int, mode: str = EXACT,
                   options: Optional[Dict[str, int]] = None) -> Iterator[Any]:
    """
    Members of a family at size n.

    Args:
        name: Family name, a key of FAMILIES
        n: Size (bits for blc, depth for depth)
        mode: "exact" or "upto"
        options: Family options such as height or free

    Raises:
        DomainError: unknown family, or upto mode for a family without it
    """
    family = get_family(name)
    if mode == UPTO and not family.has_upto:
        raise DomainError(f"family {name} has no up-to-size enumeration")
    extra = {k: v for k, v in (options or {}).items()
             if k in family.options and v is not None}
    return family.enumerate(n, mode, **extra)


def count_family(name: str, n: int, options: Optional[Dict[str, int]] = None) -> int:
    """Number of members of exact size n."""
    return sum(1 for _ in family_members(name, n, EXACT, options))

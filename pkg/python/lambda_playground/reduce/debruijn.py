"""
Normal-order reduction of de Bruijn terms.

Substitution and index shifting follow the usual de Bruijn discipline;
normal order is obtained by reducing to weak head normal form first and
then normalizing under binders and in argument positions.
"""

import logging
from typing import Optional

from lambda_playground.errors import ContractError, FuelExhausted
from lambda_playground.terms.core import (
    A, CompTerm, DbTerm, L, StdTerm, V, compressed_to_db, db_to_compressed,
    db_to_std, std_to_db,
)

logger = logging.getLogger(__name__)


class Fuel:
    """
    Step counter with an optional bound.

    Args:
        limit: Maximum number of steps, None for unbounded
    """

    def __init__(self, limit: Optional[int] = None):
        self.limit = limit
        self.steps = 0

    def spend(self):
        self.steps += 1
        if self.limit is not None and self.steps > self.limit:
            raise FuelExhausted(self.limit)


def as_fuel(fuel) -> Fuel:
    """Accept a Fuel, an int limit or None."""
    if isinstance(fuel, Fuel):
        return fuel
    return Fuel(fuel)


def shift(inc: int, cutoff: int, t: DbTerm) -> DbTerm:
    """Add inc to every index of t at or above cutoff (cutoff grows under binders)."""
    if isinstance(t, V):
        return V(t.index + inc) if t.index >= cutoff else t
    if isinstance(t, L):
        return L(shift(inc, cutoff + 1, t.body))
    return A(shift(inc, cutoff, t.fun), shift(inc, cutoff, t.arg))


def subst(body: DbTerm, level: int, arg: DbTerm) -> DbTerm:
    """
    Substitute arg for index level in body, removing that binder level.

    Indices above level are decremented; the substituted copy of arg has
    its free indices shifted by level.
    """
    if isinstance(body, V):
        if body.index > level:
            return V(body.index - 1)
        if body.index < level:
            return body
        return shift(level, 0, arg)
    if isinstance(body, L):
        return L(subst(body.body, level + 1, arg))
    return A(subst(body.fun, level, arg), subst(body.arg, level, arg))


def beta(abstraction: DbTerm, arg: DbTerm) -> DbTerm:
    """Contract the redex (abstraction arg)."""
    if not isinstance(abstraction, L):
        raise ContractError("beta expects a lambda in function position")
    return subst(abstraction.body, 0, arg)


def whnf(t: DbTerm, fuel=None) -> DbTerm:
    """
    Weak head normal form.

    Args:
        t: de Bruijn term
        fuel: Fuel, beta-step limit, or None

    Raises:
        FuelExhausted: step limit reached
    """
    fuel = as_fuel(fuel)
    while isinstance(t, A):
        head = whnf(t.fun, fuel)
        if not isinstance(head, L):
            return A(head, t.arg)
        fuel.spend()
        t = beta(head, t.arg)
    return t


def nf_reduce(t: DbTerm, fuel=None) -> DbTerm:
    """
    Normal form by normal-order reduction.

    Args:
        t: de Bruijn term
        fuel: Fuel, beta-step limit, or None

    Returns:
        The beta-normal form of t

    Raises:
        FuelExhausted: step limit reached before a normal form
    """
    fuel = as_fuel(fuel)
    while True:
        if isinstance(t, V):
            return t
        if isinstance(t, L):
            return L(nf_reduce(t.body, fuel))
        head = whnf(t.fun, fuel)
        if isinstance(head, L):
            fuel.spend()
            t = beta(head, t.arg)
        elif isinstance(head, V):
            return A(head, nf_reduce(t.arg, fuel))
        else:
            return A(nf_reduce(head, fuel), nf_reduce(t.arg, fuel))


eval_db = nf_reduce


def eval_std(t: StdTerm, fuel=None) -> StdTerm:
    return db_to_std(nf_reduce(std_to_db(t), fuel))


def eval_compressed(t: CompTerm, fuel=None) -> CompTerm:
    return db_to_compressed(nf_reduce(compressed_to_db(t), fuel))

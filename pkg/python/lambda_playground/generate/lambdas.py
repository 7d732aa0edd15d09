"""
Enumeration of closed lambda terms and their sub-families.

Sizes count lambda and application nodes; variables are free unless stated
otherwise. Indices at a leaf are tried in ascending order.
"""

import logging
from typing import Iterator, List, Sequence, Tuple

from lambda_playground.errors import TermSyntaxError
from lambda_playground.terms.core import (
    A, App, CompTerm, DbTerm, L, Lam, StdTerm, V, Var, db_to_compressed,
    db_to_std, std_to_compressed,
)
from lambda_playground.generate.trees import EXACT, Budgeted, select

logger = logging.getLogger(__name__)


def _lambda(names: Tuple[str, ...], budget: int, fresh: int):
    for name in names:
        yield Var(name), budget, fresh
    if budget > 0:
        name = f"x{fresh}"
        for body, b1, f1 in _lambda((name,) + names, budget - 1, fresh + 1):
            yield Lam(name, body), b1, f1
        for fun, b1, f1 in _lambda(names, budget - 1, fresh):
            for arg, b2, f2 in _lambda(names, b1, f1):
                yield App(fun, arg), b2, f2


def gen_lambda_std(n: int, mode: str = EXACT) -> Iterator[StdTerm]:
    """
    Closed named terms of size n, built directly with binder names.

    A leaf picks one of the enclosing binders, innermost first.
    """
    return select(((t, b) for t, b, _ in _lambda((), n, 0)), mode)


def _db(depth: int, budget: int, var_cost: int) -> Budgeted:
    if depth > 0 and budget >= var_cost:
        for i in range(depth):
            yield V(i), budget - var_cost
    if budget > 0:
        for body, b1 in _db(depth + 1, budget - 1, var_cost):
            yield L(body), b1
        for fun, b1 in _db(depth, budget - 1, var_cost):
            for arg, b2 in _db(depth, b1, var_cost):
                yield A(fun, arg), b2


def gen_db(n: int, mode: str = EXACT, variables_cost: bool = False) -> Iterator[DbTerm]:
    """
    Closed de Bruijn terms with n lambda and application nodes.

    Args:
        n: Size
        mode: "exact" or "upto"
        variables_cost: Also charge one unit per variable leaf

    Returns:
        Iterator over terms; variables before lambdas before applications
    """
    return select(_db(0, n, 1 if variables_cost else 0), mode)


def gen_compressed(n: int, mode: str = EXACT) -> Iterator[CompTerm]:
    return map(db_to_compressed, gen_db(n, mode))


def gen_standard(n: int, mode: str = EXACT) -> Iterator[StdTerm]:
    return map(db_to_std, gen_db(n, mode))


def _nf(depth: int, budget: int, shape: str = "any") -> Budgeted:
    # shape restricts the head: "var" for an index, "app" for an application
    if shape in ("any", "var") and depth > 0:
        for i in range(depth):
            yield V(i), budget
    if budget == 0 or shape == "var":
        return
    if shape == "any":
        for body, b1 in _nf(depth + 1, budget - 1):
            yield L(body), b1
    for head in ("var", "app"):
        for fun, b1 in _nf(depth, budget - 1, head):
            for arg, b2 in _nf(depth, b1):
                yield A(fun, arg), b2


def gen_nf(n: int, mode: str = EXACT) -> Iterator[CompTerm]:
    """Closed beta-normal forms of size n, in compressed form."""
    return map(db_to_compressed, select(_nf(0, n), mode))


def _splits(names: Sequence[str]):
    if not names:
        yield [], []
        return
    head = names[0]
    for ys, zs in _splits(names[1:]):
        yield [head] + ys, zs
        yield ys, [head] + zs


def _linear(names: List[str], budget: int, fresh: int, affine: bool):
    if (affine and names) or len(names) == 1:
        yield Var(names[0]), budget, fresh
    if budget > 0:
        name = f"x{fresh}"
        for body, b1, f1 in _linear([name] + names, budget - 1, fresh + 1, affine):
            yield Lam(name, body), b1, f1
        for left, right in _splits(names):
            for fun, b1, f1 in _linear(left, budget - 1, fresh, affine):
                for arg, b2, f2 in _linear(right, b1, f1, affine):
                    yield App(fun, arg), b2, f2


def gen_linear(n: int, mode: str = EXACT) -> Iterator[CompTerm]:
    """
    Closed linear terms: each binder is used exactly once.

    At an application the variables in scope are split between the two
    branches.
    """
    stream = ((t, b) for t, b, _ in _linear([], n, 0, affine=False))
    return map(std_to_compressed, select(stream, mode))


def gen_affine(n: int, mode: str = EXACT) -> Iterator[CompTerm]:
    """Closed affine terms: each binder is used at most once."""
    stream = ((t, b) for t, b, _ in _linear([], n, 0, affine=True))
    return map(std_to_compressed, select(stream, mode))


def _bounded(depth: int, budget: int, height: int) -> Budgeted:
    if depth > 0:
        for i in range(depth):
            yield V(i), budget
    if budget > 0:
        if height > 0:
            for body, b1 in _bounded(depth + 1, budget - 1, height - 1):
                yield L(body), b1
        for fun, b1 in _bounded(depth, budget - 1, height):
            for arg, b2 in _bounded(depth, b1, height):
                yield A(fun, arg), b2


def gen_bounded_unary(height: int, n: int, mode: str = EXACT) -> Iterator[CompTerm]:
    """Closed terms of size n with at most height binders on any root-to-leaf path."""
    return map(db_to_compressed, select(_bounded(0, n, height), mode))


def _blc(depth: int, bits: int):
    # de Bruijn index i (1-based) is written as i ones and a zero
    for i in range(1, depth + 1):
        if i + 1 <= bits:
            yield V(i), [1] * i + [0], bits - i - 1
    if bits >= 2:
        for body, code, left in _blc(depth + 1, bits - 2):
            yield L(body), [0, 0] + code, left
        for fun, c1, b1 in _blc(depth, bits - 2):
            for arg, c2, b2 in _blc(depth, b1):
                yield A(fun, arg), [0, 1] + c1 + c2, b2


def gen_blc(bits: int) -> Iterator[Tuple[CompTerm, List[int]]]:
    """
    Closed terms whose binary lambda calculus code is exactly bits long.

    Lambdas are coded 00, applications 01 and the index i as i ones
    followed by a zero. Indices in the returned terms are 1-based, as in
    the code.

    Returns:
        Iterator over (term, code) pairs
    """
    for term, code, left in _blc(0, bits):
        if left == 0:
            yield db_to_compressed(term), code


def decode_blc(code: Sequence[int]) -> CompTerm:
    """
    Read a binary lambda calculus code back into a compressed term.

    Raises:
        TermSyntaxError: truncated code, trailing bits, or an index with no binder
    """
    pos = 0

    def bit() -> int:
        nonlocal pos
        if pos >= len(code):
            raise TermSyntaxError("truncated code", pos)
        b = code[pos]
        if b not in (0, 1):
            raise TermSyntaxError(f"not a bit: {b!r}", pos)
        pos += 1
        return b

    def term(depth: int) -> DbTerm:
        start = pos
        if bit() == 1:
            i = 1
            while bit() == 1:
                i += 1
            if i > depth:
                raise TermSyntaxError(f"index {i} has no binder", start)
            return V(i)
        if bit() == 0:
            return L(term(depth + 1))
        fun = term(depth)
        return A(fun, term(depth))

    result = term(0)
    if pos != len(code):
        raise TermSyntaxError("trailing bits", pos)
    return db_to_compressed(result)

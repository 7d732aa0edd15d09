"""
Lambda playground: generation, typing, reduction and ranking of lambda
terms, simple types and combinator trees.

Main package exports.
"""

__version__ = "1.0.0"

from lambda_playground.terms.syntax import parse_term, print_term
from lambda_playground.typeinf.infer import infer_db, infer_sk, infer_x
from lambda_playground.reduce.debruijn import nf_reduce
from lambda_playground.generate.typed import gen_typed
from lambda_playground.codec.terms import rank_term, unrank_term

__all__ = [
    "parse_term",
    "print_term",
    "infer_db",
    "infer_sk",
    "infer_x",
    "nf_reduce",
    "gen_typed",
    "rank_term",
    "unrank_term",
]

"""Term representations, grammars, sizes and notation bijections."""

from lambda_playground.terms.core import (
    A, Ap, App, Atom, Bin, BinTree, CA, CompTerm, CV, DbTerm, Hole, K, L,
    LEAF, Lam, Leaf, MotzkinTree, Node, S, SkTerm, StdTerm, U, U_LEAF, Un, V,
    Var, compressed_to_db, compressed_to_std, db_to_compressed, db_to_std,
    is_closed, is_normal, std_to_compressed, std_to_db, term_size,
)
from lambda_playground.terms.syntax import GRAMMARS, parse_term, print_term

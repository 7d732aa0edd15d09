"""Size-proportionate ranking and unranking of types and terms."""

from lambda_playground.codec.catalan import (
    binomial, catalan, parens_to_tree, rank_catalan, rank_type, t2p,
    tree_to_parens, unrank_catalan, unrank_type,
)
from lambda_playground.codec.cantor import (
    from_cantor, from_kset, list_to_set, set_to_list, to_cantor, to_kset,
)
from lambda_playground.codec.terms import (
    KINDS, cgen, closed_typable, from_skel, ogen, ran_closed, ran_open,
    ran_term, ran_typed, rank_term, tgen, to_skel, unrank_term,
)

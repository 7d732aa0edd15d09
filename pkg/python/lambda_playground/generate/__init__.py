"""Exhaustive size-bounded generators for terms, trees and types."""

from lambda_playground.generate.trees import (
    EXACT, MODES, UPTO, gen_motzkin, gen_sk, gen_tree, gen_tree_by_depth,
    gen_type, select,
)
from lambda_playground.generate.lambdas import (
    decode_blc, gen_affine, gen_blc, gen_bounded_unary, gen_compressed,
    gen_db, gen_lambda_std, gen_linear, gen_nf, gen_standard,
)
from lambda_playground.generate.typed import (
    gen_by_type, gen_by_type_sk, gen_typable, gen_typed, gen_typed_naive,
    gen_typed_sk, gen_typed_with_free, gen_untypable_sk,
)
from lambda_playground.generate.families import (
    FAMILIES, Family, count_family, family_members, get_family,
)

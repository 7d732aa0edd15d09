"""Normal-order reduction and combinator evaluators."""

from lambda_playground.reduce.debruijn import (
    Fuel, as_fuel, beta, eval_compressed, eval_db, eval_std, nf_reduce, shift,
    subst, whnf,
)
from lambda_playground.reduce.combinators import (
    K_DB, K_TREE, S_DB, S_TREE, SKK_TREE, X_DB, app_sk, app_x, eval_as_b,
    eval_as_t, eval_sk, eval_x, sk_to_db, x_to_db,
)

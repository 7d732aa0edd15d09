"""Unification and simple-type inference."""

from lambda_playground.typeinf.unify import (
    Bindings, Meta, TypeExpr, bind_base, freshen, instance_of, print_type, unify,
)
from lambda_playground.typeinf.infer import (
    infer_compressed, infer_db, infer_std, infer_sk, infer_sk_simple, infer_x,
    principal_db, principal_x, try_infer, typable, typable_sk, typable_x, useless_type,
)

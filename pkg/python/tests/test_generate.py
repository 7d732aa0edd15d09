"""
Unit tests for the size-bounded generators and the family registry.
"""

from collections import Counter

import pytest

from lambda_playground.errors import DomainError, TermSyntaxError
from lambda_playground.terms.core import (
    App, CV, Lam, Var, compressed_to_db, compressed_to_std, is_closed, is_normal,
    term_size,
)
from lambda_playground.terms.syntax import print_term
from lambda_playground.typeinf.infer import infer_db, typable_sk
from lambda_playground.generate.trees import (
    UPTO, gen_motzkin, gen_sk, gen_tree, gen_tree_by_depth, select,
)
from lambda_playground.generate.lambdas import (
    decode_blc, gen_affine, gen_blc, gen_bounded_unary, gen_compressed, gen_db,
    gen_lambda_std, gen_linear, gen_nf,
)
from lambda_playground.generate.typed import (
    gen_by_type, gen_by_type_sk, gen_typable, gen_typed, gen_typed_naive,
    gen_typed_sk, gen_typed_with_free, gen_untypable_sk,
)
from lambda_playground.generate.families import (
    FAMILIES, count_family, family_members, get_family,
)


def counts(gen, sizes, *args):
    return [sum(1 for _ in gen(n, *args)) for n in sizes]


def test_select_rejects_unknown_mode():
    with pytest.raises(ValueError):
        list(select(iter([]), "sideways"))


def test_binary_trees_are_catalan():
    assert counts(gen_tree, range(8)) == [1, 1, 2, 5, 14, 42, 132, 429]


def test_trees_by_depth():
    assert counts(lambda d: gen_tree_by_depth(d), range(5)) == [1, 2, 5, 26, 677]


def test_motzkin_counts():
    """Leaves cost one unit, so size n gives the Motzkin number M(n-1)."""
    assert counts(gen_motzkin, range(1, 8)) == [1, 1, 2, 4, 9, 21, 51]


def test_schroder_counts():
    assert [sum(1 for _ in gen_motzkin(n, schroder=True)) for n in range(5)] == [1, 2, 6, 22, 90]


def test_sk_totals():
    """2^(n+1) Catalan(n) SK trees of each size."""
    assert counts(gen_sk, range(5)) == [2, 4, 16, 80, 448]


def test_closed_db_counts():
    assert counts(gen_db, range(1, 8)) == [1, 3, 14, 82, 579, 4741, 43977]


@pytest.mark.slow
def test_closed_db_count_size_8():
    assert counts(gen_db, [8]) == [454283]


def test_named_and_compressed_generators_match_db():
    """Every closed-term generator enumerates the same family."""
    for n in range(1, 5):
        assert counts(gen_lambda_std, [n]) == counts(gen_db, [n])
        assert counts(gen_compressed, [n]) == counts(gen_db, [n])


def test_upto_is_cumulative():
    assert sum(1 for _ in gen_db(4, UPTO)) == 1 + 3 + 14 + 82


def test_db_terms_have_requested_size():
    for t in gen_db(4):
        assert term_size(t) == 4
        assert is_closed(t)


def test_variables_cost_variant():
    """Charging variables gives 0,1,2,4,13,42 terms at sizes 1..6."""
    assert [sum(1 for _ in gen_db(n, variables_cost=True)) for n in range(1, 7)] == \
        [0, 1, 2, 4, 13, 42]


def test_normal_forms_contain_no_redex():
    for n in range(1, 6):
        for t in gen_nf(n):
            assert is_normal(compressed_to_db(t))
        nf_count = sum(1 for t in gen_db(n) if is_normal(t))
        assert sum(1 for _ in gen_nf(n)) == nf_count


def _occurrences(t, name):
    if isinstance(t, Var):
        return int(t.name == name)
    if isinstance(t, Lam):
        return _occurrences(t.body, name)
    return _occurrences(t.fun, name) + _occurrences(t.arg, name)


def _binders(t):
    if isinstance(t, Lam):
        yield t
        yield from _binders(t.body)
    elif isinstance(t, App):
        yield from _binders(t.fun)
        yield from _binders(t.arg)


def test_linear_terms_use_each_binder_once():
    for n in range(1, 6):
        for t in map(compressed_to_std, gen_linear(n)):
            assert all(_occurrences(b.body, b.name) == 1 for b in _binders(t))


def test_affine_terms_use_each_binder_at_most_once():
    for n in range(1, 6):
        affine = [compressed_to_std(t) for t in gen_affine(n)]
        assert all(_occurrences(b.body, b.name) <= 1 for t in affine for b in _binders(t))
        assert len(affine) >= sum(1 for _ in gen_linear(n))


def test_first_linear_terms():
    assert [print_term(t) for t in gen_linear(1)] == ["v(1,0)"]
    assert [print_term(t) for t in gen_linear(2)] == []


def test_bounded_unary_height():
    """Height one allows a single binder per path."""
    terms = [print_term(t) for t in gen_bounded_unary(1, 2)]
    assert terms == ["a(1,v(0,0),v(0,0))"]
    assert counts(lambda n: gen_bounded_unary(10, n), range(1, 5)) == counts(gen_db, range(1, 5))


def test_blc_codes():
    pairs = list(gen_blc(8))
    assert print_term(pairs[0][0]) == "v(3,1)"
    assert pairs[0][1] == [0, 0, 0, 0, 0, 0, 1, 0]
    assert print_term(pairs[1][0]) == "a(1,v(0,1),v(0,1))"
    assert pairs[1][1] == [0, 0, 0, 1, 1, 0, 1, 0]
    for term, code in pairs:
        assert decode_blc(code) == term


def test_decode_blc_errors():
    assert decode_blc([0, 0, 1, 0]) == CV(1, 1)
    with pytest.raises(TermSyntaxError):
        decode_blc([0, 0, 1])
    with pytest.raises(TermSyntaxError):
        decode_blc([1, 0])
    with pytest.raises(TermSyntaxError):
        decode_blc([0, 0, 1, 0, 0])


def test_typed_counts():
    assert counts(gen_typed, range(1, 8)) == [1, 2, 9, 40, 238, 1564, 11807]


@pytest.mark.slow
def test_typed_count_size_8():
    assert counts(gen_typed, [8]) == [98529]


def test_typed_size_3_listing():
    pairs = [(print_term(t), print_term(ty)) for t, ty in gen_typed(3)]
    assert len(pairs) == 9
    assert pairs[0] == ("a(l(v(0)),l(v(0)))", "x>x")


def test_typed_types_are_principal():
    """The type paired with each term is the one inference finds."""
    for t, ty in gen_typed(5, UPTO):
        assert infer_db(t) == ty, f"wrong type for {print_term(t)}"


def test_typed_agrees_with_generate_then_filter():
    for n in range(1, 6):
        fast = Counter((print_term(t), print_term(ty)) for t, ty in gen_typed(n))
        naive = Counter((print_term(t), print_term(ty)) for t, ty in gen_typed_naive(n))
        assert fast == naive, f"generators disagree at size {n}"


def test_typable_compressed_counts():
    assert counts(gen_typable, range(1, 6)) == [1, 2, 9, 40, 238]


def test_typed_with_free_indices():
    """With no free index allowed only closed terms show up."""
    assert sum(1 for _ in gen_typed_with_free(3, 0)) == 9
    assert sum(1 for _ in gen_typed_with_free(0, 1)) == 1


def test_by_type_counts():
    assert [sum(1 for _ in gen_by_type(n)) for n in range(1, 7)] == [1, 2, 6, 18, 84, 376]


def test_by_type_sk_counts():
    assert [sum(1 for _ in gen_by_type_sk(n)) for n in range(1, 5)] == [0, 3, 29, 250]


def test_by_type_sk_size_2_listing():
    pairs = [(print_term(t), print_term(ty)) for t, ty in gen_by_type_sk(2)]
    assert pairs == [("k", "x>(x>x)"), ("k*k*k", "x>(x>x)"), ("k*k*s", "x>(x>x)")]


def test_by_type_sk_takes_instances_of_principal_types(sk):
    """s*k*k has type A>A; among types of size 3 only (x>x)>(x>x) has that shape."""
    found = [print_term(ty) for t, ty in gen_by_type_sk(3) if t == sk("s*k*k")]
    assert found == ["(x>x)>(x>x)"]


def test_by_type_terms_have_their_type():
    for t, ty in gen_by_type(4):
        assert infer_db(t) == ty
        assert term_size(ty) == 4


def test_typed_sk_density_counts():
    assert counts(gen_typed_sk, range(6)) == [2, 4, 14, 67, 337, 1867]


def test_untypable_sk_upto_two():
    assert [print_term(t) for t in gen_untypable_sk(2, UPTO)] == ["s*s*k", "s*s*s"]
    assert all(not typable_sk(t) for t in gen_untypable_sk(3))


def test_family_registry():
    assert "typed" in FAMILIES
    assert get_family("blc").pairs
    assert count_family("sk-typed", 3) == 67
    assert count_family("bounded", 2, {"height": 1}) == 1
    assert [print_term(t) for t, _ in family_members("typed", 1)] == ["l(v(0))"]


def test_family_errors():
    with pytest.raises(DomainError):
        get_family("quaternion")
    with pytest.raises(DomainError):
        list(family_members("depth", 2, UPTO))


def test_every_family_enumerates_its_minimum_size():
    for name, family in FAMILIES.items():
        assert count_family(name, family.min_size + 1) >= 0, name


if __name__ == '__main__':
    pytest.main([__file__, '-v'])

"""
Unit tests for term representations, sizes, grammars and notation bijections.
"""

import pytest

from lambda_playground.errors import ContractError, TermSyntaxError
from lambda_playground.terms.core import (
    A, Ap, Bin, CA, CV, K, L, LEAF, Lam, Node, S, U_LEAF, Un, V, Var, App,
    compressed_to_db, db_to_compressed, db_to_std, is_closed, is_normal,
    std_to_db, term_size,
)
from lambda_playground.terms.syntax import hole_name, parse_term, print_term
from lambda_playground.generate.lambdas import gen_db
from lambda_playground.generate.trees import UPTO


def test_parse_and_print_each_grammar():
    """Printing a parsed term gives back the text."""
    samples = {
        "db": "l(a(l(v(1)),v(0)))",
        "comp": "a(3,a(0,v(0,2),v(0,0)),a(0,v(0,1),v(0,0)))",
        "std": "l(x0,a(x0,f1))",
        "tree": "(x>x)>(x>(x>x))",
        "sk": "s*(k*k)*s",
    }
    for grammar, text in samples.items():
        assert print_term(parse_term(text, grammar)) == text, f"{grammar} did not round-trip"


def test_tree_arrow_is_right_associative():
    """x>x>x reads as x>(x>x)."""
    t = parse_term("x > x > x", "tree")
    assert t == Node(LEAF, Node(LEAF, LEAF))
    assert print_term(t) == "x>(x>x)"


def test_sk_application_is_left_associative():
    """s*k*k reads as (s*k)*k."""
    assert parse_term("s*k*k", "sk") == Ap(Ap(S, K), K)
    assert print_term(Ap(S, Ap(K, K))) == "s*(k*k)"


def test_syntax_error_reports_offset():
    """A missing closing parenthesis is reported where input ends."""
    with pytest.raises(TermSyntaxError) as err:
        parse_term("l(v(0)", "db")
    assert err.value.offset == 6


def test_binders_must_be_x_names():
    with pytest.raises(TermSyntaxError):
        parse_term("l(f0,f0)", "std")


def test_unknown_grammar():
    with pytest.raises(ValueError):
        parse_term("x", "prolog")


def test_motzkin_printing():
    assert print_term(Un(U_LEAF)) == "l(u)"
    assert print_term(Bin(U_LEAF, Un(U_LEAF))) == "a(u,l(u))"


def test_hole_names():
    assert [hole_name(i) for i in range(3)] == ["A", "B", "C"]
    assert hole_name(26) == "A1"


def test_sizes(combinators, s_compressed):
    """Lambdas and applications count one, variables nothing."""
    assert term_size(combinators["k"]) == 2
    assert term_size(combinators["s"]) == 6
    assert term_size(s_compressed) == 6
    assert term_size(Ap(Ap(S, K), K)) == 2
    assert term_size(Node(LEAF, LEAF)) == 1
    assert term_size(Bin(U_LEAF, U_LEAF)) == 3


def test_closedness():
    assert not is_closed(V(0))
    assert is_closed(L(V(0)))
    assert not is_closed(L(A(V(0), V(1))))
    assert is_closed(CV(2, 1))
    assert not is_closed(CA(1, CV(0, 0), CV(0, 1)))


def test_normal_forms(omega):
    assert is_normal(L(A(V(0), L(V(0)))))
    assert not is_normal(omega)


def test_db_to_std_names_binders_in_order():
    """K gets binders x0 and x1; free indices become f names."""
    assert db_to_std(L(L(V(1)))) == Lam("x0", Lam("x1", Var("x0")))
    assert db_to_std(V(0)) == Var("f0")
    assert db_to_std(L(A(V(0), V(2)))) == Lam("x0", App(Var("x0"), Var("f1")))


def test_std_to_db_rejects_unbound_names():
    with pytest.raises(ContractError):
        std_to_db(Lam("x0", Var("y")))


def test_compression_of_s(combinators, s_compressed):
    """Runs of binders fold into the node they wrap."""
    assert db_to_compressed(combinators["s"]) == s_compressed
    assert db_to_compressed(combinators["k"]) == CV(2, 1)


def test_conversions_are_inverse_on_small_terms():
    """Named and compressed notations convert back to the same de Bruijn term."""
    for t in gen_db(7, UPTO):
        assert std_to_db(db_to_std(t)) == t, f"named round trip failed on {print_term(t)}"
        assert compressed_to_db(db_to_compressed(t)) == t, f"compressed round trip failed on {print_term(t)}"


if __name__ == '__main__':
    pytest.main([__file__, '-v'])

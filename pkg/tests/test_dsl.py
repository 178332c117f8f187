import random

import pytest

from glpq.dsl import (evaluate, get_context, parse, print_canonical,
                      print_tree, tokenize)
from glpq.errors import DslSyntaxError, NotAUnit, UnknownIdentifier
from glpq.tside import tside

from helpers import random_element


class TestParse:
    def test_product(self):
        assert parse("d*a") == ("mul", ("sym", "d"), ("sym", "a"))

    def test_precedence(self):
        tree = parse("a + d*beta^2")
        assert tree == ("add", ("sym", "a"),
                        ("mul", ("sym", "d"), ("pow", ("sym", "beta"), 2)))

    def test_signed_exponent_and_rational(self):
        assert parse("q^-1") == ("pow", ("sym", "q"), -1)
        assert parse("3/2") == ("num", __import__("fractions").Fraction(3, 2))

    def test_bracket(self):
        assert parse("[a, d]") == ("brk", ("sym", "a"), ("sym", "d"))

    def test_unary_minus(self):
        assert parse("-a + d") == ("add", ("neg", ("sym", "a")), ("sym", "d"))

    def test_syntax_error_position(self):
        with pytest.raises(DslSyntaxError) as err:
            parse("a + * d")
        assert err.value.pos == 4

    def test_unknown_identifier(self):
        with pytest.raises(UnknownIdentifier):
            parse("a * zz", "tside")

    def test_unbalanced(self):
        with pytest.raises(DslSyntaxError):
            parse("(a + d")


class TestEvaluate:
    def test_defining_relation_normalizes_to_zero(self):
        e = evaluate("[a,d] - (p - q^-1)*gamma*beta", "tside")
        assert e.is_zero()

    def test_odd_square(self):
        assert evaluate("beta^2", "tside").is_zero()

    def test_mside_brackets(self):
        assert evaluate("[x,y]", "mside").is_zero()
        assert print_canonical(evaluate("[x,mu]", "mside")) == "phi*mu"

    def test_psi_materialized(self):
        assert evaluate("phi + psi - 2", "mside").is_zero()

    def test_series_context(self):
        e = evaluate("beta*A - q^-1*A*beta", "series")
        # the residue is the correction term (q^-1 - 1)*beta
        got = print_canonical(e)
        assert "beta" in got and "A" not in got

    def test_negative_power_of_odd_fails_at_eval(self):
        tree = parse("beta^-1", "tside")      # parses fine
        with pytest.raises(NotAUnit):
            get_context("tside").eval(tree)


class TestRoundTrips:
    CORPUS = [
        "d*a", "a*d + (q - p^-1)*beta*gamma", "[a,d] - (p - q^-1)*gamma*beta",
        "beta^2", "(a + d)^3", "-a - d", "3/2*a*d^-2", "[a,[a,d]]",
        "p*q^-1*gamma*beta",
    ]

    def test_tree_roundtrip_on_corpus(self):
        for text in self.CORPUS:
            tree = parse(text)
            assert parse(print_tree(tree)) == tree

    def test_tree_roundtrip_random(self):
        rng = random.Random(14)
        names = ["a", "d", "beta", "gamma", "p", "q"]

        def rand_tree(depth):
            if depth == 0:
                if rng.random() < 0.4:
                    import fractions
                    return ("num", fractions.Fraction(rng.randint(1, 9),
                                                      rng.randint(1, 9)))
                return ("sym", rng.choice(names))
            kind = rng.choice(("add", "sub", "mul", "pow", "brk", "neg"))
            if kind == "pow":
                return ("pow", rand_tree(depth - 1), rng.randint(-3, 3))
            if kind == "neg":
                return ("neg", rand_tree(depth - 1))
            return (kind, rand_tree(depth - 1), rand_tree(depth - 1))

        for _ in range(300):
            tree = rand_tree(rng.randint(1, 3))
            assert parse(print_tree(tree)) == tree

    def test_element_print_parse_fixpoint(self):
        ctx = get_context("tside")
        rng = random.Random(15)
        for _ in range(40):
            e = random_element(rng, n_terms=3, max_len=5)
            printed = print_canonical(e)
            again = ctx.eval(parse(printed, ctx))
            assert again == e
            assert print_canonical(again) == printed

    def test_zero_prints_as_zero(self):
        assert print_canonical(tside().pres.zero_elt()) == "0"
        ctx = get_context("tside")
        assert ctx.eval(parse("0")).is_zero()


def test_tokenizer_rejects_garbage():
    with pytest.raises(DslSyntaxError):
        tokenize("a ? d")

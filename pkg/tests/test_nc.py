import random

import pytest

from glpq.errors import NonInvertibleNegativePower, NotAUnit, PresentationMismatch
from glpq.nc import anticommutator, commutator, invert_even_unit
from glpq.mside import mside
from glpq.printing import print_element
from glpq.tside import tside

from helpers import random_element, random_word, renormalize, random_homogeneous


class TestNormalize:
    def test_da_reordering(self):
        ctx = tside()
        got = ctx.word([("d", 1), ("a", 1)])
        want = ctx.a * ctx.d + (ctx.beta * ctx.gamma).smul(ctx.q - ctx.p_inv)
        assert got == want

    def test_beta_a_twist(self):
        ctx = tside()
        assert ctx.word([("beta", 1), ("a", 1)]) == \
            (ctx.a * ctx.beta).smul(ctx.q_inv)

    def test_odd_square_is_zero(self):
        ctx = tside()
        assert ctx.word([("beta", 2)]).is_zero()
        assert (ctx.gamma * ctx.gamma).is_zero()

    def test_twist_bookkeeping_through_inverses(self):
        # beta.d^-1.gamma.d^-1 picks up one p from gamma/d and q^2 from
        # beta crossing both inverse powers of d
        ctx = tside()
        got = ctx.word([("beta", 1), ("d", -1), ("gamma", 1), ("d", -1)])
        want = ctx.word([("d", -2), ("beta", 1), ("gamma", 1)],
                        ctx.p * ctx.q * ctx.q)
        assert got == want

    def test_negative_power_on_odd_generator(self):
        ctx = tside()
        with pytest.raises(NonInvertibleNegativePower):
            ctx.word([("beta", -1)])

    def test_reordered_inputs_agree(self):
        ctx = tside()
        rng = random.Random(5)
        for _ in range(60):
            w = random_word(rng, max_len=6, exp_bound=2)
            direct = ctx.pres.word_elt(w)
            via = ctx.pres.one_elt()
            for factor in w:
                via = via * ctx.pres.word_elt([factor])
            assert direct == via


class TestElementOps:
    def test_product_against_expanded_oracle(self):
        # (a + beta)*(a - beta) expanded into four words normalizes to
        # the same element as the engine product
        ctx = tside()
        lhs = (ctx.a + ctx.beta) * (ctx.a - ctx.beta)
        oracle = (ctx.word([("a", 1), ("a", 1)])
                  - ctx.word([("a", 1), ("beta", 1)])
                  + ctx.word([("beta", 1), ("a", 1)])
                  - ctx.word([("beta", 1), ("beta", 1)]))
        assert lhs == oracle

    def test_unit_law(self):
        ctx = tside()
        rng = random.Random(9)
        for _ in range(20):
            e = random_element(rng)
            assert e * ctx.pres.one_elt() == e
            assert ctx.pres.one_elt() * e == e

    def test_nilpotent_product(self):
        ctx = tside()
        bg = ctx.beta * ctx.gamma
        gb = ctx.gamma * ctx.beta
        assert (bg * gb).is_zero()

    def test_presentation_mismatch(self):
        with pytest.raises(PresentationMismatch):
            tside().a * mside().mu


class TestInverses:
    def test_generator_inverse(self):
        ctx = tside()
        assert invert_even_unit(ctx.a) == ctx.word([("a", -1)])

    def test_delta2_inverse_two_sided(self):
        ctx = tside()
        d2 = ctx.delta2()
        inv = invert_even_unit(d2)
        assert (d2 * inv) == ctx.pres.one_elt()
        assert (inv * d2) == ctx.pres.one_elt()

    def test_odd_element_is_not_a_unit(self):
        with pytest.raises(NotAUnit):
            invert_even_unit(tside().beta)

    def test_sum_of_monomials_is_not_a_unit(self):
        ctx = tside()
        with pytest.raises(NotAUnit):
            invert_even_unit(ctx.a + ctx.d)


class TestBrackets:
    def test_ad_commutator(self):
        ctx = tside()
        want = ctx.word([("gamma", 1), ("beta", 1)], ctx.p - ctx.q_inv)
        assert commutator(ctx.a, ctx.d) == want

    def test_mside_even_commute(self):
        m = mside()
        assert commutator(m.x, m.y).is_zero()

    def test_mside_odd_anticommute(self):
        m = mside()
        assert anticommutator(m.mu, m.nu).is_zero()


class TestEngineProperties:
    """Randomized structural checks; the acceptance suite reruns these
    at 500 instances each."""

    def test_idempotence(self):
        rng = random.Random(21)
        for _ in range(60):
            e = random_element(rng)
            assert renormalize(e) == e

    def test_confluence_of_strategies(self):
        ctx = tside()
        rng = random.Random(22)
        for _ in range(60):
            w = random_word(rng)
            left = ctx.pres.normalize(w, ctx.one, strategy="leftmost")
            right = ctx.pres.normalize(w, ctx.one, strategy="rightmost")
            assert left == right

    def test_ring_axioms(self):
        rng = random.Random(23)
        for _ in range(40):
            e1, e2, e3 = (random_element(rng, max_len=4) for _ in range(3))
            assert (e1 * e2) * e3 == e1 * (e2 * e3)
            assert e1 * (e2 + e3) == e1 * e2 + e1 * e3

    def test_parity_grading(self):
        rng = random.Random(24)
        for _ in range(40):
            pa, pb = rng.randint(0, 1), rng.randint(0, 1)
            x = random_homogeneous(rng, pa)
            y = random_homogeneous(rng, pb)
            prod = x * y
            if prod.is_zero():
                continue
            expect = "odd" if (pa + pb) % 2 else "even"
            assert prod.parity() == expect

    def test_commuting_quantities_remark(self):
        # odd generators see powers of a and d as commuting factors
        ctx = tside()
        for odd in ("beta", "gamma"):
            for n in range(-3, 4):
                for m in range(-3, 4):
                    lhs = ctx.word([(odd, 1), ("a", n), ("d", m)])
                    rhs = ctx.word([(odd, 1), ("d", m), ("a", n)])
                    assert lhs == rhs


def test_print_element_readable():
    ctx = tside()
    s = print_element(ctx.word([("d", 1), ("a", 1)]))
    assert s == "a*d + (q - p^-1)*beta*gamma"

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glpq.coeff import RatFunc, TruncLaurent
from glpq.errors import (DivisionByZero, MissingSymbol, NearPoleEvaluation,
                         TruncationUnderflow)
from glpq.poly import Pol, SymbolSet

PQ = SymbolSet(["p", "q"])


def r_sym(name, e=1):
    return RatFunc.symbol(PQ, name, e)


def r_const(c):
    return RatFunc.const(PQ, c)


class TestRatFunc:
    def test_field_roundtrip(self):
        # (p - q^-1) * q / q returns the canonical original
        f = r_sym("p") - r_sym("q", -1)
        q = r_sym("q")
        assert (f * q) / q == f
        assert str(f * q) == "p*q - 1"

    def test_bracket_reduction(self):
        # (1 - (pq)^-2)/(1 - (pq)^-1) reduces to 1 + (pq)^-1
        pq = r_sym("p") * r_sym("q")
        one = r_const(1)
        lhs = (one - pq ** -2) / (one - pq ** -1)
        assert lhs == one + pq ** -1

    def test_eval_numeric(self):
        f = (r_sym("p") * r_sym("q") - r_const(1)) / (r_sym("p") - r_sym("q", -1))
        assert abs(f.eval_float({"p": 2.0, "q": 3.0}) - 3.0) < 1e-12
        pq = r_sym("p") * r_sym("q")
        bracket2 = r_const(1) + pq ** -1
        assert abs(bracket2.eval_float({"p": 2.0, "q": 2.0}) - 1.25) < 1e-12
        assert r_const(0).eval_float({"p": 1.0, "q": 5.0}) == 0.0

    def test_near_pole_guard(self):
        f = r_const(1) / (r_sym("p") * r_sym("q") - r_const(1))
        with pytest.raises(NearPoleEvaluation):
            f.eval_float({"p": 2.0, "q": 0.5 + 1e-9})

    def test_missing_symbol(self):
        with pytest.raises(MissingSymbol):
            r_sym("p").eval_float({"q": 1.0})

    def test_zero_division(self):
        with pytest.raises(DivisionByZero):
            r_sym("p") / r_const(0)

    def test_canonical_soundness_random(self):
        rng = random.Random(11)

        def rand_rf():
            num = Pol(PQ, {(rng.randint(0, 2), rng.randint(0, 2)):
                           rng.randint(-4, 4) for _ in range(rng.randint(1, 3))})
            den = Pol(PQ, {(rng.randint(0, 2), rng.randint(0, 2)):
                           rng.randint(-4, 4) for _ in range(rng.randint(1, 3))})
            if den.is_zero():
                den = Pol.const(PQ, 1)
            return RatFunc(num, den)

        for _ in range(150):
            a, b = rand_rf(), rand_rf()
            if b.is_zero():
                continue
            assert (a * b) / b == a

    @given(st.integers(-6, 6), st.integers(-6, 6), st.integers(1, 6), st.integers(1, 6))
    @settings(max_examples=60)
    def test_eval_homomorphism(self, a, b, c, d):
        x = r_const(Fraction(a, c))
        y = r_sym("p") * Fraction(b, d) + r_sym("q", -1)
        assign = {"p": 1.7, "q": 2.3}
        got = (x * y + y).eval_float(assign)
        want = x.eval_float(assign) * y.eval_float(assign) + y.eval_float(assign)
        assert abs(got - want) <= 1e-9 * max(1.0, abs(want))


class TestTruncLaurent:
    def test_exp_product_is_one(self):
        a = TruncLaurent.exp_of(Fraction(3), cap=4)
        b = TruncLaurent.exp_of(Fraction(-3), cap=4)
        assert (a * b - 1).is_zero()

    def test_inverse_within_cap(self):
        rng = random.Random(3)
        for _ in range(80):
            lead = rng.randint(-2, 2)
            nums = [rng.randint(-5, 5) for _ in range(4)]
            if not any(nums):
                nums[0] = 1
            s = TruncLaurent(lead, nums, rng.randint(1, 4), 10)
            prod = s.inv() * s
            assert (prod - 1).is_zero()
            assert prod.cap >= 10 - 2 * abs(s.valuation())

    def test_zero_inverse_raises(self):
        with pytest.raises(TruncationUnderflow):
            TruncLaurent.zero(8).inv()

    def test_cap_tracking_through_mul(self):
        s = TruncLaurent.t_power(1, cap=6)          # t + O(t^7)
        u = TruncLaurent.const(1, cap=8)            # 1 + O(t^9)
        prod = s * u
        assert prod.cap == 6                        # limited by s itself
        prod2 = TruncLaurent.t_power(2, cap=20) * u
        assert prod2.cap == 10                      # u's error shifted by t^2
        inv = s.inv()
        assert inv.lead == -1 and inv.cap == 4

    def test_laurent_arithmetic(self):
        tinv = TruncLaurent.t_power(-1, cap=5)
        s = tinv * TruncLaurent.t_power(1, cap=5)
        assert (s - 1).is_zero()

    def test_eval_float(self):
        s = TruncLaurent.exp_of(Fraction(1), cap=12)
        assert abs(s.eval_float(0.1) - 2.718281828459045 ** 0.1) < 1e-12

    def test_str_and_coefficient(self):
        s = TruncLaurent(-1, (1, 0, -3), 2, 6)
        assert s.coefficient(-1) == Fraction(1, 2)
        assert s.coefficient(1) == Fraction(-3, 2)
        assert "t^-1" in str(s)

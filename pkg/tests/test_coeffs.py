import pytest

from ducci import coeffs
from ducci.coeffs import (binom_vanishing_check, lemma_sum_check,
                          mod6_pattern_check, product_split_check,
                          row_binomial_exact, row_iterative, row_polypow,
                          row_to_json, triple_exact, triple_fast)


class TestRowIterative:
    def test_square_row(self):
        assert row_iterative(2, 3, 1000).values == (1, 2, 1)

    def test_identity_row(self):
        assert row_iterative(0, 4, 9).values == (1, 0, 0, 0)

    def test_binomial_prefix(self):
        assert row_iterative(3, 5, 1000).values == (1, 3, 3, 1, 0)

    def test_wraparound(self):
        # n=3, r=3: the C(3,3) term wraps onto position 1
        assert row_iterative(3, 3, 1000).values == (2, 3, 3)


class TestRowBinomialExact:
    def test_frozen_example(self):
        assert row_binomial_exact(4, 3).values == (5, 5, 6)

    def test_binomial_prefix(self):
        assert row_binomial_exact(3, 5).values == (1, 3, 3, 1, 0)

    def test_identity_row(self):
        assert row_binomial_exact(0, 6).values == (1, 0, 0, 0, 0, 0)

    def test_budget(self):
        with pytest.raises(ValueError):
            row_binomial_exact(10_001, 3)

    def test_row_sums_are_powers_of_two(self):
        for n in (1, 3, 7):
            for r in range(61):
                assert sum(row_binomial_exact(r, n).values) == 2**r


class TestRowPolypow:
    def test_square_row(self):
        assert row_polypow(2, 3, 6).values == (1, 2, 1)

    def test_single_step_row(self):
        assert row_polypow(1, 5, 7).values == (1, 1, 0, 0, 0)

    def test_matches_binomial_mod_m(self):
        exact = row_binomial_exact(12, 4).values
        assert row_polypow(12, 4, 3).values == tuple(v % 3 for v in exact)

    def test_three_routes_agree(self):
        for n in (1, 2, 5, 8):
            for m in (2, 6, 11):
                for r in (0, 1, 7, 40):
                    it = row_iterative(r, n, m).values
                    pp = row_polypow(r, n, m).values
                    ex = tuple(v % m for v in row_binomial_exact(r, n).values)
                    assert it == pp == ex

    def test_modular_row_sum(self):
        for r in (5, 33):
            for n, m in ((4, 6), (9, 10)):
                assert sum(row_polypow(r, n, m).values) % m == pow(2, r, m)


class TestLemmaSumCheck:
    def test_frozen_case(self):
        assert lemma_sum_check(5, 2, 1, 3, 7)

    def test_pascal_base_case(self):
        for s in (1, 2, 3):
            assert lemma_sum_check(2, 1, s, 3, 11)

    def test_precondition(self):
        with pytest.raises(ValueError):
            lemma_sum_check(3, 3, 1, 4, 5)
        with pytest.raises(ValueError):
            lemma_sum_check(3, 1, 5, 4, 5)


class TestProductSplit:
    def test_small_modular(self):
        assert product_split_check(2, 1, 100)

    def test_exact_five(self):
        # (a5, b5, c5) = (11, 10, 11) via binomial sums
        assert triple_exact(5).as_tuple() == (11, 10, 11)
        assert product_split_check(3, 2)

    def test_rhs_sums_to_power(self):
        for r, t in ((4, 1), (9, 5), (20, 3)):
            a, b, c = triple_exact(r + t).as_tuple()
            assert a + b + c == 2 ** (r + t)
            assert product_split_check(r, t)

    def test_precondition(self):
        with pytest.raises(ValueError):
            product_split_check(2, 2, 5)


class TestTripleFast:
    def test_identity(self):
        assert triple_fast(0, 50).as_tuple() == (1, 0, 0)

    def test_single_step(self):
        assert triple_fast(1, 50).as_tuple() == (1, 1, 0)

    def test_frozen_example(self):
        assert triple_fast(4, 10).as_tuple() == (5, 5, 6)

    def test_matches_polypow_large_exponents(self):
        for r in (123456789, 987654321, 2**40 + 7):
            for m in (97, 1000):
                assert triple_fast(r, m).as_tuple() == row_polypow(r, 3, m).values


class TestMod6Pattern:
    @pytest.mark.parametrize("r", [1, 4, 6])
    def test_frozen_cases(self, r):
        assert mod6_pattern_check(r)

    def test_range(self):
        assert all(mod6_pattern_check(r) for r in range(1, 61))

    def test_six_exact(self):
        assert triple_exact(6).as_tuple() == (22, 21, 21)


class TestBinomVanishing:
    def test_small_prime(self):
        assert binom_vanishing_check(4, 3)

    def test_next_prime(self):
        assert binom_vanishing_check(6, 5)

    def test_larger(self):
        assert binom_vanishing_check(4, 19)

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            binom_vanishing_check(4, 9)

    def test_rejects_wrong_residue(self):
        with pytest.raises(ValueError):
            binom_vanishing_check(4, 5)

    def test_rejects_odd_n(self):
        with pytest.raises(ValueError):
            binom_vanishing_check(3, 5)


class TestSerialization:
    def test_modular_row(self):
        obj = row_to_json(row_polypow(4, 3, 10))
        assert obj == {"r": 4, "n": 3, "m": 10, "values": [5, 5, 6]}

    def test_exact_row_uses_strings(self):
        obj = row_to_json(row_binomial_exact(4, 3))
        assert obj == {"r": 4, "n": 3, "m": "exact", "values": ["5", "5", "6"]}

    def test_triple_row(self):
        tr = triple_fast(4, 10)
        obj = row_to_json(coeffs.CoeffRow(tr.r, 3, tr.m, tr.as_tuple()))
        assert obj["values"] == [5, 5, 6]

import itertools
from math import comb

import pytest

from coveralg.errors import InconsistentInputError, SizeLimitError
from coveralg.hilbert import (
    HilbertSeries,
    antichain_series,
    chain_series,
    cover_algebra_h_vector,
    cover_algebra_hilbert_series,
    hilbert_function,
)
from coveralg.oracle import (
    basic_hilbert_bruteforce,
    compare_basic,
    compare_graded,
    compare_power,
    h_vector_from_function,
    hilbert_function_bruteforce,
    hilbert_function_power_oracle,
    verify_lemma_delta,
    verify_monotonicity,
)
from coveralg.lattice import enumerate_ideals
from coveralg.poset import all_natural_posets, antichain, chain, random_poset


def test_graded_examples(p3):
    assert hilbert_function_bruteforce(p3, 0) == 1
    assert hilbert_function_bruteforce(p3, 1) == 11  # 6 variables + 5 generators
    # (1+z)^2 / (1-z)^5 at z^1: 5 + 2
    assert hilbert_function_bruteforce(chain(2), 1) == 7


def test_power_examples(p3):
    assert hilbert_function_power_oracle(p3, 1) == 11
    assert hilbert_function_power_oracle(chain(2), 0) == 1
    # I_G = (x, y): three monomials in each of the j = 0, 1, 2 pieces of degree 2;
    # also (1+z)/(1-z)^3 at z^2 = C(4,2) + C(3,2)
    assert hilbert_function_power_oracle(chain(1), 2) == 9 == comb(4, 2) + comb(3, 2)


def test_caps():
    with pytest.raises(SizeLimitError):
        hilbert_function_bruteforce(chain(5), 1)
    with pytest.raises(SizeLimitError):
        hilbert_function_power_oracle(chain(4), 1)
    with pytest.raises(SizeLimitError):
        verify_lemma_delta(chain(7))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_three_routes_agree(n):
    for p in all_natural_posets(n):
        s = cover_algebra_hilbert_series(p)
        for k in range(5):
            assert hilbert_function(s, k) == hilbert_function_bruteforce(p, k) == hilbert_function_power_oracle(p, k)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_h_vector_recovered_from_bruteforce(n):
    for p in all_natural_posets(n):
        values = [hilbert_function_bruteforce(p, k) for k in range(n + 2)]
        assert h_vector_from_function(values, n) == cover_algebra_h_vector(p)


@pytest.mark.nightly
def test_h_vector_recovered_n4():
    for p in all_natural_posets(4):
        values = [hilbert_function_bruteforce(p, k) for k in range(5)]
        assert h_vector_from_function(values, 4) == cover_algebra_h_vector(p)


class TestHVectorFromFunction:
    def test_p3(self, p3):
        values = [hilbert_function_bruteforce(p3, k) for k in range(5)]
        assert h_vector_from_function(values, 3).coeffs == (1, 4, 4, 1)

    def test_polynomial_ring_pattern(self):
        n = 2
        values = [comb(k + 2 * n, 2 * n) for k in range(6)]
        assert h_vector_from_function(values, n).coeffs == (1, 0, 0)

    def test_chain2(self):
        values = [hilbert_function_bruteforce(chain(2), k) for k in range(4)]
        assert h_vector_from_function(values, 2).coeffs == (1, 2, 1)

    def test_inconsistent(self):
        s = HilbertSeries((1, 0, 0, 0, 1), 5)  # degree 4 numerator but n = 2
        with pytest.raises(InconsistentInputError):
            h_vector_from_function([hilbert_function(s, k) for k in range(6)], 2)

    def test_too_short(self):
        with pytest.raises(ValueError):
            h_vector_from_function([1, 11], 3)


class TestBasicBruteforce:
    def test_trivial(self, p3):
        assert basic_hilbert_bruteforce(p3, 0) == 1
        assert basic_hilbert_bruteforce(p3, 1) == len(enumerate_ideals(p3))

    def test_p3_degree2(self, p3):
        # 15 pairs from 5 ideals minus the one incomparable pair;
        # also (1+z)/(1-z)^4 at z^2 = C(5,3) + C(4,3)
        assert basic_hilbert_bruteforce(p3, 2) == 14 == comb(5, 3) + comb(4, 3)

    def test_against_multiset_filter(self, p3):
        ids = enumerate_ideals(p3).ideals
        for k in range(5):
            count = sum(
                1 for ms in itertools.combinations_with_replacement(ids, k)
                if all(a & b in (a, b) for a, b in itertools.combinations(ms, 2))
            )
            assert basic_hilbert_bruteforce(p3, k) == count

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_series(self, n):
        for p in all_natural_posets(n):
            assert compare_basic(p, 6).agree


class TestLemma:
    def test_examples(self, p3):
        assert verify_lemma_delta(p3)
        assert verify_lemma_delta(chain(4))
        assert verify_lemma_delta(antichain(4))

    def test_random_n6(self):
        for seed in range(20):
            assert verify_lemma_delta(random_poset(6, seed, 0.4)).ok


class TestMonotonicity:
    def test_examples(self, p3):
        assert verify_monotonicity(p3, 10)
        assert verify_monotonicity(chain(4), 10)
        assert verify_monotonicity(antichain(4), 10)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_bounds_tight(self, n):
        lo, hi = chain_series(n), antichain_series(n)
        c, a = cover_algebra_hilbert_series(chain(n)), cover_algebra_hilbert_series(antichain(n))
        for k in range(11):
            assert hilbert_function(c, k) == hilbert_function(lo, k)
            assert hilbert_function(a, k) == hilbert_function(hi, k)


class TestReports:
    def test_graded_and_power(self, p3):
        g = compare_graded(p3, 3)
        assert g.agree and len(g.values) == 4
        assert compare_power(p3, 3).agree
        assert g.as_dict()["values"][1] == [11, 11]

"""Pair-prime cache and the exhaustive subset search."""

import math

import pytest

from eulab.factor import factor_rational
from eulab.search import MAX_TABLE_ELEMENT, PairPrimeCache, run_search

from oracles import brute_force_search


@pytest.fixture(scope="module")
def cache60():
    return PairPrimeCache(60)


class TestPairPrimeCache:
    def test_prime_indexing_is_dense_and_increasing(self, cache60):
        assert cache60.primes == tuple(sorted(set(cache60.primes)))
        flat = {i for idx in cache60.pair_indices.values() for i in idx}
        assert flat == set(range(len(cache60.primes)))

    def test_indices_match_direct_factorization(self, cache60):
        for a, b in [(1, 2), (3, 5), (17, 24), (59, 60)]:
            v = a * a + a * b + b * b
            expect = tuple(p for p, _ in factor_rational(v).factors)
            got = tuple(cache60.primes[i] for i in cache60.indices(a, b))
            assert got == expect

    def test_indices_ignore_argument_order(self, cache60):
        assert cache60.indices(7, 3) == cache60.indices(3, 7)

    def test_pair_mask_bits(self, cache60):
        mask = cache60.pair_mask(1, 2)
        assert mask.bit_count() == len(cache60.indices(1, 2))
        for i in cache60.indices(1, 2):
            assert mask >> i & 1

    def test_omega_examples(self, cache60):
        assert cache60.omega_of_set([1, 2, 3]) == 3
        assert cache60.omega_of_set([1, 2, 4, 8]) == 4
        assert cache60.omega_of_set([5]) == 0

    def test_validation(self, cache60):
        with pytest.raises(ValueError):
            cache60.indices(4, 4)
        with pytest.raises(ValueError):
            cache60.omega_of_set([0, 3])
        with pytest.raises(ValueError):
            cache60.omega_of_set([1, 61])
        with pytest.raises(ValueError):
            PairPrimeCache(MAX_TABLE_ELEMENT + 1)


class TestRunSearch:
    @pytest.mark.parametrize("k,m,primitive", [
        (3, 40, False), (3, 60, True), (4, 25, False), (2, 30, True),
    ])
    def test_matches_brute_force(self, cache60, k, m, primitive):
        best, witnesses = brute_force_search(k, m, primitive, cache=cache60)
        result = run_search(cache60, k, m, primitive_only=primitive,
                            all_witnesses=True)
        assert result.minimum == best
        assert list(result.witnesses) == witnesses
        assert result.witness_count == len(witnesses)

    def test_first_witness_mode(self, cache60):
        full = run_search(cache60, 3, 40, all_witnesses=True)
        first = run_search(cache60, 3, 40)
        assert first.witness_count == 1
        assert first.witnesses == full.witnesses[:1]
        assert first.minimum == full.minimum

    def test_workers_agree(self, cache60):
        one = run_search(cache60, 3, 50, primitive_only=True,
                         all_witnesses=True, workers=1)
        four = run_search(cache60, 3, 50, primitive_only=True,
                          all_witnesses=True, workers=4)
        assert one.minimum == four.minimum
        assert one.witnesses == four.witnesses
        assert one.witness_count == four.witness_count

    def test_smaller_max_element_reuses_cache(self, cache60):
        direct = PairPrimeCache(20)
        a = run_search(cache60, 3, 20, all_witnesses=True)
        b = run_search(direct, 3, 20, all_witnesses=True)
        assert a.minimum == b.minimum
        # witnesses are element tuples, comparable across caches
        assert a.witnesses == b.witnesses

    def test_monotone_in_k(self, cache60):
        by_k = [run_search(cache60, k, 30).minimum for k in (2, 3, 4, 5)]
        assert by_k == sorted(by_k)

    def test_primitive_filters_scaled_sets(self, cache60):
        # every witness must have coprime elements overall
        result = run_search(cache60, 4, 40, primitive_only=True,
                            all_witnesses=True)
        for w in result.witnesses:
            assert math.gcd(*w) == 1

    def test_nodes_and_seconds_reported(self, cache60):
        result = run_search(cache60, 3, 30)
        assert result.nodes_visited > 0
        assert result.seconds >= 0.0

    def test_validation(self, cache60):
        with pytest.raises(ValueError):
            run_search(cache60, 1, 30)
        with pytest.raises(ValueError):
            run_search(cache60, 3, 100)
        with pytest.raises(ValueError):
            run_search(cache60, 3, 30, workers=0)

"""Tests for the primality oracle: two sieves and Miller-Rabin."""

import tracemalloc

import numpy as np
import pytest

from core.exceptions import DomainError, InvalidRangeError, ResourceRefusedError
from core.oracle import (
    PrimeSet, as_oracle, is_prime, prime_set_covering, sieve, wheel_index, wheel_sieve, wheel_slot_count, wheel_value,
)
from core.wheel import candidate_mask
from core.settings import Settings


@pytest.fixture
def small_cap(tmp_path):
    """Settings with a sieve cap of 1000."""
    config = tmp_path / "settings.yaml"
    config.write_text("oracle:\n  sieve_cap: 1000\n", encoding="utf-8")
    Settings._instance = Settings(config_path=config)
    return Settings._instance


class TestSieves:
    """sieve() and wheel_sieve()."""

    def test_prime_count_million(self, prime_set_1e6):
        """pi(10**6) = 78498."""
        assert prime_set_1e6.count == 78498
        assert len(prime_set_1e6) == 78498

    def test_wheel_sieve_hundred(self):
        """25 primes up to 100, starting 2, 3, 5."""
        primes = wheel_sieve(100)
        assert primes.count == 25
        assert primes.primes().tolist()[:6] == [2, 3, 5, 7, 11, 13]

    @pytest.mark.parametrize("limit", [2, 3, 7, 29, 30, 31, 49, 1000, 10_000, 99_991])
    def test_sieves_agree(self, limit):
        """Both sieves agree bit for bit around block edges."""
        assert wheel_sieve(limit) == sieve(limit)

    def test_membership(self):
        """in and call answer membership."""
        primes = sieve(100)
        assert 97 in primes
        assert 91 not in primes
        assert 0 not in primes
        assert 1 not in primes
        assert primes(2)

    def test_out_of_range_membership(self):
        """Asking outside 0..limit raises InvalidRangeError."""
        primes = sieve(100)
        with pytest.raises(InvalidRangeError):
            primes.contains(101)
        with pytest.raises(InvalidRangeError):
            primes.contains(-1)

    def test_equality_needs_same_limit(self):
        """Equal sets need equal limits."""
        assert sieve(100) != sieve(101)
        assert sieve(100) == sieve(100)

    def test_bool_array_roundtrip(self):
        """The packed bitset unpacks to the sieve flags."""
        flags = sieve(1000).to_bool_array()
        assert flags.shape == (1001,)
        assert PrimeSet(1000, flags) == sieve(1000)

    def test_flag_shape_checked(self):
        """Flags must cover 0..limit."""
        with pytest.raises(ValueError):
            PrimeSet(10, np.zeros(5, dtype=bool))

    def test_limit_below_two_rejected(self):
        """Limits below 2 raise InvalidRangeError."""
        with pytest.raises(InvalidRangeError):
            sieve(1)
        with pytest.raises(InvalidRangeError):
            wheel_sieve(0)

    def test_cap_refused(self, small_cap):
        """Limits above the configured cap are refused."""
        with pytest.raises(ResourceRefusedError) as exc:
            sieve(1001)
        assert "[sieve]" in str(exc.value)
        with pytest.raises(ResourceRefusedError):
            wheel_sieve(1001)
        assert sieve(1000).count == 168

    def test_positions_examined(self):
        """Odd-only stores half, the wheel stores 8/30."""
        assert sieve(10_000).positions_examined == 5000
        assert wheel_sieve(10_000).positions_examined == 2666

    def test_wheel_index(self):
        """Slots of the first candidates."""
        assert wheel_index(1) == 0
        assert wheel_index(7) == 1
        assert wheel_index(31) == 8
        assert wheel_index(59) == 15

    @pytest.mark.parametrize("limit", [2, 6, 7, 30, 31, 59, 60, 61, 1000, 99_991])
    def test_slot_count(self, limit):
        """Slot count equals the number of candidates in 1..limit."""
        assert wheel_slot_count(limit) == int(np.count_nonzero(candidate_mask(np.arange(1, limit + 1))))

    def test_wheel_value_inverts_index(self):
        """wheel_value(wheel_index(n)) == n for every candidate."""
        for n in np.flatnonzero(candidate_mask(np.arange(3000))):
            assert wheel_value(wheel_index(int(n))) == n

    def test_wheel_sieve_memory(self):
        """Wheel sieve peaks below the plain sieve and well under 1.5 bytes per number."""
        limit = 10**6
        peaks = {}
        for build in (sieve, wheel_sieve):
            tracemalloc.start()
            build(limit)
            peaks[build.__name__] = tracemalloc.get_traced_memory()[1]
            tracemalloc.stop()
        assert peaks["wheel_sieve"] < 1.5 * limit
        assert peaks["wheel_sieve"] <= peaks["sieve"]

    def test_covering(self):
        """The covering sieve reaches at least n and never below 2."""
        assert prime_set_covering(1).limit == 2
        assert prime_set_covering(500).limit == 500


class TestMillerRabin:
    """Deterministic is_prime."""

    def test_agrees_with_sieve(self, prime_set_1e6):
        """is_prime matches the sieve for every n up to a million."""
        flags = prime_set_1e6.to_bool_array()
        mismatches = [n for n in range(1, 10**6 + 1) if is_prime(n) != flags[n]]
        assert mismatches == []

    @pytest.mark.parametrize("n", [2**61 - 1, 18446744073709551557, 8751629, 7310033])
    def test_known_primes(self, n):
        """Large primes including the worked examples."""
        assert is_prime(n)

    @pytest.mark.parametrize("n", [1, 561, 3215031751, 2**64 - 1, 7310037, 8751657])
    def test_known_composites(self, n):
        """Carmichael, strong pseudoprime and worked composites."""
        assert not is_prime(n)

    def test_domain(self):
        """0 is outside the domain."""
        with pytest.raises(DomainError):
            is_prime(0)

    def test_as_oracle(self):
        """None means Miller-Rabin; a PrimeSet passes through."""
        assert as_oracle() is is_prime
        primes = sieve(10)
        assert as_oracle(primes) is primes

"""Acceptance checks at desk scale (10**6 to 10**7).

Each class corresponds to one numbered claim the toolkit must hold exactly.
"""

import pytest

from core.bench import WHEEL_FRACTION_BOUND, run_bench
from core.cyclicity import CANONICAL_GROUPS, CANONICAL_PARCELS, build_block
from core.oracle import sieve, wheel_sieve
from core.plotting import PlotConfig, render_cycle_strip, render_rays
from core.rays import polar_coordinates, thick_ray_degrees
from core.spectrum import aperiodicity_check, candidate_gaps, indicator, parseval_residual, power_spectrum
from core.twins import COMPLETENESS_FLOOR, TWIN_RESIDUES, is_twin_position, verify_twin_necessity
from core.verification import verify_conclusions
from core.wheel import Candidate, classify

from tests.test_plotting import _markers


class TestNecessityAndSufficiency:
    """Every prime above 5 is a candidate; no certain composite is prime."""

    def test_ten_million(self, prime_set_1e7):
        """No violation in either direction up to 10**7."""
        report = verify_conclusions(10**7, prime_set_1e7)
        assert report.necessity_violations == 0
        assert report.sufficiency_violations == 0
        assert report.primes_checked == 664579 - 3


class TestNinetySixRays:

    def test_prime_degrees_are_thick_degrees(self, prime_set_1e6):
        """Primes above 5 up to 10**6 occupy exactly the 96 thick degrees."""
        primes = prime_set_1e6.primes()
        degrees = set((primes[primes > 5] % 360).tolist())
        assert len(thick_ray_degrees()) == 96
        assert degrees == set(thick_ray_degrees())


class TestWorkedExamples:

    def test_decompositions(self):
        """Both worked primes decompose as published."""
        assert classify(7310033) == Candidate(23, 243667)
        assert classify(8751629) == Candidate(29, 291720)

    @pytest.mark.parametrize("n,x,y", [
        (7310033, -4399287.68, -5838051.93),
        (7310037, -3981331.5, -6130712.88),
        (8751629, 7654347.19, 4242873.93),
        (8751657, 4766494.02, 7339757.15),
    ])
    def test_coordinates(self, n, x, y):
        """Worked coordinates within half a unit."""
        point = polar_coordinates(n)
        assert abs(point.x - x) <= 0.5 and abs(point.y - y) <= 0.5


class TestRhythms:

    def test_hundred_thousand_blocks(self):
        """Blocks 0..10**5 all follow the canonical rhythm."""
        for b in range(10**5 + 1):
            block = build_block(b)
            assert block.parcels == CANONICAL_PARCELS
            assert block.candidate_groups == CANONICAL_GROUPS


class TestDensity:

    def test_windows_up_to_ten_million(self, prime_set_1e7):
        """No aligned 30-window up to 10**7 holds more than eight primes."""
        report = verify_conclusions(10**7, prime_set_1e7)
        assert report.windows_checked == 333332
        assert report.density_violations == 0


class TestTwinNecessity:

    def test_up_to_a_million(self, prime_set_1e7):
        """Every twin pair from 53 up to 10**6 sits on the formula."""
        report = verify_twin_necessity(10**6, prime_set_1e7)
        assert report.ok
        for pair in report.exceptions:
            assert pair.p < COMPLETENESS_FLOOR
        covered = [p for p in range(COMPLETENESS_FLOOR, 10**6 + 1)
                   if p in prime_set_1e7 and p + 2 in prime_set_1e7]
        assert all(p % 30 in TWIN_RESIDUES and is_twin_position(p) for p in covered)
        assert len(covered) == report.covered


class TestOracleEquivalence:

    @pytest.mark.parametrize("limit", [10**3, 10**4, 10**6])
    def test_bit_for_bit(self, limit):
        """Both sieves agree at each decade."""
        assert wheel_sieve(limit) == sieve(limit)

    def test_ten_million(self, prime_set_1e7):
        """Both sieves agree at 10**7."""
        assert wheel_sieve(10**7) == prime_set_1e7


class TestChaoticityProxy:

    def test_indicator_aperiodic_with_periodic_control(self, prime_set_1e6):
        """Indicator has no period up to 512; the gap control has period 8."""
        seq = indicator(50, 4096, prime_set_1e6)
        assert aperiodicity_check(seq, 512) is None

        gaps = candidate_gaps(50, 4096)
        assert aperiodicity_check(gaps, 512) == 8

        for signal in (seq, gaps):
            assert parseval_residual(signal, power_spectrum(signal)) <= 1e-9


class TestPlotContract:

    def test_squares_at_77_and_91(self, prime_set_1e6):
        """The cycle strip from 50 marks 77 and 91 as candidate composites."""
        assert _markers(render_cycle_strip(50, 60, prime_set_1e6), "rect", "candidate-composite") == [77, 91]

    def test_rays_byte_deterministic(self, prime_set_1e6):
        """Two renders of the rays figure are byte-identical."""
        config = PlotConfig.from_settings(2000)
        assert render_rays(config, prime_set_1e6).encode() == render_rays(config, prime_set_1e6).encode()


class TestBench:

    def test_ten_million(self):
        """Sieves agree at 10**7 and the wheel stays within 8/30."""
        report = run_bench(10**7)
        assert report.sieves_agree
        assert report.row("wheel_sieve").fraction_examined <= WHEEL_FRACTION_BOUND

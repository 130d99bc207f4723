"""Verification - checks the wheel claims against the oracle in bulk.

Checks (all exact, vectorized over a PrimeSet):
- necessity: every prime p > 5 is a candidate
- sufficiency: no certain composite (non-candidate > 5) is prime
- density: each window [30m, 30m + 29], m >= 1, holds exactly 8 candidates
  and at most 8 primes. Window 0 is excluded; it holds 10 primes.
- ray coverage: {p mod 360 : prime p > 5} equals the 96 thick degrees

Violation lists are truncated to MAX_REPORTED entries; counts are exact.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from core.oracle import PrimeSet, sieve
from core.rays import DEGREES, thick_ray_degrees
from core.wheel import WHEEL_MODULUS, candidate_mask

MAX_REPORTED = 20


@dataclass
class ConclusionReport:
    max_n: int
    primes_checked: int = 0
    necessity_violations: int = 0
    sufficiency_violations: int = 0
    windows_checked: int = 0
    density_violations: int = 0
    rays_observed: int = 0
    missing_rays: List[int] = field(default_factory=list)
    unexpected_rays: List[int] = field(default_factory=list)
    examples: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.necessity_violations == 0
            and self.sufficiency_violations == 0
            and self.density_violations == 0
            and not self.unexpected_rays
        )

    @property
    def rays_complete(self) -> bool:
        """All 96 thick degrees hit. Empirical; small max_n legitimately misses some."""
        return not self.missing_rays and not self.unexpected_rays


def verify_conclusions(max_n: int, prime_set: Optional[PrimeSet] = None) -> ConclusionReport:
    """Run every bulk check over [1, max_n].

    Args:
        max_n: upper bound (inclusive), >= 2
        prime_set: oracle covering max_n; sieved on demand when omitted
    """
    if prime_set is None or prime_set.limit < max_n:
        prime_set = sieve(max_n)

    flags = prime_set.to_bool_array()[: max_n + 1]
    numbers = np.arange(max_n + 1, dtype=np.int64)
    on_wheel = candidate_mask(numbers)
    above_five = numbers > 5

    report = ConclusionReport(max_n=max_n)

    primes = numbers[flags]
    big_primes = primes[primes > 5]
    report.primes_checked = int(big_primes.size)

    off_wheel_primes = big_primes[~candidate_mask(big_primes)]
    report.necessity_violations = int(off_wheel_primes.size)
    report.examples.extend(int(p) for p in off_wheel_primes[:MAX_REPORTED])

    composite_claims = flags & above_five & ~on_wheel
    report.sufficiency_violations = int(np.count_nonzero(composite_claims))
    report.examples.extend(int(n) for n in np.flatnonzero(composite_claims)[:MAX_REPORTED])

    windows = (max_n + 1) // WHEEL_MODULUS - 1
    if windows > 0:
        span = slice(WHEEL_MODULUS, WHEEL_MODULUS * (windows + 1))
        cand_counts = on_wheel[span].reshape(windows, WHEEL_MODULUS).sum(axis=1)
        prime_counts = flags[span].reshape(windows, WHEEL_MODULUS).sum(axis=1)
        bad = (cand_counts != 8) | (prime_counts > 8)
        report.windows_checked = windows
        report.density_violations = int(np.count_nonzero(bad))

    observed = set(np.unique(big_primes % DEGREES).tolist())
    thick = set(thick_ray_degrees())
    report.rays_observed = len(observed)
    report.missing_rays = sorted(thick - observed)
    report.unexpected_rays = sorted(observed - thick)

    if report.ok:
        logging.info(f"Conclusions hold up to {max_n}: {report.primes_checked} primes, {windows} windows")
    else:
        logging.warning(f"Conclusion violations up to {max_n}: {report}")
    return report

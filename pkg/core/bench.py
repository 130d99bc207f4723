"""Bench - plain sieve vs wheel sieve vs the bare candidate filter.

Wall-clock numbers are informational. The structural result is the work
counter: positions each method stores or examines, as a fraction of limit.
The wheel sieve stays at or below 8/30 of the positions; the odd-only
sieve at 1/2; the candidate filter examines every position once but decides
nothing beyond "certain composite or not".
"""

import logging
import time
from dataclasses import dataclass, field
from typing import List

import numpy as np

from core.oracle import sieve, wheel_sieve
from core.wheel import candidate_mask

WHEEL_FRACTION_BOUND = 8 / 30

# Candidate filter works through [1, limit] this many numbers at a time.
FILTER_CHUNK = 1 << 22


@dataclass(frozen=True)
class BenchRow:
    method: str
    seconds: float
    positions_examined: int
    fraction_examined: float
    found: int                 # primes for sieves, candidates for the filter
    throughput: float          # numbers covered per second

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "seconds": self.seconds,
            "positions_examined": self.positions_examined,
            "fraction_examined": self.fraction_examined,
            "found": self.found,
            "throughput": self.throughput,
        }


@dataclass
class BenchReport:
    limit: int
    rows: List[BenchRow] = field(default_factory=list)

    def row(self, method: str) -> BenchRow:
        for r in self.rows:
            if r.method == method:
                return r
        raise KeyError(method)

    @property
    def sieves_agree(self) -> bool:
        return self.row("sieve").found == self.row("wheel_sieve").found

    @property
    def wheel_within_bound(self) -> bool:
        return self.row("wheel_sieve").fraction_examined <= WHEEL_FRACTION_BOUND


def _row(method: str, limit: int, seconds: float, positions: int, found: int) -> BenchRow:
    return BenchRow(
        method=method,
        seconds=seconds,
        positions_examined=positions,
        fraction_examined=positions / limit,
        found=found,
        throughput=limit / seconds if seconds > 0 else float("inf"),
    )


def count_candidates(limit: int, chunk: int = FILTER_CHUNK) -> int:
    """Run the candidate filter over every number in [1, limit], one chunk at a time."""
    total = 0
    for lo in range(1, limit + 1, chunk):
        hi = min(lo + chunk, limit + 1)
        total += int(np.count_nonzero(candidate_mask(np.arange(lo, hi, dtype=np.int64))))
    return total


def run_bench(limit: int) -> BenchReport:
    """Time the three methods over [1, limit]."""
    report = BenchReport(limit=limit)

    t0 = time.perf_counter()
    plain = sieve(limit)
    report.rows.append(_row("sieve", limit, time.perf_counter() - t0, plain.positions_examined, plain.count))

    t0 = time.perf_counter()
    wheel = wheel_sieve(limit)
    report.rows.append(_row("wheel_sieve", limit, time.perf_counter() - t0, wheel.positions_examined, wheel.count))

    t0 = time.perf_counter()
    candidates = count_candidates(limit)
    report.rows.append(_row("candidate_filter", limit, time.perf_counter() - t0, limit, candidates))

    logging.info(
        f"Bench limit={limit}: wheel fraction={report.row('wheel_sieve').fraction_examined:.4f}, "
        f"sieves agree={report.sieves_agree}"
    )
    return report

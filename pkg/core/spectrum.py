"""Spectrum - chaoticity proxies for the primes among wheel candidates.

The unfiltered candidates are perfectly regular: their gaps repeat
6-4-2-4-2-4-6-2 forever. Marking each candidate 1 (prime) or 0 (composite)
destroys that order. Two falsifiable proxies stand in for "chaotic":

1. aperiodicity_check finds no exact period up to max_period.
2. power_spectrum shows no single dominant line.

power = |X_k|**2 / N over the mean-removed signal, so the bins sum to the
signal energy (Parseval).
"""

import csv
import logging
from dataclasses import dataclass
from itertools import islice
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

import numpy as np

from core.cyclicity import BLOCK_ORIGIN, BLOCK_SIZE
from core.exceptions import DegenerateInputError, OutputWriteError
from core.oracle import PrimalityOracle, as_oracle
from core.wheel import iter_candidates, require_natural


@dataclass(frozen=True)
class IndicatorSequence:
    """One bit per successive candidate >= start: 1 prime, 0 composite.

    INVARIANTS:
    - len(values) == len(candidates) > 0
    - candidates strictly ascending
    """
    start: int
    candidates: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        assert len(self.values) > 0, "indicator sequence must not be empty"
        assert len(self.values) == len(self.candidates), "one bit per candidate"

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)

    def zeros(self) -> List[int]:
        """Candidates marked composite."""
        return [c for c, v in zip(self.candidates, self.values) if v == 0]


@dataclass(frozen=True)
class SpectrumBin:
    frequency_index: int
    power: float


@dataclass(frozen=True)
class CandidateCensus:
    """Prime/composite counts among candidates of whole 30-blocks from 50 on."""
    blocks: int
    candidates: int
    primes: int
    composites: int
    all_prime_blocks: int


Signal = Union[IndicatorSequence, Sequence[float], np.ndarray]


def _as_signal(seq: Signal) -> np.ndarray:
    if isinstance(seq, IndicatorSequence):
        return seq.as_array()
    return np.asarray(seq, dtype=np.float64)


def indicator(start: int, count: int, oracle: Optional[PrimalityOracle] = None) -> IndicatorSequence:
    """Primality bits of the first `count` candidates >= start."""
    start = require_natural(start, "start")
    count = require_natural(count, "count")
    check = as_oracle(oracle)
    candidates = tuple(islice(iter_candidates(start), count))
    values = tuple(1 if check(c) else 0 for c in candidates)
    return IndicatorSequence(start=start, candidates=candidates, values=values)


def candidate_gaps(start: int, count: int) -> List[int]:
    """Differences between `count + 1` successive candidates >= start."""
    start = require_natural(start, "start")
    count = require_natural(count, "count")
    cands = list(islice(iter_candidates(start), count + 1))
    return [b - a for a, b in zip(cands, cands[1:])]


def power_spectrum(seq: Signal) -> List[SpectrumBin]:
    """Power per frequency index of the mean-removed signal.

    Raises:
        DegenerateInputError: fewer than 2 samples
    """
    x = _as_signal(seq)
    if x.size < 2:
        raise DegenerateInputError(f"power spectrum needs at least 2 samples, got {x.size}")
    centered = x - x.mean()
    transform = np.fft.fft(centered)
    power = np.abs(transform) ** 2 / x.size
    return [SpectrumBin(frequency_index=k, power=float(pw)) for k, pw in enumerate(power)]


def parseval_residual(seq: Signal, bins: Sequence[SpectrumBin]) -> float:
    """|sum(power) - energy| / energy of the mean-removed signal (0 for a flat signal)."""
    x = _as_signal(seq)
    energy = float(np.sum((x - x.mean()) ** 2))
    total = float(sum(b.power for b in bins))
    if energy == 0.0:
        return abs(total)
    return abs(total - energy) / energy


def dominance_ratio(bins: Sequence[SpectrumBin]) -> float:
    """Largest non-DC bin power over total non-DC power (0 when there is none)."""
    non_dc = [b.power for b in bins if b.frequency_index != 0]
    total = sum(non_dc)
    if total == 0.0:
        return 0.0
    return max(non_dc) / total


def dominant_bin(bins: Sequence[SpectrumBin]) -> Optional[SpectrumBin]:
    non_dc = [b for b in bins if b.frequency_index != 0]
    if not non_dc:
        return None
    return max(non_dc, key=lambda b: (b.power, -b.frequency_index))


def aperiodicity_check(seq: Signal, max_period: int) -> Optional[int]:
    """Smallest p <= max_period with seq[i] == seq[i + p] over the whole window, or None.

    Raises:
        DegenerateInputError: max_period < 1 or max_period >= len(seq) / 2
    """
    x = _as_signal(seq)
    if max_period < 1 or 2 * max_period >= x.size:
        raise DegenerateInputError(
            f"max_period must satisfy 1 <= max_period < len/2, got {max_period} for length {x.size}"
        )
    for p in range(1, max_period + 1):
        if np.array_equal(x[p:], x[:-p]):
            return p
    return None


def candidate_census(blocks: int, oracle: Optional[PrimalityOracle] = None) -> CandidateCensus:
    """Count prime and composite candidates over the first `blocks` 30-blocks from 50."""
    blocks = require_natural(blocks, "blocks")
    check = as_oracle(oracle)
    primes = composites = all_prime = 0
    for b in range(blocks):
        start = BLOCK_ORIGIN + BLOCK_SIZE * b
        block_composites = 0
        for c in islice(iter_candidates(start), 8):
            if check(c):
                primes += 1
            else:
                block_composites += 1
        composites += block_composites
        if block_composites == 0:
            all_prime += 1
    return CandidateCensus(
        blocks=blocks,
        candidates=primes + composites,
        primes=primes,
        composites=composites,
        all_prime_blocks=all_prime,
    )


def write_spectrum_csv(bins: Iterable[SpectrumBin], path: Union[str, Path]) -> int:
    """Write `frequency_index,power` rows with a header; returns data rows written.

    Raises:
        OutputWriteError: destination not writable
    """
    destination = Path(path)
    rows = 0
    try:
        with open(destination, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["frequency_index", "power"])
            for b in bins:
                writer.writerow([b.frequency_index, repr(b.power)])
                rows += 1
    except OSError as e:
        raise OutputWriteError(str(destination), e) from e
    logging.info(f"Wrote {rows} spectrum rows to {destination}")
    return rows

"""Cyclicity - the 30-number blocks starting at 50 + 30*b.

Inside each block the non-candidates fall into runs ("parcels") of
3-5-1-5-3-1-3-1 and the candidates into groups of 1-2-1-2-2, where two
candidates share a group iff exactly one non-candidate separates them.
Candidacy depends only on n mod 30, so every block repeats block 0 (50..79).

Numbers below 50 are outside rhythm verification.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from core.exceptions import InvalidRangeError
from core.wheel import is_candidate

BLOCK_ORIGIN = 50
BLOCK_SIZE = 30

CANONICAL_PARCELS: tuple[int, ...] = (3, 5, 1, 5, 3, 1, 3, 1)
CANONICAL_GROUPS: tuple[int, ...] = (1, 2, 1, 2, 2)

# Offsets of the candidates from the block start (53, 59, 61, 67, 71, 73, 77, 79 in block 0).
CANDIDATE_OFFSETS: tuple[int, ...] = (3, 9, 11, 17, 21, 23, 27, 29)


@dataclass(frozen=True)
class CycleBlock:
    """One 30-number window.

    INVARIANTS:
    - start == 50 + 30 * block_index
    - sum(parcels) + len(candidates) == 30
    """
    block_index: int
    start: int
    parcels: tuple[int, ...]
    candidate_groups: tuple[int, ...]
    candidates: tuple[int, ...]

    def __post_init__(self):
        assert self.start == BLOCK_ORIGIN + BLOCK_SIZE * self.block_index, \
            f"block {self.block_index} must start at {BLOCK_ORIGIN + BLOCK_SIZE * self.block_index}"
        assert sum(self.parcels) + len(self.candidates) == BLOCK_SIZE, \
            f"block {self.block_index}: parcels and candidates must cover 30 numbers"

    @property
    def members(self) -> range:
        return range(self.start, self.start + BLOCK_SIZE)

    @property
    def end(self) -> int:
        return self.start + BLOCK_SIZE - 1


@dataclass(frozen=True)
class RhythmViolation:
    block_index: int
    parcels: tuple[int, ...]
    candidate_groups: tuple[int, ...]


@dataclass(frozen=True)
class RhythmReport:
    """Outcome of checking blocks 0..max_block.

    INVARIANT: first_violation is None => every checked block matched.
    """
    blocks_checked: int
    first_violation: Optional[RhythmViolation] = None

    @property
    def ok(self) -> bool:
        return self.first_violation is None


def build_block(b: int) -> CycleBlock:
    """Build block b (numbers 50 + 30b .. 79 + 30b).

    Raises:
        InvalidRangeError: b negative or not an integer
    """
    if isinstance(b, bool) or not isinstance(b, int) or b < 0:
        raise InvalidRangeError(f"block index must be a nonnegative integer, got {b!r}")

    start = BLOCK_ORIGIN + BLOCK_SIZE * b
    parcels: list[int] = []
    groups: list[int] = []
    candidates: list[int] = []

    run = 0
    previous_candidate: Optional[int] = None
    for m in range(start, start + BLOCK_SIZE):
        if not is_candidate(m):
            run += 1
            continue
        if run:
            parcels.append(run)
            run = 0
        if previous_candidate is not None and m - previous_candidate == 2:
            groups[-1] += 1
        else:
            groups.append(1)
        candidates.append(m)
        previous_candidate = m
    if run:
        parcels.append(run)

    return CycleBlock(
        block_index=b,
        start=start,
        parcels=tuple(parcels),
        candidate_groups=tuple(groups),
        candidates=tuple(candidates),
    )


def verify_rhythm(max_block: int) -> RhythmReport:
    """Check blocks 0..max_block against both canonical rhythms."""
    if isinstance(max_block, bool) or not isinstance(max_block, int) or max_block < 0:
        raise InvalidRangeError(f"max_block must be a nonnegative integer, got {max_block!r}")

    for b in range(max_block + 1):
        block = build_block(b)
        if block.parcels != CANONICAL_PARCELS or block.candidate_groups != CANONICAL_GROUPS:
            logging.warning(f"Rhythm violation in block {b}: parcels={block.parcels}")
            return RhythmReport(
                blocks_checked=b + 1,
                first_violation=RhythmViolation(b, block.parcels, block.candidate_groups),
            )

    logging.info(f"Rhythm verified over {max_block + 1} blocks")
    return RhythmReport(blocks_checked=max_block + 1)

"""Twin candidates - positions p where both p and p + 2 are wheel candidates.

From 50 on, every such position is

    p = (30*n + 50) + k,   k in {9, 21, 27},   n = 0, 1, 2, ...

i.e. p mod 30 in {29, 11, 17}: three positions (six member slots) per 30-block.
Twin primes below 53, and those involving 3 or 5, fall outside the formula
and are reported as enumerated exceptions rather than dropped.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from core.oracle import PrimalityOracle, as_oracle
from core.wheel import WHEEL_MODULUS

TWIN_ORIGIN = 50
TWIN_OFFSETS: tuple[int, ...] = (9, 21, 27)
TWIN_RESIDUES = frozenset((TWIN_ORIGIN + k) % WHEEL_MODULUS for k in TWIN_OFFSETS)  # {29, 11, 17}

# Below this, candidate pairs exist (e.g. 47/49) that the formula never emits.
COMPLETENESS_FLOOR = 53
FIRST_TWIN_POSITION = TWIN_ORIGIN + TWIN_OFFSETS[0]


@dataclass(frozen=True)
class TwinCandidate:
    """p = 30*n + 50 + k.

    INVARIANTS:
    - k in TWIN_OFFSETS
    - p and p + 2 are both candidates
    """
    p: int
    n: int
    k: int

    def __post_init__(self):
        assert self.k in TWIN_OFFSETS, f"k must be one of {TWIN_OFFSETS}: {self.k}"
        assert self.p == WHEEL_MODULUS * self.n + TWIN_ORIGIN + self.k, \
            f"p={self.p} does not match n={self.n}, k={self.k}"


@dataclass(frozen=True)
class TwinPair:
    p: int
    q: int


@dataclass
class TwinNecessityReport:
    """Outcome of checking every oracle twin pair with p <= max_p.

    - covered: pairs produced by twin_positions
    - exceptions: pairs the formula cannot produce (below 53, or touching 3/5)
    - violations: pairs with p >= 7 whose residue is not 11, 17 or 29
    - uncovered: pairs with p >= 53 missing from twin_positions
    """
    max_p: int
    pairs_checked: int = 0
    covered: int = 0
    exceptions: List[TwinPair] = field(default_factory=list)
    violations: List[TwinPair] = field(default_factory=list)
    uncovered: List[TwinPair] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.uncovered


def twin_slots_per_block() -> int:
    """Member numbers of twin positions per 30-block (two per position)."""
    return 2 * len(TWIN_OFFSETS)


def is_twin_position(p: int) -> bool:
    """True iff the formula produces p."""
    return p >= FIRST_TWIN_POSITION and (p - TWIN_ORIGIN) % WHEEL_MODULUS in TWIN_OFFSETS


def twin_positions(max_p: int) -> List[TwinCandidate]:
    """Every twin-candidate position p <= max_p, ascending. Empty below 59."""
    out: List[TwinCandidate] = []
    n = 0
    while True:
        base = WHEEL_MODULUS * n + TWIN_ORIGIN
        if base + TWIN_OFFSETS[0] > max_p:
            break
        for k in TWIN_OFFSETS:
            p = base + k
            if p <= max_p:
                out.append(TwinCandidate(p=p, n=n, k=k))
        n += 1
    return out


def realized_twins(max_p: int, oracle: Optional[PrimalityOracle] = None) -> List[tuple[TwinCandidate, bool]]:
    """Each twin position paired with whether (p, p + 2) is a real twin-prime pair."""
    check = as_oracle(oracle)
    return [(tc, bool(check(tc.p) and check(tc.p + 2))) for tc in twin_positions(max_p)]


def verify_twin_necessity(max_p: int, oracle: Optional[PrimalityOracle] = None) -> TwinNecessityReport:
    """Check every twin prime pair (p, p + 2) with p <= max_p against the formula.

    The oracle must answer up to max_p + 2.
    """
    check = as_oracle(oracle)
    report = TwinNecessityReport(max_p=max_p)

    for p in range(3, max_p + 1, 2):
        if not (check(p) and check(p + 2)):
            continue
        pair = TwinPair(p, p + 2)
        report.pairs_checked += 1

        if p < COMPLETENESS_FLOOR:
            report.exceptions.append(pair)
            if p >= 7 and p % WHEEL_MODULUS not in TWIN_RESIDUES:
                report.violations.append(pair)
            continue

        if p % WHEEL_MODULUS not in TWIN_RESIDUES:
            report.violations.append(pair)
        if is_twin_position(p):
            report.covered += 1
        else:
            report.uncovered.append(pair)

    logging.info(
        f"Twin necessity up to {max_p}: pairs={report.pairs_checked}, "
        f"covered={report.covered}, exceptions={len(report.exceptions)}, "
        f"violations={len(report.violations)}"
    )
    return report

"""Wheel core - mod-30 membership, classification and candidate generation.

Every natural number n >= 1 gets exactly one verdict:

- SpecialPrime(2 | 3 | 5): the three primes the wheel cannot represent.
- Candidate(pn0, n): n == pn0 + 30*n for a base residue pn0. Necessary for
  primality, never sufficient (77 and 91 are candidates).
- CertainComposite(value): shares a factor with 30 and is not 2, 3 or 5.

1 is classified Candidate(1, 0) because 1 belongs to the base set; it is
neither prime nor composite and the oracle layer says so.

All arithmetic is exact integer arithmetic. No floats in this module.
"""

from dataclasses import dataclass
from typing import Iterator, List, Union

import numpy as np

from core.exceptions import DomainError, InvalidRangeError

WHEEL_MODULUS = 30

# Reduced residue system mod 30, ascending.
BASE_RESIDUES: tuple[int, ...] = (1, 7, 11, 13, 17, 19, 23, 29)
BASE_RESIDUE_SET = frozenset(BASE_RESIDUES)

SPECIAL_PRIMES: tuple[int, ...] = (2, 3, 5)

# Largest value accepted as a NaturalNumber.
MAX_NATURAL = 2**64 - 1

_CANDIDATE_TABLE = np.zeros(WHEEL_MODULUS, dtype=bool)
_CANDIDATE_TABLE[list(BASE_RESIDUES)] = True


@dataclass(frozen=True)
class SpecialPrime:
    """2, 3 or 5."""
    value: int

    def __post_init__(self):
        assert self.value in SPECIAL_PRIMES, f"not a special prime: {self.value}"

    @property
    def kind(self) -> str:
        return "special_prime"


@dataclass(frozen=True)
class Candidate:
    """pn0 + 30*n with pn0 in the base set.

    INVARIANTS:
    - pn0 is one of BASE_RESIDUES
    - n >= 0
    """
    pn0: int
    n: int

    def __post_init__(self):
        assert self.pn0 in BASE_RESIDUE_SET, f"pn0 must be a base residue: {self.pn0}"
        assert self.n >= 0, f"multiplier must be nonnegative: {self.n}"

    @property
    def kind(self) -> str:
        return "candidate"

    @property
    def value(self) -> int:
        return self.pn0 + WHEEL_MODULUS * self.n


@dataclass(frozen=True)
class CertainComposite:
    """A number sharing a factor with 30, other than 2, 3 and 5."""
    value: int

    @property
    def kind(self) -> str:
        return "certain_composite"


WheelClass = Union[SpecialPrime, Candidate, CertainComposite]


def require_natural(n: int, name: str = "n") -> int:
    """Validate that n is a natural number in the 64-bit range.

    Raises:
        DomainError: for non-integers (bool included), n < 1 or n > 2**64 - 1
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DomainError(f"{name} must be an integer, got {type(n).__name__}")
    n = int(n)
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")
    if n > MAX_NATURAL:
        raise DomainError(f"{name} exceeds the 64-bit range: {n}")
    return n


def residue30(n: int) -> int:
    """n mod 30."""
    return require_natural(n) % WHEEL_MODULUS


def is_candidate(n: int) -> bool:
    """True iff n mod 30 is a base residue. No validation; hot path."""
    return n % WHEEL_MODULUS in BASE_RESIDUE_SET


def candidate_mask(values: np.ndarray) -> np.ndarray:
    """Vectorized is_candidate over an integer array."""
    return _CANDIDATE_TABLE[np.asarray(values, dtype=np.int64) % WHEEL_MODULUS]


def classify(n: int) -> WheelClass:
    """Classify n by the integrality of (n - pn0) / 30.

    Raises:
        DomainError: n outside the natural-number domain (including 0)
    """
    n = require_natural(n)
    if n in SPECIAL_PRIMES:
        return SpecialPrime(n)
    pn0 = n % WHEEL_MODULUS
    if pn0 in BASE_RESIDUE_SET:
        return Candidate(pn0, (n - pn0) // WHEEL_MODULUS)
    return CertainComposite(n)


def encode(verdict: WheelClass) -> int:
    """Re-encode a verdict into the number it represents."""
    return verdict.value


def iter_candidates(start: int = 1) -> Iterator[int]:
    """Yield candidates >= start in ascending order, forever."""
    start = require_natural(start, "start")
    base = start - start % WHEEL_MODULUS
    while True:
        for r in BASE_RESIDUES:
            m = base + r
            if m >= start:
                yield m
        base += WHEEL_MODULUS


def _check_range(lo: int, hi: int) -> tuple[int, int]:
    lo = require_natural(lo, "lo")
    hi = require_natural(hi, "hi")
    if lo > hi:
        raise InvalidRangeError(f"invalid range: lo={lo} > hi={hi}")
    return lo, hi


def candidates_in_range(lo: int, hi: int) -> List[int]:
    """All candidates m with lo <= m <= hi, ascending. 2, 3, 5 are excluded."""
    lo, hi = _check_range(lo, hi)
    out: List[int] = []
    for m in iter_candidates(lo):
        if m > hi:
            break
        out.append(m)
    return out


def certain_composites_in_range(lo: int, hi: int) -> List[int]:
    """Every number in [lo, hi] known composite from its residue alone."""
    lo, hi = _check_range(lo, hi)
    return [
        m for m in range(lo, hi + 1)
        if m % WHEEL_MODULUS not in BASE_RESIDUE_SET and m not in SPECIAL_PRIMES
    ]

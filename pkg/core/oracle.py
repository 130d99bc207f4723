"""Primality oracle - independent ground truth for every verification path.

Three sources, one contract:
- sieve(limit): odd-only Eratosthenes over numpy bool storage.
- wheel_sieve(limit): Eratosthenes over wheel-30 storage. Only candidates are
  stored and crossed off; 2, 3 and 5 are added back at the end.
- is_prime(n): deterministic Miller-Rabin, exact below 2**64.

Both sieves return a PrimeSet with identical membership for the same limit.
"""

import logging
from typing import Callable, Optional, Union

import numpy as np

from core.exceptions import InvalidRangeError, ResourceRefusedError
from core.settings import Settings
from core.wheel import BASE_RESIDUES, SPECIAL_PRIMES, WHEEL_MODULUS, require_natural

# Witness set proven deterministic for n < 3.3e24 (covers 64-bit).
MR_WITNESSES: tuple[int, ...] = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SPOKES = len(BASE_RESIDUES)

# Wheel index of each base residue inside its 30-block; -1 off the wheel.
_WHEEL_POSITION = np.full(WHEEL_MODULUS, -1, dtype=np.int64)
_WHEEL_POSITION[list(BASE_RESIDUES)] = np.arange(_SPOKES)


class PrimeSet:
    """Exact prime membership over [0, limit], stored as a packed bitset.

    INVARIANTS:
    - p in prime_set <=> p is prime, for 0 <= p <= limit
    - 0 and 1 are never members

    positions_examined records how many slots the constructing sieve stored;
    it is metadata for the bench and takes no part in equality.
    """

    def __init__(self, limit: int, is_prime_flags: np.ndarray, positions_examined: int = 0):
        if is_prime_flags.shape != (limit + 1,):
            raise ValueError(f"flag array must cover 0..{limit}")
        self.limit = limit
        self._bits = np.packbits(is_prime_flags.astype(bool, copy=False), bitorder="little")
        self._count = int(np.count_nonzero(is_prime_flags))
        self.positions_examined = positions_examined

    def contains(self, n: int) -> bool:
        if n < 0 or n > self.limit:
            raise InvalidRangeError(f"{n} is outside the sieved range 0..{self.limit}")
        return bool((self._bits[n >> 3] >> (n & 7)) & 1)

    __contains__ = contains

    def __call__(self, n: int) -> bool:
        return self.contains(n)

    def __len__(self) -> int:
        return self._count

    @property
    def count(self) -> int:
        return self._count

    def to_bool_array(self) -> np.ndarray:
        return np.unpackbits(self._bits, count=self.limit + 1, bitorder="little").astype(bool)

    def primes(self) -> np.ndarray:
        """All members, ascending, as int64."""
        return np.flatnonzero(self.to_bool_array()).astype(np.int64)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PrimeSet):
            return NotImplemented
        return self.limit == other.limit and np.array_equal(self._bits, other._bits)

    def __repr__(self) -> str:
        return f"PrimeSet(limit={self.limit}, count={self._count})"


# An oracle is anything answering "is n prime?"; PrimeSet and is_prime both qualify.
PrimalityOracle = Union[PrimeSet, Callable[[int], bool]]


def _check_limit(limit: int) -> int:
    if isinstance(limit, bool) or not isinstance(limit, (int, np.integer)):
        raise InvalidRangeError(f"limit must be an integer, got {type(limit).__name__}")
    limit = int(limit)
    if limit < 2:
        raise InvalidRangeError(f"sieve limit must be >= 2, got {limit}")
    cap = Settings.get().oracle.sieve_cap
    if limit > cap:
        raise ResourceRefusedError("sieve", f"limit {limit} exceeds the bulk sieve cap {cap}")
    return limit


def sieve(limit: int) -> PrimeSet:
    """Plain odd-only sieve of Eratosthenes over [0, limit].

    Raises:
        InvalidRangeError: limit < 2
        ResourceRefusedError: limit above oracle.sieve_cap
    """
    limit = _check_limit(limit)

    # odd[i] stands for 2*i + 1
    odd = np.ones((limit + 1) // 2, dtype=bool)
    odd[0] = False
    p = 3
    while p * p <= limit:
        if odd[p // 2]:
            odd[p * p // 2::p] = False
        p += 2

    flags = np.zeros(limit + 1, dtype=bool)
    flags[1::2] = odd
    flags[2] = True

    result = PrimeSet(limit, flags, positions_examined=odd.size)
    logging.info(f"Sieve complete: limit={limit}, primes={result.count}")
    return result


def wheel_index(n: int) -> int:
    """Slot of candidate n in wheel-30 storage."""
    return _SPOKES * (n // WHEEL_MODULUS) + int(_WHEEL_POSITION[n % WHEEL_MODULUS])


def wheel_slot_count(limit: int) -> int:
    """Number of wheel-30 slots holding values 1..limit."""
    full, rem = divmod(limit, WHEEL_MODULUS)
    return _SPOKES * full + sum(1 for r in BASE_RESIDUES if r <= rem)


def wheel_value(slot: int) -> int:
    """Candidate stored at a wheel-30 slot; inverse of wheel_index."""
    return WHEEL_MODULUS * (slot // _SPOKES) + BASE_RESIDUES[slot % _SPOKES]


def wheel_sieve(limit: int) -> PrimeSet:
    """Sieve of Eratosthenes that only stores and crosses off wheel candidates.

    For a prime p >= 7 and a base residue r, the multiples p*m with m = r (mod 30)
    sit every 8*p slots, so each (p, r) pair is one strided slice. Slot j of
    spoke r holds r + 30*j, so spoke r maps onto flags[r::30].

    Raises:
        InvalidRangeError: limit < 2
        ResourceRefusedError: limit above oracle.sieve_cap
    """
    limit = _check_limit(limit)

    slots = wheel_slot_count(limit)
    flags_wheel = np.ones(slots, dtype=bool)
    flags_wheel[0] = False  # 1

    for i in range(1, slots):
        p = wheel_value(i)
        if p * p > limit:
            break
        if not flags_wheel[i]:
            continue
        for r in BASE_RESIDUES:
            m = p + (r - p) % WHEEL_MODULUS
            first = p * m
            if first > limit:
                continue
            flags_wheel[wheel_index(first)::_SPOKES * p] = False

    flags = np.zeros(limit + 1, dtype=bool)
    for spoke, r in enumerate(BASE_RESIDUES):
        flags[r::WHEEL_MODULUS] = flags_wheel[spoke::_SPOKES]
    del flags_wheel
    for sp in SPECIAL_PRIMES:
        if sp <= limit:
            flags[sp] = True

    result = PrimeSet(limit, flags, positions_examined=slots)
    logging.info(f"Wheel sieve complete: limit={limit}, primes={result.count}, slots={slots}")
    return result


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 1 <= n < 2**64."""
    n = require_natural(n)
    if n < 2:
        return False
    for p in MR_WITNESSES:
        if n % p == 0:
            return n == p

    # n - 1 = 2**r * d with d odd
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1

    for a in MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = pow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def as_oracle(oracle: Optional[PrimalityOracle] = None) -> Callable[[int], bool]:
    """Normalize an oracle argument; None means is_prime."""
    return is_prime if oracle is None else oracle


def prime_set_covering(n: int) -> PrimeSet:
    """Plain sieve large enough to answer for every value up to n."""
    return sieve(max(2, int(n)))

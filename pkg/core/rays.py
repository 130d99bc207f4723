"""Ray geometry - places numbers in the plane, one degree per unit.

Number n sits at radius n and angle n degrees:

    x(n) = n * cos(n * pi / 180)
    y(n) = n * sin(n * pi / 180)

The angle is reduced to n mod 360 in integer arithmetic BEFORE the trig call.
For n around 7e6 the unreduced float argument loses several digits.

Numbers sharing n mod 360 lie on one half-line (ray). 96 of the 360 rays
carry every prime above 5 ("thick" rays); the rest only hold composites.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import numpy as np

from core.wheel import BASE_RESIDUE_SET, WHEEL_MODULUS, require_natural

DEGREES = 360


class RayKind(str, Enum):
    THICK = "thick"
    THIN = "thin"


@dataclass(frozen=True)
class PolarPoint:
    """Placement of n in the plane.

    INVARIANTS:
    - x**2 + y**2 == n**2 within relative 1e-9
    - ray_degree == n mod 360
    """
    n: int
    x: float
    y: float
    ray_degree: int


def ray_degree(n: int) -> int:
    """n mod 360."""
    return require_natural(n) % DEGREES


def polar_coordinates(n: int) -> PolarPoint:
    """Place n at radius n, angle (n mod 360) degrees."""
    n = require_natural(n)
    degree = n % DEGREES
    theta = math.radians(degree)
    return PolarPoint(n=n, x=n * math.cos(theta), y=n * math.sin(theta), ray_degree=degree)


def polar_array(ns: Iterable[int]) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized polar_coordinates: returns (x, y) arrays."""
    n = np.asarray(ns if isinstance(ns, np.ndarray) else list(ns), dtype=np.int64)
    theta = np.radians((n % DEGREES).astype(np.float64))
    radius = n.astype(np.float64)
    return radius * np.cos(theta), radius * np.sin(theta)


_THICK_DEGREES: tuple[int, ...] = tuple(
    d for d in range(DEGREES) if d % WHEEL_MODULUS in BASE_RESIDUE_SET
)
_THICK_DEGREE_SET = frozenset(_THICK_DEGREES)


def thick_ray_degrees() -> tuple[int, ...]:
    """The 96 ray degrees whose residue mod 30 is a base residue, ascending."""
    return _THICK_DEGREES


def is_thick_degree(degree: int) -> bool:
    return degree in _THICK_DEGREE_SET


def ray_kind(n: int) -> RayKind:
    """Thick iff n's ray carries primes (n mod 360 mod 30 in the base set)."""
    return RayKind.THICK if ray_degree(n) in _THICK_DEGREE_SET else RayKind.THIN

"""Exact dyadic angles on the unit circle and arithmetic in Z/2^l.

Angles are kept as ``numerator / 2**level`` turns with an arbitrary-precision
numerator; floating point only enters when a point is handed to ``cos``/``sin``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TAU = 2.0 * math.pi


@dataclass(frozen=True)
class DyadicAngle:
    """The angle ``numerator / 2**level`` turns, i.e. the point e(numerator/2**level)."""

    numerator: int
    level: int

    def __post_init__(self):
        if self.level < 0:
            raise ValueError(f"level must be >= 0, got {self.level}")
        object.__setattr__(self, "numerator", self.numerator % (1 << self.level))

    @property
    def modulus(self) -> int:
        return 1 << self.level

    def lift(self, level: int) -> "DyadicAngle":
        """Same angle written over the finer denominator ``2**level``."""
        if level < self.level:
            raise ValueError("cannot lift to a coarser level")
        return DyadicAngle(self.numerator << (level - self.level), level)

    def point(self) -> complex:
        return to_unit_point(self)

    def __neg__(self) -> "DyadicAngle":
        return DyadicAngle(-self.numerator, self.level)

    def __str__(self):
        return f"{self.numerator}/2^{self.level}"


@dataclass(frozen=True)
class OddResidue:
    """An odd element of Z/2^level."""

    value: int
    level: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError(f"level must be >= 1, got {self.level}")
        if not (0 < self.value < (1 << self.level)) or self.value % 2 == 0:
            raise ValueError(f"{self.value} is not an odd residue mod 2^{self.level}")

    def conjugate(self) -> "OddResidue":
        return OddResidue((1 << self.level) - self.value, self.level)

    def as_angle(self) -> DyadicAngle:
        return DyadicAngle(self.value, self.level)


def inv3_mod_pow2(ell: int) -> int:
    """Inverse of 3 in Z/2^ell, as an odd integer in [1, 2^ell)."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    return pow(3, -1, 1 << ell)


def two_thirds_mod_pow2(ell: int) -> int:
    """The multiplier 2 * 3^-1 mod 2^ell."""
    return (2 * inv3_mod_pow2(ell)) % (1 << ell)


def order_of_3(n: int) -> int:
    """Multiplicative order of 3 modulo 2^n, found by repeated squaring.

    The order is a power of two, so it is the least 2^k with 3^(2^k) = 1.
    """
    if n < 3:
        raise ValueError("order_of_3 is defined here for n >= 3")
    mod = 1 << n
    g, order = 3 % mod, 1
    while g != 1:
        g = g * g % mod
        order *= 2
    return order


def angle_fraction(numerator: int, level: int) -> float:
    """numerator / 2**level reduced into (-1/2, 1/2], as a correctly rounded float."""
    mod = 1 << level
    numerator %= mod
    if 2 * numerator > mod:
        numerator -= mod
    # int/int true division is correctly rounded even for huge operands
    return numerator / mod


def to_unit_point(t: DyadicAngle) -> complex:
    """e(t) as a complex double."""
    x = TAU * angle_fraction(t.numerator, t.level)
    return complex(math.cos(x), math.sin(x))


def halves_of_triple(t: DyadicAngle) -> tuple[DyadicAngle, DyadicAngle]:
    """The two square roots of e(t)^3: angles 3t/2 and 3t/2 + 1/2, one level finer."""
    level = t.level + 1
    first = DyadicAngle(3 * t.numerator, level)
    second = DyadicAngle(3 * t.numerator + (1 << t.level), level)
    return first, second

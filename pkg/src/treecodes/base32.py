"""Multiplication by 2/3 in Z/2^l on signed representatives, and base-3/2 expansions of one.

With residues written as integers in (-2^(l-1), 2^(l-1)], each step
z -> (2/3) z mod 2^l is the integer map z' = (2/3)(z + a 2^(l-1)) for a
branch index a in {-2..2}. Following an odd z down to 2^(l-1) produces
coefficients a_1..a_(l-1) for which

    |1 - sum_{j=1}^{l-1} (2/3)^j a_(l-j)| <= (2/3)^(l-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .dyadic import OddResidue, two_thirds_mod_pow2

SEARCH_MAX_ELL = 40
ENUM_MAX_ELL = 24


class TrajectoryError(ArithmeticError):
    """A 2/3-trajectory failed to end at 2^(l-1); indicates an arithmetic bug."""


def signed(value: int, ell: int) -> int:
    """Representative of value mod 2^ell in (-2^(ell-1), 2^(ell-1)]."""
    mod = 1 << ell
    value %= mod
    return value - mod if 2 * value > mod else value


@dataclass(frozen=True)
class CoeffSeq:
    a: tuple[int, ...]
    level: int

    def __post_init__(self):
        if len(self.a) != self.level - 1:
            raise ValueError(f"a level-{self.level} sequence has {self.level - 1} coefficients")
        if any(v not in (-2, -1, 0, 1, 2) for v in self.a):
            raise ValueError("coefficients must lie in {-2, ..., 2}")

    @property
    def nonzero(self) -> int:
        return sum(v != 0 for v in self.a)

    def __str__(self):
        return ",".join(map(str, self.a))


def branch_step(z: int, ell: int) -> tuple[int, int]:
    """(z', a) with z' = (2/3)(z + a 2^(ell-1)) the signed form of (2/3) z mod 2^ell."""
    if ell < 2:
        raise ValueError("branch_step needs ell >= 2")
    if signed(z, ell) != z:
        raise ValueError(f"{z} is not a signed representative mod 2^{ell}")
    z_next = signed(two_thirds_mod_pow2(ell) * z, ell)
    a, rem = divmod(3 * (z_next // 2) - z, 1 << (ell - 1))
    if rem or not -2 <= a <= 2:
        raise TrajectoryError(f"no branch of 2/3 maps {z} to {z_next} mod 2^{ell}")
    return z_next, a


def trajectory_coeffs(z: OddResidue) -> CoeffSeq:
    ell = z.level
    cur = signed(z.value, ell)
    a = []
    for _ in range(ell - 1):
        cur, coeff = branch_step(cur, ell)
        a.append(coeff)
    if cur != 1 << (ell - 1):
        raise TrajectoryError(f"trajectory of {z.value} mod 2^{ell} ended at {cur}")
    return CoeffSeq(tuple(a), ell)


def verify_eq7(c: CoeffSeq | Sequence[int]) -> tuple[bool, Fraction]:
    """Check |1 - sum_j (2/3)^j a_(l-j)| <= (2/3)^(l-1) exactly; return (holds, 1 - sum).

    Both sides are scaled by 3^(l-1), so the comparison is between integers.
    """
    a = tuple(c.a if isinstance(c, CoeffSeq) else c)
    k = len(a)
    scale = 3 ** k
    # 3^k * sum_j (2/3)^j a_(l-j) = sum_i a_i 2^(k+1-i) 3^(i-1)
    total, p2, p3 = 0, 1 << k, 1
    for v in a:
        total += v * p2 * p3
        p2 >>= 1
        p3 *= 3
    num = scale - total
    return abs(num) <= (1 << k), Fraction(num, scale)


def min_nonzero_fraction(ell: int) -> tuple[int, CoeffSeq]:
    """Fewest nonzero coefficients of any sequence satisfying the expansion bound.

    Scaled by 3^(l-1) the condition is |3^(l-1) - sum_i a_i w_i| <= 2^(l-1)
    with w_i = 2^(l-i) 3^(i-1). Positions are fixed from the heaviest weight
    down; a prefix is dropped when the residual is out of reach of the
    remaining budget of nonzero coefficients placed on the heaviest remaining
    weights. Budgets are tried in increasing order and every sequence at the
    first feasible budget is collected so the lexicographically smallest one
    can be returned.
    """
    if not 2 <= ell <= SEARCH_MAX_ELL:
        raise ValueError(f"search limited to 2 <= ell <= {SEARCH_MAX_ELL}; got {ell}")
    k = ell - 1
    target = 3 ** k
    tol = 1 << k
    w = [(1 << (ell - i)) * 3 ** (i - 1) for i in range(1, ell)]  # w[i-1] for a_i
    # reach[p][b]: 2 * (sum of the b heaviest weights among w[0..p-1])
    reach = []
    for p in range(k + 1):
        row, acc = [0], 0
        for b in range(1, p + 1):
            acc += w[p - b]
            row.append(2 * acc)
        reach.append(row)

    def search(budget: int) -> list[tuple[int, ...]]:
        found = []
        a = [0] * k

        def rec(p: int, residual: int, left: int):
            # positions p..k-1 fixed; p-1 down to 0 remain
            if p == 0:
                if abs(residual) <= tol:
                    found.append(tuple(a))
                return
            if abs(residual) - tol > reach[p][min(left, p)]:
                return
            i = p - 1
            a[i] = 0
            rec(i, residual, left)
            if left:
                for v in (-2, -1, 1, 2):
                    a[i] = v
                    rec(i, residual - v * w[i], left - 1)
                a[i] = 0

        rec(k, target, budget)
        return found

    for budget in range(k + 1):
        found = search(budget)
        if found:
            witness = min(found)
            return sum(v != 0 for v in witness), CoeffSeq(witness, ell)
    raise AssertionError("unreachable: the trajectory of z = 1 always satisfies the bound")


def _trajectory_counts(ell: int, z: np.ndarray) -> np.ndarray:
    mod = 1 << ell
    half = mod >> 1
    mult = two_thirds_mod_pow2(ell)
    cur = np.where(z > half, z - mod, z)
    counts = np.zeros(len(z), dtype=np.int64)
    for _ in range(ell - 1):
        nxt = (cur * mult) % mod
        nxt = np.where(nxt > half, nxt - mod, nxt)
        counts += (3 * (nxt // 2) - cur) != 0
        cur = nxt
    if not np.all(cur == half):
        raise TrajectoryError("a trajectory failed to end at 2^(l-1)")
    return counts


def nonzero_fraction_over_z(ell: int, chunk: int = 1 << 20) -> tuple[int, int]:
    """(min nonzero count over odd z of trajectory_coeffs(z), smallest minimising z)."""
    if not 1 <= ell <= ENUM_MAX_ELL:
        raise ValueError(f"enumeration limited to 1 <= ell <= {ENUM_MAX_ELL}; got {ell}")
    if ell == 1:
        return 0, 1
    best, arg = ell, 0
    count = 1 << (ell - 1)
    for start in range(0, count, chunk):
        z = 2 * np.arange(start, min(start + chunk, count), dtype=np.int64) + 1
        counts = _trajectory_counts(ell, z)
        i = int(np.argmin(counts))
        if counts[i] < best:
            best, arg = int(counts[i]), int(z[i])
    return best, arg

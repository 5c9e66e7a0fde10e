"""The tree code alpha = gamma o beta and the metrics used to audit it.

``beta`` labels each vertex of the binary tree with a point of the unit circle
whose square is the cube of its parent's point; ``gamma`` rounds a point to
one of ``kappa`` sectors. Paths are bit tuples read from the root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .dyadic import TAU, DyadicAngle, OddResidue, angle_fraction, inv3_mod_pow2, to_unit_point

EXHAUSTIVE_MAX_DEPTH = 14


@dataclass(frozen=True)
class SymbolWord:
    symbols: tuple[int, ...]
    kappa: int

    def __post_init__(self):
        if self.kappa < 2:
            raise ValueError("kappa must be >= 2")
        if any(not 0 <= s < self.kappa for s in self.symbols):
            raise ValueError(f"symbols must lie in 0..{self.kappa - 1}")

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return ",".join(map(str, self.symbols))


def _check_bits(path: Sequence[int]):
    if any(b not in (0, 1) for b in path):
        raise ValueError(f"path must be a sequence of bits, got {path!r}")


def beta_angles(path: Sequence[int], reduced: bool = False) -> list[DyadicAngle]:
    """Angles of beta along the path, excluding the root (one per prefix length 1..n).

    A vertex's point squares to the cube of its parent's, and bit ``x_k``
    picks the root ``e(3/2 * theta + x_k / 2)``. By default ``theta`` is the
    exact angle accumulated along the path, theta_k = sum_j (3/2)^(k-j) x_j / 2,
    so the inner product of two paths over their divergent region depends
    only on the bit differences. With ``reduced=True`` the parent angle is
    first taken mod 1, which relabels children and gives up that invariance.
    """
    _check_bits(path)
    out = []
    num = 0
    for k, bit in enumerate(path, start=1):
        num = 3 * num + (bit << (k - 1))
        if reduced:
            num %= 1 << k
        out.append(DyadicAngle(num, k))
    return out


def beta(path: Sequence[int], reduced: bool = False) -> DyadicAngle:
    """Angle of beta at the vertex ``path``; the root maps to angle 0 at level 0."""
    angles = beta_angles(path, reduced)
    return angles[-1] if angles else DyadicAngle(0, 0)


def sector_of_angle(t: DyadicAngle, kappa: int) -> int:
    """gamma on an exact angle: floor(kappa*t + 1/2) mod kappa, in integer arithmetic."""
    if kappa < 2:
        raise ValueError("kappa must be >= 2")
    return ((2 * kappa * t.numerator + t.modulus) >> (t.level + 1)) % kappa


def gamma(z: complex, kappa: int) -> int:
    """Index of the sector [-pi/kappa, pi/kappa) + 2*pi*l/kappa that contains ``z``."""
    if kappa < 2:
        raise ValueError("kappa must be >= 2")
    if abs(abs(z) - 1.0) > 1e-9:
        raise ValueError(f"gamma expects a unit-modulus point, got |z| = {abs(z)}")
    t = math.atan2(z.imag, z.real) / TAU
    return math.floor(kappa * t + 0.5) % kappa


def alpha_star(path: Sequence[int], kappa: int, reduced: bool = False) -> SymbolWord:
    """Labels on the path from the root to ``path``; rounding uses the exact angles."""
    return SymbolWord(tuple(sector_of_angle(t, kappa) for t in beta_angles(path, reduced)), kappa)


def tree_distance(x: Sequence[int], y: Sequence[int]) -> int:
    """Length minus the longest common prefix."""
    if len(x) != len(y):
        raise ValueError("tree distance is defined between vertices of the same level")
    for i, (a, b) in enumerate(zip(x, y)):
        if a != b:
            return len(x) - i
    return 0


def hamming(s: SymbolWord | Sequence[int], t: SymbolWord | Sequence[int]) -> int:
    if isinstance(s, SymbolWord) and isinstance(t, SymbolWord) and s.kappa != t.kappa:
        raise ValueError("words over different alphabets")
    s = s.symbols if isinstance(s, SymbolWord) else tuple(s)
    t = t.symbols if isinstance(t, SymbolWord) else tuple(t)
    if len(s) != len(t):
        raise ValueError("hamming distance needs words of equal length")
    return sum(a != b for a, b in zip(s, t))


def eta_bound(z, z_prime, kappa: int) -> float:
    """Fraction eta with hamming(gamma(z), gamma(z')) >= eta * len(z) for unit vectors."""
    z = np.asarray(z, dtype=complex)
    z_prime = np.asarray(z_prime, dtype=complex)
    if z.shape != z_prime.shape or z.ndim != 1 or len(z) == 0:
        raise ValueError("eta_bound needs two non-empty vectors of equal length")
    c = math.cos(TAU / kappa)
    inner = np.real(np.vdot(z_prime, z)) / len(z)
    return (c - inner) / (1 + c)


def _check_diff(y: Sequence[int]):
    if len(y) == 0 or y[0] != 1:
        raise ValueError("a difference sequence must start with y_1 = 1")
    if any(v not in (-1, 0, 1) for v in y):
        raise ValueError("difference entries must lie in {-1, 0, 1}")


def divergent_pair_sum(y: Sequence[int]) -> complex:
    """Average of e((1/2) sum_j (3/2)^(i-j) y_j) over i = 1..len(y).

    The i-th exponent is the dyadic angle (sum_j 2^(j-1) 3^(i-j) y_j) / 2^i.
    """
    _check_diff(y)
    num = 0
    re = im = 0.0
    for i, v in enumerate(y, start=1):
        # no reduction here: 3 * 2^(i-1) is not divisible by 2^i
        num = 3 * num + (v << (i - 1))
        x = TAU * angle_fraction(num, i)
        re += math.cos(x)
        im += math.sin(x)
    return complex(re, im) / len(y)


def y_to_z(y: Sequence[int]) -> OddResidue:
    """z = sum_j 2^(j-1) 3^(l-j) y_j mod 2^l, accumulated as z <- 3z + 2^(i-1) y_i."""
    _check_diff(y)
    z = 0
    for i, v in enumerate(y):
        z = 3 * z + (v << i)
    return OddResidue(z % (1 << len(y)), len(y))


def z_to_y(z: OddResidue) -> tuple[int, ...]:
    """A difference sequence with y_to_z(y) == z.

    Built digit by digit: the prefix of length k must represent z * 3^-(l-k)
    mod 2^k, and each new digit is the first of 0, 1, -1 that achieves it.
    """
    ell = z.level
    inv3 = inv3_mod_pow2(ell)
    targets = [z.value * pow(inv3, ell - k, 1 << ell) % (1 << k) for k in range(1, ell + 1)]
    y = []
    acc = 0
    for k, target in enumerate(targets, start=1):
        for digit in (0, 1, -1):
            cand = 3 * acc + digit * (1 << (k - 1))
            if cand % (1 << k) == target and (k > 1 or digit == 1):
                y.append(digit)
                acc = cand
                break
        else:
            raise ArithmeticError(f"no digit extends the representation at step {k}")
    return tuple(y)


# --- exhaustive audits ------------------------------------------------------

def _level_tables(m: int, kappa: int, reduced: bool):
    """Symbols and unit points for all 2^m paths at level m (row = path as MSB-first int)."""
    bits = (np.arange(1 << m)[:, None] >> np.arange(m - 1, -1, -1)[None, :]) & 1
    syms = np.empty((1 << m, m), dtype=np.int64)
    pts = np.empty((1 << m, m), dtype=complex)
    nums = np.zeros(1 << m, dtype=np.int64)
    for k in range(1, m + 1):
        nums = 3 * nums + (bits[:, k - 1] << (k - 1))  # < 3^k, fits int64 for k <= 14
        if reduced:
            nums %= 1 << k
        red = nums % (1 << k)
        syms[:, k - 1] = ((2 * kappa * red + (1 << k)) >> (k + 1)) % kappa
        pts[:, k - 1] = np.exp(1j * TAU * (red / (1 << k)))
    return syms, pts


@dataclass
class DistanceAudit:
    """Result of an exhaustive scan of all same-level pairs up to a depth."""

    depth: int
    kappa: int
    min_fraction: float
    worst_pair: tuple[tuple[int, ...], tuple[int, ...]]
    root_min_fraction: float
    # keyed by tree distance d = 1..depth
    min_hamming: dict[int, int]
    max_inner: dict[int, float]

    @property
    def root_scan_agrees(self) -> bool:
        return math.isclose(self.min_fraction, self.root_min_fraction)


def _bits(v: int, m: int) -> tuple[int, ...]:
    return tuple((v >> (m - 1 - i)) & 1 for i in range(m))


def exhaustive_min_distance(n: int, kappa: int, reduced: bool = False) -> DistanceAudit:
    """Minimum of hamming / tree distance over all pairs x != x' at every level <= n.

    Alongside the full pair scan, the minimum restricted to pairs that diverge
    at the root is reported, as are the per-distance minimum Hamming distance
    and maximum real inner product over the divergent region. Ties go to the
    lexicographically smallest (level, x, x').
    """
    if not 1 <= n <= EXHAUSTIVE_MAX_DEPTH:
        raise ValueError(f"exhaustive scan limited to 1 <= n <= {EXHAUSTIVE_MAX_DEPTH} "
                         f"(4^n pairs); got n = {n}")
    best, where = math.inf, None
    root_best = math.inf
    min_ham = {d: n + 1 for d in range(1, n + 1)}
    max_inner = {d: -math.inf for d in range(1, n + 1)}
    for m in range(1, n + 1):
        syms, pts = _level_tables(m, kappa, reduced)
        for i in range((1 << m) - 1):
            j = np.arange(i + 1, 1 << m)
            d = np.frexp((i ^ j).astype(float))[1]  # bit length of i ^ j
            ham = (syms[j] != syms[i]).sum(axis=1)
            # positions before the divergence are identical and contribute 1 each
            inner = np.real(pts[j].conj() @ pts[i]) - (m - d)
            frac = ham / d
            k = int(np.argmin(frac))
            if frac[k] < best - 1e-12:
                best, where = float(frac[k]), (m, i, int(j[k]))
            root = d == m
            if root.any():
                root_best = min(root_best, float(frac[root].min()))
            for dd in np.unique(d):
                sel = d == dd
                min_ham[int(dd)] = min(min_ham[int(dd)], int(ham[sel].min()))
                max_inner[int(dd)] = max(max_inner[int(dd)], float(inner[sel].max()))
    m, i, j = where
    return DistanceAudit(n, kappa, best, (_bits(i, m), _bits(j, m)), root_best, min_ham, max_inner)

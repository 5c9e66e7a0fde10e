"""Block code m -> (gamma(e(3^k m / 2^n)))_{k < cn} over Z/2^n."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .dyadic import TAU, DyadicAngle, order_of_3
from .treecode import SymbolWord, sector_of_angle

SCAN_MAX_N = 24
HIST_EDGES = np.linspace(-1.0, 1.0, 201)


@dataclass(frozen=True)
class BlockParams:
    n: int
    c: int
    kappa: int

    def __post_init__(self):
        if self.n < 1 or self.c < 1:
            raise ValueError("n and c must be positive")
        if self.kappa < 5:
            raise ValueError("kappa must be >= 5; the rounding bound is vacuous for kappa <= 4")

    @property
    def length(self) -> int:
        return self.c * self.n


def _residues(m: int, n: int, count: int) -> list[int]:
    mod = 1 << n
    out, r = [], m % mod
    for _ in range(count):
        out.append(r)
        r = 3 * r % mod
    return out


def block_encode(m: int, p: BlockParams | None = None, *, n: int | None = None,
                 c: int | None = None, kappa: int | None = None) -> SymbolWord:
    """Codeword of ``m``: symbol k is the sector of e(3^k m / 2^n), k = 0..cn-1.

    Parameters come either as a BlockParams or as keywords; the keyword form
    skips the kappa >= 5 check so small alphabets can be inspected.
    """
    if p is not None:
        n, c, kappa = p.n, p.c, p.kappa
    if not 0 <= m < (1 << n):
        raise ValueError(f"message must lie in [0, 2^{n})")
    syms = tuple(sector_of_angle(DyadicAngle(r, n), kappa) for r in _residues(m, n, c * n))
    return SymbolWord(syms, kappa)


def conj1_lhs(m: int, n: int, c: int) -> float:
    """Real part of (1/cn) sum_{k<cn} e(3^k m / 2^n)."""
    if not 0 <= m < (1 << n):
        raise ValueError(f"m must lie in [0, 2^{n})")
    mod = 1 << n
    return math.fsum(math.cos(TAU * r / mod) for r in _residues(m, n, c * n)) / (c * n)


@dataclass
class Conj1Scan:
    n: int
    c: int
    max_value: float
    argmax: int
    histogram: np.ndarray  # counts per 0.01-wide bin over [-1, 1]

    def histogram_rows(self):
        for lo, hi, count in zip(HIST_EDGES[:-1], HIST_EDGES[1:], self.histogram):
            yield round(float(lo), 2), round(float(hi), 2), int(count)


def conj1_scan(n: int, c: int, chunk: int = 1 << 18) -> Conj1Scan:
    """conj1_lhs for every nonzero m: maximum, smallest maximiser and histogram."""
    if not 1 <= n <= SCAN_MAX_N:
        raise ValueError(f"scan limited to 1 <= n <= {SCAN_MAX_N}; got n = {n}")
    mod = 1 << n
    hist = np.zeros(len(HIST_EDGES) - 1, dtype=np.int64)
    best, arg = -math.inf, 0
    for start in range(1, mod, chunk):
        m = np.arange(start, min(start + chunk, mod), dtype=np.int64)
        r = m.copy()
        acc = np.zeros(len(m))
        for _ in range(c * n):
            acc += np.cos(TAU * (r / mod))
            r = 3 * r % mod
        vals = np.clip(acc / (c * n), -1.0, 1.0)
        hist += np.histogram(vals, bins=HIST_EDGES)[0]
        top = vals.max()
        if top > best + 1e-12:
            best, arg = float(top), int(m[np.flatnonzero(vals >= top - 1e-12)[0]])
    return Conj1Scan(n, c, best, arg, hist)


def subgroup_sum(n: int, r: int, m: int) -> complex:
    """Average of e(g^k m / 2^n) over one period of g = 3^(2^r).

    Zero unless 2^(n-r-2) divides m, in which case it equals e(m / 2^n).
    """
    if r < 1 or n < r + 3:
        raise ValueError("need r >= 1 and n >= r + 3")
    mod = 1 << n
    g = pow(3, 1 << r, mod)
    period = order_of_3(n) >> r
    total, x = 0j, m % mod
    for _ in range(period):
        total += cmath.exp(1j * TAU * x / mod)
        x = x * g % mod
    return total / period


def block_distance_bound(kappa: int, delta: float) -> float:
    """Guaranteed relative distance eta when every nonzero message has sum <= 1 - delta."""
    if not 0 < delta <= 2:
        raise ValueError("delta must lie in (0, 2]")
    cos_k = math.cos(TAU / kappa)
    if cos_k <= 1 - delta:
        need = math.floor(TAU / math.acos(1 - delta)) + 1 if delta < 2 else 3
        raise ValueError(f"kappa = {kappa} too small for delta = {delta}: "
                         f"need cos(2*pi/kappa) > {1 - delta}, i.e. kappa >= {need}")
    return (cos_k - (1 - delta)) / (1 + cos_k)

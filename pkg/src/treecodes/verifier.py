"""Certification of the worst exponential sum 1 - delta_l.

For an odd residue ``z`` mod ``2**l`` the averaged sum

    S(z) = (1/l) * sum_{m<l} e((2/3)^m z / 2^l)

is the inner product of a pair of tree paths diverging at the root. The
largest real part over odd ``z`` is ``1 - delta_l``; it is computed here by
plain enumeration (``brute_delta``) and by depth-first branch and bound over
the square-root tree (``bb_delta``).

The square-root tree starts at -1 (angle 1/2) and a node at depth ``k`` with
angle ``a/2^k`` has children ``3a/2^(k+1)`` and ``(3a + 2^k)/2^(k+1)``. A
root-to-leaf path of length ``l``, read backwards, is the residue sequence of
``S(z)`` for ``z`` equal to the leaf numerator.
"""

from __future__ import annotations

import math
import multiprocessing as mp
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .dyadic import (TAU, DyadicAngle, OddResidue, angle_fraction, halves_of_triple, to_unit_point,
                     two_thirds_mod_pow2)

BRUTE_MAX_ELL = 26
TIE_TOL = 1e-12


@dataclass(frozen=True)
class SearchNode:
    partial_sum: complex
    depth: int
    angle: DyadicAngle


@dataclass(frozen=True)
class DeltaRecord:
    ell: int
    nodes: int
    worst_z: int
    one_minus_delta: float

    @property
    def worst_fraction(self) -> tuple[int, int]:
        """(numerator, log2 denominator) of z/2^l."""
        return self.worst_z, self.ell


def root_node(symmetry: bool = True) -> SearchNode:
    """Start of the square-root tree: -1, followed by -i when conjugate pairs are folded."""
    if symmetry:
        return SearchNode(complex(-1, -1), 2, DyadicAngle(3, 2))
    return SearchNode(complex(-1, 0), 1, DyadicAngle(1, 1))


def expand(node: SearchNode) -> tuple[SearchNode, SearchNode]:
    """Both children of a node, the one with larger real part first."""
    kids = [SearchNode(node.partial_sum + to_unit_point(t), node.depth + 1, t)
            for t in halves_of_triple(node.angle)]
    kids.sort(key=lambda k: -(k.partial_sum.real))
    return kids[0], kids[1]


def residue_trajectory(z: int, ell: int) -> list[int]:
    """[(2/3)^m z mod 2^ell for m in 0..ell-1]."""
    mod = 1 << ell
    mult = two_thirds_mod_pow2(ell)
    out = []
    r = z % mod
    for _ in range(ell):
        out.append(r)
        r = r * mult % mod
    return out


def conj3_sum(z: OddResidue | int, ell: int | None = None) -> complex:
    """The averaged sum S(z) as a complex number."""
    if isinstance(z, OddResidue):
        z, ell = z.value, z.level
    elif ell is None:
        raise TypeError("ell is required when z is a plain integer")
    OddResidue(z % (1 << ell), ell)
    total = sum(to_unit_point(DyadicAngle(r, ell)) for r in residue_trajectory(z, ell))
    return total / ell


def _canonical_z(z: int, ell: int) -> int:
    """Smaller member of the conjugate pair {z, 2^ell - z}."""
    return min(z, (1 << ell) - z)


def brute_delta(ell: int, chunk: int = 1 << 20) -> DeltaRecord:
    """1 - delta_ell by evaluating S(z) for every odd z (vectorised over z)."""
    if not 1 <= ell <= BRUTE_MAX_ELL:
        raise ValueError(f"brute_delta needs 1 <= ell <= {BRUTE_MAX_ELL}, got {ell}")
    mod = 1 << ell
    mult = two_thirds_mod_pow2(ell)
    count = mod // 2
    best_val, best_z = -math.inf, 0
    for start in range(0, count, chunk):
        z = 2 * np.arange(start, min(start + chunk, count), dtype=np.int64) + 1
        r = z.copy()
        acc = np.zeros(len(z))
        for _ in range(ell):
            acc += np.cos(TAU * (r / mod))
            r = (r * mult) % mod
        vals = acc / ell
        m = vals.max()
        if m > best_val + TIE_TOL:
            best_val = float(m)
            best_z = int(z[np.flatnonzero(vals >= m - TIE_TOL)[0]])
    return DeltaRecord(ell, count, best_z, best_val)


# --- branch and bound -------------------------------------------------------

_shared_bound = None


def _init_worker(bound):
    global _shared_bound
    _shared_bound = bound


def _dfs(re0: float, depth0: int, num0: int, ell: int, bound: float, prune: bool, shared=None):
    """Depth-first search below one node. Returns (best sum, leaf numerator, nodes)."""
    best, best_num, nodes = -math.inf, -1, 0
    cos = math.cos
    stack = [(re0, depth0, num0)]
    pop, push = stack.pop, stack.append
    while stack:
        re, depth, num = pop()
        nodes += 1
        if depth == ell:
            if re > best:
                best, best_num = re, num
                if shared is not None and re > shared.value:
                    with shared.get_lock():
                        if re > shared.value:
                            shared.value = re
            continue
        if prune:
            limit = best if best > bound else bound
            if shared is not None and shared.value > limit:
                limit = shared.value
            if re + (ell - depth) <= limit:
                continue
        half = 1 << depth
        mod = half << 1
        a1 = 3 * num % mod
        c1 = cos(TAU * (a1 / mod))
        a2 = a1 + half if a1 < half else a1 - half
        # the two roots are antipodal; push the negative one first so the
        # positive-real-part root is explored first
        if c1 < 0:
            push((re + c1, depth + 1, a1))
            push((re - c1, depth + 1, a2))
        else:
            push((re - c1, depth + 1, a2))
            push((re + c1, depth + 1, a1))
    return best, best_num, nodes


def _dfs_task(args):
    return _dfs(*args, shared=_shared_bound)


def _start_node(symmetry: bool) -> tuple[float, int, int]:
    # -1 at angle 1/2; with symmetry the second term is pinned to -i (angle 3/4)
    return (-1.0, 2, 3) if symmetry else (-1.0, 1, 1)


def _frontier(start, ell: int, depth: int) -> list[tuple[float, int, int]]:
    """All descendants of ``start`` at ``depth`` (or ``ell`` if shallower)."""
    nodes = [start]
    target = min(depth, ell)
    while nodes and nodes[0][1] < target:
        nxt = []
        for re, d, num in nodes:
            half = 1 << d
            mod = half << 1
            a1 = 3 * num % mod
            c1 = math.cos(TAU * (a1 / mod))
            nxt.append((re + c1, d + 1, a1))
            nxt.append((re - c1, d + 1, (a1 + half) % mod))
        nodes = nxt
    return nodes


def _search_length(ell, bound, symmetry, prune, pool=None, shared=None, split_depth=12, workers=1):
    start = _start_node(symmetry)
    if pool is None or ell <= 2 * split_depth:
        best, num, nodes = _dfs(*start, ell, bound, prune)
    else:
        shared.value = bound
        front = _frontier(start, ell, split_depth)
        tasks = [(*node, ell, bound, prune) for node in front]
        results = pool.map(_dfs_task, tasks, chunksize=max(1, len(tasks) // (8 * workers)))
        best, num, nodes = -math.inf, -1, len(front) - 1
        for b, n, k in results:
            nodes += k
            if b > best + TIE_TOL or (abs(b - best) <= TIE_TOL and n >= 0
                                      and _canonical_z(n, ell) < _canonical_z(num, ell)):
                best, num = b, n
    return best, num, nodes


def bb_delta(ell_max: int, *, symmetry: bool = True, prune: bool = True, workers: int = 1,
             split_depth: int = 12) -> Iterator[DeltaRecord]:
    """Yield a DeltaRecord for every ell = 1..ell_max, in order.

    The best total sum for ``ell`` seeds the pruning bound for ``ell + 1``:
    one of the two roots always has real part >= 0, so the maximum never
    drops. Node counts are exact only with ``workers == 1``.
    """
    if ell_max < 1:
        raise ValueError("ell_max must be >= 1")
    pool = shared = None
    if workers > 1:
        shared = mp.Value("d", -math.inf)
        pool = ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(shared,))
    try:
        yield DeltaRecord(1, 1, 1, -1.0)
        bound = -1.0
        for ell in range(2, ell_max + 1):
            best, num, nodes = _search_length(ell, bound, symmetry, prune, pool, shared, split_depth, workers)
            if num < 0:
                # nothing beat the carried bound (only possible through a float tie)
                best, num, extra = _search_length(ell, -math.inf, symmetry, prune, pool, shared,
                                                  split_depth, workers)
                nodes += extra
            bound = best
            yield DeltaRecord(ell, nodes, _canonical_z(num, ell), best / ell)
    finally:
        if pool is not None:
            pool.shutdown()


def default_workers() -> int:
    return os.cpu_count() or 1


def enumerate_paths(ell: int) -> Iterator[list[DyadicAngle]]:
    """Every root-to-leaf angle sequence of the square-root tree of length ``ell``."""

    def walk(path):
        if len(path) == ell:
            yield path
            return
        for child in halves_of_triple(path[-1]):
            yield from walk(path + [child])

    yield from walk([DyadicAngle(1, 1)])


def _greedy(ell: int, pick) -> float:
    num, level = 1, 1
    total = -1.0
    for _ in range(ell - 1):
        half = 1 << level
        a1 = 3 * num % (half << 1)
        a2 = (a1 + half) % (half << 1)
        level += 1
        num = pick(a1, a2, level)
        total += math.cos(TAU * angle_fraction(num, level))
    return total / ell


def _positive_re(a1, a2, level):
    # real part > 0 iff the angle is within a quarter turn of 0; the roots are
    # antipodal, so a tie means they sit at +-1/4 and +1/4 (i.e. +i) wins
    q = 1 << (level - 2)
    if a1 < q or a1 > 3 * q:
        return a1
    if a2 < q or a2 > 3 * q:
        return a2
    return q


def greedy_positive_re(ell: int) -> float:
    """Running average of real parts when the root with positive real part is always taken.

    On a tie (both roots purely imaginary) the root +i is chosen.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    return _greedy(ell, _positive_re)


def _in_sector(a: int, level: int) -> bool:
    # angle a/2^level in turns lies in [-1/6, 1/3)
    mod = 1 << level
    return 6 * a < 2 * mod or 6 * a >= 5 * mod


def greedy_sector(ell: int) -> float:
    """Running average of real parts when the root with argument in [-pi/3, 2pi/3) is taken."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    return _greedy(ell, lambda a1, a2, level: a1 if _in_sector(a1, level) else a2)


def alphabet_bound(sup_value: float) -> int:
    """Smallest alphabet size kappa with kappa > 2*pi / arccos(sup_value)."""
    if not -1.0 < sup_value < 1.0:
        raise ValueError(f"sup_value must lie in (-1, 1) to certify a finite alphabet, got {sup_value}")
    return math.floor(TAU / math.acos(sup_value)) + 1

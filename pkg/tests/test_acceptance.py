"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py`` for the default set; criterion 3 is a
long reproduction job enabled with ``--extended``. A PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import itertools
import math
import random

import numpy as np
import pytest

from treecodes.base32 import trajectory_coeffs, verify_eq7
from treecodes.blockcode import conj1_scan, subgroup_sum
from treecodes.dyadic import OddResidue, order_of_3
from treecodes.tables import reference_values
from treecodes.treecode import (beta_angles, divergent_pair_sum, eta_bound,
                                exhaustive_min_distance, gamma, y_to_z, z_to_y)
from treecodes.dyadic import to_unit_point
from treecodes.verifier import (bb_delta, brute_delta, conj3_sum, greedy_positive_re,
                                greedy_sector)

REFERENCE = {r.ell: r for r in reference_values()}


@pytest.fixture(scope="module")
def bb60():
    return list(bb_delta(60, workers=1))


def test_criterion_01_golden_short_range():
    for ell in range(1, 25):
        rec = brute_delta(ell)
        assert abs(rec.one_minus_delta - REFERENCE[ell].one_minus_delta) <= 1e-6, ell


def test_criterion_02_golden_mid_range(bb60):
    assert [r.ell for r in bb60] == list(range(1, 61))
    for rec in bb60:
        assert abs(rec.one_minus_delta - REFERENCE[rec.ell].one_minus_delta) <= 1e-6, rec.ell
    assert abs(bb60[19].one_minus_delta - 0.55916641) <= 1e-6
    assert abs(bb60[59].one_minus_delta - 0.71419406) <= 1e-6


@pytest.mark.extended
def test_criterion_03_extended_reproduction():
    recs = list(bb_delta(90, workers=1))
    for rec in recs:
        assert abs(rec.one_minus_delta - REFERENCE[rec.ell].one_minus_delta) <= 1e-6, rec.ell
    top = max(recs, key=lambda r: r.one_minus_delta)
    assert top.ell == 88
    assert round(top.one_minus_delta, 4) == 0.7512
    assert abs(recs[88].one_minus_delta - 0.74874461) <= 1e-6


def test_criterion_04_oracle_equivalence():
    brute = {ell: brute_delta(ell).one_minus_delta for ell in range(1, 23)}
    for symmetry in (True, False):
        for rec in bb_delta(22, symmetry=symmetry):
            assert abs(rec.one_minus_delta - brute[rec.ell]) <= 1e-9, (symmetry, rec.ell)
    for symmetry in (True, False):
        for rec in bb_delta(18, symmetry=symmetry, prune=False):
            assert abs(rec.one_minus_delta - brute[rec.ell]) <= 1e-9, (symmetry, rec.ell)


def test_criterion_05_divergent_sums_equal_residue_sums():
    for ell in range(1, 15):
        table = {z: conj3_sum(z, ell) for z in range(1, 1 << ell, 2)}
        for tail in itertools.product((-1, 0, 1), repeat=ell - 1):
            y = (1, *tail)
            assert abs(divergent_pair_sum(y) - table[y_to_z(y).value]) <= 1e-9, y
    for ell in range(1, 17):
        for z in range(1, 1 << ell, 2):
            assert y_to_z(z_to_y(OddResidue(z, ell))).value == z


def test_criterion_06_tree_distance_audit():
    n, kappa = 10, 10
    audit = exhaustive_min_distance(n, kappa)
    assert audit.min_fraction > 0
    cos_k = math.cos(2 * math.pi / kappa)
    fractions = []
    for d in range(1, n + 1):
        worst_inner = d * brute_delta(d).one_minus_delta
        assert audit.max_inner[d] == pytest.approx(worst_inner, abs=1e-9)
        bound = (cos_k - worst_inner / d) / (1 + cos_k) * d
        assert audit.min_hamming[d] >= bound - 1e-9, d
        fractions.append(bound / d)
    assert audit.min_fraction >= min(fractions) - 1e-9


def test_criterion_07_distance_bound_random_pairs():
    rng = np.random.default_rng(7)
    for trial in range(10_000):
        kappa = int(rng.integers(5, 17))
        n = int(rng.integers(1, 41))
        z = np.exp(2j * np.pi * rng.random(n))
        spread = [0.0, 0.02, 0.1, 0.5][trial % 4]
        zp = z * np.exp(2j * np.pi * rng.normal(0, spread, n)) if spread else np.exp(
            2j * np.pi * rng.random(n))
        ham = sum(gamma(a, kappa) != gamma(b, kappa) for a, b in zip(z, zp))
        assert ham >= eta_bound(z, zp, kappa) * n - 1e-9


def test_criterion_08_translation_invariance():
    rng = random.Random(8)

    def inner(prefix, s, sp):
        a = beta_angles(prefix + s)[len(prefix):]
        b = beta_angles(prefix + sp)[len(prefix):]
        return sum(to_unit_point(u) * to_unit_point(v).conjugate() for u, v in zip(a, b))

    for _ in range(1000):
        k, ell = rng.randint(0, 40), rng.randint(1, 40)
        p = tuple(rng.randint(0, 1) for _ in range(k))
        q = tuple(rng.randint(0, 1) for _ in range(k))
        s = (1, *(rng.randint(0, 1) for _ in range(ell - 1)))
        sp = (0, *(rng.randint(0, 1) for _ in range(ell - 1)))
        assert abs(inner(p, s, sp) - inner(q, s, sp)) <= 1e-9


def test_criterion_09_block_code_sums():
    scan = conj1_scan(20, 2)
    assert scan.max_value < 1
    assert scan.histogram.sum() == (1 << 20) - 1
    for r in (1, 2):
        for n in range(r + 3, 11):
            h = 1 << (n - r - 2)
            for m in range(1 << n):
                expected = np.exp(2j * np.pi * m / 2 ** n) if m % h == 0 else 0
                assert abs(subgroup_sum(n, r, m) - expected) <= 1e-9
    for n in range(3, 31):
        assert order_of_3(n) == 2 ** (n - 2)


def test_criterion_10_base_three_halves():
    for ell in range(1, 17):
        for z in range(1, 1 << ell, 2):
            c = trajectory_coeffs(OddResidue(z, ell))  # raises if the endpoint is not 2^(l-1)
            assert verify_eq7(c)[0], (z, ell)
    for ell in range(2, 200):
        assert not verify_eq7((0,) * (ell - 1))[0]


def test_criterion_11_greedy_baselines():
    assert abs(greedy_positive_re(1000) - 0.335) <= 0.03
    assert abs(greedy_sector(1000) - 0.631) <= 0.03


def test_criterion_12_node_growth(bb60):
    ells = np.array([r.ell for r in bb60 if 30 <= r.ell <= 60])
    nodes = np.array([r.nodes for r in bb60 if 30 <= r.ell <= 60])
    slope = np.polyfit(ells, np.log2(nodes), 1)[0]
    assert 0.20 <= slope <= 0.35, slope

"""Tree codes from the square-root-of-cube map on the unit circle, with tools to certify them."""

from .dyadic import DyadicAngle, OddResidue, halves_of_triple, inv3_mod_pow2, order_of_3, to_unit_point
from .treecode import (SymbolWord, alpha_star, beta, divergent_pair_sum, eta_bound,
                       exhaustive_min_distance, gamma, hamming, tree_distance, y_to_z, z_to_y)
from .blockcode import BlockParams, block_distance_bound, block_encode, conj1_lhs, conj1_scan, subgroup_sum
from .verifier import (DeltaRecord, alphabet_bound, bb_delta, brute_delta, conj3_sum,
                       greedy_positive_re, greedy_sector)
from .base32 import (CoeffSeq, branch_step, min_nonzero_fraction, nonzero_fraction_over_z,
                     trajectory_coeffs, verify_eq7)

__version__ = "0.1.0"

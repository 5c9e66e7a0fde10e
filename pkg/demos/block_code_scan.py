# coding: utf-8

# # Block codes from powers of 3
#
# A block codeword repeats the orbit m, 3m, 9m, ... mod 2^n and rounds each
# point to one of kappa sectors. The average cosine over the orbit controls its distance.

import numpy as np

from treecodes import block_distance_bound, block_encode, conj1_lhs, conj1_scan, subgroup_sum

print("codeword for m=5:", block_encode(5, n=4, c=2, kappa=6))

# The average cosine for one message:

print(f"average cosine, m=5, n=10, c=2: {conj1_lhs(5, 10, 2):.6f}")

# ## Scanning every message
#
# The scan is vectorized over all odd m at once and keeps a histogram.

scan = conj1_scan(14, 2)
print(f"\nworst average cosine for n=14: {scan.max_value:.6f} at m={scan.argmax}")
counts = np.asarray(scan.histogram)
print("histogram mass near zero:", counts[95:105].sum(), "of", counts.sum())

# The distance guarantee that follows from the worst case:

delta = 1 - scan.max_value
print(f"guaranteed fractional distance with kappa=14: {block_distance_bound(14, delta):.6f}")

# ## Subgroup sums
#
# Averaging over a full subgroup coset of the powers of 3 cancels to zero (up to rounding).

for r in range(1, 5):
    print(f"r={r}: |sum| = {abs(subgroup_sum(12, r, 1)):.3e}")

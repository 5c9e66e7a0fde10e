# coding: utf-8

# # Auditing a small tree code
#
# Each binary message x_1..x_n picks a path in the tree.
# The label at depth k is the sector (out of kappa) holding the point at that vertex.
# Two messages that split at some depth must disagree on a good share of later labels.

from treecodes import alpha_star, beta, exhaustive_min_distance, gamma, tree_distance
from treecodes.dyadic import to_unit_point

kappa = 6
path = (1, 0, 1, 1, 0)

# The vertex angles along a path, and the labels they round to.

for k in range(1, len(path) + 1):
    a = beta(path[:k])
    print(f"depth {k}: angle {a}  sector {gamma(to_unit_point(a), kappa)}")
print("codeword:", alpha_star(path, kappa))

# ## Distance between two codewords
#
# Only the suffix after the split point counts.

other = (1, 0, 0, 1, 0)
x = alpha_star(path, kappa)
y = alpha_star(other, kappa)
print(f"\n{x}  vs  {y}: distance {tree_distance(x.symbols, y.symbols)}")

# ## Exhaustive check
#
# For depth 8 we compare every pair of messages.
# The audit also records the worst pair and the best Hamming distance per suffix length.

audit = exhaustive_min_distance(8, kappa)
print(f"\nminimum fractional distance at depth 8: {audit.min_fraction:.4f}")
print("worst pair:", audit.worst_pair)
for d in sorted(audit.min_hamming):
    print(f"  suffix length {d}: min Hamming {audit.min_hamming[d]}")

# Restricting to pairs that split at the root is much cheaper.
# After rounding, the two scans need not agree, so we just report both.

print("root-only scan:", round(audit.root_min_fraction, 4), "agrees:", audit.root_scan_agrees)

# coding: utf-8

# # Certifying the worst path sum
#
# Every odd residue z mod 2^l traces a path down the square-root tree.
# The quantity 1 - delta_l is the largest average real part over all such paths.
# Below we compute it two ways and compare against the bundled reference table.

import time

import numpy as np

from treecodes import bb_delta, brute_delta
from treecodes.tables import reference_values

# ## Brute force for short lengths
#
# For small l we can just evaluate every odd z at once with numpy.

for ell in (4, 8, 12, 16):
    r = brute_delta(ell)
    print(f"l={ell:2d}  1-delta={r.one_minus_delta:.8f}  worst z={r.worst_z}")

# ## Branch and bound
#
# The search reuses the previous length's best sum as a starting bound,
# so the whole sweep 1..40 takes a fraction of a second.

t0 = time.perf_counter()
records = list(bb_delta(40))
print(f"\nbranch and bound up to l=40 in {time.perf_counter() - t0:.2f}s")

ref = {v.ell: v for v in reference_values()}
for r in records[::5]:
    v = ref[r.ell]
    print(f"l={r.ell:2d}  ours={r.one_minus_delta:.8f}  table={v.one_minus_delta:.8f}  nodes={r.nodes}")

# The two methods agree wherever both run.

for ell in range(1, 17):
    assert abs(records[ell - 1].one_minus_delta - brute_delta(ell).one_minus_delta) < 1e-12

# ## How fast does the search grow?
#
# A straight-line fit of log2(nodes) against l gives the growth exponent.

ells = np.array([r.ell for r in records if r.ell >= 20])
nodes = np.array([r.nodes for r in records if r.ell >= 20], dtype=float)
slope = np.polyfit(ells, np.log2(nodes), 1)[0]
print(f"\nnodes grow roughly like 2^({slope:.2f} l)")

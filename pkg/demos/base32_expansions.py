# coding: utf-8

# # Writing 3/2 with few nonzero digits
#
# Following one residue z down the tree leaves a trail of digits a_i in {-2, ..., 2}.
# Those digits give an expansion of (3/2)^l that is exact up to a small error.
# How sparse can such an expansion be?

from treecodes import OddResidue, min_nonzero_fraction, nonzero_fraction_over_z, trajectory_coeffs, verify_eq7

z = OddResidue(5, 8)
c = trajectory_coeffs(z)
ok, residual = verify_eq7(c)
print(f"digits for z=5, l=8: {c}")
print(f"identity holds: {ok}, relative residual {residual}")

# ## The sparsest sequence
#
# A depth-first search over digit sequences, widening the nonzero budget until something fits.

for ell in (8, 12, 16, 20):
    k, seq = min_nonzero_fraction(ell)
    print(f"l={ell:2d}: {k} nonzero digits ({k / (ell - 1):.3f})  e.g. {seq}")

# ## Only sequences that come from a trajectory
#
# Restricting to digits produced by actual residues is a much smaller family.

for ell in (8, 12, 16, 20):
    k, arg = nonzero_fraction_over_z(ell)
    print(f"l={ell:2d}: best trajectory uses {k} nonzero digits (z={arg})")

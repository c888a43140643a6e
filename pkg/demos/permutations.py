"""Checking closed-form signs against brute-force inversion counts.

Run: python demos/permutations.py
"""
from realdisc.perm_oracle import (
    compare_sigma_readings,
    reversal_sign,
    reversal_sign_closed_form,
    split_reordering_factors,
    verify_all,
)

# Complex conjugation reverses the cyclic order of boundary points.
for k in range(1, 9):
    print(f"k={k}: inversions give {reversal_sign(k)}, closed form gives {reversal_sign_closed_form(k)}")

# Gluing a bubble at the i-th point costs two rotations of the labels.
print("\nk=5, k1=3, k2=2:")
for i in range(1, 5):
    a, b = split_reordering_factors(5, 3, 2, i)
    print(f"  i={i}: {a} * {b} = {a * b}")

# Reversing a run of k2 points versus reversing k2 + 1 of them (including the next one):
# the two differ by (-1)^k2, so they only coincide for even k2.
for k2 in range(1, 5):
    cmp = compare_sigma_readings(8, k2, 1)
    print(f"k2={k2}: literal {cmp.literal}, extended {cmp.extended}, agree {cmp.agree}")

rep = verify_all(12)
print(f"\nfull sweep: {rep.checked} checks, {len(rep.failures)} failures")

"""Boundary bubbling and why the counts are invariant only in low dimension.

Run: python demos/cancellation.py
"""
from realdisc.sign_calculus import (
    CountMode,
    admissible_splittings,
    boundary_epsilon,
    theorem_invariance_check,
)

# Along a generic path of point configurations, a disc can break into two.
# Only the splittings whose pieces are themselves rigid enough can occur.
print("splittings for dim L = 3, k = 3:")
for s in admissible_splittings(3, 3):
    print(f"  k1={s.k1} mu1={s.mu1} | k2={s.k2} mu2={s.mu2}  i={s.i}  eps={boundary_epsilon(s.k1, s.k2, s.i, 3)}")

# In dim 2 each side's Maslov index is forced by the parity of its point count.
print("\ndim L = 2, k = 5:", sorted({(s.k1, s.mu1, s.k2, s.mu2) for s in admissible_splittings(2, 5)}))

# Each broken configuration is paired with its conjugate, and the two must
# carry opposite signs for the wall-crossing contributions to cancel.
for mode, n in [(CountMode.A, 3), (CountMode.B, 2), (CountMode.A, 2), (CountMode.A, 4)]:
    rep = theorem_invariance_check(mode, n, 25)
    broken = {(k, s.k1, s.mu1, s.i) for k, s, _ in rep.failures}
    print(f"mode {mode.value}, dim {n}: {rep.checked} splittings, {len(broken)} fail to cancel on some side")

# In dim 4 a bubble's Maslov index is no longer pinned down by its point count,
# and the congruence fails on about half of the bubble sides.
k, s, side = theorem_invariance_check(CountMode.A, 4, 9).failures[0]
print(f"first failure: k={k}, (k1={s.k1}, mu1={s.mu1}) | (k2={s.k2}, mu2={s.mu2}), side {side}")

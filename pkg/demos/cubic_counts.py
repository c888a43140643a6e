"""Signed counts of real rational cubics through real configurations.

Rational cubics through eight points are the singular members of the pencil
of cubics through them. Real members have a real node that is either a
crossing (+1) or a solitary point (-1).

Run: python demos/cubic_counts.py
"""
import numpy as np

from realdisc.pencil import (
    count_pencil,
    invariance_experiment,
    pencil_through,
    sample_config,
    scale_config,
    signed_count,
)

# One configuration of 6 real points and one conjugate pair.
config = sample_config(seed=3, r=6, c=1)
pencil = pencil_through(config)
report = count_pencil(pencil)
print(f"{report.complex_member_count} singular members, {len(report.real_members)} real")
for m in report.real_members:
    print(f"  t={m.t:+.6f}  node={np.round(m.node, 4)}  {m.node_type.value:>9}  {m.sign:+d}")
print("signed count:", report.signed_count)

# Moving the points changes which members are real but not the signed total.
for r, c in [(8, 0), (6, 1), (4, 2), (2, 3)]:
    s = invariance_experiment(r, c, trials=10, base_seed=0)
    print(f"r={r} c={c}: counts {s.counts} -> {'constant' if s.passed else 'NOT constant'}")

# A real change of coordinates is just another configuration.
print("scaled by 5:", signed_count(scale_config(config, 5.0)).signed_count)

"""Probe the refined Polya-Szego constant gamma by hill climbing.

The ratio ``lambda_max(Phi(A)#Phi(B)) / lambda_max(gamma Phi(A#B))``
(after congruence normalization) exceeds 1 whenever gamma is beaten.
On the band of the first worked example the search finds such pairs.
"""
import logging

import numpy as np

from posmap_ineq import PolyaBand, check_polya_szego, search_sharpness

logging.disable(logging.WARNING)

band = PolyaBand(1.21, 16.0, 20.25, 25.0)
res = search_sharpness(band, budget=20_000, seed=2)
print(f"best ratio after {res.evaluations} evaluations: {res.best_ratio:.7f}")
for evals, ratio in res.downsampled_trace(8):
    print(f"  {evals:6d}  {ratio:.7f}")

# The best witness is a valid instance for the band; re-check it directly.
w = res.witness
chk = check_polya_szego(w)
print("\nwitness A =\n", np.round(w.A.array, 4))
print("witness B =\n", np.round(w.B.array, 4))
print(f"lambda_max lhs = {np.linalg.eigvalsh(chk.lhs)[-1]:.5f}, "
      f"lambda_max rhs = {np.linalg.eigvalsh(chk.rhs)[-1]:.5f}")
print("refined bound holds:", chk.verdict, f"(margin {chk.margin:.3e})")

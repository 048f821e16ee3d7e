"""The two 2x2 worked examples for the operator Polya-Szego bound.

Phi is the normalized trace on 2x2 matrices, so every quantity is a number.
Run from the repository root: ``python3 demos/01_worked_examples.py``.
"""
import numpy as np

from posmap_ineq import Instance, NormalizedTrace, PolyaBand, check_polya_szego, compute_psi

cases = {
    1: (np.array([[2.0, -2.0], [-2.0, 7.0]]), np.array([[21.0, 0.5], [0.5, 21.0]]),
        PolyaBand(1.21, 16.0, 20.25, 25.0)),
    2: (np.array([[6.0, -1.0], [-1.0, 5.0]]), np.array([[1.5, 0.5], [0.5, 1.2]]),
        PolyaBand(4.0, 9.0, 0.5, 2.0)),
}

for number, (A, B, band) in cases.items():
    inst = Instance(A, B, NormalizedTrace(2, 0.5), 0.5, 2.0, band, 0)
    refined = check_polya_szego(inst, refined=True)
    classic = check_polya_szego(inst, refined=False)
    psi = compute_psi(band)
    print(f"example {number}")
    print(f"  Phi(A) # Phi(B)        {refined.lhs[0, 0]:.5f}")
    print(f"  classical bound        {classic.rhs[0, 0]:.5f}")
    print(f"  refined bound (gamma)  {refined.rhs[0, 0]:.5f}   gamma = {psi.gamma:.6f}")
    print(f"  alpha, beta, t0, psi   {psi.alpha:.4g}, {psi.beta:.4g}, {psi.t0:.5f}, {psi.psi:.5f}")
    print(f"  both bounds hold: {refined.verdict and classic.verdict}")

# gamma can drop below 1, and then the refined bound cannot hold for
# proportional pairs: with A = I and B = 4I both sides are plain numbers.
band = PolyaBand(1.0, 1.0, 4.0, 4.0)
res = check_polya_szego(Instance(np.eye(2), 4 * np.eye(2), None, 0.5, 2.0, band, 0))
print()
print(f"A = I, B = 4I: lhs {res.lhs[0, 0]:.3f}, refined rhs {res.rhs[0, 0]:.3f}, "
      f"holds = {res.verdict}")

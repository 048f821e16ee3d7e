"""Weighted means, the Kantorovich constant and Loewner-order certificates."""
import numpy as np

from posmap_ineq import (
    Pinching,
    ando_check,
    arith_mean,
    choi_check,
    eig_sym,
    geo_mean,
    kantorovich,
    loewner_leq,
    young_refinement_check,
)

rng = np.random.default_rng(0)

# K(h) = (h+1)^2 / (4h) is 1 at h = 1 and symmetric under h -> 1/h
for h in (1.0, 2.0, 0.5, 4.0):
    print(f"K({h}) = {kantorovich(h):.6f}")

# A # B solves X A^{-1} X = B
A = np.array([[2.0, -2.0], [-2.0, 7.0]])
B = np.array([[21.0, 0.5], [0.5, 21.0]])
G = geo_mean(A, B, 0.5)
print("\nA # B =\n", G)
print("residual of X A^-1 X = B:", np.abs(G @ np.linalg.solve(A, G) - B).max())

# AM-GM in the Loewner order, with the certificate margin
res = loewner_leq(G, arith_mean(A, B, 0.5))
print(f"\nA # B <= A nabla B: holds = {res.holds}, margin = {res.margin:.4f}")

# the two eigen backends agree
lam_lapack, _ = eig_sym(A)
lam_jacobi, _ = eig_sym(A, method="jacobi")
print("eigenvalues (LAPACK, Jacobi):", lam_lapack, lam_jacobi)

# scalar refined Young inequality
y = young_refinement_check(1.0, 4.0, 0.5)
print(f"\nK(4)^(1/2) sqrt(4) = {y.lhs[0, 0]:.4f} <= {y.rhs[0, 0]:.4f}")

# Choi and Ando for the diagonal pinching on 3x3 matrices
phi = Pinching.diagonal(3)
X = np.array([[3.0, 1.0, 0.0], [1.0, 2.0, 0.5], [0.0, 0.5, 1.0]])
Y = np.diag([1.0, 2.0, 3.0]) + 0.3
print("Choi:", choi_check(phi, X).verdict, " Ando:", ando_check(phi, X, Y, 0.3).verdict)

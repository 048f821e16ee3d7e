"""Independent scalar oracles.

Everything here is written from the defining formulas with plain floats and
numpy elementwise arithmetic. None of it calls into the package, so it can be
used to cross-check the matrix code on simultaneously diagonal inputs.
"""

import math

import numpy as np


def K(h):
    return (h + 1.0) ** 2 / (4.0 * h)


def r_of(nu):
    return min(nu, 1.0 - nu)


def am(a, b, nu):
    return (1.0 - nu) * a + nu * b


def gm(a, b, nu):
    return a ** (1.0 - nu) * b**nu


def squared_C(m, mp, Mp, M, nu, refined):
    return K(M / m) / K(Mp / mp) ** r_of(nu) if refined else K(M / m)


def power_C(m, mp, Mp, M, nu, p, refined):
    if refined:
        return K(M / m) / (4.0 ** (2.0 / p - 1.0) * K(Mp / mp) ** r_of(nu))
    return (M + m) ** 2 / (4.0 ** (2.0 / p) * M * m)


def power4_C(m, mp, Mp, M, nu, p):
    h = M / m
    sqrt_k_h2 = (h * h + 1.0) / (2.0 * h)
    return sqrt_k_h2 * K(h) / (2.0 ** (4.0 / p - 1.0) * K(Mp / mp) ** r_of(nu))


def polya_scalars(m1_sq, M1_sq, m2_sq, M2_sq):
    m1, M1, m2, M2 = (math.sqrt(x) for x in (m1_sq, M1_sq, m2_sq, M2_sq))
    m, M = m2 / M1, M2 / m1
    if M1 < m2:
        h = m2_sq / M1_sq
    elif M2 < m1:
        h = M2_sq / m1_sq
    else:
        h = None
    out = {"m": m, "M": M, "h": h, "unrefined": (M + m) / (2.0 * math.sqrt(M * m))}
    if h is not None:
        g = (M + m) / (2.0 * math.sqrt(M * m * K(h)))
        a, b = m1 * m2, M1 * M2
        t0 = 2.0 * a * b / (g * (a + b))
        psi = g * g * (a + b) ** 2 / (4.0 * a * b) if a <= t0 else (g * (a + b) - b) / a
        out.update(gamma=g, alpha=a, beta=b, t0=t0, psi=psi)
    return out


def psi_brute_force(alpha, beta, gamma, n=200_001):
    """Max of ``f(t) = (gamma (alpha+beta) t - alpha beta) / t^2`` on ``[alpha, beta]``."""
    t = np.linspace(alpha, beta, n)
    return float(np.max((gamma * (alpha + beta) * t - alpha * beta) / t**2))


def gm2x2(a, b):
    """``A # B`` for 2x2 positive matrices via the determinant closed form."""
    sa = a / math.sqrt(np.linalg.det(a))
    sb = b / math.sqrt(np.linalg.det(b))
    s = sa + sb
    return (np.linalg.det(a) * np.linalg.det(b)) ** 0.25 * s / math.sqrt(np.linalg.det(s))


def diagonal_margin(theorem_id, a, b, nu=0.5, p=2.0, band=None, params=None):
    """Worst per-eigenvalue margin ``min_i (rhs_i - lhs_i)`` for diagonal ``A``, ``B``.

    ``a`` and ``b`` are the diagonals. ``band`` is ``(m, m', M', M)`` for
    the sandwich family and ``(m1^2, M1^2, m2^2, M2^2)`` for the
    Polya-Szego family. Returns a dict for the norm lemmas.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    params = params or {}
    r = r_of(nu)
    if theorem_id == "young":
        lhs = K(b / a) ** r * gm(a, b, nu)
        return float(np.min(am(a, b, nu) - lhs))
    if theorem_id == "choi":
        return float(np.min(1.0 / a - 1.0 / a))
    if theorem_id == "ando":
        return float(np.min(gm(a, b, nu) - gm(a, b, nu)))
    if theorem_id == "lemma43":
        x = b / a
        h = x.min() if x.min() > 1 else x.max()
        return float(np.min(am(a, b, nu) - K(h) ** r * gm(a, b, nu)))
    if theorem_id == "norms":
        alpha = params["alpha"]
        rr = params["r"]
        return {
            "lemma6": 0.25 * np.max(a + b) ** 2 - np.max(a * b),
            "lemma8": np.max((a + b) ** rr) - np.max(a**rr + b**rr),
            "lemma50": math.sqrt(alpha) - np.max(np.sqrt(a / b)),
        }
    if theorem_id in ("thm46", "thm97"):
        s = polya_scalars(*band)
        g = np.sqrt(a * b)
        if theorem_id == "thm46":
            c = s["gamma"] if params.get("refined", True) else s["unrefined"]
            return float(np.min(c * g - g))
        return float(np.min(s["psi"] * g * g - g * g))
    m, mp, Mp, M = band
    refined = params.get("refined", True)
    if theorem_id == "eq4":
        lhs = am(a, b, nu) + M * m * am(1 / a, 1 / b, nu)
        return float(np.min((M + m) - lhs))
    if theorem_id == "lemma1":
        lhs = K(Mp / mp) ** r * gm(1 / a, 1 / b, nu)
        return float(np.min(am(1 / a, 1 / b, nu) - lhs))
    if theorem_id == "thm5":
        C = squared_C(m, mp, Mp, M, nu, refined)
        return float(np.min(C**2 * gm(a, b, nu) ** 2 - am(a, b, nu) ** 2))
    if theorem_id == "thm20":
        C = power_C(m, mp, Mp, M, nu, p, refined)
        return float(np.min(C**p * gm(a, b, nu) ** p - am(a, b, nu) ** p))
    if theorem_id == "thm28":
        C = power4_C(m, mp, Mp, M, nu, p)
        return float(np.min(C**p * gm(a, b, nu) ** p - am(a, b, nu) ** p))
    raise KeyError(theorem_id)

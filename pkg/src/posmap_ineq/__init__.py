"""Numerical verification of operator inequalities for positive linear maps.

Submodules
----------
psd_core    symmetric eigensystems, matrix powers, Loewner-order certification
means       weighted arithmetic / geometric means, Kantorovich constant
maps        catalog of positive linear maps; Choi and Ando checks
checkers    one verifier per inequality, plus a registry keyed by theorem id
generators  seeded instances satisfying each set of hypotheses
sharpness   hill-climbing probe of the refined Polya-Szego constant
harness     suites, example reproduction, reports and the command line
"""

from .checkers import (
    CHECKERS,
    Instance,
    PolyaBand,
    SandwichBand,
    check_eq4,
    check_lemma43,
    check_norm_lemmas,
    check_polya_szego,
    check_power_p,
    check_power_p4,
    check_reverse_amgm_inverse,
    check_squared,
    check_squared_polya,
    compare_constants,
    compute_psi,
    run_checker,
)
from .maps import (
    Compression,
    Mixture,
    NormalizedTrace,
    Pinching,
    ando_check,
    apply_map,
    choi_check,
    is_unital,
)
from .means import arith_mean, geo_mean, kantorovich, young_refinement_check
from .psd_core import (
    CheckResult,
    PosDefMatrix,
    band_membership,
    eig_sym,
    loewner_leq,
    mat_power,
    operator_norm,
)
from .sharpness import search_sharpness, sharpness_ratio

__version__ = "0.1.0"

__all__ = [
    "CHECKERS",
    "CheckResult",
    "Compression",
    "Instance",
    "Mixture",
    "NormalizedTrace",
    "Pinching",
    "PolyaBand",
    "PosDefMatrix",
    "SandwichBand",
    "ando_check",
    "apply_map",
    "arith_mean",
    "band_membership",
    "check_eq4",
    "check_lemma43",
    "check_norm_lemmas",
    "check_polya_szego",
    "check_power_p",
    "check_power_p4",
    "check_reverse_amgm_inverse",
    "check_squared",
    "check_squared_polya",
    "choi_check",
    "compare_constants",
    "compute_psi",
    "eig_sym",
    "geo_mean",
    "is_unital",
    "kantorovich",
    "loewner_leq",
    "mat_power",
    "operator_norm",
    "run_checker",
    "search_sharpness",
    "sharpness_ratio",
    "young_refinement_check",
]

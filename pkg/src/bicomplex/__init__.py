"""Bicomplex and hyperbolic numbers, finite T-modules and bicomplex operators."""
from ._backend import NAME as BACKEND
from .errors import (
    BicomplexError, ConvergenceFailure, DimensionError, MetricError, NotSelfAdjointError,
    NullConeError, PairingOverflow, ZeroChannelError,
)
from .linalg import complex_eig
from .operators import (
    EigenPair, EigenReport, SpectrumCheck, TMatrix, adjoint, bicomplex_eig, frobenius,
    is_self_adjoint, mat_add, mat_apply, mat_mul, mat_scale, project_mat,
    selfadjoint_spectrum_check, verify_eig,
)
from .scalar import (
    E1, E2, I1, I2, J, ONE, ZERO, Bicomplex, ComplexC2, Hyperbolic, bc_add, bc_conj, bc_inv,
    bc_mul, bc_neg, bc_sub, conj_compose, euclid, from_idempotent, hyp_cos, hyp_from_angles,
    is_hyperbolic, is_hyperbolic_positive, is_null_cone, mod1, mod3, mod_sq_i1, mod_sq_i2,
    mod_sq_j, to_idempotent,
)
from .tmodule import (
    ComplexFunctional, Functional, HVector, SplitMetric, TVector, bra, bra_apply, bra_project,
    distance, dot, dot_split, hyp_dot, hyperbolic_angle, is_closed, norm, project, recombine,
    schwarz_witness, vec_add, vec_scale, vec_sub,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BicomplexError", "ConvergenceFailure", "DimensionError", "MetricError",
    "NotSelfAdjointError", "NullConeError", "PairingOverflow", "ZeroChannelError", "complex_eig",
    "EigenPair",
    "EigenReport", "SpectrumCheck", "TMatrix", "adjoint", "bicomplex_eig", "frobenius",
    "is_self_adjoint", "mat_add", "mat_apply", "mat_mul", "mat_scale", "project_mat",
    "selfadjoint_spectrum_check", "verify_eig", "E1", "E2", "I1", "I2", "J", "ONE", "ZERO",
    "Bicomplex", "ComplexC2", "Hyperbolic", "bc_add", "bc_conj", "bc_inv", "bc_mul", "bc_neg",
    "bc_sub", "conj_compose", "euclid", "from_idempotent", "hyp_cos", "hyp_from_angles",
    "is_hyperbolic", "is_hyperbolic_positive", "is_null_cone", "mod1", "mod3", "mod_sq_i1",
    "mod_sq_i2", "mod_sq_j", "to_idempotent", "ComplexFunctional", "Functional", "HVector",
    "SplitMetric", "TVector", "bra", "bra_apply", "bra_project", "distance", "dot",
    "dot_split", "hyp_dot", "hyperbolic_angle", "is_closed", "norm", "project", "recombine",
    "schwarz_witness", "vec_add", "vec_scale", "vec_sub", "__version__",
]

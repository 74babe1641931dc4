"""Exact terminating hypergeometric series and explicit factorizations of
Wilson and Askey-Wilson polynomials."""

from .arith import pochhammer, pochhammer_pair, q_shifted, q_shifted_pair
from .askey_wilson import AWParams, aw_eval, aw_poly, q_case1_factorize, q_case2_split, q_lattice_zeros
from .errors import (
    FactorizationMismatch,
    HyperfactError,
    InvalidSpec,
    PoleInNormalization,
    PoleInRHS,
    ZeroCheckFailed,
)
from .factorization import FactorizationReport
from .identities import IdentityReport
from .poly import Poly
from .series import Pair, SeriesSpec, eval_terminating, eval_terminating_poly
from .tridiag import TridiagSpec, det_poly, diophantine_check, recurrence_poly, split_on_zero_beta
from .wilson import WilsonParams, case1_factorize, case2_split, case2_zeros, monic_wilson_poly, wilson_eval

__version__ = "0.1.0"

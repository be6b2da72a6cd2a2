"""Exact and p-adic computation with higher-order Frobenius-Euler numbers."""

from .characters import DirichletCharacter, dirichlet_characters
from .errors import (
    ConsistencyError,
    DivergenceError,
    FEulerError,
    InvalidInputError,
    InvalidInstanceError,
    InvalidUError,
    NonInvertibleError,
    NotIntegralError,
    PoleError,
    SingularTermError,
    TruncationError,
    UnsupportedCharacterError,
)
from .exact_arith import ONE, U, ZERO, CycloElem, CycloURational, UPoly, URational, parse, render
from .frobenius import (
    TABLE,
    check_distribution,
    check_reflection,
    fe_gen_chi,
    fe_gen_chi_series,
    fe_number,
    fe_number_r,
    fe_poly,
    fe_weighted,
    umbral_A,
)
from .kummer import KummerInstance, check_congruence, check_integrality, check_sum_identity, enum_i0
from .padic import (
    EulerIntegralRequest,
    PadicInt,
    euler_integral_poly,
    moment_exact,
    padic_unit,
    padic_zeta_negk,
    witt_check,
)
from .power_series import Series, egf_coeff, ps_exp_linear, ps_inv, ps_mul
from .zeta import TruncationPlan, ZetaValue, barnes_trunc, check_lemma2, mzeta_trunc, special_value

__version__ = "0.1.0"

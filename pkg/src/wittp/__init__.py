"""Exact arithmetic for the Witt algebra over F_p and its restricted-structure checks."""

from .arith import FpScalar, Prime, binom_mod, factorial_mod, inv_mod
from .diffword import (
    DiffPoly,
    MultiDiffPoly,
    expand_multi,
    expand_word,
    leibniz_power,
    power_word,
    theorem2_check,
)
from .errors import BoundExceededError, IdentityViolationError
from .ring import (
    FpPoly,
    ModulusVariant,
    TruncPoly,
    derive,
    is_zero_divisor,
    iso_shift,
    iso_unshift,
    trunc_mul,
)
from .sympoly import MVPoly, cancel_divide, lhs_sum, precancel_check, product_chain, rhs_power, theorem3_check
from .witt import (
    Derivation,
    DiffOperator,
    bracket,
    c_b,
    c_c,
    check_ad_power,
    check_restricted_sum,
    g_series,
    jacobson_s,
    normal_form_p_power,
    p_power,
)
from .young import (
    YoungDiagram,
    coeff_correspondence_check,
    d_value,
    exercise_check,
    multinomial_coeff,
    partitions,
    power_word_in_u,
    theorem4_check,
)

__version__ = "0.1.0"

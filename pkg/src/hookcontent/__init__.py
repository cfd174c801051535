"""Exact counting of Young tableaux and ballot sequences.

Closed forms (hook content, hook length, the multi-vote ballot product
formula) live next to brute-force enumerators that check them, and a small
sparse polynomial kernel verifies the Vandermonde identities behind them.
"""
from ._backend import BACKEND
from .ballots import (
    count_multivote,
    count_singlevote,
    enumerate_colincreasing_labelings,
    enumerate_colstrict,
    enumerate_rowweak,
    enumerate_ssyt,
    enumerate_syt,
    intersection_check,
)
from .counting import (
    dagger,
    formula_F,
    formula_Fstar,
    hcf_count,
    hlf_count,
    recursive_C,
    theorem1_check,
)
from .errors import BudgetExceeded, VerificationError
from .exact import binomial, factorial, multinomial, reciprocal_factorial, vandermonde
from .polyid import MultiPoly, build_G, verify_alg
from .probability import P_mu, R_mu, T_family, W_mu, theorem2_check
from .shapes import conjugate, hook_length, hook_product, normalize, parse_shape

__version__ = "0.1.0"

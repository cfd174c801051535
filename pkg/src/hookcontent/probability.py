"""Three families of fillings that share one success probability.

For a diagram ``p`` write ``n = conjugate(p)`` (its column lengths) and
``d = len(n) - 1``.  The fraction of column-strict fillings that are
semistandard, of row-weak fillings of the conjugate diagram that are
semistandard, and of column-increasing labelings that are standard all
equal ``P(p) = n_0! ... n_d! / (product of hook lengths)``.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .counting import hcf_count, hlf_count
from .errors import VerificationError
from .exact import binomial, multinomial, vandermonde
from .shapes import as_partition, conjugate, hook_product, m_params

__all__ = [
    "ProbabilityReport",
    "P_mu",
    "R_mu",
    "TFamily",
    "T_family",
    "W_mu",
    "theorem2_check",
]


def _pairs(n):
    return ((i, j) for i in range(len(n)) for j in range(i + 1, len(n)))


def P_mu(p) -> Fraction:
    """Common probability, computed three ways and checked for agreement."""
    p = as_partition(p)
    n = conjugate(p)
    fact = prod(factorial(x) for x in n)
    by_hooks = Fraction(fact, hook_product(p))
    m = m_params(n)
    by_vandermonde = Fraction(vandermonde(m) * fact, prod(factorial(x) for x in m))
    by_pairs = prod(
        (Fraction(n[i] - n[j] + j - i, n[i] + j - i) for i, j in _pairs(n)),
        start=Fraction(1),
    )
    if not by_hooks == by_vandermonde == by_pairs:
        raise VerificationError(
            f"P forms disagree for {p}: {by_hooks}, {by_vandermonde}, {by_pairs}"
        )
    return by_hooks


def W_mu(p) -> Fraction:
    """``prod_{i<j} (n_i - n_j + j - i)/(j - i)``; equals SSYT(d+1, conjugate(p))."""
    n = conjugate(as_partition(p))
    value = prod(
        (Fraction(n[i] - n[j] + j - i, j - i) for i, j in _pairs(n)),
        start=Fraction(1),
    )
    if value != hcf_count(len(n), n):
        raise VerificationError(f"W({p}) = {value} is not the SSYT count it should be")
    return value


def R_mu(p) -> Fraction:
    """``prod_{i<j} (n_i + j - i)/(j - i)``; equals ``prod_i C(n_i + d - i, n_i)``."""
    n = conjugate(as_partition(p))
    d = len(n) - 1
    value = prod(
        (Fraction(n[i] + j - i, j - i) for i, j in _pairs(n)),
        start=Fraction(1),
    )
    binomials = prod(binomial(x + d - i, x) for i, x in enumerate(n))
    if value != binomials:
        raise VerificationError(f"R({p}) forms disagree: {value} vs {binomials}")
    return value


@dataclass(frozen=True)
class TFamily:
    """Counts for one diagram ``p`` and letter bound ``N``.

    ``ssyt`` and ``colstrict`` belong to ``p`` with bound ``N``;
    ``ssyt_conj_min`` and ``rowweak_conj_min`` belong to the conjugate
    diagram at its least useful bound ``d + 1``; ``syt`` and ``labelings``
    are the standard and column-increasing labelings of ``p``.
    """

    N: int
    shape: tuple
    ssyt: int
    colstrict: int
    rowweak_conj_min: int
    labelings: int
    syt: int
    ssyt_conj_min: int


def _check_N(N, p):
    rows = len(p)
    if N < rows:
        raise ValueError(f"N={N} is below the number of rows {rows} of {p}")


def T_family(N, p) -> TFamily:
    p = as_partition(p)
    _check_N(N, p)
    n = conjugate(p)
    d = len(n) - 1
    return TFamily(
        N=N,
        shape=p,
        ssyt=hcf_count(N, p),
        colstrict=prod(binomial(N + i, x) for i, x in enumerate(n)),
        rowweak_conj_min=prod(binomial(x + d - i, x) for i, x in enumerate(n)),
        labelings=multinomial(n),
        syt=hlf_count(p),
        ssyt_conj_min=hcf_count(d + 1, n),
    )


@dataclass(frozen=True)
class ProbabilityReport:
    shape: tuple
    N: int
    ratios: tuple
    p_value: Fraction
    consistent: bool

    def to_json(self):
        def frac(x):
            return {"num": str(x.numerator), "den": str(x.denominator)}

        return {
            "shape": list(self.shape),
            "N": str(self.N),
            "ratios": [frac(r) for r in self.ratios],
            "p_value": frac(self.p_value),
            "consistent": self.consistent,
        }


def theorem2_check(N, p) -> ProbabilityReport:
    p = as_partition(p)
    fam = T_family(N, p)
    ratios = (
        Fraction(fam.ssyt, fam.colstrict),
        Fraction(fam.ssyt_conj_min, fam.rowweak_conj_min),
        Fraction(fam.syt, fam.labelings),
    )
    value = P_mu(p)
    return ProbabilityReport(p, N, ratios, value, all(r == value for r in ratios))

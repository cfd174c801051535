"""Sparse integer polynomials and the Vandermonde identities they verify.

Polynomials for an instance of size ``n`` live over the fixed variable list
``(X, t, x_0, ..., x_n)``.  A :class:`MultiPoly` maps exponent tuples over
that list to nonzero integer coefficients.

The central object is

    G(X, t; x) = sum over J in {0,1}^(n+1) of
                 prod_i (X - x_i)^(1-j_i) x_i^(j_i) * V(x_0 - j_0 t, ..., x_n - j_n t)

which should equal ``prod_{r=0..n} (X - r t) * V(x_0, ..., x_n)``.
"""
import random
from dataclasses import asdict, dataclass
from itertools import combinations, permutations, product
from math import prod

from .exact import permutation_sign, vandermonde

MAX_SYMBOLIC_N = 5

__all__ = [
    "IdentityReport",
    "MultiPoly",
    "antisymmetry_check",
    "build_G",
    "extract_H",
    "extract_H_check",
    "falling_product",
    "hlf_identity_check",
    "hlf_slice_check",
    "homogeneity_check",
    "random_point_check",
    "vandermonde_det_poly",
    "vandermonde_poly",
    "verify_alg",
]


class MultiPoly:
    """Polynomial with integer coefficients over ``nvars`` ordered variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise ValueError(f"exponent {exps} does not have {nvars} entries")
                if coeff:
                    self.terms[tuple(exps)] = coeff

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, k):
        exps = [0] * nvars
        exps[k] = 1
        return cls(nvars, {tuple(exps): 1})

    def _coerce(self, other):
        if isinstance(other, int):
            return MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError(
                f"variable universes differ: {self.nvars} vs {other.nvars} variables"
            )
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            c = terms.get(exps, 0) + coeff
            if c:
                terms[exps] = c
            else:
                terms.pop(exps, None)
        out = MultiPoly(self.nvars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly(self.nvars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(a + b for a, b in zip(ea, eb))
                c = terms.get(e, 0) + ca * cb
                if c:
                    terms[e] = c
                else:
                    del terms[e]
        out = MultiPoly(self.nvars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.constant(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def permute(self, perm):
        """Rename variable ``k`` to ``perm[k]``."""
        out = MultiPoly(self.nvars)
        for exps, coeff in self.terms.items():
            new = [0] * self.nvars
            for k, e in enumerate(exps):
                new[perm[k]] = e
            out.terms[tuple(new)] = coeff
        return out

    def degrees(self, indices):
        """Set of total degrees, in the given variables, over all terms."""
        return {sum(exps[k] for k in indices) for exps in self.terms}

    def coefficient(self, fixed):
        """Coefficient of ``prod var_k ** e`` for ``{k: e}`` in ``fixed``.

        The result keeps the full variable list; the fixed variables
        simply no longer appear.
        """
        out = MultiPoly(self.nvars)
        for exps, coeff in self.terms.items():
            if all(exps[k] == e for k, e in fixed.items()):
                new = list(exps)
                for k in fixed:
                    new[k] = 0
                new = tuple(new)
                c = out.terms.get(new, 0) + coeff
                if c:
                    out.terms[new] = c
                else:
                    del out.terms[new]
        return out

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ValueError(f"need {self.nvars} values, got {len(point)}")
        return sum(
            c * prod(v**e for v, e in zip(point, exps) if e)
            for exps, c in self.terms.items()
        )

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def format_monomial(self, exps):
        parts = []
        for name, e in zip(_names(self.nvars), exps):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c}*{self.format_monomial(e)}" for e, c in self.sorted_terms()
        )


def _names(nvars):
    return ["X", "t"] + [f"x{i}" for i in range(nvars - 2)]


def _check_size(n, limit=MAX_SYMBOLIC_N):
    if n < 0:
        raise ValueError(f"instance size must be nonnegative, got {n}")
    if n > limit:
        raise ValueError(f"symbolic expansion is capped at n={limit}, got {n}")


class _Vars:
    def __init__(self, n):
        self.n = n
        self.nvars = n + 3
        self.X = MultiPoly.var(self.nvars, 0)
        self.t = MultiPoly.var(self.nvars, 1)
        self.x = [MultiPoly.var(self.nvars, 2 + i) for i in range(n + 1)]

    def one(self):
        return MultiPoly.constant(self.nvars, 1)


def _product(polys, one):
    result = one
    for p in polys:
        result = result * p
    return result


def _vandermonde_of(polys, one):
    return _product(
        (polys[i] - polys[j] for i in range(len(polys)) for j in range(i + 1, len(polys))),
        one,
    )


def vandermonde_poly(n, args):
    """``V(x_{i_0} - s_0 t, ...)`` for ``args = [(i_0, s_0), ...]`` over size ``n``."""
    v = _Vars(n)
    linear = [v.x[i] - s * v.t for i, s in args]
    return _vandermonde_of(linear, v.one())


def vandermonde_det_poly(polys):
    """Alternating-sum expansion ``sum_sigma sgn(sigma) prod_i p_i^(k - sigma(i))``."""
    if not polys:
        raise ValueError("need at least one entry")
    nvars = polys[0].nvars
    k = len(polys) - 1
    total = MultiPoly(nvars)
    for perm in permutations(range(len(polys))):
        term = MultiPoly.constant(nvars, permutation_sign(perm))
        for p, s in zip(polys, perm):
            term = term * p ** (k - s)
        total = total + term
    return total


def build_G(n):
    _check_size(n)
    v = _Vars(n)
    total = MultiPoly(v.nvars)
    for J in product((0, 1), repeat=n + 1):
        weight = _product(
            (v.x[i] if j else v.X - v.x[i] for i, j in enumerate(J)), v.one()
        )
        shifted = [v.x[i] - j * v.t for i, j in enumerate(J)]
        total = total + weight * _vandermonde_of(shifted, v.one())
    return total


def falling_product(n):
    """``prod_{r=0..n} (X - r t)`` over the size-``n`` variable list."""
    v = _Vars(n)
    return _product((v.X - r * v.t for r in range(n + 1)), v.one())


def _alg_rhs(n):
    v = _Vars(n)
    return falling_product(n) * _vandermonde_of(v.x, v.one())


@dataclass(frozen=True)
class IdentityReport:
    n: int
    lhs_terms: int
    rhs_terms: int
    equal: bool
    first_discrepancy: str | None = None

    def to_json(self):
        return asdict(self)


def _report(n, lhs, rhs):
    diff = lhs - rhs
    first = None
    if not diff.is_zero():
        exps, coeff = diff.sorted_terms()[0]
        first = f"{coeff}*{diff.format_monomial(exps)}"
    return IdentityReport(n, len(lhs), len(rhs), diff.is_zero(), first)


def verify_alg(n):
    """Expand both sides of ``G = prod (X - r t) * V(x)`` and compare."""
    _check_size(n)
    return _report(n, build_G(n), _alg_rhs(n))


def antisymmetry_check(n, k, l, G=None):
    """Swapping ``x_k`` and ``x_l`` must negate G."""
    if not 0 <= k < l <= n:
        raise ValueError(f"need 0 <= k < l <= n, got k={k}, l={l}, n={n}")
    if G is None:
        G = build_G(n)
    perm = list(range(n + 3))
    perm[2 + k], perm[2 + l] = perm[2 + l], perm[2 + k]
    return G.permute(perm) == -G


def homogeneity_check(n, G=None):
    """Every term of G has degree ``n(n+1)/2`` in the x variables."""
    if G is None:
        G = build_G(n)
    return G.degrees(range(2, n + 3)) == {n * (n + 1) // 2}


def extract_H(n, G=None):
    """Coefficient of ``x_0^n x_1^(n-1) ... x_n^0`` in G, a polynomial in X and t."""
    if G is None:
        G = build_G(n)
    return G.coefficient({2 + i: n - i for i in range(n + 1)})


def extract_H_check(n, G=None):
    """H must equal ``prod (X - r t)``, with the coefficient of ``X^(n+1-m) t^m``
    equal to the sum over m-subsets I of {0..n} of ``prod_{i in I} (-i)``."""
    H = extract_H(n, G)
    if H != falling_product(n):
        return False
    for m in range(n + 2):
        exps = (n + 1 - m, m) + (0,) * (n + 1)
        expected = sum(prod(-i for i in I) for I in combinations(range(n + 1), m))
        if H.terms.get(exps, 0) != expected:
            return False
    return True


def _hlf_sides(n):
    v = _Vars(n)
    one = v.one()
    lhs = MultiPoly(v.nvars)
    for i in range(n + 1):
        shifted = [v.x[k] - (v.t if k == i else 0) for k in range(n + 1)]
        lhs = lhs + v.x[i] * _vandermonde_of(shifted, one)
    weight = sum((v.x[i] - i * v.t for i in range(n + 1)), MultiPoly(v.nvars))
    rhs = weight * _vandermonde_of(v.x, one)
    return lhs, rhs


def hlf_identity_check(n):
    """``sum_i x_i V(..., x_i - t, ...) == (sum_i (x_i - i t)) V(x)``."""
    _check_size(n)
    lhs, rhs = _hlf_sides(n)
    return _report(n, lhs, rhs)


def hlf_slice_check(n, G=None):
    """The ``X^n`` coefficients of the two sides of the G identity, each
    shifted by ``(sum_i x_i) V(x)``, reproduce the two sides of the
    single-shift identity."""
    _check_size(n)
    if G is None:
        G = build_G(n)
    v = _Vars(n)
    V = _vandermonde_of(v.x, v.one())
    shift = sum(v.x, MultiPoly(v.nvars)) * V
    g_slice = G.coefficient({0: n})
    rhs_slice = _alg_rhs(n).coefficient({0: n})
    lhs, rhs = _hlf_sides(n)
    return g_slice + shift == lhs and rhs_slice + shift == rhs


def eval_G(X, t, xs):
    """Value of G at an integer point, summed directly without expansion."""
    total = 0
    for J in product((0, 1), repeat=len(xs)):
        weight = prod(x if j else X - x for x, j in zip(xs, J))
        total += weight * vandermonde([x - j * t for x, j in zip(xs, J)])
    return total


def eval_alg_rhs(X, t, xs):
    return prod(X - r * t for r in range(len(xs))) * vandermonde(xs)


def random_point_check(n, points=50, seed=0, lo=-9, hi=9):
    """Compare both sides of the G identity at seeded random integer points.

    Returns the number of points where they agree.
    """
    rng = random.Random(seed)
    agree = 0
    for _ in range(points):
        X, t, *xs = (rng.randint(lo, hi) for _ in range(n + 3))
        if eval_G(X, t, xs) == eval_alg_rhs(X, t, xs):
            agree += 1
    return agree

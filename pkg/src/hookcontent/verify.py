"""Sweeps that run the individual checks over whole families of inputs."""
from dataclasses import dataclass, field
from itertools import product

from .ballots import (
    DEFAULT_BUDGET,
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
    formula_F,
    formula_Fstar,
    fstar_recursion_holds,
    hcf_count,
    hlf_count,
    recursive_C,
    theorem1_check,
)
from .polyid import (
    antisymmetry_check,
    build_G,
    extract_H_check,
    hlf_identity_check,
    hlf_slice_check,
    homogeneity_check,
    random_point_check,
    verify_alg,
)
from .probability import R_mu, T_family, W_mu, theorem2_check
from .shapes import conjugate, format_shape, partitions_up_to, row_hook_identity, row_hook_sets


@dataclass
class Summary:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def record(self, ok, detail):
        self.checked += 1
        if not ok:
            self.failures.append(detail)

    def to_json(self):
        return {
            "name": self.name,
            "checked": str(self.checked),
            "passed": self.passed,
            "failures": [str(f) for f in self.failures],
        }


def column_counts(max_len, max_entry, max_total=None):
    """All count vectors of length 1..max_len with entries in 0..max_entry."""
    for length in range(1, max_len + 1):
        for counts in product(range(max_entry + 1), repeat=length):
            if max_total is None or sum(counts) <= max_total:
                yield counts


def theorem1_sweep(max_len=4, max_entry=3, max_steps=5, max_total=None, cap=DEFAULT_BUDGET):
    s = Summary("theorem1")
    memo = {}
    for counts in column_counts(max_len, max_entry, max_total):
        for N in range(max_steps + 1):
            rep = theorem1_check(N, counts, cap)
            ok = rep.passed and recursive_C(N, counts, memo) == rep.brute
            s.record(ok, rep)
    return s


def hcf_sweep(max_cells=8, max_N=6, cap=DEFAULT_BUDGET):
    s = Summary("hcf")
    for p in partitions_up_to(max_cells):
        for N in range(max_N + 1):
            brute = enumerate_ssyt(N, p, cap)
            ok = hcf_count(N, p) == brute
            if p:
                ok = ok and formula_F(N, conjugate(p)) == brute
            s.record(ok, (N, format_shape(p)))
    return s


def hlf_sweep(max_cells=9, cap=DEFAULT_BUDGET):
    s = Summary("hlf")
    for p in partitions_up_to(max_cells):
        n = conjugate(p)
        size = sum(p)
        value = hlf_count(p)
        ok = (
            value == enumerate_syt(p, cap)
            == count_singlevote(size, n, cap)
            == formula_Fstar(size, n)
        )
        if p:
            ok = ok and fstar_recursion_holds(n)
        s.record(ok, format_shape(p))
    return s


def hooks_sweep(max_cells=10):
    s = Summary("hooks")
    for lam in partitions_up_to(max_cells, include_empty=False):
        for i in range(len(lam)):
            H, K, M = row_hook_sets(lam, i)
            lhs, rhs = row_hook_identity(lam, i)
            ok = not (H & K) and H | K == M and lhs == rhs
            s.record(ok, (format_shape(lam), i))
    return s


def lemma2_sweep(n_max=4, random_ns=(5, 6), points=50, seed=0):
    s = Summary("lemma2")
    for n in range(n_max + 1):
        G = build_G(n)
        s.record(verify_alg(n).equal, ("symbolic", n))
        s.record(homogeneity_check(n, G), ("homogeneity", n))
        s.record(extract_H_check(n, G), ("extract_H", n))
        if n <= 3:
            for k in range(n + 1):
                for l in range(k + 1, n + 1):
                    s.record(antisymmetry_check(n, k, l, G), ("antisymmetry", n, k, l))
    for n in random_ns:
        s.record(random_point_check(n, points, seed) == points, ("random points", n))
    return s


def hlf_identity_sweep(n_max=4, slice_max=3):
    s = Summary("hlf-identity")
    for n in range(n_max + 1):
        s.record(hlf_identity_check(n).equal, ("symbolic", n))
        if n <= slice_max:
            s.record(hlf_slice_check(n), ("X^n slice", n))
    return s


def theorem2_sweep(max_cells=9, extra_N=3):
    s = Summary("theorem2")
    for p in partitions_up_to(max_cells):
        n0 = len(p)
        for N in range(n0, n0 + extra_N + 1):
            rep = theorem2_check(N, p)
            s.record(rep.consistent, rep)
    return s


def family_sweep(max_cells=7, max_N=5, cap=DEFAULT_BUDGET):
    """Closed forms for the three filling families against their enumerators,
    plus the set-wise SSYT = column-strict ∩ row-weak check."""
    s = Summary("families")
    for p in partitions_up_to(max_cells):
        n = conjugate(p)
        s.record(R_mu(p) == enumerate_rowweak(len(n), n, cap), ("R", format_shape(p)))
        s.record(W_mu(p) == enumerate_ssyt(len(n), n, cap), ("W", format_shape(p)))
        for N in range(max_N + 1):
            if N >= len(p):
                fam = T_family(N, p)
                ok = (
                    fam.colstrict == enumerate_colstrict(N, p, cap)
                    and fam.rowweak_conj_min == enumerate_rowweak(len(n), n, cap)
                    and fam.labelings == enumerate_colincreasing_labelings(p, cap)
                )
                s.record(ok, ("T family", N, format_shape(p)))
            rep = intersection_check(N, p, cap)
            s.record(rep.passed, rep)
    return s


def multivote_recursion_sweep(max_steps=5, max_total=6, max_len=4, cap=DEFAULT_BUDGET):
    """Brute-force counts satisfy the last-ballot recursion."""
    s = Summary("recursion")
    for counts in column_counts(max_len, max_total, max_total):
        if not all(a >= b for a, b in zip(counts, counts[1:])) or counts[-1] == 0:
            continue
        for N in range(1, max_steps + 1):
            rhs = sum(
                count_multivote(N - 1, tuple(x - j for x, j in zip(counts, js)), cap)
                for js in product((0, 1), repeat=len(counts))
            )
            s.record(count_multivote(N, counts, cap) == rhs, (N, counts))
    return s

import json
from itertools import combinations
from math import prod
import random

import pytest

from hookcontent.polyid import (
    MultiPoly,
    antisymmetry_check,
    build_G,
    eval_G,
    extract_H,
    extract_H_check,
    falling_product,
    hlf_identity_check,
    hlf_slice_check,
    homogeneity_check,
    random_point_check,
    vandermonde_det_poly,
    vandermonde_poly,
    verify_alg,
)


def ring(n):
    nv = n + 3
    X = MultiPoly.var(nv, 0)
    t = MultiPoly.var(nv, 1)
    xs = [MultiPoly.var(nv, 2 + i) for i in range(n + 1)]
    return X, t, xs


def test_ring_arithmetic():
    X, t, (x0, x1) = ring(1)
    assert (X + t) * (X - t) == X**2 - t**2
    assert X + MultiPoly(X.nvars) == X
    assert (x0 - x1) * (x0 + x1) == x0**2 - x1**2
    assert (X - X).is_zero()
    assert 3 * X - X == 2 * X
    assert 1 - X == -(X - 1)


def test_universe_mismatch():
    with pytest.raises(ValueError):
        MultiPoly.var(3, 0) + MultiPoly.var(4, 0)
    with pytest.raises(ValueError):
        MultiPoly(3, {(1, 0): 1})


def test_no_zero_terms_stored():
    X, t, _ = ring(0)
    p = (X + t) - t
    assert all(c != 0 for c in p.terms.values())
    assert MultiPoly(3, {(0, 0, 0): 0}).is_zero()


def test_vandermonde_poly_examples():
    X, t, xs = ring(2)
    assert vandermonde_poly(2, [(0, 0)]) == 1
    assert vandermonde_poly(2, [(0, 0), (1, 1)]) == xs[0] - xs[1] + t
    shifted = [xs[0] - t, xs[1], xs[2]]
    expanded = vandermonde_poly(2, [(0, 1), (1, 0), (2, 0)])
    assert expanded == vandermonde_det_poly(shifted)
    assert max(expanded.degrees(range(3 + 2))) == 3
    assert len(expanded) == 12


def test_vandermonde_poly_matches_determinant_random_shifts():
    rng = random.Random(1)
    for n in range(4):
        X, t, xs = ring(n)
        shifts = [rng.randint(-2, 2) for _ in range(n + 1)]
        assert vandermonde_poly(n, list(enumerate(shifts))) == vandermonde_det_poly(
            [x - s * t for x, s in zip(xs, shifts)]
        )


def test_build_G_small():
    X, t, xs = ring(0)
    assert build_G(0) == X
    X, t, xs = ring(1)
    assert build_G(1) == (xs[0] - xs[1]) * X * (X - t)


def test_verify_alg_n2_by_hand_expansion():
    X, t, xs = ring(2)
    V = (xs[0] - xs[1]) * (xs[0] - xs[2]) * (xs[1] - xs[2])
    assert build_G(2) == X * (X - t) * (X - 2 * t) * V


@pytest.mark.parametrize("n", range(5))
def test_verify_alg(n):
    rep = verify_alg(n)
    assert rep.equal and rep.first_discrepancy is None
    assert rep.lhs_terms == rep.rhs_terms


def test_verify_alg_size_cap():
    with pytest.raises(ValueError):
        verify_alg(6)


def test_report_flags_discrepancy():
    from hookcontent.polyid import _report

    X, t, _ = ring(0)
    rep = _report(0, X + t, X)
    assert not rep.equal
    assert rep.first_discrepancy == "1*t"
    assert json.loads(json.dumps(rep.to_json()))["equal"] is False


@pytest.mark.parametrize("n", range(4))
def test_antisymmetry(n):
    G = build_G(n)
    for k, l in combinations(range(n + 1), 2):
        assert antisymmetry_check(n, k, l, G)


def test_antisymmetry_examples():
    assert antisymmetry_check(1, 0, 1)
    assert antisymmetry_check(2, 0, 2)
    assert antisymmetry_check(2, 1, 2)
    with pytest.raises(ValueError):
        antisymmetry_check(2, 2, 1)


def test_antisymmetry_detects_symmetric_input():
    X, t, xs = ring(1)
    assert not antisymmetry_check(1, 0, 1, xs[0] * xs[1] + X)


@pytest.mark.parametrize("n", range(5))
def test_homogeneity(n):
    G = build_G(n)
    assert homogeneity_check(n, G)
    assert G.degrees(range(2, n + 3)) == {n * (n + 1) // 2}


def test_extract_H_examples():
    X, t, _ = ring(0)
    assert extract_H(0) == X
    X, t, _ = ring(1)
    assert extract_H(1) == X**2 - X * t
    X, t, _ = ring(3)
    assert extract_H(3) == X * (X - t) * (X - 2 * t) * (X - 3 * t)


@pytest.mark.parametrize("n", range(5))
def test_extract_H_coefficients(n):
    assert extract_H_check(n)
    H = extract_H(n)
    assert H == falling_product(n)


@pytest.mark.parametrize("n", range(5))
def test_hlf_identity(n):
    assert hlf_identity_check(n).equal


def test_hlf_identity_n1_by_hand():
    X, t, (x0, x1) = ring(1)
    rep = hlf_identity_check(1)
    assert rep.equal and rep.lhs_terms == len((x0 - x1) * (x0 + x1 - t))


@pytest.mark.parametrize("n", range(4))
def test_hlf_identity_is_X_slice(n):
    assert hlf_slice_check(n)


def test_eval_matches_expansion():
    rng = random.Random(7)
    for n in range(4):
        G = build_G(n)
        for _ in range(10):
            point = [rng.randint(-9, 9) for _ in range(n + 3)]
            assert G.evaluate(point) == eval_G(point[0], point[1], point[2:])


@pytest.mark.parametrize("n", [5, 6])
def test_random_points(n):
    assert random_point_check(n, points=50, seed=0) == 50


def test_random_points_catch_wrong_identity():
    from hookcontent import polyid

    rng = random.Random(3)
    misses = 0
    for _ in range(20):
        X, t, *xs = (rng.randint(-9, 9) for _ in range(6))
        wrong = prod(X - r * t for r in range(1, 5)) * polyid.vandermonde(xs)
        misses += eval_G(X, t, xs) != wrong
    assert misses > 0

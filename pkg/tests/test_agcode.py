"""Code construction, designed bounds and the brute-force oracle."""

from __future__ import annotations

import itertools
import random

import pytest

from kummercodes.agcode import (BudgetExceededError, InconsistentDivisorError,
                                PlaceInSupportError, brute_force_distance,
                                build_cl, build_comega, designed_distance,
                                duality_holds, evaluation_places, in_support)
from kummercodes.curve import Place
from kummercodes.gf import Matrix
from kummercodes.rrlattice import Divisor
from kummercodes.verify import curve_example_2, curve_hermitian_gf4
from kummercodes.weierstrass import GapBox, PlaceTuple, floor_divisor


def herm():
    return curve_hermitian_gf4()


def test_in_support():
    G = Divisor((3, 0), 1)
    assert in_support(G, Place.ramified(1))
    assert not in_support(G, Place.ramified(2))
    assert in_support(G, Place.infinity())
    assert not in_support(G, Place.affine(1, 1))


def test_evaluation_places_default_pool():
    c = herm()
    G = Divisor((0, 0), 3)
    D = evaluation_places(c, G)
    assert len(D) == 8  # 9 places minus P_inf
    assert all(p.kind != "infinity" for p in D)

    # with t = 0 the place at infinity joins the pool
    D0 = evaluation_places(c, Divisor((1, 0), 0))
    assert any(p.kind == "infinity" for p in D0)
    assert len(D0) == 8


def test_evaluation_places_selection():
    c = herm()
    G = Divisor((0, 0), 3)
    full = evaluation_places(c, G)
    assert evaluation_places(c, G, n=6) == full[:6]
    seeded = evaluation_places(c, G, n=6, seed=2)
    assert seeded == evaluation_places(c, G, n=6, seed=2)
    assert len(seeded) == 6
    assert all(p in full for p in seeded)
    with pytest.raises(ValueError):
        evaluation_places(c, G, n=9)


def test_build_cl_hermitian():
    # G = 3 P_inf over GF(4): [8, 3] with exact distance 5 = Goppa bound
    c = herm()
    G = Divisor((0, 0), 3)
    D = evaluation_places(c, G)
    code = build_cl(c, G, D)
    assert (code.n, code.k) == (8, 3)
    assert ("goppa_L", 5) in code.bounds
    assert brute_force_distance(code) == 5


def test_build_cl_rejects_support():
    c = herm()
    G = Divisor((1, 0), 3)
    with pytest.raises(PlaceInSupportError):
        build_cl(c, G, [Place.ramified(1)])


def test_repetition_code():
    c = herm()
    G = Divisor((0, 0), 0)
    D = evaluation_places(c, G)
    code = build_cl(c, G, D)
    assert code.k == 1
    assert code.generator.rows == [[1] * code.n]
    assert brute_force_distance(code) == code.n


def test_comega_duality_and_dimensions():
    c = herm()
    G = Divisor((0, 0), 3)
    D = evaluation_places(c, G)
    cl = build_cl(c, G, D)
    co = build_comega(c, G, D)
    assert cl.k + co.k == cl.n
    assert duality_holds(cl, co)
    # dimension law: k_omega = n + g - 1 - deg(G)
    assert co.k == cl.n + c.g - 1 - G.degree
    assert ("goppa_omega", G.degree - (2 * c.g - 2)) in co.bounds
    assert brute_force_distance(co) >= G.degree - (2 * c.g - 2)


def test_column_permutation_invariance():
    c = herm()
    G = Divisor((0, 0), 3)
    D = evaluation_places(c, G)
    rng = random.Random(3)
    perm = list(D)
    rng.shuffle(perm)
    a = build_cl(c, G, D)
    b = build_cl(c, G, perm)
    assert (a.n, a.k) == (b.n, b.k)
    assert brute_force_distance(a) == brute_force_distance(b)


def test_brute_force_matches_naive():
    c = herm()
    G = Divisor((0, 0), 4)
    D = evaluation_places(c, G)
    code = build_cl(c, G, D)
    F = code.field
    best = None
    for msg in itertools.product(range(F.q), repeat=code.k):
        if not any(msg):
            continue
        cw = [0] * code.n
        for mi, row in zip(msg, code.generator.rows):
            for idx, v in enumerate(row):
                cw[idx] = F.add(cw[idx], F.mul(mi, v))
        w = sum(1 for v in cw if v)
        best = w if best is None else min(best, w)
    assert brute_force_distance(code) == best


def test_brute_force_edge_cases():
    c = herm()
    G = Divisor((0, 0), 3)
    D = evaluation_places(c, G)
    cl = build_cl(c, G, D)
    with pytest.raises(BudgetExceededError):
        brute_force_distance(cl, budget=10)
    # a zero-dimensional code has no distance
    zero = build_comega(c, Divisor((0, 0), 0), D[:1])
    assert zero.k == 0
    assert brute_force_distance(zero) is None


def test_singleton_bound():
    c = herm()
    for t in range(1, 6):
        G = Divisor((0, 0), t)
        D = evaluation_places(c, G)
        for code in (build_cl(c, G, D), build_comega(c, G, D)):
            if code.k == 0:
                continue
            d = brute_force_distance(code)
            assert code.k + d <= code.n + 1


def test_designed_distance_methods():
    c = curve_example_2()
    G = Divisor.make(c.r, {1: 26, 2: 1})
    assert designed_distance(c, G, "goppa_omega") == 27 - 18
    assert designed_distance(c, G, "goppa_L", n=124) == 124 - 27
    box = GapBox(PlaceTuple(2), (13, 1), (1, 0))
    assert designed_distance(c, G, "pure_gap_box", box=box) == 12

    H = Divisor.make(c.r, {1: 13})
    G2 = H + floor_divisor(c, H)
    assert designed_distance(c, G2, "floor_pair", H=H) == 2 * 13 - 18


def test_designed_distance_validation():
    c = curve_example_2()
    G = Divisor.make(c.r, {1: 26, 2: 1})
    with pytest.raises(InconsistentDivisorError):
        designed_distance(c, G, "goppa_L", n=20)
    with pytest.raises(InconsistentDivisorError):
        designed_distance(c, G, "pure_gap_box",
                          box=GapBox(PlaceTuple(2), (13, 2), (1, 0)))
    with pytest.raises(InconsistentDivisorError):
        designed_distance(c, G, "floor_pair", H=Divisor.make(c.r, {1: 13}))
    with pytest.raises(ValueError):
        designed_distance(c, G, "unknown")


def test_export_text_format():
    c = herm()
    G = Divisor((0, 0), 3)
    D = evaluation_places(c, G)
    code = build_cl(c, G, D)
    lines = code.export_text().splitlines()
    assert lines[0] == f"{code.n} {code.k} 4"
    assert len(lines) == 1 + code.k
    parsed = [[int(v) for v in row.split()] for row in lines[1:]]
    assert Matrix(c.field, parsed) == code.generator

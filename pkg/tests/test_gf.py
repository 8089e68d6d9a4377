"""Field arithmetic and linear algebra over GF(p^e)."""

from __future__ import annotations

import random

import pytest

from kummercodes.gf import (BadModulusError, FieldMismatchError, FiniteField,
                            Matrix, NotIrreducibleError, NotPrimeError, identity)


def gf2():
    return FiniteField(2, 1, [0, 1])


def gf9():
    return FiniteField(3, 2, [1, 0, 1])  # x^2 + 1


def gf64():
    return FiniteField(2, 6, [1, 1, 0, 0, 0, 0, 1])


def test_construction_validates():
    with pytest.raises(NotPrimeError):
        FiniteField(4, 1, [0, 1])
    with pytest.raises(NotIrreducibleError):
        FiniteField(5, 2, [1, 0, 1])  # x^2 + 1 = (x-2)(x-3) mod 5
    with pytest.raises(BadModulusError):
        FiniteField(3, 2, [1, 0, 2])  # not monic
    with pytest.raises(BadModulusError):
        FiniteField(3, 2, [1, 0, 0, 1])  # wrong degree
    with pytest.raises(BadModulusError):
        FiniteField(2, 17, [1] + [0] * 16 + [1])  # q > 2^16


def test_small_fields_exist():
    assert gf2().q == 2
    assert gf9().q == 9
    assert gf64().q == 64


def test_gf9_generator_square():
    # x * x = -1 = 2 with modulus x^2 + 1; x has codec integer 3.
    F = gf9()
    assert F.mul(3, 3) == 2


def test_codec_roundtrip():
    for F in (gf9(), gf64()):
        for a in F.elements():
            assert F.from_coeffs(F.coeffs(a)) == a
        assert len(F.coeffs(0)) == F.e
    assert gf9().coeffs(3) == (0, 1)


def test_char2_self_inverse():
    F = gf64()
    for a in F.elements():
        assert F.add(a, a) == 0
        assert F.neg(a) == a


def test_multiplicative_order():
    for F in (gf9(), gf64()):
        for a in range(1, F.q):
            assert F.pow(a, F.q - 1) == 1


def test_field_axioms_random():
    rng = random.Random(11)
    for F in (gf9(), gf64(), FiniteField(5, 2, [2, 0, 1])):
        for _ in range(200):
            a, b, c = (rng.randrange(F.q) for _ in range(3))
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
            assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
            assert F.add(a, F.neg(a)) == 0
            if a:
                assert F.mul(a, F.inv(a)) == 1
            # Frobenius is additive
            assert F.pow(F.add(a, b), F.p) == F.add(F.pow(a, F.p), F.pow(b, F.p))


def test_pow_negative_exponent():
    F = gf9()
    for a in range(1, F.q):
        assert F.mul(F.pow(a, -1), a) == 1
        assert F.pow(a, -3) == F.inv(F.pow(a, 3))
    with pytest.raises(ZeroDivisionError):
        F.pow(0, -1)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_poly_eval():
    F = gf9()
    # x^2 + 1 at x: the modulus root, so 0
    assert F.poly_eval([1, 0, 1], 3) == 0
    assert F.poly_eval([7], 5) == 7


def test_matrix_identity_and_zero():
    F = gf2()
    eye = identity(F, 4)
    rank, _, pivots = eye.rref()
    assert rank == 4 and pivots == [0, 1, 2, 3]
    assert eye.nullspace().nrows == 0

    zero = Matrix(F, [[0, 0, 0]] * 2, 3)
    assert zero.rank() == 0
    assert zero.nullspace().nrows == 3


def test_nullspace_frozen_example():
    # over GF(2): checked against enumeration of all 8 vectors
    F = gf2()
    M = Matrix(F, [[1, 1, 0], [0, 1, 1]])
    rank, _, _ = M.rref()
    assert rank == 2
    ns = M.nullspace()
    assert ns.rows == [[1, 1, 1]]


def test_rank_nullity_random():
    rng = random.Random(23)
    for F in (gf2(), gf9()):
        for _ in range(40):
            nr = rng.randrange(1, 6)
            nc = rng.randrange(1, 6)
            M = Matrix(F, [[rng.randrange(F.q) for _ in range(nc)] for _ in range(nr)])
            rank = M.rank()
            ns = M.nullspace()
            assert rank + ns.nrows == nc
            for row in ns.rows:
                assert all(v == 0 for v in M.mul_vector(row))


def test_rref_deterministic():
    F = gf9()
    rows = [[4, 7, 1], [2, 0, 5], [6, 7, 6]]
    first = Matrix(F, rows).rref()
    second = Matrix(F, rows).rref()
    assert first[0] == second[0]
    assert first[1].rows == second[1].rows
    assert first[2] == second[2]


def test_field_mismatch():
    A = Matrix(gf9(), [[1]])
    B = Matrix(gf64(), [[1]])
    with pytest.raises(FieldMismatchError):
        A.mul_matrix(B)

"""Tests for prime fields, quadratic extensions, and exact square roots."""

import random
from fractions import Fraction

import pytest

from howe_sextic.exact_arith import (
    QQ,
    Fp2Element,
    PrimeField,
    QuadraticExtension,
    is_probable_prime,
    legendre_symbol,
    smallest_nonresidue,
    sqrt_in_field,
)


def brute_force_squares(p):
    """Oracle: the set of squares mod p by exhaustive squaring."""
    return {(v * v) % p for v in range(p)}


def test_primality_validation():
    for p in (3, 5, 7, 31, 101, 2**61 - 1):
        PrimeField(p)
    for bad in (1, 2, 4, 9, 15, 21, 2**63 + 1):
        with pytest.raises((ValueError, TypeError)):
            PrimeField(bad)
    with pytest.raises(TypeError):
        PrimeField(7.0)


def test_is_probable_prime_small_range():
    def slow(n):
        if n < 2:
            return False
        return all(n % k for k in range(2, n))

    for n in range(2000):
        assert is_probable_prime(n) == slow(n), n


def test_canonical_reduction():
    F7 = PrimeField(7)
    assert F7(10) == F7(3)
    assert F7(-1) == F7(6)
    assert int(F7(7)) == 0
    assert F7(3) + 11 == F7(0)
    assert 2 - F7(3) == F7(6)
    assert 3 / F7(2) == F7(5)


def test_field_axioms_fp():
    rng = random.Random(2024)
    for p in (7, 31, 101):
        F = PrimeField(p)
        for _ in range(200):
            a, b, c = (F.random_element(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + (-a) == F.zero()
            if a:
                assert a * a.inverse() == F.one()


def test_legendre_against_brute_force():
    for p in (7, 31):
        F = PrimeField(p)
        squares = brute_force_squares(p)
        for v in range(p):
            sym = legendre_symbol(F(v))
            if v == 0:
                assert sym == 0
            elif v in squares:
                assert sym == 1
            else:
                assert sym == -1


def test_legendre_pinned_values():
    F7 = PrimeField(7)
    assert brute_force_squares(7) - {0} == {1, 2, 4}
    assert legendre_symbol(F7(2)) == 1
    assert legendre_symbol(F7(3)) == -1
    assert legendre_symbol(F7(0)) == 0


def test_legendre_multiplicative():
    rng = random.Random(7)
    for p in (31, 101):
        F = PrimeField(p)
        for _ in range(300):
            a = F(rng.randrange(1, p))
            b = F(rng.randrange(1, p))
            assert legendre_symbol(a) * legendre_symbol(b) == legendre_symbol(a * b)


def test_sqrt_pinned_values():
    F7 = PrimeField(7)
    r = sqrt_in_field(F7(2))
    assert r in (F7(3), F7(4))
    assert sqrt_in_field(F7(0)) == F7(0)
    F31 = PrimeField(31)
    r = sqrt_in_field(F31(18))
    assert r in (F31(7), F31(24))


def test_sqrt_exhaustive_small_primes():
    for p in (7, 11, 13, 17):  # includes p % 4 == 1 to hit Tonelli-Shanks
        F = PrimeField(p)
        squares = brute_force_squares(p)
        for v in range(p):
            r = sqrt_in_field(F(v))
            if v in squares:
                assert r is not None and r * r == F(v)
            else:
                assert r is None


def test_sqrt_random_roundtrip():
    rng = random.Random(31337)
    for p in (7, 31, 101):
        F = PrimeField(p)
        for _ in range(1000):
            a = F.random_element(rng)
            sq = a * a
            r = sqrt_in_field(sq)
            assert r is not None
            assert r * r == sq


def test_smallest_nonresidue():
    assert smallest_nonresidue(PrimeField(7)) == PrimeField(7)(3)
    assert smallest_nonresidue(PrimeField(31)) == PrimeField(31)(3)
    assert smallest_nonresidue(PrimeField(101)) == PrimeField(101)(2)


def test_quadratic_extension_construction():
    F7 = PrimeField(7)
    K = QuadraticExtension(F7)
    assert K.nonresidue == F7(3)
    with pytest.raises(ValueError):
        QuadraticExtension(F7, 2)  # 2 = 3^2 mod 7 is a square
    t = K.gen()
    assert t * t == K(3)


def test_field_axioms_fp2():
    rng = random.Random(99)
    for p in (7, 31, 101):
        K = QuadraticExtension(PrimeField(p))
        for _ in range(150):
            a, b, c = (K.random_element(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            if a:
                assert a * a.inverse() == K.one()
        # Frobenius: conjugation is x -> x^p.
        x = K.random_element(rng)
        assert x.conjugate() == x**p


def test_every_base_element_is_square_in_fp2():
    for p in (7, 11):
        F = PrimeField(p)
        K = QuadraticExtension(F)
        for v in range(p):
            r = sqrt_in_field(K(v))
            assert r is not None
            assert r * r == K(v)


def test_fp2_square_census():
    # Exactly (p^2 - 1)/2 + 1 elements of F_{p^2} are squares.
    p = 7
    K = QuadraticExtension(PrimeField(p))
    square_count = 0
    for a in range(p):
        for b in range(p):
            x = K(a, b)
            r = sqrt_in_field(x)
            if r is not None:
                assert r * r == x
                square_count += 1
    assert square_count == (p * p - 1) // 2 + 1


def test_fp2_sqrt_random():
    rng = random.Random(555)
    for p in (31, 101):
        K = QuadraticExtension(PrimeField(p))
        for _ in range(300):
            x = K.random_element(rng)
            sq = x * x
            r = sqrt_in_field(sq)
            assert r is not None and r * r == sq


def test_rational_adapter():
    assert QQ(3) == Fraction(3)
    assert QQ.zero() == 0 and QQ.one() == 1
    assert sqrt_in_field(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_in_field(Fraction(2)) is None
    assert sqrt_in_field(Fraction(-1)) is None
    with pytest.raises(TypeError):
        QQ(0.5)


def test_mixed_field_operations_rejected():
    F7, F11 = PrimeField(7), PrimeField(11)
    with pytest.raises(ValueError):
        F7(1) + F11(1)
    K7 = QuadraticExtension(F7)
    K7b = QuadraticExtension(F7, 5)
    with pytest.raises(ValueError):
        K7.gen() + K7b.gen()

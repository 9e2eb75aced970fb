"""Field arithmetic, digitwise binomials, and the alternating sum identity."""

from math import comb

import pytest

from modinv.fp_arith import (
    FpScalar,
    binomial_sum_check,
    divisors,
    element_order,
    inv,
    lucas_binom,
    primitive_root,
)

SMALL_PRIMES = [2, 3, 5, 7, 11, 13]


def test_inverse_examples():
    # p=7: exhaustive search says 3*5 = 15 = 2*7+1
    assert next(b for b in range(1, 7) if 3 * b % 7 == 1) == 5
    assert inv(FpScalar(3, 7)) == FpScalar(5, 7)
    assert inv(FpScalar(1, 5)) == FpScalar(1, 5)
    assert inv(FpScalar(1, 2)) == FpScalar(1, 2)


def test_inverse_of_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        inv(FpScalar(0, 5))


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_field_axioms_exhaustive(p):
    for a in range(1, p):
        s = FpScalar(a, p)
        assert s * inv(s) == FpScalar(1, p)
    for a in range(p):
        s = FpScalar(a, p)
        assert s + (-s) == FpScalar(0, p)


def test_composite_modulus_rejected():
    for bad in [1, 4, 9, 15]:
        with pytest.raises(ValueError):
            FpScalar(1, bad)


def test_modulus_mismatch_rejected():
    with pytest.raises(ValueError):
        FpScalar(1, 3) + FpScalar(1, 5)


def test_scalar_int_interop():
    assert FpScalar(2, 5) + 4 == FpScalar(1, 5)
    assert 3 * FpScalar(2, 5) == FpScalar(1, 5)
    assert FpScalar(2, 5) ** 3 == FpScalar(3, 5)


def test_lucas_examples():
    assert comb(4, 2) % 3 == 0
    assert lucas_binom(4, 2, 3) == FpScalar(0, 3)
    for p in SMALL_PRIMES:
        for k in range(1, p):
            assert lucas_binom(p, k, p) == FpScalar(0, p)
    assert lucas_binom(7, 7, 7) == FpScalar(1, 7)
    assert lucas_binom(3, 5, 7) == FpScalar(0, 7)


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_lucas_against_bigint_factorials(p):
    for a in range(201):
        for b in range(201):
            assert lucas_binom(a, b, p).value == comb(a, b) % p


def test_binomial_sum_examples():
    # sum_{t<3} C(12, 2+4t) = 66 + 924 + 66 = 1056 = 1 mod 5
    assert sum(comb(12, 2 + 4 * t) for t in range(3)) == 1056
    assert binomial_sum_check(5, 2, 3) == FpScalar(1, 5)
    # single-term cases
    assert comb(2, 1) == 2
    assert binomial_sum_check(3, 1, 1) == FpScalar(2, 3)
    assert comb(1, 0) == 1
    assert binomial_sum_check(2, 0, 1) == FpScalar(1, 2)


def test_binomial_sum_domain_errors():
    with pytest.raises(ValueError):
        binomial_sum_check(5, 5, 1)
    with pytest.raises(ValueError):
        binomial_sum_check(5, 0, 0)
    with pytest.raises(ValueError):
        binomial_sum_check(5, 0, 5)


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_binomial_sum_identity_exhaustive(p):
    for i in range(p):
        for k in range(1, p):
            assert binomial_sum_check(p, i, k).value == pow(-1, i, p)


def test_primitive_roots_are_least_generators():
    for p in SMALL_PRIMES:
        z = primitive_root(p)
        if p == 2:
            assert z == 1
            continue
        assert element_order(z, p) == p - 1
        for smaller in range(2, z):
            assert element_order(smaller, p) != p - 1


def test_divisors():
    assert divisors(6) == [1, 2, 3, 6]
    assert divisors(1) == [1]

import random
from fractions import Fraction

import pytest

from lefschetz.fields import GF, QQ, FieldMismatchError, PrimeField, binomial, is_prime


class TestRationalOps:
    def test_exact_fraction_addition(self):
        assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)

    def test_inverse_of_zero_fails(self):
        with pytest.raises(ZeroDivisionError):
            QQ.inv(Fraction(0))

    def test_division_by_zero_fails(self):
        with pytest.raises(ZeroDivisionError):
            QQ.div(Fraction(1), Fraction(0))

    def test_canonical_form(self):
        x = QQ.of(Fraction(2, -4))
        assert x.numerator == -1 and x.denominator == 2

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            QQ.of(0.5)


class TestPrimeFieldOps:
    def test_inverse_mod_5(self):
        assert GF(5).inv(2) == 3  # 2*3 = 6 = 1 mod 5

    def test_inverse_of_zero_fails(self):
        with pytest.raises(ZeroDivisionError):
            GF(7).inv(0)

    def test_residues_reduced(self):
        f = GF(11)
        assert f.of(-1) == 10
        assert f.of(23) == 1

    def test_rational_reduction(self):
        f = GF(7)
        assert f.of(Fraction(1, 2)) == 4  # 2*4 = 8 = 1 mod 7
        with pytest.raises(ZeroDivisionError):
            f.of(Fraction(1, 7))

    def test_nonprime_rejected(self):
        for bad in (1, 4, 100, 32004):
            with pytest.raises(ValueError):
                PrimeField(bad)

    def test_field_equality_and_mismatch(self):
        assert GF(5) == GF(5) and GF(5) != GF(7) and GF(5) != QQ
        with pytest.raises(FieldMismatchError):
            GF(5).validate(Fraction(1, 2))
        with pytest.raises(FieldMismatchError):
            QQ.validate("x")


class TestBinomial:
    def test_examples(self):
        assert binomial(4, 2) == 6
        assert binomial(3, 5) == 0
        assert binomial(10, 0) == 1
        assert binomial(5, -1) == 0

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    def test_pascal_identity(self):
        for n in range(1, 41):
            for k in range(n + 1):
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_field_axioms_random():
    rng = random.Random(7)
    for field in (QQ, GF(5), GF(32003)):
        for _ in range(200):
            a, b, c = (field.random(rng) for _ in range(3))
            assert field.eq(field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c)))
            assert field.eq(field.add(a, b), field.add(b, a))
            if not field.is_zero(a):
                assert field.eq(field.mul(a, field.inv(a)), field.one)


def test_prime_reduction_commutes_with_binomial_sums():
    # A rational sum with denominators coprime to p reduces to the GF(p) sum.
    rng = random.Random(13)
    p = 101
    f = GF(p)
    for _ in range(50):
        n = rng.randint(1, 12)
        values = [Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3, 4, 5])) for _ in range(n + 1)]
        rational = sum(binomial(n, k) * values[k] for k in range(n + 1))
        modular = f.sum(f.mul(f.of(binomial(n, k)), f.of(values[k])) for k in range(n + 1))
        assert f.of(rational) == modular


def test_is_prime_small_values():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 32003, 2147483647}
    for n in range(2, 50):
        assert is_prime(n) == (n in primes or n in (43, 47))
    assert is_prime(32003) and is_prime(2147483647)
    assert not is_prime(2147483647 * 3)

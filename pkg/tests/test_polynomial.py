"""RationalPolynomial: canonical form, exact arithmetic, interpolation."""

from fractions import Fraction

import pytest

from latticemini import RationalPolynomial


def test_trailing_zeros_stripped():
    p = RationalPolynomial.from_coeffs([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1


def test_zero_polynomial():
    z = RationalPolynomial.from_coeffs([0, 0])
    assert z.coeffs == ()
    assert z.degree == -1
    assert z.leading_coefficient == 0
    assert z.constant_term == 0
    assert z.evaluate(17) == 0


def test_equality_is_coefficient_wise():
    a = RationalPolynomial.from_coeffs([Fraction(1, 2), 1])
    b = RationalPolynomial.from_coeffs([Fraction(2, 4), Fraction(3, 3)])
    assert a == b


def test_exact_evaluation_at_rationals():
    p = RationalPolynomial.from_coeffs([1, Fraction(3, 2), Fraction(1, 2)])
    assert p.evaluate(Fraction(1, 3)) == 1 + Fraction(1, 2) + Fraction(1, 18)
    assert p.evaluate(-1) == 0


def test_arithmetic():
    p = RationalPolynomial.from_coeffs([1, 1])
    q = RationalPolynomial.from_coeffs([-1, 1])
    assert (p * q).coeffs == (-1, 0, 1)
    assert (p + q).coeffs == (0, 2)
    assert (p - p).coeffs == ()
    assert p.scaled(Fraction(1, 2)).coeffs == (Fraction(1, 2), Fraction(1, 2))


def test_shift_argument():
    p = RationalPolynomial.from_coeffs([0, 0, 1])  # t^2
    shifted = p.shift_argument(-1)  # (t-1)^2
    assert shifted.coeffs == (1, -2, 1)
    for t in range(-3, 4):
        assert shifted.evaluate(t) == p.evaluate(t - 1)


def test_lagrange_recovers_polynomial():
    p = RationalPolynomial.from_coeffs([Fraction(1, 6), -2, 0, Fraction(3, 4)])
    nodes = [0, 1, 2, 3]
    rebuilt = RationalPolynomial.lagrange(nodes, [p.evaluate(n) for n in nodes])
    assert rebuilt == p


def test_lagrange_rejects_duplicate_nodes():
    with pytest.raises(ValueError):
        RationalPolynomial.lagrange([0, 0, 1], [1, 1, 2])


def test_coeff_strings_decimal_free():
    p = RationalPolynomial.from_coeffs([1, Fraction(3, 2), Fraction(1, 2)])
    assert p.coeff_strings() == ["1", "3/2", "1/2"]


def test_pretty_rendering():
    p = RationalPolynomial.from_coeffs([0, Fraction(1, 3), Fraction(-1, 2), 1])
    assert p.pretty() == "t^3 - 1/2 t^2 + 1/3 t"
    assert RationalPolynomial.from_coeffs([5]).pretty() == "5"
    assert RationalPolynomial.zero().pretty() == "0"

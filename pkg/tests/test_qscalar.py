from fractions import Fraction

import pytest
from hypothesis import given, settings

from qsi.qscalar import ONE, Q, ZERO, EvaluationError, QPoly, QScalar, eval_at, qbinom, qfact, qint
from strategies import scalars


def test_canonical_form_cancels_common_factor():
    # (q^2 - 1)/(q - 1) = q + 1
    assert QScalar((-1, 0, 1), (-1, 1)) == QScalar((1, 1))
    assert str(QScalar((-1, 0, 1), (-1, 1))) == "q + 1"


def test_denominator_sign_is_normalized():
    assert QScalar(1, -1) == QScalar(-1)
    assert QScalar((1,), (0, -2)).denominator.coefficients == {1: 2}


def test_q_power_cancellation():
    assert QScalar((0, 0, 3), (0, 6)) == QScalar((0, 1), 2)
    assert str(Q.inv()) == "1/q"
    assert str(-Q.inv()) == "-1/q"


@pytest.mark.parametrize(
    "x, text",
    [
        (ZERO, "0"),
        (ONE, "1"),
        (QScalar((1, 1)) / QScalar((1, 0, 1)), "(q + 1)/(q^2 + 1)"),
        (QScalar(1, (0, 2)), "1/(2*q)"),
        (QScalar((-1, 1)), "q - 1"),
        (QScalar((0, 0, -3)), "-3*q^2"),
    ],
)
def test_str(x, text):
    assert str(x) == text


def test_qint_values():
    assert qint(0) == ZERO
    assert qint(1) == ONE
    assert qint(3) == QScalar((1, 1, 1))
    # [-2] = -(q^-1 + q^-2)
    assert qint(-2) == -(Q.inv() + Q ** -2)


def test_qint_is_q_integer_formula():
    for m in range(-4, 6):
        assert qint(m) == (Q ** m - 1) / (Q - 1)


def test_qfact_and_qbinom():
    assert qfact(0) == ONE
    assert qfact(3) == QScalar((1, 1)) * QScalar((1, 1, 1))
    assert qbinom(4, 2) == QScalar((1, 1, 2, 1, 1))
    assert qbinom(3, 5) == ZERO
    assert qbinom(5, 0) == ONE
    with pytest.raises(ValueError):
        qfact(-1)


def test_qbinom_pascal_rule():
    for n in range(1, 7):
        for k in range(1, n):
            assert qbinom(n, k) == qbinom(n - 1, k - 1) + qbinom(n - 1, k) * Q ** k


def test_eval_at():
    assert eval_at(qint(3), 2) == 7
    assert eval_at(QScalar(1, (1, 1)), Fraction(1, 2)) == Fraction(2, 3)
    with pytest.raises(EvaluationError):
        eval_at(QScalar(1, (1, 1)), -1)
    with pytest.raises(EvaluationError):
        eval_at(ONE, 1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()


def test_qpoly_gcd():
    a = QPoly([-1, 0, 1])  # (q-1)(q+1)
    b = QPoly([1, 2, 1])  # (q+1)^2
    assert a.gcd(b) == QPoly([1, 1])


def test_mul_qpow_matches_multiplication():
    x = QScalar((1, 2), (3, 0, 1))
    for k in range(-3, 4):
        assert x.mul_qpow(k) == x * Q ** k


@settings(max_examples=150, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    if a:
        assert a * a.inv() == ONE
        assert (b / a) * a == b


@settings(max_examples=100, deadline=None)
@given(scalars(), scalars())
def test_evaluation_is_a_ring_map(a, b):
    q0 = Fraction(7, 3)
    assert eval_at(a * b, q0) == eval_at(a, q0) * eval_at(b, q0)
    assert eval_at(a + b, q0) == eval_at(a, q0) + eval_at(b, q0)


@settings(max_examples=100, deadline=None)
@given(scalars(), scalars())
def test_equality_is_structural(a, b):
    assert (a == b) == (a - b == ZERO)
    if a == b:
        assert hash(a) == hash(b)

import pytest
from hypothesis import given, settings

from qsi.expr import parse_element
from qsi.qscalar import ONE, Q, QScalar, qbinom, qint
from qsi.qtorus import (
    ExponentWindow,
    TorusElement,
    _theta_closed,
    in_pv_ring,
    monomial_inverse,
    sigma,
    theta,
    theta1,
)
from strategies import torus_elements

t = TorusElement.monomial(1, 0)
QQ = TorusElement.monomial(0, 1)


def P(s):
    return parse_element(s, "torus")


def test_defining_relation():
    assert QQ * t == (t * QQ).scale(Q)


def test_monomial_product_rule():
    # (t^a Q^b)(t^c Q^d) = q^(bc) t^(a+c) Q^(b+d)
    a = TorusElement.monomial(2, 3)
    b = TorusElement.monomial(1, -1)
    assert a * b == TorusElement.monomial(3, 2, Q ** 3)
    assert b * a == TorusElement.monomial(3, 2, Q ** -2)


def test_sigma_on_monomials():
    assert sigma(t) == t.scale(Q)
    assert sigma(QQ) == QQ.scale(Q)
    assert sigma(TorusElement.monomial(2, -1)) == TorusElement.monomial(2, -1, Q)
    assert sigma(TorusElement.monomial(1, 1), -2) == TorusElement.monomial(1, 1, Q ** -4)


def test_theta_on_generators():
    assert theta1(t) == TorusElement.one()
    assert theta1(QQ) == TorusElement.zero()
    assert theta1(TorusElement.monomial(3, 2)) == TorusElement.monomial(2, 2, qint(3))
    # negative t-powers use the negative q-integer
    assert theta1(TorusElement.monomial(-1, 0)) == TorusElement.monomial(-2, 0, qint(-1))


def test_divided_powers():
    assert theta(2, TorusElement.monomial(3, 0)) == TorusElement.monomial(1, 0, qbinom(3, 2))
    assert theta(4, TorusElement.monomial(3, 1)) == TorusElement.zero()
    assert theta(0, t) == t


def test_monomial_inverse():
    m = TorusElement.monomial(2, -3, QScalar(3))
    assert m * monomial_inverse(m) == TorusElement.one()
    assert monomial_inverse(m) * m == TorusElement.one()
    with pytest.raises(ValueError):
        monomial_inverse(t + QQ)


def test_negative_powers_of_elements():
    assert QQ ** -1 == TorusElement.monomial(0, -1)
    assert (t * QQ) ** -1 == P("Q^-1*t^-1")
    with pytest.raises(ValueError):
        (t + ONE) ** -1


def test_in_pv_ring():
    assert in_pv_ring(P("t^2*Q^-3 + 1"))
    assert not in_pv_ring(P("t^-1*Q"))


def test_exponent_window():
    w = ExponentWindow(0, 1, -1, 0)
    assert list(w) == [(0, -1), (0, 0), (1, -1), (1, 0)]
    assert len(w) == 4
    assert (1, 0) in w and (2, 0) not in w
    assert len(ExponentWindow.square(-5, 5)) == 121
    with pytest.raises(ValueError):
        ExponentWindow(2, 1, 0, 0)


def test_sorted_terms_and_str():
    f = P("1 + Q*t + t^2")
    assert str(f) == "t^2 + q*t*Q + 1"


@settings(max_examples=100, deadline=None)
@given(torus_elements(), torus_elements(), torus_elements())
def test_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=100, deadline=None)
@given(torus_elements(), torus_elements())
def test_twisted_leibniz(f, g):
    assert theta1(f * g) == theta1(f) * g + sigma(f) * theta1(g)
    assert sigma(f * g) == sigma(f) * sigma(g)


@settings(max_examples=100, deadline=None)
@given(torus_elements())
def test_theta_sigma_commutation(f):
    assert theta1(sigma(f)) == sigma(theta1(f)).scale(Q)
    assert sigma(sigma(f), -1) == f


@settings(max_examples=60, deadline=None)
@given(torus_elements())
def test_closed_form_agrees_with_iteration(f):
    for m in range(5):
        assert theta(m, f) == _theta_closed(m, f)


@settings(max_examples=40, deadline=None)
@given(torus_elements(), torus_elements())
def test_higher_leibniz(f, g):
    for m in range(4):
        rhs = TorusElement.zero()
        for k in range(m + 1):
            rhs = rhs + sigma(theta(k, f), m - k) * theta(m - k, g)
        assert theta(m, f * g) == rhs


@settings(max_examples=40, deadline=None)
@given(torus_elements())
def test_divided_power_composition(f):
    for i in range(4):
        for j in range(4 - i):
            assert theta(i, theta(j, f)) == theta(i + j, f).scale(qbinom(i + j, i))

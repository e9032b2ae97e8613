import pytest
from hypothesis import given, settings

from qsi.expr import BinOp, ExprError, Gen, Num, Pow, format_element, parse, parse_element
from qsi.hopf import HopfElement
from qsi.qscalar import Q, QScalar
from qsi.qtorus import TorusElement
from strategies import hopf_elements, scalars, torus_elements


def test_normal_ordering():
    assert parse_element("Q*t") == TorusElement.monomial(1, 1, Q)
    assert parse_element("v*u") == HopfElement.monomial(1, 1, Q.inv())


def test_single_term_with_coefficient():
    assert parse_element("(q+1)*t^2*Q^-1") == TorusElement.monomial(2, -1, QScalar((1, 1)))


def test_precedence():
    assert parse("2*t^3") == BinOp("*", Num(2), Pow(Gen("t", 2), 3, 3), 1)
    assert parse_element("-t^2") == -TorusElement.monomial(2, 0)
    assert parse_element("2 - 3 - 1") == QScalar(-2)


def test_scalar_division():
    assert parse_element("t/(q - 1)") == TorusElement.monomial(1, 0, QScalar(1, (-1, 1)))
    assert parse_element("1/q") == Q.inv()


@pytest.mark.parametrize(
    "src, pos",
    [
        ("t*u", 2),
        ("t +", 3),
        ("t ** 2", 3),
        ("v^-1", 1),
        ("t^Q", 2),
        ("(t", 2),
        ("t # 1", 2),
        ("t/Q", 1),
    ],
)
def test_errors_carry_positions(src, pos):
    with pytest.raises(ExprError) as info:
        parse_element(src)
    assert info.value.pos == pos


def test_family_restriction():
    with pytest.raises(ExprError):
        parse_element("u", "torus")
    assert parse_element("3", "hopf") == HopfElement.scalar(3)


def test_negative_power_needs_a_single_term():
    with pytest.raises(ExprError):
        parse_element("(t + Q)^-1")
    assert parse_element("(q*t)^-1") == TorusElement.monomial(-1, 0, Q.inv())


def test_format_examples():
    assert format_element(parse_element("t - Q + 1")) == "t - Q + 1"
    assert format_element(parse_element("(q+1)*t")) == "(q + 1)*t"
    assert format_element(parse_element("t/(q+1) - 1")) == "1/(q + 1)*t - 1"
    assert format_element(parse_element("q + 1 + t")) == "t + (q + 1)"


@settings(max_examples=150, deadline=None)
@given(torus_elements())
def test_round_trip_torus(x):
    assert parse_element(format_element(x), "torus") == x


@settings(max_examples=150, deadline=None)
@given(hopf_elements())
def test_round_trip_hopf(x):
    assert parse_element(format_element(x), "hopf") == x


@settings(max_examples=150, deadline=None)
@given(scalars())
def test_round_trip_scalar(x):
    assert parse_element(str(x)) == x

import pytest
from hypothesis import given, settings

from qsi.expr import parse_element
from qsi.hopf import (
    HopfElement,
    QuotientHopf,
    QuotientTag,
    Tensor,
    antipode,
    coaction,
    coinvariants,
    comul,
    counit,
    hopf_ideal_check,
    torsor_map,
    torsor_rank_check,
)
from qsi.qscalar import ONE, Q, ZERO
from qsi.qtorus import ExponentWindow, TorusElement, sigma, theta1
from strategies import hopf_elements

U = HopfElement.monomial(1, 0)
V = HopfElement.monomial(0, 1)
one = HopfElement.one()
t = TorusElement.monomial(1, 0)
QQ = TorusElement.monomial(0, 1)
r1 = TorusElement.one()


def test_relation_in_hq():
    assert U * V == (V * U).scale(Q)
    with pytest.raises(ValueError):
        HopfElement.monomial(0, -1)


def test_comultiplication_on_generators():
    assert comul(U) == Tensor.pure(U, U)
    assert comul(V) == Tensor.pure(V, one) + Tensor.pure(U, V)
    assert str(comul(V)) == "[u ⊗ v] + [v ⊗ 1]"


def test_counit_and_antipode():
    assert counit(U) == ONE and counit(V) == ZERO
    assert antipode(U) == HopfElement.monomial(-1, 0)
    assert antipode(V) == -(HopfElement.monomial(-1, 1))
    assert str(antipode(V)) == "-u^-1*v"


def test_not_commutative_not_cocommutative():
    swap = lambda x: Tensor._raw(x.kinds, {k[::-1]: c for k, c in x.terms.items()})  # noqa: E731
    assert U * V != V * U
    assert comul(V) != swap(comul(V))


@settings(max_examples=60, deadline=None)
@given(hopf_elements(), hopf_elements())
def test_bialgebra(a, b):
    assert comul(a * b) == comul(a) * comul(b)
    assert counit(a * b) == counit(a) * counit(b)
    assert antipode(a * b) == antipode(b) * antipode(a)


@settings(max_examples=60, deadline=None)
@given(hopf_elements())
def test_hopf_axioms(a):
    d = comul(a)
    assert d.expand_factor(0, comul) == d.expand_factor(1, comul)
    eps = HopfElement.scalar(counit(a))
    assert d.map_factor(0, antipode).contract() == eps
    assert d.map_factor(1, antipode).contract() == eps


def test_coaction_on_generators():
    assert coaction(t) == Tensor.pure(t, one) + Tensor.pure(QQ, V)
    assert coaction(QQ) == Tensor.pure(QQ, U)
    assert str(coaction(t)) == "[t ⊗ 1] + [Q ⊗ v]"
    assert coaction(QQ) * coaction(t) == (coaction(t) * coaction(QQ)).scale(Q)


def test_coaction_requires_pv_ring():
    with pytest.raises(ValueError):
        coaction(TorusElement.monomial(-1, 0))


def test_coaction_of_a_product_by_hand():
    # ρ(t^2) = t^2⊗1 + (tQ + Qt)⊗v + Q^2⊗v^2 = t^2⊗1 + (1+q) tQ⊗v + Q^2⊗v^2
    want = (
        Tensor.pure(TorusElement.monomial(2, 0), one)
        + Tensor.pure(TorusElement.monomial(1, 1, 1 + Q), V)
        + Tensor.pure(TorusElement.monomial(0, 2), HopfElement.monomial(0, 2))
    )
    assert coaction(TorusElement.monomial(2, 0)) == want


@pytest.mark.parametrize("f", ["t^2*Q - 3*Q^-1", "t^3 + q*t*Q^2", "Q^-2*t"])
def test_coaction_is_equivariant(f):
    f = parse_element(f, "torus")
    r = coaction(f)
    assert coaction(sigma(f)) == r.map_factor(0, sigma)
    assert coaction(theta1(f)) == r.map_factor(0, theta1)


def test_torsor_map_values():
    x = Tensor.pure(QQ.__class__.monomial(0, -1), QQ)
    assert torsor_map(x) == Tensor.pure(r1, U)
    with pytest.raises(ValueError):
        torsor_map(Tensor.pure(r1, TorusElement.monomial(-1, 0)))


def test_torsor_rank_default_window():
    rep = torsor_rank_check()
    assert (rep.source_dim, rep.rank, rep.injective) == (225, 225, True)
    assert rep.passed
    ok, w = rep.probes["1⊗v"]
    assert ok
    want = Tensor.pure(TorusElement.monomial(0, -1), t) - Tensor.pure(TorusElement.monomial(1, -1, Q.inv()), r1)
    assert w == want
    assert torsor_map(w) == Tensor.pure(r1, V)


def test_torsor_small_window():
    rep = torsor_rank_check(ExponentWindow(0, 1, 0, 1), probes=False)
    assert rep.rank == rep.source_dim == 16


def test_quotient_projections():
    qi, qj = QuotientHopf(QuotientTag.MOD_I), QuotientHopf(QuotientTag.MOD_J)
    x = HopfElement.monomial(2, 1) + HopfElement.monomial(-1, 0)
    assert qi.project(x) == V + one
    assert qj.project(x) == HopfElement.monomial(-1, 0)
    assert qi.comul(V) == Tensor.pure(V, one) + Tensor.pure(one, V)
    assert qj.comul(U) == Tensor.pure(U, U)


@pytest.mark.parametrize("tag", [QuotientTag.MOD_I, QuotientTag.MOD_J])
def test_hopf_ideal_checks(tag):
    assert all(hopf_ideal_check(tag).values())


def test_coinvariants():
    assert coinvariants(QuotientTag.FULL) == [r1]
    assert sorted(map(str, coinvariants(QuotientTag.MOD_I))) == sorted(
        str(TorusElement.monomial(0, j)) for j in range(-3, 4)
    )
    assert sorted(map(str, coinvariants(QuotientTag.MOD_J))) == ["1", "t", "t^2", "t^3"]
    with pytest.raises(ValueError):
        coinvariants(QuotientTag.FULL, ExponentWindow(-1, 0, 0, 0))

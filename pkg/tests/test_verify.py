import pytest
from hypothesis import given, settings

from qsi.expr import parse_element
from qsi.qscalar import ONE, Q, QScalar
from qsi.qsimod import PAPER_M, UNIT, dual, tensor
from qsi.qtorus import ExponentWindow, TorusElement
from qsi.verify import (
    SYSTEM_SIGMA,
    SYSTEM_THETA,
    ApplyThetaN,
    MultiplyMonomial,
    SigmaCombine,
    SimplicityCertificate,
    check_fundamental,
    classical_warmup,
    coaction_matrix,
    comodule_matrix_ok,
    lemma1_obstruction,
    determinant_relation,
    ring_constants,
    simplicity_certificate,
    tannaka_objects,
    tannaka_suite,
    theta_constants,
    torus_matrix_inverse,
    trivialize_module,
)
from qsi.hopf import HopfElement
from strategies import torus_elements

t = TorusElement.monomial(1, 0)
QQ = TorusElement.monomial(0, 1)
r1 = TorusElement.one()
r0 = TorusElement.zero()


def P(s):
    return parse_element(s, "torus")


# --- determinant obstruction -------------------------------------------------

def test_lemma1_example_system():
    rels = lemma1_obstruction(SYSTEM_SIGMA, SYSTEM_THETA)
    assert len(rels) == 1
    assert str(rels[0]) == "(q - 1)*(y11*y22 - y12*y21)"
    assert rels[0] == determinant_relation()


def test_lemma1_trivial_systems():
    assert lemma1_obstruction([[Q, 0], [0, Q]], [[0, 0], [0, 0]]) == []
    assert lemma1_obstruction([[1, 0], [0, 1]], SYSTEM_THETA) == []


@pytest.mark.parametrize("order", [[0, 1, 2, 3], [3, 2, 1, 0], [2, 0, 3, 1]])
def test_lemma1_order_independent(order):
    assert lemma1_obstruction(SYSTEM_SIGMA, SYSTEM_THETA, order) == lemma1_obstruction(SYSTEM_SIGMA, SYSTEM_THETA)


def test_lemma1_rejects_bad_input():
    with pytest.raises(ValueError):
        lemma1_obstruction([[1, 0]], [[0]])
    with pytest.raises(ValueError):
        lemma1_obstruction(SYSTEM_SIGMA, SYSTEM_THETA, [0, 0, 1, 2])


def test_relation_normalization_fixes_sign_and_content():
    a = lemma1_obstruction(SYSTEM_SIGMA, [[0, 2], [0, 0]])
    b = lemma1_obstruction(SYSTEM_SIGMA, [[0, -3], [0, 0]])
    assert a == b == [determinant_relation()]


def test_one_dimensional_system_has_no_pairs():
    assert lemma1_obstruction([[Q]], [[1]]) == []


# --- simplicity --------------------------------------------------------------

def test_certificate_examples():
    c = simplicity_certificate(P("t*Q"))
    assert c.steps == (ApplyThetaN(1, QQ), MultiplyMonomial(ONE, -1, r1))
    assert simplicity_certificate(r1).steps == ()
    assert simplicity_certificate(P("1 + Q")).steps == (SigmaCombine(1, r1),)


def test_certificate_rejects_bad_input():
    with pytest.raises(ValueError):
        simplicity_certificate(r0)
    with pytest.raises(ValueError):
        simplicity_certificate(P("t^-1"))


def test_tampered_certificate_fails_replay():
    c = simplicity_certificate(P("t^2*Q + Q^3 + 2"))
    bad = SimplicityCertificate(P("2*t^2*Q + Q^3 + 2"), c.steps)
    assert c.is_valid()
    assert not bad.is_valid()


@settings(max_examples=80, deadline=None)
@given(torus_elements(i_range=(0, 4), j_range=(-3, 3), max_terms=4))
def test_certificates_replay(f):
    if not f:
        return
    cert = simplicity_certificate(f)
    assert cert.replay() == r1
    assert cert.sigma_passes() <= 6


# --- constants ---------------------------------------------------------------

def test_ring_constants():
    assert ring_constants(ExponentWindow.square(-5, 5)) == [r1]
    assert ring_constants(ExponentWindow(1, 3, -3, 3)) == []
    assert ring_constants(ExponentWindow(0, 0, 0, 0)) == [r1]


def test_theta_constants():
    assert theta_constants(ExponentWindow(0, 2, -1, 1)) == [TorusElement.monomial(0, j) for j in (-1, 0, 1)]
    assert theta_constants(ExponentWindow(1, 2, -1, 1)) == []
    assert theta_constants(ExponentWindow(0, 0, 0, 0)) == [r1]


# --- fundamental matrix ------------------------------------------------------

def test_fundamental_matrix_passes():
    rep = check_fundamental([[QQ, t], [0, 1]], SYSTEM_SIGMA, SYSTEM_THETA)
    assert rep.passed and rep.inverse_ok
    assert rep.inverse == ((TorusElement.monomial(0, -1), TorusElement.monomial(1, -1, -Q.inv())), (r0, r1))


def test_fundamental_explicit_inverse():
    Qi = TorusElement.monomial(0, -1)
    rep = check_fundamental([[QQ, t], [0, 1]], SYSTEM_SIGMA, SYSTEM_THETA, inverse=[[Qi, -(Qi * t)], [0, 1]])
    assert rep.inverse_ok


def test_fundamental_trivial_system():
    rep = check_fundamental([[1, 0], [0, 1]], [[1, 0], [0, 1]], [[0, 0], [0, 0]])
    assert rep.passed and rep.inverse_ok


def test_fundamental_first_violation():
    rep = check_fundamental([[t, QQ], [0, 1]], SYSTEM_SIGMA, SYSTEM_THETA)
    assert not rep.passed
    kind, row, col, lhs, rhs = rep.first_violation
    assert (kind, row, col) == ("theta", 1, 1)
    assert (lhs, rhs) == (r1, r0)


def test_fundamental_shape_mismatch():
    with pytest.raises(ValueError):
        check_fundamental([[t]], SYSTEM_SIGMA, SYSTEM_THETA)


def test_non_unimodular_matrix_has_no_inverse():
    assert torus_matrix_inverse([[t]]) is None
    assert torus_matrix_inverse([[P("1 + Q")]]) is None
    assert torus_matrix_inverse([[QQ.scale(Q)]]) == ((TorusElement.monomial(0, -1, Q.inv()),),)


# --- trivialization ----------------------------------------------------------

def test_example_module_trivialization():
    triv = trivialize_module(PAPER_M)
    c1 = (TorusElement.monomial(0, -1), TorusElement.monomial(1, -1, -Q.inv()))
    assert [c.coords for c in triv] == [c1, (r0, r1)]
    assert str(triv[0]) == "Q^-1⊗e1 - 1/q*t*Q^-1⊗e2"
    assert triv.is_free
    assert triv.frame_inverse == ((QQ, t), (r0, r1))
    m1 = triv[0].left_mul(QQ) + triv[1].left_mul(t)
    assert m1.coords == (r1, r0)


def test_small_window_trivialization():
    triv = trivialize_module(PAPER_M, ExponentWindow(0, 1, -1, 0))
    assert len(triv) == 2 and triv.is_free


def test_window_too_small_for_c1():
    triv = trivialize_module(PAPER_M, ExponentWindow(0, 1, 0, 1))
    assert len(triv) == 1 and not triv.is_free


def test_unit_trivialization():
    triv = trivialize_module(UNIT, ExponentWindow(0, 0, 0, 0))
    assert [c.coords for c in triv] == [(r1,)]


def test_tensor_square_trivialization():
    triv = trivialize_module(tensor(PAPER_M, PAPER_M), ExponentWindow(0, 2, -2, 2))
    assert len(triv) == 4
    assert all(c.is_constant() for c in triv)
    assert triv.is_free


def test_coaction_matrix_of_example_module():
    H = coaction_matrix(trivialize_module(PAPER_M))
    Ui = HopfElement.monomial(-1, 0)
    assert H == ((Ui, HopfElement.zero()), (-HopfElement.monomial(-1, 1), HopfElement.one()))
    assert comodule_matrix_ok(H)


def test_tannaka_objects():
    names = [m.name for m in tannaka_objects(8)]
    assert names[:3] == ["1", "M", "M∨"]
    assert len(names) == 19
    assert len(tannaka_objects(2)) == 3


def test_tannaka_suite():
    entries = tannaka_suite(8)
    assert all(e.passed for e in entries)
    assert {e.name: e.constants_dim for e in entries}["M∨"] == 2


# --- warm-up -----------------------------------------------------------------

def test_classical_warmup():
    rep = classical_warmup()
    assert rep.passed
    assert rep.determinant == {0: -1}
    assert rep.determinant_derivative == {}

"""Hypothesis strategies for scalars and ring elements."""

from hypothesis import strategies as st

from qsi.hopf import HopfElement
from qsi.qscalar import QScalar
from qsi.qtorus import TorusElement

small_ints = st.integers(min_value=-4, max_value=4)
polys = st.lists(small_ints, min_size=0, max_size=4)
nonzero_polys = polys.filter(lambda c: any(c))


@st.composite
def scalars(draw, nonzero=False):
    num = draw(nonzero_polys if nonzero else polys)
    den = draw(nonzero_polys)
    shift = draw(st.integers(min_value=-2, max_value=2))
    return QScalar(num, den).mul_qpow(shift)


@st.composite
def _elements(draw, cls, i_range, j_range, max_terms):
    n = draw(st.integers(min_value=0, max_value=max_terms))
    out = cls.zero()
    for _ in range(n):
        i = draw(st.integers(*i_range))
        j = draw(st.integers(*j_range))
        out = out + cls.monomial(i, j, draw(scalars(nonzero=True)))
    return out


def torus_elements(i_range=(-2, 3), j_range=(-3, 3), max_terms=3):
    return _elements(TorusElement, i_range, j_range, max_terms)


def hopf_elements(i_range=(-2, 2), j_range=(0, 2), max_terms=3):
    return _elements(HopfElement, i_range, j_range, max_terms)

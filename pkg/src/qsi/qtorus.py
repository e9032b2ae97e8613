"""The quantum torus k_q[t^{±1}, Q^{±1}] with Qt = q tQ, and its qsi operators.

Elements are kept in normal order ``c * t^i * Q^j``.  Reordering a product
of monomials costs a power of q::

    (t^a Q^b)(t^c Q^d) = q^(b*c) t^(a+c) Q^(b+d)

The Picard-Vessiot ring R = k[t, Q^{±1}] is the subring with non-negative
t-exponents (see :func:`in_pv_ring`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .qscalar import ONE, ZERO, QScalar, qbinom, qfact, qint

__all__ = [
    "SkewLaurent",
    "TorusElement",
    "ExponentWindow",
    "torus_mul",
    "sigma",
    "theta1",
    "theta",
    "monomial_inverse",
    "is_monomial",
    "in_pv_ring",
    "T",
    "QQ",
    "torus_one",
]


def _as_scalar(c):
    if isinstance(c, QScalar):
        return c
    return QScalar(c) if isinstance(c, int) else QScalar.from_fraction(c)


class SkewLaurent:
    """Sparse skew Laurent polynomial in two generators x, y.

    ``terms`` maps (i, j) to the coefficient of x^i y^j.  Subclasses fix the
    generator names and ``TWIST``: the monomial product picks up
    q^(TWIST * b * c) when y^b is moved past x^c.
    """

    __slots__ = ("terms", "_h")

    TWIST = 1
    NAMES = ("x", "y")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = _as_scalar(c)
                if c:
                    clean[(int(k[0]), int(k[1]))] = c
        self._check(clean)
        self.terms = clean
        self._h = None

    @classmethod
    def _check(cls, terms):
        pass

    @classmethod
    def _raw(cls, terms):
        e = cls.__new__(cls)
        e.terms = terms
        e._h = None
        return e

    # constructors
    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(0, 0): ONE})

    @classmethod
    def monomial(cls, i, j, coeff=ONE):
        c = _as_scalar(coeff)
        e = cls._raw({(i, j): c} if c else {})
        cls._check(e.terms)
        return e

    @classmethod
    def scalar(cls, c):
        return cls.monomial(0, 0, c)

    # structure
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, SkewLaurent):
            return type(self) is type(other) and self.terms == other.terms
        if isinstance(other, (int, QScalar)):
            return self == type(self).scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash((type(self).__name__, frozenset(self.terms.items())))
        return self._h

    def is_scalar(self):
        return not self.terms or set(self.terms) == {(0, 0)}

    def scalar_part(self):
        return self.terms.get((0, 0), ZERO)

    def is_monomial(self):
        return len(self.terms) == 1

    # ring operations
    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, QScalar)):
            return type(self).scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return type(self)._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = _as_scalar(c)
        if not c:
            return type(self).zero()
        return type(self)._raw({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        tw = self.TWIST
        out = {}
        for (a, b), x in self.terms.items():
            for (c, d), y in other.terms.items():
                coeff = (x * y).mul_qpow(tw * b * c) if b and c else x * y
                key = (a + c, b + d)
                s = out.get(key)
                if s is None:
                    out[key] = coeff
                else:
                    s = s + coeff
                    if s:
                        out[key] = s
                    else:
                        del out[key]
        return type(self)._raw(out)

    def __rmul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return monomial_inverse(self) ** (-k)
        out = type(self).one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # normal-form reading
    def sorted_terms(self):
        """Terms in display order: descending first exponent, then second."""
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))

    def leading_exponent(self):
        """Lexicographically maximal exponent pair."""
        return max(self.terms)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    def __str__(self):
        from .expr import format_element

        return format_element(self)


def monomial_inverse(f):
    """Two-sided inverse of a single-term element.

    For the torus, (c t^i Q^j)^{-1} = c^{-1} q^{i j} t^{-i} Q^{-j}; in
    general the reordering exponent is TWIST * i * j.
    """
    if len(f.terms) != 1:
        raise ValueError("monomial_inverse needs a single nonzero term")
    (i, j), c = next(iter(f.terms.items()))
    out = type(f)._raw({(-i, -j): c.inv().mul_qpow(f.TWIST * i * j)})
    type(f)._check(out.terms)
    return out


def is_monomial(f) -> bool:
    return f.is_monomial()


class TorusElement(SkewLaurent):
    """Element of the quantum torus, normal order t^i Q^j, with Qt = q tQ."""

    __slots__ = ()
    TWIST = 1
    NAMES = ("t", "Q")


def torus_one() -> TorusElement:
    return TorusElement.one()


T = TorusElement.monomial(1, 0)
QQ = TorusElement.monomial(0, 1)


def torus_mul(f: TorusElement, g: TorusElement) -> TorusElement:
    return f * g


def sigma(f: TorusElement, power: int = 1) -> TorusElement:
    """σ^power; σ(t^i Q^j) = q^(i+j) t^i Q^j."""
    if not power:
        return f
    return TorusElement._raw({(i, j): c.mul_qpow(power * (i + j)) for (i, j), c in f.terms.items()})


def theta1(f: TorusElement) -> TorusElement:
    """θ^(1)(t^i Q^j) = [i]_q t^(i-1) Q^j."""
    out = {}
    for (i, j), c in f.terms.items():
        if i:
            out[(i - 1, j)] = c * qint(i)
    return TorusElement._raw(out)


def theta(m: int, f: TorusElement) -> TorusElement:
    """θ^(m) = (θ^(1))^m / [m]_q!, computed by iteration."""
    if m < 0:
        raise ValueError("theta order must be non-negative")
    if m == 0:
        return f
    g = f
    for _ in range(m):
        g = theta1(g)
    return g.scale(qfact(m).inv())


def _theta_closed(m: int, f: TorusElement) -> TorusElement:
    # θ^(m)(t^i Q^j) = [i choose m]_q t^(i-m) Q^j, valid for negative i too
    out = {}
    for (i, j), c in f.terms.items():
        b = qbinom(i, m)
        if b:
            out[(i - m, j)] = c * b
    return TorusElement._raw(out)


def in_pv_ring(f: TorusElement) -> bool:
    """True iff every term has a non-negative t-exponent."""
    return all(i >= 0 for i, _ in f.terms)


@dataclass(frozen=True)
class ExponentWindow:
    """Rectangle of exponents i_min..i_max (t or u) by j_min..j_max (Q or v)."""

    i_min: int
    i_max: int
    j_min: int
    j_max: int

    def __post_init__(self):
        if self.i_min > self.i_max or self.j_min > self.j_max:
            raise ValueError(f"empty or inverted window {self}")

    def __iter__(self) -> Iterator[tuple[int, int]]:
        for i in range(self.i_min, self.i_max + 1):
            for j in range(self.j_min, self.j_max + 1):
                yield (i, j)

    def __len__(self):
        return (self.i_max - self.i_min + 1) * (self.j_max - self.j_min + 1)

    def __contains__(self, key):
        i, j = key
        return self.i_min <= i <= self.i_max and self.j_min <= j <= self.j_max

    @classmethod
    def square(cls, lo, hi):
        return cls(lo, hi, lo, hi)

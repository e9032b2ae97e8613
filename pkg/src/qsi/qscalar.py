"""Exact arithmetic in the rational function field Q(q).

``q`` is a formal indeterminate, so it is never a root of unity and every
q-integer ``[m]_q`` with ``m != 0`` is invertible.  Polynomials are stored
densely as tuples of Python ints (index = exponent of q), which keeps the
hot paths (shifts by powers of q, small products, gcds) cheap.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "QPoly",
    "QScalar",
    "EvaluationError",
    "qint",
    "qfact",
    "qbinom",
    "eval_at",
    "ZERO",
    "ONE",
    "Q",
]


class EvaluationError(ValueError):
    """Raised when a scalar cannot be evaluated at the requested point."""


# --- dense integer polynomial helpers (tuples, no trailing zeros) -----------

def _trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        s = a[0]
        return tuple(s * x for x in b)
    if len(b) == 1:
        s = b[0]
        return tuple(s * x for x in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _pscale(a, k):
    return tuple(k * x for x in a) if k else ()


def _lowdeg(a):
    for i, x in enumerate(a):
        if x:
            return i
    return 0


def _content(a):
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _pdiv_exact(a, b):
    """Exact quotient a / b in Z[q]; b must divide a."""
    if not a:
        return ()
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    out = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            qk, r = divmod(c, lb)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out[k - db] = qk
            for j in range(db + 1):
                a[k - db + j] -= qk * b[j]
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return _trim(out)


def _prem(a, b):
    """Pseudo-remainder of a by b (lc(b)^k * a mod b)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [lb * x for x in a]
        for j in range(db + 1):
            a[shift + j] -= c * b[j]
        a = list(_trim(a))
    return tuple(a)


def _primitive(a):
    c = _content(a)
    if c == 1:
        return a
    return tuple(x // c for x in a)


def _pgcd_primitive(a, b):
    """Primitive gcd (positive leading coefficient) of two nonzero primitive polys."""
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (1,)
        r = _prem(a, b)
        a, b = b, _primitive(r) if r else r
    if a[-1] < 0:
        a = _pneg(a)
    return a


def _lcm_poly(a, b):
    g = _pgcd_primitive(_primitive(a), _primitive(b))
    return _pdiv_exact(_pmul(a, b), g)


# --- public polynomial type -------------------------------------------------

class QPoly:
    """Integer polynomial in q.  Immutable; ``coefficients`` is exponent -> int."""

    __slots__ = ("_c",)

    def __init__(self, coefficients=None):
        if coefficients is None:
            self._c = ()
        elif isinstance(coefficients, dict):
            if any(k < 0 for k in coefficients):
                raise ValueError("QPoly exponents must be non-negative")
            top = max(coefficients, default=-1)
            c = [0] * (top + 1)
            for k, v in coefficients.items():
                c[k] += int(v)
            self._c = _trim(c)
        else:
            self._c = _trim([int(x) for x in coefficients])

    @classmethod
    def _raw(cls, c):
        p = cls.__new__(cls)
        p._c = c
        return p

    @property
    def coefficients(self):
        return {i: x for i, x in enumerate(self._c) if x}

    def degree(self):
        return len(self._c) - 1

    def is_zero(self):
        return not self._c

    def __eq__(self, other):
        return isinstance(other, QPoly) and self._c == other._c

    def __hash__(self):
        return hash(("QPoly", self._c))

    def __add__(self, other):
        return QPoly._raw(_padd(self._c, other._c))

    def __sub__(self, other):
        return QPoly._raw(_psub(self._c, other._c))

    def __mul__(self, other):
        return QPoly._raw(_pmul(self._c, other._c))

    def __neg__(self):
        return QPoly._raw(_pneg(self._c))

    def gcd(self, other):
        if not self._c:
            return other
        if not other._c:
            return self
        ca, cb = _content(self._c), _content(other._c)
        g = _pgcd_primitive(_primitive(self._c), _primitive(other._c))
        return QPoly._raw(_pscale(g, gcd(ca, cb)))

    def __repr__(self):
        return f"QPoly({_poly_str(self._c)!r})"

    def __str__(self):
        return _poly_str(self._c)


def _mono_str(k, x):
    if k == 0:
        return str(abs(x))
    body = "q" if k == 1 else f"q^{k}"
    return body if abs(x) == 1 else f"{abs(x)}*{body}"


def _poly_str(c):
    if not c:
        return "0"
    parts = []
    for k in range(len(c) - 1, -1, -1):
        x = c[k]
        if not x:
            continue
        s = _mono_str(k, x)
        if not parts:
            parts.append(s if x > 0 else "-" + s)
        else:
            parts.append(("+ " if x > 0 else "- ") + s)
    return " ".join(parts)


def _poly_terms(c):
    return sum(1 for x in c if x)


# --- the field Q(q) ---------------------------------------------------------

def _canonical(num, den):
    """Reduce num/den; returns a canonical (num, den) pair of tuples."""
    if not den:
        raise ZeroDivisionError("zero denominator in Q(q)")
    if not num:
        return (), (1,)
    if den == (1,):
        return num, den
    # common power of q
    s = min(_lowdeg(num), _lowdeg(den))
    if s:
        num, den = num[s:], den[s:]
    if len(den) == 1 or len(num) == 1 or _poly_terms(den) == 1 or _poly_terms(num) == 1:
        # one side is c*q^k with the other side coprime to q: only integer content remains
        g = gcd(_content(num), _content(den))
    else:
        cn, cd = _content(num), _content(den)
        pn = num if cn == 1 else tuple(x // cn for x in num)
        pd = den if cd == 1 else tuple(x // cd for x in den)
        pg = _pgcd_primitive(pn, pd)
        if pg != (1,):
            pn = _pdiv_exact(pn, pg)
            pd = _pdiv_exact(pd, pg)
        c = gcd(cn, cd)
        num = _pscale(pn, cn // c)
        den = _pscale(pd, cd // c)
        g = 1
    if g != 1:
        num = tuple(x // g for x in num)
        den = tuple(x // g for x in den)
    if den[-1] < 0:
        num, den = _pneg(num), _pneg(den)
    return num, den


class QScalar:
    """An element of Q(q), kept as a reduced fraction of integer polynomials.

    Canonical form: gcd(numerator, denominator) = 1 (content and polynomial
    part) and the denominator has a positive leading coefficient, so equality
    is structural.
    """

    __slots__ = ("_n", "_d", "_h")

    def __init__(self, numerator=0, denominator=1):
        n = _coerce_poly(numerator)
        d = _coerce_poly(denominator)
        self._n, self._d = _canonical(n, d)
        self._h = None

    @classmethod
    def _make(cls, n, d):
        s = cls.__new__(cls)
        s._n, s._d = _canonical(n, d)
        s._h = None
        return s

    @classmethod
    def _trusted(cls, n, d):
        s = cls.__new__(cls)
        s._n, s._d = n, d
        s._h = None
        return s

    @classmethod
    def from_int(cls, k):
        k = int(k)
        return cls._trusted((k,) if k else (), (1,))

    @classmethod
    def from_fraction(cls, fr):
        fr = Fraction(fr)
        return cls._make((fr.numerator,) if fr else (), (fr.denominator,))

    @classmethod
    def qpow(cls, k):
        """q**k for any integer k."""
        try:
            return _QPOW_CACHE[k]
        except KeyError:
            pass
        mono = (0,) * abs(k) + (1,)
        s = cls._trusted(mono, (1,)) if k >= 0 else cls._trusted((1,), mono)
        if len(_QPOW_CACHE) < 512:
            _QPOW_CACHE[k] = s
        return s

    # accessors
    @property
    def numerator(self):
        return QPoly._raw(self._n)

    @property
    def denominator(self):
        return QPoly._raw(self._d)

    def is_zero(self):
        return not self._n

    def __bool__(self):
        return bool(self._n)

    def is_integer(self):
        return self._d == (1,) and len(self._n) <= 1

    def is_laurent_monomial(self):
        """True for c*q^k (c a nonzero integer, k any integer)."""
        return bool(self._n) and _poly_terms(self._n) == 1 and _poly_terms(self._d) == 1

    def complexity(self):
        return len(self._n) + len(self._d) + sum(abs(x).bit_length() for x in self._n + self._d)

    # comparisons
    def __eq__(self, other):
        if isinstance(other, QScalar):
            return self._n == other._n and self._d == other._d
        if isinstance(other, int):
            return self._d == (1,) and self._n == ((other,) if other else ())
        if isinstance(other, Fraction):
            return self == QScalar.from_fraction(other)
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash((self._n, self._d))
        return self._h

    # arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other._n:
            return self
        if not self._n:
            return other
        if self._d == other._d:
            if self._d == (1,):
                return QScalar._trusted(_padd(self._n, other._n), (1,))
            return QScalar._make(_padd(self._n, other._n), self._d)
        n = _padd(_pmul(self._n, other._d), _pmul(other._n, self._d))
        return QScalar._make(n, _pmul(self._d, other._d))

    __radd__ = __add__

    def __neg__(self):
        return QScalar._trusted(_pneg(self._n), self._d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self._n or not other._n:
            return ZERO
        if other._d == (1,) and other._n == (1,):
            return self
        if self._d == (1,) and self._n == (1,):
            return other
        if self._d == (1,) and other._d == (1,):
            return QScalar._trusted(_pmul(self._n, other._n), (1,))
        return QScalar._make(_pmul(self._n, other._n), _pmul(self._d, other._d))

    __rmul__ = __mul__

    def inv(self):
        if not self._n:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        n, d = self._d, self._n
        if d[-1] < 0:
            n, d = _pneg(n), _pneg(d)
        return QScalar._trusted(n, d)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inv() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_qpow(self, k):
        """self * q**k, computed by shifting without a gcd."""
        if not k or not self._n:
            return self
        n, d = self._n, self._d
        if k > 0:
            dl = _lowdeg(d)
            c = min(k, dl)
            if c:
                d = d[c:]
            if k - c:
                n = (0,) * (k - c) + n
        else:
            k = -k
            nl = _lowdeg(n)
            c = min(k, nl)
            if c:
                n = n[c:]
            if k - c:
                d = (0,) * (k - c) + d
        return QScalar._trusted(n, d)

    def normalized(self):
        """Re-run canonicalization (identity on canonical values)."""
        return QScalar._make(self._n, self._d)

    def __repr__(self):
        return f"QScalar({str(self)!r})"

    def __str__(self):
        if self._d == (1,):
            return _poly_str(self._n)
        ns, ds = _poly_str(self._n), _poly_str(self._d)
        if _poly_terms(self._n) > 1:
            ns = f"({ns})"
        if _poly_terms(self._d) > 1 or (len(self._d) > 1 and self._d[-1] != 1):
            ds = f"({ds})"
        return f"{ns}/{ds}"


_QPOW_CACHE: dict[int, QScalar] = {}


def _coerce_poly(x):
    if isinstance(x, QPoly):
        return x._c
    if isinstance(x, int):
        return (x,) if x else ()
    if isinstance(x, (tuple, list)):
        return _trim([int(v) for v in x])
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def _coerce(x):
    if isinstance(x, QScalar):
        return x
    if isinstance(x, int):
        return QScalar.from_int(x)
    if isinstance(x, Fraction):
        return QScalar.from_fraction(x)
    return None


ZERO = QScalar._trusted((), (1,))
ONE = QScalar._trusted((1,), (1,))
Q = QScalar._trusted((0, 1), (1,))


def qint(m: int) -> QScalar:
    """The q-integer [m]_q = (q^m - 1)/(q - 1), for any integer m."""
    m = int(m)
    if m >= 0:
        return QScalar._trusted((1,) * m, (1,))
    k = -m
    return QScalar._trusted((-1,) * k, (0,) * k + (1,))


_QFACT_CACHE = [ONE]


def qfact(m: int) -> QScalar:
    """The q-factorial [m]_q! = [1]_q [2]_q ... [m]_q."""
    m = int(m)
    if m < 0:
        raise ValueError(f"q-factorial of negative integer {m}")
    while len(_QFACT_CACHE) <= m:
        k = len(_QFACT_CACHE)
        _QFACT_CACHE.append(_QFACT_CACHE[-1] * qint(k))
    return _QFACT_CACHE[m]


def qbinom(n: int, k: int) -> QScalar:
    """Gaussian binomial [n choose k]_q; n may be negative, k >= 0."""
    if k < 0:
        return ZERO
    if 0 <= n < k:
        return ZERO
    out = ONE
    for i in range(k):
        out = out * qint(n - i)
    return out / qfact(k)


def _peval(c, x):
    acc = Fraction(0)
    for coeff in reversed(c):
        acc = acc * x + coeff
    return acc


def eval_at(a: QScalar, q0) -> Fraction:
    """Exact value of ``a`` at q = q0 (q0 a nonzero rational other than 1)."""
    q0 = Fraction(q0)
    if q0 == 0 or q0 == 1:
        raise EvaluationError(f"q0 = {q0} is excluded (q must not be 0 or 1)")
    den = _peval(a._d, q0)
    if den == 0:
        raise EvaluationError(f"denominator {a.denominator} vanishes at q = {q0}")
    return _peval(a._n, q0) / den

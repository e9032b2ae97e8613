"""The quantum group h_q = k<u, u^-1, v> with uv = q vu, and its coaction on R.

Structure maps (the unique choice making the coaction coassociative)::

    Δ(u) = u⊗u        Δ(v) = v⊗1 + u⊗v
    ε(u) = 1          ε(v) = 0
    S(u) = u^-1       S(v) = -u^-1 v

Coaction on the Picard-Vessiot ring R = k[t, Q^{±1}]::

    ρ(t) = t⊗1 + Q⊗v,   ρ(Q^{±1}) = Q^{±1}⊗u^{±1}

Tensor products multiply factorwise, with no braiding between factors.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from .linalg import SpanBasis, nullspace
from .qscalar import ONE, ZERO, QScalar
from .qtorus import ExponentWindow, SkewLaurent, TorusElement, in_pv_ring, sigma, theta1

__all__ = [
    "HopfElement",
    "Tensor",
    "comul",
    "counit",
    "antipode",
    "coaction",
    "coaction_tensor",
    "torsor_map",
    "torsor_rank_check",
    "TorsorReport",
    "QuotientTag",
    "QuotientHopf",
    "coinvariants",
    "hopf_ideal_check",
    "U",
    "V",
]


class HopfElement(SkewLaurent):
    """Element of h_q in normal order u^i v^j (j >= 0), with uv = q vu."""

    __slots__ = ()
    TWIST = -1
    NAMES = ("u", "v")

    @classmethod
    def _check(cls, terms):
        for _, j in terms:
            if j < 0:
                raise ValueError("h_q has no negative powers of v")


U = HopfElement.monomial(1, 0)
V = HopfElement.monomial(0, 1)


# --- tensor products --------------------------------------------------------

class Tensor:
    """Element of A_1 ⊗ ... ⊗ A_n for skew Laurent algebras A_k.

    ``kinds`` is the tuple of factor classes; ``terms`` maps a tuple of
    exponent pairs (one per factor) to its coefficient.
    """

    __slots__ = ("kinds", "terms")

    def __init__(self, kinds, terms=None):
        self.kinds = tuple(kinds)
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, kinds, terms):
        t = cls.__new__(cls)
        t.kinds = kinds
        t.terms = terms
        return t

    @classmethod
    def pure(cls, *elements):
        """elements[0] ⊗ elements[1] ⊗ ..."""
        kinds = tuple(type(e) for e in elements)
        terms = {(): ONE}
        for e in elements:
            nxt = {}
            for key, c in terms.items():
                for k, x in e.terms.items():
                    nxt[key + (k,)] = c * x
            terms = nxt
        return cls._raw(kinds, {k: c for k, c in terms.items() if c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.terms == other.terms and (not self.terms or self.kinds == other.kinds)

    __hash__ = None

    def _same(self, other):
        if self.kinds != other.kinds:
            raise TypeError("tensor factor kinds differ")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Tensor._raw(self.kinds, out)

    def __neg__(self):
        return Tensor._raw(self.kinds, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return Tensor._raw(self.kinds, {})
        return Tensor._raw(self.kinds, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self.scale(QScalar(other) if isinstance(other, int) else other)
        self._same(other)
        twists = [k.TWIST for k in self.kinds]
        out = {}
        for ka, x in self.terms.items():
            for kb, y in other.terms.items():
                e = 0
                key = []
                for tw, (a, b), (c, d) in zip(twists, ka, kb):
                    e += tw * b * c
                    key.append((a + c, b + d))
                coeff = (x * y).mul_qpow(e)
                key = tuple(key)
                s = out.get(key)
                if s is None:
                    out[key] = coeff
                else:
                    s = s + coeff
                    if s:
                        out[key] = s
                    else:
                        del out[key]
        return Tensor._raw(self.kinds, out)

    def map_factor(self, index: int, fn: Callable, kind=None):
        """Apply a linear map on monomials of one factor (fn(monomial) -> element)."""
        kinds = list(self.kinds)
        if kind is not None:
            kinds[index] = kind
        kinds = tuple(kinds)
        out = {}
        cache = {}
        for key, c in self.terms.items():
            m = key[index]
            img = cache.get(m)
            if img is None:
                img = cache[m] = fn(self.kinds[index].monomial(*m))
            for km, x in img.terms.items():
                nk = key[:index] + (km,) + key[index + 1 :]
                s = out.get(nk, ZERO) + c * x
                if s:
                    out[nk] = s
                else:
                    out.pop(nk, None)
        return Tensor._raw(kinds, out)

    def expand_factor(self, index: int, fn: Callable[[SkewLaurent], "Tensor"]):
        """Replace factor ``index`` by a tensor: fn(monomial) is an A⊗B element."""
        out = None
        for key, c in self.terms.items():
            img = fn(self.kinds[index].monomial(*key[index]))
            left = key[:index]
            right = key[index + 1 :]
            piece = Tensor._raw(
                self.kinds[:index] + img.kinds + self.kinds[index + 1 :],
                {left + k + right: c * x for k, x in img.terms.items()},
            )
            out = piece if out is None else out + piece
        if out is None:
            kinds = fn(self.kinds[index].one()).kinds
            return Tensor._raw(self.kinds[:index] + kinds + self.kinds[index + 1 :], {})
        return out

    def contract(self, fn=None):
        """Multiply the factors together (all factors must share a kind)."""
        kind = self.kinds[0]
        out = kind.zero()
        for key, c in self.terms.items():
            prod = kind.one()
            for m in key:
                prod = prod * kind.monomial(*m)
            out = out + prod.scale(c)
        return out

    def factor_is_scalar(self, index: int) -> bool:
        return all(key[index] == (0, 0) for key in self.terms)

    def drop_scalar_factor(self, index: int):
        """Identify A⊗k⊗B with A⊗B; raises if factor ``index`` is not scalar."""
        if not self.factor_is_scalar(index):
            raise ValueError("factor is not a scalar")
        kinds = self.kinds[:index] + self.kinds[index + 1 :]
        return Tensor._raw(kinds, {k[:index] + k[index + 1 :]: c for k, c in self.terms.items()})

    def __repr__(self):
        return f"Tensor({str(self)!r})"

    def __str__(self):
        from .expr import format_element

        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=lambda k: tuple((-a, -b) for a, b in k)):
            c = self.terms[key]
            factors = " ⊗ ".join(
                format_element(kind.monomial(*m)) for kind, m in zip(self.kinds, key)
            )
            if c == 1:
                parts.append(f"[{factors}]")
            else:
                parts.append(f"({c})*[{factors}]")
        return " + ".join(parts)


# --- Hopf structure ---------------------------------------------------------

@lru_cache(maxsize=None)
def _comul_mono(i, j) -> Tensor:
    du = Tensor.pure(HopfElement.monomial(i, 0), HopfElement.monomial(i, 0))
    if not j:
        return du
    dv = Tensor.pure(V, HopfElement.one()) + Tensor.pure(U, V)
    out = du
    for _ in range(j):
        out = out * dv
    return out


def comul(a: HopfElement) -> Tensor:
    """Δ, extended multiplicatively from Δ(u) = u⊗u, Δ(v) = v⊗1 + u⊗v."""
    out = Tensor._raw((HopfElement, HopfElement), {})
    for (i, j), c in a.terms.items():
        out = out + _comul_mono(i, j).scale(c)
    return out


def counit(a: HopfElement) -> QScalar:
    out = ZERO
    for (i, j), c in a.terms.items():
        if j == 0:
            out = out + c
    return out


@lru_cache(maxsize=None)
def _antipode_mono(i, j) -> HopfElement:
    sv = -(HopfElement.monomial(-1, 1))
    return sv ** j * HopfElement.monomial(-i, 0)


def antipode(a: HopfElement) -> HopfElement:
    """Anti-automorphism with S(u) = u^-1 and S(v) = -u^-1 v."""
    out = HopfElement.zero()
    for (i, j), c in a.terms.items():
        out = out + _antipode_mono(i, j).scale(c)
    return out


# --- coaction on R ----------------------------------------------------------

RH = (TorusElement, HopfElement)


@lru_cache(maxsize=None)
def _rho_t_power(a) -> Tensor:
    rt = Tensor.pure(TorusElement.monomial(1, 0), HopfElement.one()) + Tensor.pure(
        TorusElement.monomial(0, 1), V
    )
    out = Tensor.pure(TorusElement.one(), HopfElement.one())
    for _ in range(a):
        out = out * rt
    return out


def _rho_mono(a, b) -> Tensor:
    return _rho_t_power(a) * Tensor.pure(TorusElement.monomial(0, b), HopfElement.monomial(b, 0))


def coaction(f: TorusElement) -> Tensor:
    """ρ: R -> R⊗h_q, the algebra map with ρ(t) = t⊗1 + Q⊗v, ρ(Q) = Q⊗u."""
    if not in_pv_ring(f):
        raise ValueError("coaction is defined on R only (no negative powers of t)")
    out = Tensor._raw(RH, {})
    for (a, b), c in f.terms.items():
        out = out + _rho_mono(a, b).scale(c)
    return out


def coaction_tensor(x: Tensor, index: int = 0) -> Tensor:
    """Apply ρ to the R-factor ``index`` of a tensor (R⊗X -> R⊗h_q⊗X)."""
    return x.expand_factor(index, coaction)


def torsor_map(x: Tensor) -> Tensor:
    """R⊗R -> R⊗h_q,  a⊗b |-> (a⊗1)·ρ(b)."""
    if x.kinds != (TorusElement, TorusElement) and x.terms:
        raise TypeError("torsor_map expects an element of R⊗R")
    out = Tensor._raw(RH, {})
    for (ka, kb), c in x.terms.items():
        if kb[0] < 0:
            raise ValueError("right tensor factor must lie in R (t-exponent >= 0)")
        left = Tensor.pure(TorusElement.monomial(*ka), HopfElement.one())
        out = out + (left * _rho_mono(*kb)).scale(c)
    return out


def _rr_basis(i_range, j_range):
    for a in i_range:
        for b in j_range:
            for c in i_range:
                for d in j_range:
                    yield ((a, b), (c, d))


@dataclass
class TorsorReport:
    source_dim: int
    rank: int
    injective: bool
    probes: dict = field(default_factory=dict)  # name -> (ok, witness Tensor or None)

    @property
    def passed(self):
        return self.injective and all(ok for ok, _ in self.probes.values())


def _torsor_vector(key):
    ka, kb = key
    left = Tensor.pure(TorusElement.monomial(*ka), HopfElement.one())
    return (left * _rho_mono(*kb)).terms


def torsor_rank_check(window: ExponentWindow | None = None, probes: bool = True) -> TorsorReport:
    """Exact rank of the torsor map on {t^aQ^b ⊗ t^cQ^d : (a,b),(c,d) in window}.

    Surjectivity probes look for preimages of 1⊗u, 1⊗u^-1, 1⊗v and of every
    t^iQ^j⊗1 (i,j in the window) inside the window enlarged by one step.
    """
    if window is None:
        window = ExponentWindow(0, 2, -2, 2)
    if window.i_min < 0:
        raise ValueError("torsor window needs non-negative t-exponents")
    irange = range(window.i_min, window.i_max + 1)
    jrange = range(window.j_min, window.j_max + 1)
    sb = SpanBasis()
    n = 0
    for key in _rr_basis(irange, jrange):
        sb.add(_torsor_vector(key), key)
        n += 1
    report = TorsorReport(source_dim=n, rank=sb.rank, injective=sb.rank == n)
    if not probes:
        return report
    big = SpanBasis()
    for key in _rr_basis(range(window.i_min, window.i_max + 2), range(window.j_min - 1, window.j_max + 2)):
        big.add(_torsor_vector(key), key)
    one = TorusElement.one()
    targets = {
        "1⊗u": Tensor.pure(one, U),
        "1⊗u^-1": Tensor.pure(one, HopfElement.monomial(-1, 0)),
        "1⊗v": Tensor.pure(one, V),
    }
    for i, j in window:
        targets[f"t^{i}Q^{j}⊗1"] = Tensor.pure(TorusElement.monomial(i, j), HopfElement.one())
    for name, target in targets.items():
        combo = big.express(target.terms)
        if combo is None:
            report.probes[name] = (False, None)
            continue
        witness = Tensor._raw((TorusElement, TorusElement), dict(combo))
        report.probes[name] = (torsor_map(witness) == target, witness)
    return report


# --- quotients and coinvariants --------------------------------------------

class QuotientTag(enum.Enum):
    FULL = "FULL"
    MOD_I = "MOD_I"  # u -> 1 on normal forms
    MOD_J = "MOD_J"  # v -> 0


class QuotientHopf:
    """Reduction of h_q modulo (u - 1) or (v), read on normal forms u^i v^j.

    MOD_J is a quotient Hopf algebra (Laurent polynomials in u, u group-like).
    MOD_I sends u^i v^j to v^j: this is the quotient by the right ideal
    (u - 1)h_q, a coideal, giving polynomials in a primitive v.
    """

    def __init__(self, tag: QuotientTag):
        self.tag = QuotientTag(tag)

    def project(self, a: HopfElement) -> HopfElement:
        if self.tag is QuotientTag.FULL:
            return a
        out = {}
        for (i, j), c in a.terms.items():
            if self.tag is QuotientTag.MOD_I:
                key = (0, j)
            elif j:
                continue
            else:
                key = (i, 0)
            s = out.get(key, ZERO) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return HopfElement._raw(out)

    def project_tensor(self, x: Tensor, index: int) -> Tensor:
        return x.map_factor(index, self.project)

    def mul(self, a: HopfElement, b: HopfElement) -> HopfElement:
        """Multiplication in the (commutative) quotient algebra."""
        if self.tag is QuotientTag.FULL:
            return a * b
        out = HopfElement.zero()
        for (i, j), x in a.terms.items():
            for (k, l), y in b.terms.items():
                out = out + HopfElement.monomial(i + k, j + l, x * y)
        return out

    def comul(self, a: HopfElement) -> Tensor:
        """Induced Δ on the quotient: (π⊗π)∘Δ on normal-form representatives."""
        d = comul(a)
        return self.project_tensor(self.project_tensor(d, 0), 1)


def hopf_ideal_check(tag: QuotientTag, bound: int = 2) -> dict:
    """Bounded-degree checks that the kernel of the projection is a Hopf ideal/coideal.

    Returns a dict of named booleans.  For each generator g: ε(g) = 0,
    (π⊗π)Δ(g) = 0 and π(S(g)) = 0; additionally (π⊗π)Δ(g·m) = 0 for
    monomials m = u^i v^j with |i|, j <= bound.
    """
    quot = QuotientHopf(tag)
    if quot.tag is QuotientTag.MOD_I:
        gen = U - HopfElement.one()
    elif quot.tag is QuotientTag.MOD_J:
        gen = V
    else:
        return {"trivial": True}
    res = {
        "counit": counit(gen) == 0,
        "comul": not quot.comul(gen),
        "antipode": not quot.project(antipode(gen)),
    }
    ok = True
    for i in range(-bound, bound + 1):
        for j in range(bound + 1):
            if quot.comul(gen * HopfElement.monomial(i, j)):
                ok = False
    res["comul_on_ideal"] = ok
    return res


def coinvariants(tag, window: ExponentWindow | None = None) -> list[TorusElement]:
    """Basis of {r in window : (id⊗π)ρ(r) = r⊗1} by an exact linear solve."""
    if window is None:
        window = ExponentWindow(0, 3, -3, 3)
    if window.i_min < 0:
        raise ValueError("coinvariant window needs non-negative t-exponents")
    quot = QuotientHopf(tag)
    cols = list(window)
    eqs: dict = {}
    for m in cols:
        img = quot.project_tensor(_rho_mono(*m), 1)
        img = img - Tensor.pure(TorusElement.monomial(*m), HopfElement.one())
        for key, c in img.terms.items():
            eqs.setdefault(key, {})[m] = c
    basis = nullspace(eqs.values(), cols)
    return [TorusElement._raw(dict(v)) for v in basis]


def qsi_left(op: Callable[[TorusElement], TorusElement], x: Tensor) -> Tensor:
    """Apply a qsi operator to the R factor of an R⊗h_q element."""
    return x.map_factor(0, op)


def sigma_left(x: Tensor) -> Tensor:
    return qsi_left(sigma, x)


def theta_left(x: Tensor) -> Tensor:
    return qsi_left(theta1, x)


def iter_monomials(i_range: Iterable[int], j_range: Iterable[int]):
    for i in i_range:
        for j in j_range:
            yield HopfElement.monomial(i, j)

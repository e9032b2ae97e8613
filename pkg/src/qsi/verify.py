"""Executable replays of the structural facts about the example.

Everything here is an exact computation on bounded exponent windows:
the determinant obstruction for commutative solutions, the simplicity
certificate for R, constants, fundamental matrices, trivialization of
modules over R and the induced h_q-comodule structure.
"""

from __future__ import annotations

import itertools
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .hopf import HopfElement, Tensor, coaction, comul, counit
from .linalg import SpanBasis, nullspace
from .qscalar import ONE, ZERO, QScalar, _content, _lcm_poly, _pdiv_exact, _pgcd_primitive, _pmul, _poly_str, _primitive, qint
from .qsimod import PAPER_M, UNIT, QsiModule, as_matrix, dual, internal_hom, tensor
from .qtorus import ExponentWindow, TorusElement, in_pv_ring, monomial_inverse, sigma, theta, theta1

__all__ = [
    "CommutativeSystemRing",
    "Relation",
    "lemma1_obstruction",
    "determinant_relation",
    "ApplyThetaN",
    "MultiplyMonomial",
    "SigmaCombine",
    "SimplicityCertificate",
    "simplicity_certificate",
    "ring_constants",
    "theta_constants",
    "FundamentalReport",
    "check_fundamental",
    "torus_matrix_inverse",
    "ConstantVector",
    "Trivialization",
    "trivialize_module",
    "coaction_matrix",
    "comodule_matrix_ok",
    "TannakaEntry",
    "tannaka_objects",
    "tannaka_suite",
    "WarmupReport",
    "classical_warmup",
    "DEFAULT_WINDOW",
    "SYSTEM_SIGMA",
    "SYSTEM_THETA",
]

DEFAULT_WINDOW = ExponentWindow(0, 3, -3, 3)

# The system matrices as displayed (acting on the column of unknowns).
SYSTEM_SIGMA = as_matrix([[QScalar((0, 1)), 0], [0, 1]])
SYSTEM_THETA = as_matrix([[0, 1], [0, 0]])


# --- commutative solutions are degenerate ------------------------------------

class CommutativeSystemRing:
    """Commutative polynomials in y_ab (1 <= a, b <= n) over Q(q).

    σ(Y) = A_sigma Y and θ(Y) = A_theta Y on generators.  θ on a product is
    defined by running the twisted Leibniz rule left to right over the
    factors in the order given, so two orderings of the same commutative
    monomial can disagree; that disagreement is the obstruction.
    """

    def __init__(self, A_sigma, A_theta):
        self.A_sigma = as_matrix(A_sigma)
        self.A_theta = as_matrix(A_theta)
        n = len(self.A_sigma)
        if any(len(r) != n for r in self.A_sigma) or len(self.A_theta) != n or any(
            len(r) != n for r in self.A_theta
        ):
            raise ValueError("system matrices must be square and of the same size")
        self.n = n
        self.ngens = n * n

    def index(self, a, b):
        return a * self.n + b

    def name(self, g):
        a, b = divmod(g, self.n)
        return f"y{a + 1}{b + 1}" if self.n < 10 else f"y{a + 1}_{b + 1}"

    def gen(self, g):
        e = [0] * self.ngens
        e[g] = 1
        return {tuple(e): ONE}

    def one(self):
        return {(0,) * self.ngens: ONE}

    @staticmethod
    def add(f, g, c=ONE):
        out = dict(f)
        for e, x in g.items():
            s = out.get(e, ZERO) + c * x
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return out

    @staticmethod
    def mul(f, g):
        out = {}
        for ea, a in f.items():
            for eb, b in g.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, ZERO) + a * b
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return out

    def _row_action(self, A, g):
        a, b = divmod(g, self.n)
        out = {}
        for c in range(self.n):
            if A[a][c]:
                out = self.add(out, self.gen(self.index(c, b)), A[a][c])
        return out

    def sigma_gen(self, g):
        return self._row_action(self.A_sigma, g)

    def theta_gen(self, g):
        return self._row_action(self.A_theta, g)

    def word(self, gens):
        out = self.one()
        for g in gens:
            out = self.mul(out, self.gen(g))
        return out

    def sigma_word(self, gens):
        out = self.one()
        for g in gens:
            out = self.mul(out, self.sigma_gen(g))
        return out

    def theta_word(self, gens):
        """θ(g1 g2 ... gk) = θ(g1) g2...gk + σ(g1) θ(g2...gk)."""
        gens = tuple(gens)
        if not gens:
            return {}
        if len(gens) == 1:
            return self.theta_gen(gens[0])
        head, rest = gens[0], gens[1:]
        first = self.mul(self.theta_gen(head), self.word(rest))
        second = self.mul(self.sigma_gen(head), self.theta_word(rest))
        return self.add(first, second)


class Relation:
    """A polynomial in the y_ab normalized to integer coefficients in q.

    Normalization: clear denominators, divide by the integer content, then
    fix the sign so the lexicographically largest monomial has a
    coefficient whose top q-term is positive.
    """

    def __init__(self, ring: CommutativeSystemRing, poly: dict):
        if not poly:
            raise ValueError("zero relation")
        self.names = [ring.name(g) for g in range(ring.ngens)]
        den = (1,)
        for c in poly.values():
            den = _lcm_poly(den, c._d)
        coeffs = {e: _pdiv_exact(_pmul(c._n, den), c._d) for e, c in poly.items()}
        g = 0
        for c in coeffs.values():
            g = gcd(g, _content(c))
        coeffs = {e: tuple(x // g for x in c) for e, c in coeffs.items()}
        lead = max(coeffs)
        if coeffs[lead][-1] < 0:
            coeffs = {e: tuple(-x for x in c) for e, c in coeffs.items()}
        self.coeffs = coeffs

    def key(self):
        return tuple(sorted(self.coeffs.items()))

    def __eq__(self, other):
        return isinstance(other, Relation) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def common_factor(self):
        """Primitive polynomial gcd of all coefficients (positive leading term)."""
        g = None
        for c in self.coeffs.values():
            p = _primitive(c)
            if p[-1] < 0:
                p = tuple(-x for x in p)
            g = p if g is None else _pgcd_primitive(g, p)
        return g

    def _mono(self, e):
        parts = []
        for name, k in zip(self.names, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts) or "1"

    def __str__(self):
        g = self.common_factor()
        body = []
        for e in sorted(self.coeffs, reverse=True):
            c = _pdiv_exact(self.coeffs[e], g)
            mono = self._mono(e)
            if c == (1,):
                s = mono
            elif c == (-1,):
                s = "-" + mono
            else:
                cs = _poly_str(c)
                if sum(1 for x in c if x) > 1:
                    cs = f"({cs})"
                s = f"{cs}*{mono}"
            if body and s.startswith("-"):
                body.append("- " + s[1:])
            elif body:
                body.append("+ " + s)
            else:
                body.append(s)
        text = " ".join(body)
        if g == (1,):
            return text
        if len(body) > 1:
            text = f"({text})"
        return f"({_poly_str(g)})*{text}"

    def __repr__(self):
        return f"Relation({str(self)!r})"


def lemma1_obstruction(A_sigma, A_theta, order: Optional[Sequence[int]] = None) -> list[Relation]:
    """Nonzero values of θ(g h) - θ(h g) over unordered generator pairs, normalized.

    For the example system this is the single relation (q-1)(y11 y22 - y12 y21).
    """
    ring = CommutativeSystemRing(A_sigma, A_theta)
    gens = list(order) if order is not None else list(range(ring.ngens))
    if sorted(gens) != list(range(ring.ngens)):
        raise ValueError("order must be a permutation of the generators")
    seen = []
    for g, h in itertools.combinations(gens, 2):
        diff = ring.add(ring.theta_word((g, h)), ring.theta_word((h, g)), -ONE)
        if diff:
            rel = Relation(ring, diff)
            if rel not in seen:
                seen.append(rel)
    return sorted(seen, key=lambda r: r.key())


def determinant_relation() -> Relation:
    """(q-1)(y11 y22 - y12 y21) in the 2x2 system ring."""
    ring = CommutativeSystemRing(SYSTEM_SIGMA, SYSTEM_THETA)
    qm1 = QScalar((-1, 1))
    det = ring.add(ring.word((0, 3)), ring.word((1, 2)), -ONE)
    return Relation(ring, {e: c * qm1 for e, c in det.items()})


# --- simplicity of R --------------------------------------------------------

@dataclass(frozen=True)
class ApplyThetaN:
    n: int
    result: TorusElement

    def apply(self, f):
        return theta(self.n, f)

    def __str__(self):
        return f"ApplyThetaN({self.n}) => {self.result}"


@dataclass(frozen=True)
class MultiplyMonomial:
    coeff: QScalar
    power: int
    result: TorusElement

    def apply(self, f):
        return f * TorusElement.monomial(0, self.power, self.coeff)

    def __str__(self):
        return f"MultiplyMonomial({self.coeff}, {self.power}) => {self.result}"


@dataclass(frozen=True)
class SigmaCombine:
    s: int
    result: TorusElement

    def apply(self, f):
        qs = QScalar.qpow(self.s)
        return (f.scale(qs) - sigma(f)).scale((qs - ONE).inv())

    def __str__(self):
        return f"SigmaCombine({self.s}) => {self.result}"


Step = Union[ApplyThetaN, MultiplyMonomial, SigmaCombine]


@dataclass(frozen=True)
class SimplicityCertificate:
    """Steps taking a nonzero element of a qsi ideal of R to 1."""

    source: TorusElement
    steps: tuple

    def replay(self) -> TorusElement:
        f = self.source
        for step in self.steps:
            f = step.apply(f)
            if f != step.result:
                raise AssertionError(f"replay diverged at {step}")
        return f

    def is_valid(self) -> bool:
        try:
            return self.replay() == TorusElement.one()
        except AssertionError:
            return False

    def sigma_passes(self) -> int:
        return sum(isinstance(s, SigmaCombine) for s in self.steps)

    def __str__(self):
        if not self.steps:
            return f"{self.source} is already 1"
        return "; ".join(str(s) for s in self.steps)


def simplicity_certificate(f: TorusElement) -> SimplicityCertificate:
    """Reduce f to 1 with qsi operations and multiplication by monomials.

    1. n = top t-degree; θ^(n) leaves the top coefficient a_n(Q) != 0.
    2. Multiply by the inverse of its lowest Q-term: h = 1 + b_1 Q + ... + b_s Q^s.
    3. While s > 0: h <- (q^s h - σ(h)) / (q^s - 1), which kills Q^s and keeps 1.
    """
    if isinstance(f, (int, QScalar)):
        f = TorusElement.scalar(f)
    if not f:
        raise ValueError("the zero element generates the zero ideal")
    if not in_pv_ring(f):
        raise ValueError("element is not in R (negative power of t)")
    steps = []
    n = max(i for i, _ in f.terms)
    h = f
    if n:
        h = theta(n, h)
        steps.append(ApplyThetaN(n, h))
    assert all(i == 0 for i, _ in h.terms)
    low = min(j for _, j in h.terms)
    c = h.terms[(0, low)]
    if low or c != 1:
        inv = monomial_inverse(TorusElement.monomial(0, low, c))
        h = h * inv
        steps.append(MultiplyMonomial(inv.terms[(0, -low)], -low, h))
    while True:
        s = max(j for _, j in h.terms)
        if s == 0:
            break
        qs = QScalar.qpow(s)
        h = (h.scale(qs) - sigma(h)).scale((qs - ONE).inv())
        steps.append(SigmaCombine(s, h))
    return SimplicityCertificate(f, tuple(steps))


# --- constants ---------------------------------------------------------------

def _window_solve(window: ExponentWindow, with_sigma: bool) -> list[TorusElement]:
    cols = list(window)
    eqs: dict = {}
    for (i, j) in cols:
        if with_sigma:
            c = QScalar.qpow(i + j) - ONE
            if c:
                eqs.setdefault(("s", i, j), {})[(i, j)] = c
        if i:
            eqs.setdefault(("t", i - 1, j), {})[(i, j)] = qint(i)
    return [TorusElement._raw(dict(v)) for v in nullspace(eqs.values(), cols)]


def ring_constants(window: ExponentWindow) -> list[TorusElement]:
    """Basis of {r in window : σ(r) = r, θ(r) = 0}."""
    return _window_solve(window, with_sigma=True)


def theta_constants(window: ExponentWindow) -> list[TorusElement]:
    """Basis of {r in window : θ(r) = 0}."""
    return _window_solve(window, with_sigma=False)


# --- fundamental matrices ----------------------------------------------------

def _tmat(rows):
    out = []
    for row in rows:
        out.append(tuple(x if isinstance(x, TorusElement) else TorusElement.scalar(x) for x in row))
    return tuple(out)


def torus_mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for a in range(n):
        row = []
        for b in range(p):
            acc = TorusElement.zero()
            for c in range(m):
                if A[a][c] and B[c][b]:
                    acc = acc + A[a][c] * B[c][b]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _scalar_times(A, Y):
    """A (scalar matrix) times Y (torus matrix)."""
    return torus_mat_mul(_tmat(A), Y)


def _is_identity(M):
    n = len(M)
    return all(M[a][b] == (TorusElement.one() if a == b else TorusElement.zero()) for a in range(n) for b in range(n))


def torus_matrix_inverse(C, window: ExponentWindow = DEFAULT_WINDOW):
    """Two-sided inverse of a square torus matrix with entries supported in ``window``.

    Solves C·D = I column by column over unknown monomials in the window and
    then checks D·C = I.  Returns None when no such D exists in the window.
    """
    C = _tmat(C)
    n = len(C)
    sb = SpanBasis()
    for l in range(n):
        for m in window:
            mono = TorusElement.monomial(*m)
            vec = {}
            for j in range(n):
                if C[j][l]:
                    for k, x in (C[j][l] * mono).terms.items():
                        vec[(j, k)] = x
            if vec:
                sb.add(vec, (l, m))
    D = [[TorusElement.zero() for _ in range(n)] for _ in range(n)]
    for jp in range(n):
        combo = sb.express({(jp, (0, 0)): ONE})
        if combo is None:
            return None
        for (l, m), c in combo.items():
            D[l][jp] = D[l][jp] + TorusElement.monomial(*m, c)
    D = tuple(tuple(r) for r in D)
    if not (_is_identity(torus_mat_mul(C, D)) and _is_identity(torus_mat_mul(D, C))):
        return None
    return D


@dataclass
class FundamentalReport:
    passed: bool
    violations: list  # (kind, row, col, lhs, rhs), 1-based positions
    inverse: Optional[tuple]
    inverse_ok: bool

    @property
    def first_violation(self):
        return self.violations[0] if self.violations else None


def check_fundamental(Y, A_sigma, A_theta, inverse=None, window: ExponentWindow = DEFAULT_WINDOW) -> FundamentalReport:
    """Check σY = A_sigma Y and θ^(1)Y = A_theta Y entrywise, and invertibility of Y."""
    Y = _tmat(Y)
    A_sigma, A_theta = as_matrix(A_sigma), as_matrix(A_theta)
    n = len(Y)
    if any(len(r) != n for r in Y) or len(A_sigma) != n or len(A_theta) != n:
        raise ValueError("shape mismatch between Y and the system matrices")
    violations = []
    for kind, op, A in (("sigma", sigma, A_sigma), ("theta", theta1, A_theta)):
        rhs = _scalar_times(A, Y)
        for a in range(n):
            for b in range(n):
                lhs = op(Y[a][b])
                if lhs != rhs[a][b]:
                    violations.append((kind, a + 1, b + 1, lhs, rhs[a][b]))
    if inverse is not None:
        inv = _tmat(inverse)
        inv_ok = _is_identity(torus_mat_mul(Y, inv)) and _is_identity(torus_mat_mul(inv, Y))
    else:
        inv = torus_matrix_inverse(Y, window)
        inv_ok = inv is not None
    return FundamentalReport(not violations, violations, inv, inv_ok)


# --- trivialization of modules over R ---------------------------------------

@dataclass(frozen=True)
class ConstantVector:
    """Element sum_l coords[l] ⊗ e_l of R⊗M."""

    module: QsiModule
    coords: tuple

    def sigma_action(self):
        S = self.module.S
        sc = [sigma(r) for r in self.coords]
        return tuple(
            sum((sc[l].scale(S[a][l]) for l in range(self.module.dim) if S[a][l]), TorusElement.zero())
            for a in range(self.module.dim)
        )

    def theta_action(self):
        T = self.module.T
        sc = [sigma(r) for r in self.coords]
        out = []
        for a in range(self.module.dim):
            acc = theta1(self.coords[a])
            for l in range(self.module.dim):
                if T[a][l]:
                    acc = acc + sc[l].scale(T[a][l])
            out.append(acc)
        return tuple(out)

    def is_constant(self) -> bool:
        zero = TorusElement.zero()
        return self.sigma_action() == self.coords and all(x == zero for x in self.theta_action())

    def left_mul(self, r: TorusElement) -> "ConstantVector":
        return ConstantVector(self.module, tuple(r * x for x in self.coords))

    def __add__(self, other):
        return ConstantVector(self.module, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __str__(self):
        out = ""
        for l, r in enumerate(self.coords):
            if not r:
                continue
            rs = str(r)
            if len(r) > 1:
                rs = f"({rs})"
            piece = f"{rs}⊗e{l + 1}"
            if not out:
                out = piece
            elif piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out or "0"


@dataclass
class Trivialization:
    module: QsiModule
    window: ExponentWindow
    constants: list
    frame_inverse: Optional[tuple] = None

    @property
    def is_free(self) -> bool:
        return len(self.constants) == self.module.dim and self.frame_inverse is not None

    def frame(self):
        return tuple(c.coords for c in self.constants)

    def __len__(self):
        return len(self.constants)

    def __iter__(self):
        return iter(self.constants)

    def __getitem__(self, k):
        return self.constants[k]


def trivialize_module(M: QsiModule, window: Optional[ExponentWindow] = None, check_free: bool = True) -> Trivialization:
    """Constants of R⊗M supported in ``window`` (σ⊗S and θ⊗1 + σ⊗T actions).

    Unknowns are ordered by descending t-degree so the kernel basis comes out
    with a unit coefficient on its lowest-t coordinate.
    """
    if window is None:
        window = DEFAULT_WINDOW
    n = M.dim
    cols = sorted(((i, j, l) for (i, j) in window for l in range(n)), key=lambda k: (-k[0], k[1], k[2]))
    eqs: dict = {}

    def put(key, col, val):
        row = eqs.setdefault(key, {})
        s = row.get(col, ZERO) + val
        if s:
            row[col] = s
        else:
            row.pop(col, None)

    for col in cols:
        i, j, l = col
        w = QScalar.qpow(i + j)
        for a in range(n):
            if M.S[a][l]:
                put(("s", a, i, j), col, w * M.S[a][l])
            if M.T[a][l]:
                put(("t", a, i, j), col, w * M.T[a][l])
        put(("s", l, i, j), col, -ONE)
        if i:
            put(("t", l, i - 1, j), col, qint(i))
    constants = []
    for vec in nullspace(eqs.values(), cols):
        coords = [dict() for _ in range(n)]
        for (i, j, l), c in vec.items():
            coords[l][(i, j)] = c
        cv = ConstantVector(M, tuple(TorusElement._raw(d) for d in coords))
        if not cv.is_constant():
            raise AssertionError(f"solver returned a non-constant {cv}")
        constants.append(cv)
    triv = Trivialization(M, window, constants)
    if check_free and len(constants) == n:
        # the inverse frame lives around the origin on the other side
        a = max(abs(window.i_min), abs(window.i_max))
        b = max(abs(window.j_min), abs(window.j_max))
        triv.frame_inverse = torus_matrix_inverse(triv.frame(), ExponentWindow(-a, a, -b, b))
    return triv


def coaction_matrix(triv: Trivialization):
    """h with ρ(c_k) = sum_j c_j ⊗ h[j][k], read off through the frame inverse.

    Returns None if some entry has a non-scalar R-part (no comodule structure
    on the constants) or the recomposition check fails.
    """
    if not triv.is_free:
        return None
    C = triv.frame()
    D = triv.frame_inverse
    n = len(C)
    H = [[None] * n for _ in range(n)]
    rho = [[coaction(C[k][l]) for l in range(n)] for k in range(n)]
    for k in range(n):
        for jp in range(n):
            acc = None
            for l in range(n):
                if not D[l][jp]:
                    continue
                piece = rho[k][l] * Tensor.pure(D[l][jp], HopfElement.one())
                acc = piece if acc is None else acc + piece
            if acc is None or not acc:
                H[jp][k] = HopfElement.zero()
                continue
            if not acc.factor_is_scalar(0):
                return None
            H[jp][k] = HopfElement._raw({key[1]: c for key, c in acc.terms.items()})
    # ρ(c_k) must equal sum_j c_j ⊗ h[j][k], coordinate by coordinate
    for k in range(n):
        for l in range(n):
            acc = Tensor._raw((TorusElement, HopfElement), {})
            for j in range(n):
                if C[j][l] and H[j][k]:
                    acc = acc + Tensor.pure(C[j][l], H[j][k])
            if acc != rho[k][l]:
                return None
    return tuple(tuple(r) for r in H)


def comodule_matrix_ok(H) -> bool:
    """Δ(h_mk) = sum_j h_mj ⊗ h_jk and ε(h) = identity."""
    n = len(H)
    for m in range(n):
        for k in range(n):
            if counit(H[m][k]) != (ONE if m == k else ZERO):
                return False
            rhs = Tensor._raw((HopfElement, HopfElement), {})
            for j in range(n):
                if H[m][j] and H[j][k]:
                    rhs = rhs + Tensor.pure(H[m][j], H[j][k])
            if comul(H[m][k]) != rhs:
                return False
    return True


@dataclass
class TannakaEntry:
    name: str
    dim: int
    constants_dim: int
    free: bool
    coaction: Optional[tuple]
    comodule_ok: bool

    @property
    def passed(self) -> bool:
        return self.constants_dim == self.dim and self.free and self.comodule_ok


def tannaka_objects(size_bound: int = 8) -> list[QsiModule]:
    """Unit, tensor words in M and M∨ of length <= 3, and duals of length-2 words."""
    M, Md = PAPER_M, dual(PAPER_M)
    objs = [UNIT]
    for length in (1, 2, 3):
        for word in itertools.product((M, Md), repeat=length):
            obj = word[0]
            for w in word[1:]:
                obj = tensor(obj, w)
            if obj.dim <= size_bound:
                objs.append(obj)
            if length == 2 and obj.dim <= size_bound:
                objs.append(dual(obj))
    return objs


def tannaka_suite(size_bound: int = 8, window: Optional[ExponentWindow] = None) -> list[TannakaEntry]:
    entries = []
    for obj in tannaka_objects(size_bound):
        triv = trivialize_module(obj, window)
        H = coaction_matrix(triv) if triv.is_free else None
        entries.append(
            TannakaEntry(
                name=obj.name or f"dim{obj.dim}",
                dim=obj.dim,
                constants_dim=len(triv),
                free=triv.is_free,
                coaction=H,
                comodule_ok=H is not None and comodule_matrix_ok(H),
            )
        )
    return entries


# --- the classical warm-up ---------------------------------------------------

def _dpoly(p):
    return {k - 1: c * k for k, c in p.items() if k}


def _pm(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _pa(a, b, s=1):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + s * v
    return {k: v for k, v in out.items() if v}


@dataclass
class WarmupReport:
    identity_holds: bool
    determinant: dict
    determinant_derivative: dict

    @property
    def passed(self) -> bool:
        return self.identity_holds and self.determinant == {0: Fraction(-1)} and not self.determinant_derivative


def classical_warmup() -> WarmupReport:
    """∂_t [[t,1],[1,0]] = [[0,1],[0,0]]·[[t,1],[1,0]] in Q[t], with det = -1."""
    t, one = {1: Fraction(1)}, {0: Fraction(1)}
    Y = [[t, one], [one, {}]]
    A = [[{}, one], [{}, {}]]
    ok = True
    for a in range(2):
        for b in range(2):
            rhs = {}
            for c in range(2):
                rhs = _pa(rhs, _pm(A[a][c], Y[c][b]))
            if _dpoly(Y[a][b]) != rhs:
                ok = False
    det = _pa(_pm(Y[0][0], Y[1][1]), _pm(Y[0][1], Y[1][0]), -1)
    return WarmupReport(ok, det, _dpoly(det))

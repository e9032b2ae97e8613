"""Finite-dimensional modules over the operator algebra k[σ, θ*].

A module is a pair of square matrices over Q(q) acting on coordinate
vectors: ``S`` for σ and ``T`` for θ^(1).  Because θ∘σ = q σ∘θ, every valid
module satisfies ``T S = q S T``.

The example module M = k m1 ⊕ k m2 (σ m1 = q m1, σ m2 = m2, θ m1 = m2, θ m2 = 0)
is :data:`PAPER_M`; its displayed matrices are stored transposed because we
act on coordinates rather than on the column of basis symbols.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .linalg import nullspace
from .qscalar import ONE, ZERO, Q, QScalar, qfact

__all__ = [
    "ModuleError",
    "SingularSigmaError",
    "QCommutationError",
    "QsiModule",
    "ModuleMap",
    "IsoResult",
    "make_module",
    "tensor",
    "internal_hom",
    "dual",
    "direct_sum",
    "iso_test",
    "random_module",
    "PAPER_M",
    "UNIT",
    "MAX_ISO_DIM",
]

Matrix = tuple  # tuple of row tuples of QScalar

MAX_ISO_DIM = 4
_WITNESS_RANGE = (0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5)


class ModuleError(ValueError):
    pass


class SingularSigmaError(ModuleError):
    pass


class QCommutationError(ModuleError):
    pass


# --- small dense matrices over Q(q) -----------------------------------------

def _s(x):
    if isinstance(x, QScalar):
        return x
    if isinstance(x, int):
        return QScalar.from_int(x)
    return QScalar.from_fraction(x)


def as_matrix(rows) -> Matrix:
    return tuple(tuple(_s(x) for x in row) for row in rows)


def identity(n) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def zeros(n, m=None) -> Matrix:
    return tuple((ZERO,) * (n if m is None else m) for _ in range(n))


def mat_mul(A, B) -> Matrix:
    out = []
    for row in A:
        acc = [ZERO] * len(B[0])
        for k, a in enumerate(row):
            if a:
                for j, b in enumerate(B[k]):
                    if b:
                        acc[j] = acc[j] + a * b
        out.append(tuple(acc))
    return tuple(out)


def mat_add(A, B) -> Matrix:
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(A, c) -> Matrix:
    return tuple(tuple(a * c for a in row) for row in A)


def transpose(A) -> Matrix:
    return tuple(zip(*A)) if A else ()


def kron(A, B) -> Matrix:
    rows = []
    for ra in A:
        for rb in B:
            rows.append(tuple(a * b for a in ra for b in rb))
    return tuple(rows)


def block_diag(A, B) -> Matrix:
    n, m = len(A), len(B)
    rows = [tuple(A[i]) + (ZERO,) * m for i in range(n)]
    rows += [(ZERO,) * n + tuple(B[i]) for i in range(m)]
    return tuple(rows)


def mat_inv(A) -> Matrix:
    """Gauss-Jordan inverse; raises ZeroDivisionError when A is singular."""
    n = len(A)
    M = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        inv = M[col][col].inv()
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            c = M[r][col]
            if r != col and c:
                M[r] = [x - c * y for x, y in zip(M[r], M[col])]
    return tuple(tuple(row[n:]) for row in M)


def det(A) -> QScalar:
    n = len(A)
    M = [list(row) for row in A]
    out = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            out = -out
        p = M[col][col]
        out = out * p
        inv = p.inv()
        for r in range(col + 1, n):
            c = M[r][col]
            if c:
                f = c * inv
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return out


def mat_str(A) -> str:
    return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in A) + "]"


# --- modules ----------------------------------------------------------------

@dataclass(frozen=True)
class QsiModule:
    dim: int
    S: Matrix
    T: Matrix
    name: str = ""

    def theta_action(self, m: int) -> Matrix:
        """Matrix of θ^(m) = T^m / [m]_q!."""
        out = identity(self.dim)
        for _ in range(m):
            out = mat_mul(out, self.T)
        return mat_scale(out, qfact(m).inv())

    def satisfies_q_commutation(self) -> bool:
        return mat_mul(self.T, self.S) == mat_scale(mat_mul(self.S, self.T), Q)

    def same_matrices(self, other) -> bool:
        return self.dim == other.dim and self.S == other.S and self.T == other.T

    def __str__(self):
        label = f"{self.name} " if self.name else ""
        return f"{label}(dim {self.dim}, S={mat_str(self.S)}, T={mat_str(self.T)})"


def make_module(S, T, name: str = "") -> QsiModule:
    S, T = as_matrix(S), as_matrix(T)
    n = len(S)
    if n == 0 or any(len(r) != n for r in S) or len(T) != n or any(len(r) != n for r in T):
        raise ModuleError("S and T must be square matrices of the same size")
    if not det(S):
        raise SingularSigmaError("sigma matrix is singular")
    mod = QsiModule(n, S, T, name)
    if not mod.satisfies_q_commutation():
        raise QCommutationError("q-commutation T*S = q*S*T fails")
    return mod


PAPER_M = make_module([[Q, 0], [0, 1]], [[0, 0], [1, 0]], "M")
UNIT = make_module([[1]], [[0]], "1")


@dataclass(frozen=True)
class ModuleMap:
    source: QsiModule
    target: QsiModule
    matrix: Matrix

    def __post_init__(self):
        P = self.matrix
        if mat_mul(P, self.source.S) != mat_mul(self.target.S, P) or mat_mul(
            P, self.source.T
        ) != mat_mul(self.target.T, P):
            raise ModuleError("matrix does not intertwine sigma and theta actions")

    def is_invertible(self) -> bool:
        return self.source.dim == self.target.dim and bool(det(self.matrix))


def tensor(M1: QsiModule, M2: QsiModule) -> QsiModule:
    """M1 ⊗ M2 with Δσ = σ⊗σ and Δθ = θ⊗1 + σ⊗θ."""
    S = kron(M1.S, M2.S)
    T = mat_add(kron(M1.T, identity(M2.dim)), kron(M1.S, M2.T))
    name = f"({M1.name}⊗{M2.name})" if M1.name and M2.name else ""
    return make_module(S, T, name)


def internal_hom(M1: QsiModule, M2: QsiModule) -> QsiModule:
    """Hom(M1, M2); coordinates of F are its entries in row-major order.

    σ_h(F) = S2 F S1^-1 and θ_h(F) = -σ_h(F) T1 + T2 F; with
    vec(A F B) = (A ⊗ B^T) vec(F) these become Kronecker products.
    """
    S1inv = mat_inv(M1.S)
    S = kron(M2.S, transpose(S1inv))
    T = mat_add(
        mat_scale(kron(M2.S, transpose(mat_mul(S1inv, M1.T))), -ONE),
        kron(M2.T, identity(M1.dim)),
    )
    name = f"Hom({M1.name},{M2.name})" if M1.name and M2.name else ""
    return make_module(S, T, name)


def dual(M: QsiModule) -> QsiModule:
    out = internal_hom(M, UNIT)
    return QsiModule(out.dim, out.S, out.T, f"{M.name}∨" if M.name else "")


def direct_sum(M1: QsiModule, M2: QsiModule) -> QsiModule:
    name = f"({M1.name}⊕{M2.name})" if M1.name and M2.name else ""
    return make_module(block_diag(M1.S, M2.S), block_diag(M1.T, M2.T), name)


def hom_sigma(M1, M2, F) -> Matrix:
    """σ_h applied to a map F (dim2 x dim1 matrix)."""
    return mat_mul(mat_mul(M2.S, F), mat_inv(M1.S))


def hom_theta(M1, M2, F) -> Matrix:
    return mat_add(mat_scale(mat_mul(hom_sigma(M1, M2, F), M1.T), -ONE), mat_mul(M2.T, F))


# --- isomorphism test -------------------------------------------------------

class IsoResult(NamedTuple):
    isomorphic: bool
    witness: Optional[ModuleMap]

    def __bool__(self):
        return self.isomorphic


def intertwiner_space(M1: QsiModule, M2: QsiModule) -> list[Matrix]:
    """Basis of {P : P S1 = S2 P, P T1 = T2 P} (P is dim2 x dim1)."""
    n, m = M2.dim, M1.dim
    cols = [(a, b) for a in range(n) for b in range(m)]
    rows = []
    for A1, A2 in ((M1.S, M2.S), (M1.T, M2.T)):
        for a in range(n):
            for b in range(m):
                eq = {}
                # (P A1)[a][b] - (A2 P)[a][b]
                for c in range(m):
                    x = A1[c][b]
                    if x:
                        eq[(a, c)] = eq.get((a, c), ZERO) + x
                for c in range(n):
                    x = A2[a][c]
                    if x:
                        eq[(c, b)] = eq.get((c, b), ZERO) - x
                eq = {k: v for k, v in eq.items() if v}
                if eq:
                    rows.append(eq)
    basis = []
    for vec in nullspace(rows, cols):
        basis.append(tuple(tuple(vec.get((a, b), ZERO) for b in range(m)) for a in range(n)))
    return basis


# Multivariate polynomials in the combination parameters: dict exps -> QScalar.

def _mpoly_mul(f, g):
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


def _mpoly_add(f, g, sign=1):
    out = dict(f)
    for e, b in g.items():
        s = out.get(e, ZERO) + (b if sign > 0 else -b)
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def generic_determinant(basis: Sequence[Matrix]) -> dict:
    """det(sum_i x_i B_i) as a polynomial in x_1..x_k (Laplace with memoised minors).

    Total degree is at most n and the degree in each x_i at most n.
    """
    k = len(basis)
    n = len(basis[0])
    unit = [tuple(1 if i == j else 0 for j in range(k)) for i in range(k)]
    entry = [
        [{unit[i]: basis[i][r][c] for i in range(k) if basis[i][r][c]} for c in range(n)]
        for r in range(n)
    ]
    memo = {(): {(0,) * k: ONE}}

    def minor(cols):
        # rows n-len(cols) .. n-1 against the given column tuple
        if cols in memo:
            return memo[cols]
        r = n - len(cols)
        acc = {}
        for pos, c in enumerate(cols):
            if not entry[r][c]:
                continue
            sub = minor(cols[:pos] + cols[pos + 1 :])
            if sub:
                acc = _mpoly_add(acc, _mpoly_mul(entry[r][c], sub), -1 if pos % 2 else 1)
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))


def _substitute(poly, var, value):
    out = {}
    for e, c in poly.items():
        ne = e[:var] + (0,) + e[var + 1 :]
        s = out.get(ne, ZERO) + c * (value ** e[var] if e[var] else 1)
        if s:
            out[ne] = s
        else:
            out.pop(ne, None)
    return out


def iso_test(M1: QsiModule, M2: QsiModule) -> IsoResult:
    """Decide M1 ≅ M2 and return an invertible intertwiner when they are.

    The generic determinant of the intertwiner space is nonzero iff some
    member is invertible.  A witness is found by fixing parameters one at a
    time from [-5, 5]: each parameter occurs with degree <= dim <= 4 < 11,
    so a value keeping the polynomial nonzero always exists.
    """
    if M1.dim != M2.dim:
        return IsoResult(False, None)
    if M1.dim > MAX_ISO_DIM:
        raise ValueError(f"iso_test supports dim <= {MAX_ISO_DIM}, got {M1.dim}")
    basis = intertwiner_space(M1, M2)
    if not basis:
        return IsoResult(False, None)
    poly = generic_determinant(basis)
    if not poly:
        return IsoResult(False, None)
    values = []
    for var in range(len(basis)):
        for v in _WITNESS_RANGE:
            trial = _substitute(poly, var, QScalar.from_int(v))
            if trial:
                poly = trial
                values.append(v)
                break
        else:
            raise RuntimeError("internal inconsistency: no witness in [-5, 5] for nonzero determinant")
    P = zeros(M2.dim, M1.dim)
    for v, B in zip(values, basis):
        if v:
            P = mat_add(P, mat_scale(B, QScalar.from_int(v)))
    witness = ModuleMap(M1, M2, P)
    if not witness.is_invertible():
        raise RuntimeError("internal inconsistency: witness is singular")
    return IsoResult(True, witness)


# --- seeded random modules --------------------------------------------------

def random_module(rng: random.Random, dim: int) -> QsiModule:
    """A random valid module of the given dimension.

    Start from diagonal S = diag(c_a q^k_a); T may only connect a -> b when
    s_b = q s_a, which makes T S = q S T hold.  The pair is then conjugated
    by a random unimodular integer matrix.
    """
    # weights in a short chain so that T has room to be nonzero
    base = rng.randint(-1, 1)
    ks = [base + rng.randint(0, 2) for _ in range(dim)]
    c0 = rng.choice((1, -1, 2))
    cs = [c0 if rng.random() < 0.85 else rng.choice((1, -1, 2)) for _ in range(dim)]
    svals = [QScalar.from_int(c).mul_qpow(k) for c, k in zip(cs, ks)]
    S = [[svals[a] if a == b else ZERO for b in range(dim)] for a in range(dim)]
    T = [[ZERO] * dim for _ in range(dim)]
    for a, b in itertools.product(range(dim), repeat=2):
        if svals[b] == svals[a] * Q and rng.random() < 0.8:
            T[a][b] = QScalar.from_int(rng.choice((1, -1, 2, 3)))
    S, T = as_matrix(S), as_matrix(T)
    if dim > 1 and rng.random() < 0.7:
        P = [list(r) for r in identity(dim)]
        for _ in range(rng.randint(1, 3)):
            i, j = rng.sample(range(dim), 2)
            c = QScalar.from_int(rng.choice((1, -1, 2)))
            P[i] = [x + c * y for x, y in zip(P[i], P[j])]
        P = as_matrix(P)
        Pinv = mat_inv(P)
        S = mat_mul(mat_mul(P, S), Pinv)
        T = mat_mul(mat_mul(P, T), Pinv)
    return make_module(S, T)

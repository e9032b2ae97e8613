"""Sparse exact linear algebra over Q(q).

Vectors are dicts ``key -> QScalar`` with no zero entries.  Every solver on
bounded exponent windows in the package reduces to the two tools here:

* :func:`nullspace` -- canonical RREF kernel basis for a given column order;
* :class:`SpanBasis` -- incremental echelon basis that records how each row
  was built, so membership queries come with an explicit witness.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

from .qscalar import ONE, QScalar

__all__ = ["axpy", "nullspace", "rank", "SpanBasis"]

Vector = dict


def axpy(y: Vector, a: QScalar, x: Vector) -> None:
    """In place y += a * x."""
    if not a:
        return
    for k, v in x.items():
        s = y.get(k)
        if s is None:
            y[k] = a * v
        else:
            s = s + a * v
            if s:
                y[k] = s
            else:
                del y[k]


def _scaled(x: Vector, a: QScalar) -> Vector:
    return {k: v * a for k, v in x.items()}


def nullspace(rows: Iterable[Vector], columns: Sequence[Hashable]) -> list[Vector]:
    """Basis of {x : row . x = 0 for every row}, indexed by ``columns``.

    The row space is brought to reduced row echelon form with the leftmost
    available pivot, so the returned basis is canonical: each vector has a 1
    at its free column, zeros at the other free columns, and its last
    nonzero entry (in column order) is that free column.
    """
    index = {c: n for n, c in enumerate(columns)}
    pivots: dict[int, dict[int, QScalar]] = {}
    for row in rows:
        r = {}
        for k, v in row.items():
            if v:
                try:
                    r[index[k]] = v
                except KeyError:
                    raise KeyError(f"equation mentions unknown column {k!r}") from None
        for p in [p for p in r if p in pivots]:
            c = r.get(p)
            if c:
                axpy(r, -c, pivots[p])
        if not r:
            continue
        p = min(r)
        r = _scaled(r, r[p].inv())
        for other in pivots.values():
            c = other.get(p)
            if c:
                axpy(other, -c, r)
        pivots[p] = r
    basis = []
    for f in range(len(columns)):
        if f in pivots:
            continue
        vec = {columns[f]: ONE}
        for p, r in pivots.items():
            c = r.get(f)
            if c:
                vec[columns[p]] = -c
        basis.append(vec)
    return basis


class SpanBasis:
    """Incremental echelon basis with combination tracking.

    ``add(vec, label)`` inserts a vector; ``express(target)`` returns a dict
    ``label -> coefficient`` whose combination equals ``target``, or None when
    ``target`` is outside the span.
    """

    def __init__(self):
        self._rows: list[tuple[Hashable, Vector, Vector]] = []
        self._pivot_of: dict[Hashable, int] = {}

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: Vector, combo: Vector):
        vec = dict(vec)
        for pkey, row, rcombo in self._rows:
            c = vec.get(pkey)
            if c:
                axpy(vec, -c, row)
                axpy(combo, -c, rcombo)
        return vec

    def add(self, vec: Vector, label: Hashable) -> bool:
        combo = {label: ONE}
        r = self._reduce(vec, combo)
        if not r:
            return False
        pkey, pc = min(r.items(), key=lambda kv: (kv[1].complexity(), repr(kv[0])))
        inv = pc.inv()
        self._rows.append((pkey, _scaled(r, inv), _scaled(combo, inv)))
        return True

    def express(self, target: Vector):
        combo: Vector = {}
        r = self._reduce(target, combo)
        if r:
            return None
        return {k: -v for k, v in combo.items()}


def rank(vectors: Iterable[Vector]) -> int:
    sb = SpanBasis()
    for n, v in enumerate(vectors):
        sb.add(v, n)
    return sb.rank

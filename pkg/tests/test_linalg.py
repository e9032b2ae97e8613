from qsi.linalg import SpanBasis, nullspace, rank
from qsi.qscalar import ONE, Q, QScalar


def test_nullspace_canonical_basis():
    # x0 + q x1 = 0, x2 free
    basis = nullspace([{"a": ONE, "b": Q}], ["a", "b", "c"])
    assert basis == [{"b": ONE, "a": -Q}, {"c": ONE}]


def test_nullspace_of_full_rank_system_is_empty():
    rows = [{0: ONE}, {0: ONE, 1: Q}]
    assert nullspace(rows, [0, 1]) == []


def test_nullspace_vectors_solve_the_rows():
    rows = [{0: Q, 1: ONE, 2: -ONE}, {1: QScalar((1, 1)), 3: ONE}]
    for vec in nullspace(rows, range(4)):
        for row in rows:
            assert sum((c * vec.get(k, 0) for k, c in row.items()), QScalar(0)) == 0


def test_span_basis_witness():
    sb = SpanBasis()
    assert sb.add({"x": ONE, "y": Q}, "first")
    assert sb.add({"y": ONE}, "second")
    assert not sb.add({"x": 2, "y": 2 * Q}, "dependent")
    combo = sb.express({"x": ONE})
    assert combo == {"first": ONE, "second": -Q}
    assert sb.express({"z": ONE}) is None
    assert rank([{"x": ONE}, {"x": Q}, {"y": ONE}]) == 2

"""Sparse exact linear algebra: elimination, subspaces, quotients.

Hand-computed oracle for the running example:

    A = [[1, 2, 3],
         [2, 4, 6],
         [1, 0, 1]]

    row-reduce: rank 2, RREF rows (1, 0, 1), (0, 1, 1)
    kernel: x + z = 0, y + z = 0 -> span{(-1, -1, 1)}; RREF basis (1, 1, -1)
    image: columns span {(1,2,1),(2,4,0)} -> RREF (1,2,0),(0,0,1)
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcyclic.errors import NoSolutionError, NotWellDefinedError, ShapeMismatchError
from hopfcyclic.exactmath import (
    Mat,
    QuotientChart,
    Subspace,
    SubspaceChart,
    TensorIndex,
    cyclotomic_field,
    image,
    induced_map,
    invert,
    kernel,
    rank,
    rationals,
    restricted_map,
    solve,
    vec_eq,
)

QQ = rationals()
F = Fraction


def mat(grid):
    return Mat.from_dense(QQ, [[F(x) for x in row] for row in grid])


A = mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])


def test_rank_oracle():
    assert rank(A) == 2


def test_kernel_oracle():
    ker = kernel(A)
    assert ker.dim == 1
    assert ker.rref == [(0, {0: F(1), 1: F(1), 2: F(-1)})]
    # membership: A @ v = 0
    v = {0: F(-1), 1: F(-1), 2: F(1)}
    assert A.apply(v) == {}
    assert ker.contains(v)


def test_image_oracle():
    im = image(A)
    assert im.dim == 2
    assert im.rref == [(0, {0: F(1), 1: F(2)}), (2, {2: F(1)})]
    assert im.contains({0: F(3), 1: F(6), 2: F(1)})  # first column+third
    assert not im.contains({0: F(1)})


def test_solve_particular_and_no_solution():
    b = {0: F(3), 1: F(6), 2: F(1)}  # = col0 + ... actually A @ (1,1,0)
    x = solve(A, b)
    assert A.apply(x) == b
    with pytest.raises(NoSolutionError):
        solve(A, {0: F(1)})  # (1,0,0) not in image


def test_invert_and_singular():
    m = mat([[2, 1], [1, 1]])
    minv = invert(m)
    assert minv.mul(m).eq(Mat.identity(QQ, 2))
    assert m.mul(minv).eq(Mat.identity(QQ, 2))
    with pytest.raises(NoSolutionError):
        invert(A)
    with pytest.raises(ShapeMismatchError):
        invert(mat([[1, 2, 3], [4, 5, 6]]))


def test_matrix_algebra_basics():
    m = mat([[1, 2], [3, 4]])
    n = mat([[0, 1], [1, 0]])
    assert m.mul(n).to_dense() == [[F(2), F(1)], [F(4), F(3)]]
    assert m.add(n).to_dense() == [[F(1), F(3)], [F(4), F(4)]]
    assert m.T.to_dense() == [[F(1), F(3)], [F(2), F(4)]]
    k = m.kron(n)
    assert k.nrows == 4 and k.ncols == 4
    assert k.entry(0, 1) == F(1)  # (0,0)x(0,1): 1*1
    assert k.entry(2, 1) == F(3)  # (1,0)x(0,1): 3*1


def test_tensor_index_roundtrip():
    ti = TensorIndex((2, 3, 4))
    assert ti.size == 24
    seen = set()
    for tup in ti:
        flat = ti.flat(tup)
        assert ti.unflat(flat) == tup
        seen.add(flat)
    assert seen == set(range(24))


def test_subspace_canonical_equality():
    s1 = Subspace.from_vectors(QQ, 3, [{0: F(1), 1: F(1)}, {1: F(2)}])
    s2 = Subspace.from_vectors(QQ, 3, [{0: F(3)}, {0: F(1), 1: F(-5)}])
    assert s1.eq(s2)
    assert s1.dim == 2
    s3 = Subspace.from_vectors(QQ, 3, [{2: F(1)}])
    assert not s1.eq(s3)


def test_subspace_intersection():
    a = Subspace.from_vectors(QQ, 3, [{0: F(1)}, {1: F(1)}])
    b = Subspace.from_vectors(QQ, 3, [{1: F(1)}, {2: F(1)}])
    cap = a.intersect(b)
    assert cap.dim == 1
    assert cap.contains({1: F(7)})


def test_quotient_chart_contract():
    killed = Subspace.from_vectors(QQ, 3, [{0: F(1), 1: F(-1)}])
    q = QuotientChart(killed)
    assert q.dim == 2
    # section then project is the identity
    pm, sm = q.proj_mat, q.section_mat
    assert pm.mul(sm).eq(Mat.identity(QQ, 2))
    # killed vectors project to zero
    assert q.project_vec({0: F(2), 1: F(-2)}) == {}
    # e0 and e1 map to the same class
    assert q.project_vec({0: F(1)}) == q.project_vec({1: F(1)})


def test_induced_map_well_defined():
    # f = swap of coordinates 0,1 on k^3 descends to k^3 / span(e0 - e1)
    killed = Subspace.from_vectors(QQ, 3, [{0: F(1), 1: F(-1)}])
    q = QuotientChart(killed)
    f = mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    g = induced_map(f, q, q)
    assert g.eq(Mat.identity(QQ, 2))


def test_induced_map_witness():
    # f = projection to e0 does NOT descend modulo span(e0 - e1)
    killed = Subspace.from_vectors(QQ, 3, [{0: F(1), 1: F(-1)}])
    q = QuotientChart(killed)
    f = mat([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    with pytest.raises(NotWellDefinedError) as exc:
        induced_map(f, q, q, name="proj0")
    w = exc.value.witness
    assert w == [[0, "1"], [1, "-1"]]


def test_restricted_map_and_escape_witness():
    sub = Subspace.from_vectors(QQ, 3, [{0: F(1)}, {1: F(1)}])
    chart = SubspaceChart(sub)
    rot = mat([[0, -1, 0], [1, 0, 0], [0, 0, 1]])  # preserves span(e0,e1)
    r = restricted_map(rot, chart, chart)
    assert r.to_dense() == [[F(0), F(-1)], [F(1), F(0)]]
    tilt = mat([[1, 0, 0], [0, 1, 0], [0, 1, 1]])  # e1 -> e1 + e2 escapes
    with pytest.raises(NotWellDefinedError) as exc:
        restricted_map(tilt, chart, chart)
    assert exc.value.witness == [[1, "1"]]


def test_quotient_of_everything_and_nothing():
    full = Subspace.full(QQ, 3)
    nothing = Subspace.zero(QQ, 3)
    assert QuotientChart(full).dim == 0
    q = QuotientChart(nothing)
    assert q.dim == 3
    assert q.proj_mat.eq(Mat.identity(QQ, 3))


def test_cyclotomic_matrix_inverse():
    k = cyclotomic_field(4)
    i = k.gen
    m = Mat.from_dense(k, [[k.one, i], [k.neg(i), k.one]])
    # det = 1 - (-i*i) = 1 - 1 = 0 -> singular
    with pytest.raises(NoSolutionError):
        invert(m)
    m2 = Mat.from_dense(k, [[i, k.zero], [k.zero, k.one]])
    inv2 = invert(m2)
    assert inv2.entry(0, 0) == k.zeta_power(3)  # 1/i = -i


small_entries = st.integers(min_value=-6, max_value=6)


@settings(max_examples=40)
@given(
    grid=st.lists(
        st.lists(small_entries, min_size=4, max_size=4), min_size=3, max_size=3
    ),
    x=st.lists(small_entries, min_size=4, max_size=4),
)
def test_rank_nullity_and_solve_consistency(grid, x):
    m = mat(grid)
    assert rank(m) + kernel(m).dim == m.ncols
    vx = {i: F(v) for i, v in enumerate(x) if v}
    b = m.apply(vx)
    sol = solve(m, b)  # must exist: b is in the image by construction
    assert m.apply(sol) == b
    assert image(m).contains(b)


@settings(max_examples=30)
@given(
    vecs=st.lists(
        st.lists(small_entries, min_size=5, max_size=5), min_size=1, max_size=4
    )
)
def test_quotient_dimension_formula(vecs):
    vectors = [{i: F(v) for i, v in enumerate(row) if v} for row in vecs]
    killed = Subspace.from_vectors(QQ, 5, vectors)
    q = QuotientChart(killed)
    assert q.dim == 5 - killed.dim
    # every generator dies in the quotient
    for v in vectors:
        assert q.project_vec(v) == {}
    # section composed with projection fixes quotient coordinates
    for i in range(q.dim):
        e = {i: F(1)}
        assert q.project_vec(q.section_vec(e)) == e


def test_apply_matches_mul_on_columns():
    m = mat([[1, 2, 0], [0, 1, 1]])
    col = {0: F(1), 2: F(3)}
    as_mat = Mat.from_columns(QQ, 3, [col])
    assert m.mul(as_mat).T.rows[0] == m.apply(col)


def test_vec_eq():
    assert vec_eq(QQ, {0: F(1), 1: F(0)}, {0: F(1)})
    assert not vec_eq(QQ, {0: F(1)}, {1: F(1)})

"""Structure checks, duals, variants, grouplikes and characters.

Expected values in this file were computed by hand from the defining
relations of the examples (group algebras, functions on S3, Sweedler's
algebra, Taft algebras) before the engine existed, and are frozen here.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcyclic.catalog import (
    HOPF_CATALOG,
    function_algebra_s3,
    get_hopf,
    group_algebra_cyclic,
    group_algebra_s3,
    make_sweedler,
    make_taft,
)
from hopfcyclic.errors import AntipodeNotBijectiveError
from hopfcyclic.exactmath.linalg import Mat
from hopfcyclic.exactmath.scalars import cyclotomic_field, rationals
from hopfcyclic.hopfcore import (
    AlgebraData,
    _tensor_square_multiply,
    check_algebra,
    check_hopf,
    check_structure,
    dual_hopf,
    enumerate_characters,
    enumerate_grouplikes,
    invert_antipode,
    variant,
)

Q = rationals()


def ser_functional(field, chi, dim):
    return tuple(field.serialize(chi.get(i, field.zero)) for i in range(dim))


# -- axioms hold across the whole catalog --


@pytest.mark.parametrize("name", sorted(HOPF_CATALOG))
def test_catalog_entries_are_hopf(name):
    H = get_hopf(name)
    report = check_structure(H, "hopf")
    assert report.ok(), report.failures()


# -- Sweedler oracle: antipode powers and conjugation --


def test_sweedler_antipode_powers():
    H = make_sweedler()
    x = H.basis_vec(2)
    g = H.basis_vec(1)
    one = Q.one
    # S(x) = -gx, S^2(x) = -x, S^4 = id
    assert H.antipode_vec(x) == {3: Q.neg(one)}
    s2 = H.antipode.mul(H.antipode)
    assert s2.apply(x) == {2: Q.neg(one)}
    s4 = s2.mul(s2)
    assert s4.eq(Mat.identity(Q, 4))
    # S^2 is conjugation by g: S^2(h) = g h g
    for i in range(4):
        v = H.basis_vec(i)
        conj = H.mul_vec(g, H.mul_vec(v, g))
        assert s2.apply(v) == conj
    # S is a bijection distinct from its inverse here
    sinv = invert_antipode(H)
    assert not sinv.eq(H.antipode)
    assert sinv.eq(s2.mul(H.antipode))


def test_sweedler_iterated_delta():
    H = make_sweedler()
    one = Q.one
    table = H.iterated_delta(2)
    # x -> x(x)1(x)1 + g(x)x(x)1 + g(x)g(x)x
    assert table[2] == {(2, 0, 0): one, (1, 2, 0): one, (1, 1, 2): one}


def test_sweedler_grouplikes_and_characters():
    H = make_sweedler()
    gl = enumerate_grouplikes(H)
    assert gl.complete
    assert sorted(tuple(sorted(v.items())) for v in gl.items) == [
        ((0, Q.one),),
        ((1, Q.one),),
    ]
    ch = enumerate_characters(H.algebra)
    assert ch.complete
    got = sorted(ser_functional(Q, chi, 4) for chi in ch.items)
    assert got == [
        ("1", "-1", "0", "0"),
        ("1", "1", "0", "0"),
    ]


# -- Taft oracle --


def test_taft2_matches_sweedler():
    T = make_taft(2)
    S = make_sweedler()
    assert T.algebra.mult == S.algebra.mult
    assert T.algebra.unit == S.algebra.unit
    assert T.coalgebra.comult == S.coalgebra.comult
    assert T.coalgebra.counit == S.coalgebra.counit
    assert T.antipode.eq(S.antipode)


def test_taft3_antipode_square_is_conjugation():
    H = make_taft(3)
    F = H.field
    x = H.basis_vec(3)  # flat(0, 1)
    # S^2(x) = zeta x, and S^2 = conjugation by g^{-1}
    s2 = H.antipode.mul(H.antipode)
    assert s2.apply(x) == {3: F.zeta_power(1)}
    g_inv = H.basis_vec(2)  # g^2 = g^{-1}
    g = H.basis_vec(1)
    for i in range(9):
        v = H.basis_vec(i)
        conj = H.mul_vec(g_inv, H.mul_vec(v, g))
        assert s2.apply(v) == conj
    # S has order 4 n = 12 here: S^2 has order 3 (conjugation by g)
    s6 = s2.mul(s2).mul(s2)
    assert s6.eq(Mat.identity(F, 9))


def test_taft3_grouplikes():
    H = make_taft(3)
    gl = enumerate_grouplikes(H)
    assert gl.complete
    expected = [{0: H.field.one}, {1: H.field.one}, {2: H.field.one}]
    assert sorted(
        tuple(sorted(v.items())) for v in gl.items
    ) == sorted(tuple(sorted(v.items())) for v in expected)


# -- characters of group algebras depend on the field's roots of unity --


@pytest.mark.parametrize(
    "n,field,count",
    [
        (4, rationals(), 2),
        (4, cyclotomic_field(4), 4),
        (6, rationals(), 2),
        (6, cyclotomic_field(6), 6),
        (6, cyclotomic_field(3), 6),
        (3, rationals(), 1),
        (3, cyclotomic_field(3), 3),
    ],
)
def test_cyclic_group_character_counts(n, field, count):
    H = group_algebra_cyclic(n, field=field)
    ch = enumerate_characters(H.algebra)
    assert ch.complete
    assert len(ch.items) == count
    for chi in ch.items:
        # characters send g to a root of unity of order dividing n
        val = chi.get(1, field.zero)
        acc = field.one
        for _ in range(n):
            acc = field.mul(acc, val)
        assert field.eq(acc, field.one)


def test_s3_and_d4_characters():
    s3 = group_algebra_s3()
    ch = enumerate_characters(s3.algebra)
    assert ch.complete
    got = sorted(ser_functional(Q, chi, 6) for chi in ch.items)
    # trivial and sign; basis order e, (23), (12), (123), (132), (13)
    assert got == [
        ("1", "-1", "-1", "1", "1", "-1"),
        ("1", "1", "1", "1", "1", "1"),
    ]
    d4 = get_hopf("kD4")
    ch4 = enumerate_characters(d4.algebra)
    assert ch4.complete
    assert len(ch4.items) == 4


def test_grouplikes_of_group_algebra_and_dual():
    H = group_algebra_cyclic(4)
    gl = enumerate_grouplikes(H)
    assert gl.complete
    assert sorted(tuple(sorted(v.items())) for v in gl.items) == [
        ((i, Q.one),) for i in range(4)
    ]
    O = function_algebra_s3()
    glo = enumerate_grouplikes(O)
    assert glo.complete
    assert len(glo.items) == 2  # trivial and sign characters of S3
    for sigma in glo.items:
        assert O.is_grouplike(sigma)


def test_is_grouplike_negative():
    H = make_sweedler()
    assert not H.is_grouplike(H.basis_vec(2))
    assert not H.is_grouplike({0: Q.one, 1: Q.one})
    assert not H.is_grouplike({})


def test_grouplike_inverse():
    H = group_algebra_s3()
    for i in range(6):
        g = H.basis_vec(i)
        assert H.mul_vec(g, H.grouplike_inverse(g)) == H.unit


# -- duality and variants --


def test_dual_of_dual_restores_constants():
    H = group_algebra_s3()
    D = dual_hopf(dual_hopf(H))
    assert D.algebra.mult == H.algebra.mult
    assert D.algebra.unit == H.algebra.unit
    assert D.coalgebra.comult == H.coalgebra.comult
    assert D.coalgebra.counit == H.coalgebra.counit
    assert D.antipode.eq(H.antipode)


def test_dual_is_hopf_and_commutative_for_group_dual():
    O = function_algebra_s3()
    assert check_hopf(O).ok()
    for i, j in itertools.product(range(6), repeat=2):
        assert O.algebra.mult[i][j] == O.algebra.mult[j][i]


@pytest.mark.parametrize("which", ["op", "cop", "opcop"])
def test_variants_are_hopf(which):
    H = make_sweedler()
    V = variant(H, which)
    assert check_hopf(V).ok(), check_hopf(V).failures()
    if which == "opcop":
        assert V.antipode.eq(H.antipode)
    else:
        assert V.antipode.eq(invert_antipode(H))


def test_variant_flips_constants():
    H = make_taft(3)
    V = variant(H, "op")
    i, j = 1, 3  # g and x do not commute
    assert V.algebra.mult[i][j] == H.algebra.mult[j][i]
    W = variant(H, "cop")
    assert W.coalgebra.comult[3] == {
        (j2, i2): c for (i2, j2), c in H.coalgebra.comult[3].items()
    }


# -- mutation detection: first violating tuple is reported --


def test_broken_associativity_reports_first_witness():
    H = group_algebra_s3()
    tampered = [
        [dict(cell) for cell in row] for row in H.algebra.mult
    ]
    tampered[1][1] = {1: Q.one}  # (23)(23) should be e
    alg = AlgebraData(Q, 6, H.labels, tampered, dict(H.algebra.unit))
    report = check_algebra(alg)
    assert not report.ok()
    item = report.first_failure()
    assert item.name == "associativity"
    assert item.witness["indices"] == [1, 1, 2]
    assert item.witness["labels"] == ["(23)", "(23)", "(12)"]


def test_broken_antipode_reports_witness():
    H = make_sweedler()
    bad = Mat.from_entries(
        Q, 4, 4, [(0, 0, Q.one), (2, 1, Q.one), (3, 2, Q.neg(Q.one)), (2, 3, Q.one)]
    )
    B = type(H)(Q, 4, H.labels, H.algebra, H.coalgebra, bad, name="bad")
    report = check_hopf(B)
    assert not report.ok()
    item = report.first_failure()
    assert item.name == "antipode"
    assert item.witness["indices"] == [1]
    assert item.witness["labels"] == ["g"]


def test_singular_antipode_detected():
    H = make_sweedler()
    zero = Mat.zero(Q, 4, 4)
    B = type(H)(Q, 4, H.labels, H.algebra, H.coalgebra, zero, name="bad")
    with pytest.raises(AntipodeNotBijectiveError):
        invert_antipode(B)
    report = check_hopf(B)
    names = {item.name: item.passed for item in report.items}
    assert names["antipode"] is False
    assert names["antipode bijective"] is False


# -- character enumeration degrades honestly outside the recognized shapes --


def test_unrecognized_algebra_is_flagged_incomplete():
    one = Q.one
    # k[t]/(t^2 - t - 1): characters need the golden ratio, absent over Q
    mult = [
        [{0: one}, {1: one}],
        [{1: one}, {0: one, 1: one}],
    ]
    alg = AlgebraData(Q, 2, ["1", "t"], mult, {0: one})
    assert check_algebra(alg).ok()
    ch = enumerate_characters(alg)
    assert not ch.complete
    assert ch.items == []
    # wrong extra candidates are filtered by verification
    ch2 = enumerate_characters(alg, extra_candidates=[{0: one, 1: one}])
    assert ch2.items == []


def test_extra_candidates_are_verified_and_merged():
    H = group_algebra_cyclic(3)
    ch = enumerate_characters(
        H.algebra, extra_candidates=[{0: Q.one}, {0: Q.scalar(7)}]
    )
    assert ch.complete
    assert len(ch.items) == 1  # only the trivial character exists over Q


# -- random-vector laws on kS3 --


small_vec = st.dictionaries(
    st.integers(min_value=0, max_value=5),
    st.integers(min_value=-3, max_value=3).map(Q.scalar),
    max_size=3,
)


@settings(max_examples=40, deadline=None)
@given(small_vec, small_vec, small_vec)
def test_multiply_is_associative_on_vectors(u, v, w):
    H = group_algebra_s3()
    a = H.mul_vec(H.mul_vec(u, v), w)
    b = H.mul_vec(u, H.mul_vec(v, w))
    assert a == b


@settings(max_examples=40, deadline=None)
@given(small_vec, small_vec)
def test_delta_and_counit_are_multiplicative_on_vectors(u, v):
    H = group_algebra_s3()
    lhs = H.delta_vec(H.mul_vec(u, v))
    rhs = _tensor_square_multiply(H.algebra, H.delta_vec(u), H.delta_vec(v))
    assert lhs == rhs
    assert Q.eq(
        H.eps_vec(H.mul_vec(u, v)), Q.mul(H.eps_vec(u), H.eps_vec(v))
    )

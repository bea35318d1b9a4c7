"""Tests for the complex builders.

The strongest anchor: over the one-dimensional Hopf datum the builders must
reproduce, matrix for matrix, the standard (co)cyclic module of an algebra
built independently in standard_modules.py.  Homology dimensions below were
computed by this engine and cross-checked against the bicomplex route and
against classical expectations (group algebras in characteristic zero,
the four-dimensional Hopf algebra with its modular pair).
"""

import pytest

from hopfcyclic.catalog import (
    conjugation_module,
    get_hopf,
    make_trivial_hopf,
    taft_mpi_module,
)
from hopfcyclic.complexes import (
    ComplexResult,
    coalgebra_complex,
    comodule_algebra_cohomology_complex,
    comodule_algebra_homology_complex,
    connes_moscovici_complex,
    hopf_adjoint_complex,
    module_algebra_complex,
    twisted_kz4_complex,
    usual_cyclic_complex,
)
from hopfcyclic.cyclicmachine import (
    COSIMPLICIAL,
    SIMPLICIAL,
    bicomplex_oracle,
    cyclic_cohomology,
    cyclic_homology,
    cyclicity_verdict,
    verify_identities,
)
from hopfcyclic.errors import (
    HypothesisFailedError,
    OperatorEscapesSubspaceError,
    ResourceCapError,
    ShapeMismatchError,
    TauNotWellDefinedError,
    VersionMismatchError,
)
from hopfcyclic.exactmath.scalars import rationals
from hopfcyclic.sayd import (
    CoactionData,
    adjoint_action,
    counit_character,
    left_multiplication_action,
    make_trivial_module,
)
from standard_modules import (
    algebra_cyclic_module,
    cyclic_group_mult,
    transpose_to_cocyclic,
)

Q = rationals()


def mats_equal(a, b):
    return a.nrows == b.nrows and a.ncols == b.ncols and a.rows == b.rows


def comult_coaction(hopf):
    """The Hopf algebra coacting on itself by comultiplication."""
    table = [dict(hopf.coalgebra.comult[a]) for a in range(hopf.dim)]
    return CoactionData(hopf, hopf.dim, "right", table)


# -- the coalgebra carrier --


@pytest.fixture(scope="module")
def cm_kz2():
    H = get_hopf("kZ2")
    return connes_moscovici_complex(H, counit_character(H), dict(H.unit), 4)


@pytest.fixture(scope="module")
def ks3_coalgebra():
    H = get_hopf("kS3")
    return coalgebra_complex(
        conjugation_module(H, "RL"),
        H.coalgebra,
        left_multiplication_action(H),
        2,
    )


def test_cm_kz2_levels_and_verdict(cm_kz2):
    assert cm_kz2.dims == [1, 2, 4, 8, 16]
    assert cm_kz2.kind == "coalgebra"
    assert cm_kz2.data.direction == COSIMPLICIAL
    assert cyclicity_verdict(verify_identities(cm_kz2.data)) == "cyclic"


def test_cm_kz2_cohomology(cm_kz2):
    dims = [cyclic_cohomology(cm_kz2.data, n).dim for n in range(4)]
    assert dims == [1, 0, 1, 0]
    assert [bicomplex_oracle(cm_kz2.data, n) for n in range(4)] == dims


def test_cm_sweedler_modular_pair():
    H = get_hopf("sweedler")
    sigma = {1: H.field.one}  # the grouplike g
    res = connes_moscovici_complex(H, counit_character(H), sigma, 3)
    assert res.dims == [1, 4, 16, 64]
    assert cyclicity_verdict(verify_identities(res.data)) == "cyclic"
    dims = [cyclic_cohomology(res.data, n).dim for n in range(3)]
    assert dims == [0, 1, 0]
    assert [bicomplex_oracle(res.data, n) for n in range(3)] == dims


def test_cm_taft3_modular_pair():
    H, mod = taft_mpi_module(3)
    res = coalgebra_complex(
        mod, H.coalgebra, left_multiplication_action(H), 2
    )
    assert res.dims == [1, 9, 81]
    assert cyclicity_verdict(verify_identities(res.data)) == "cyclic"
    dims = [cyclic_cohomology(res.data, n).dim for n in range(2)]
    assert dims == [0, 1]
    assert [bicomplex_oracle(res.data, n) for n in range(2)] == dims


def test_ks3_conjugation_coalgebra(ks3_coalgebra):
    assert ks3_coalgebra.dims == [6, 36, 216]
    assert cyclicity_verdict(verify_identities(ks3_coalgebra.data)) == "cyclic"


def test_wrap_coface_is_tau_after_split(ks3_coalgebra):
    """The last coface must coincide with the cyclic operator composed with
    the zeroth coface; the builders construct both independently."""
    data = ks3_coalgebra.data
    for n in (1, 2):
        assert mats_equal(data.faces[n][n], data.tau[n].mul(data.faces[n][0]))


def test_ks3_conjugation_level3_cohomology():
    H = get_hopf("kS3")
    res = coalgebra_complex(
        conjugation_module(H, "RL"),
        H.coalgebra,
        left_multiplication_action(H),
        3,
    )
    assert res.dims == [6, 36, 216, 1296]
    assert cyclicity_verdict(verify_identities(res.data)) == "cyclic"
    assert [cyclic_cohomology(res.data, n).dim for n in range(3)] == [1, 0, 1]


def test_chart_round_trip(ks3_coalgebra):
    field = ks3_coalgebra.hopf.field
    chart = ks3_coalgebra.charts[1]
    for j in range(ks3_coalgebra.level_dim(1)):
        vec = {j: field.one}
        assert chart.project_vec(chart.section_vec(vec)) == vec


def test_twisted_kz4_is_paracyclic():
    res = twisted_kz4_complex(3)
    assert res.dims == [1, 4, 16, 64]
    report = verify_identities(res.data)
    assert cyclicity_verdict(report) == "paracyclic"
    failing = [item.name for item in report.items if not item.passed]
    assert failing == [
        f"cyclic operator power (level {n})" for n in range(4)
    ]


# -- failure modes of the coalgebra carrier --


def test_sweedler_trivial_module_tau_fails():
    H = get_hopf("sweedler")
    mod = make_trivial_module(H, "RL")
    with pytest.raises(TauNotWellDefinedError) as exc:
        coalgebra_complex(
            mod, H.coalgebra, left_multiplication_action(H), 2
        )
    err = exc.value
    assert sorted({d for d, _, _ in err.failures}) == [1, 2]
    assert {op for _, op, _ in err.failures} == {"delta_1", "delta_2", "tau"}
    by_key = {(d, op): w for d, op, w in err.failures}
    w = by_key[(2, "tau")]
    assert w["pivot"] == 2
    assert w["witness"] == [[2, "1"], [25, "-1"], [52, "-1"]]
    assert w["image_residue"] == [[29, "2"], [48, "-2"]]
    assert not err.ayd_report.ok()
    assert (
        err.ayd_report.first_failure().name == "anti-Yetter-Drinfeld condition"
    )
    rendered = err.to_dict()
    assert rendered["code"] == "TAU_NOT_WELL_DEFINED"
    assert {f["degree"] for f in rendered["failures"]} == {1, 2}
    assert "ayd_check" in rendered


def test_coalgebra_complex_hypothesis_gate():
    H = get_hopf("sweedler")
    with pytest.raises(HypothesisFailedError) as exc:
        coalgebra_complex(
            make_trivial_module(H, "RL"), H.coalgebra, adjoint_action(H), 1
        )
    assert exc.value.data["which"] == "module coalgebra"


def test_coalgebra_complex_version_gate():
    H = get_hopf("kS3")
    with pytest.raises(VersionMismatchError):
        coalgebra_complex(
            conjugation_module(H, "RR"),
            H.coalgebra,
            left_multiplication_action(H),
            1,
        )


def test_coalgebra_complex_respects_ambient_cap():
    H = get_hopf("kS3")
    with pytest.raises(ResourceCapError) as exc:
        coalgebra_complex(
            conjugation_module(H, "RL"),
            H.coalgebra,
            left_multiplication_action(H),
            4,
        )
    assert exc.value.data["dimension"] == 46656


def test_coalgebra_complex_rejects_foreign_action():
    H = get_hopf("kZ2")
    with pytest.raises(ShapeMismatchError):
        coalgebra_complex(
            make_trivial_module(H, "RL"),
            H.coalgebra,
            left_multiplication_action(get_hopf("kZ3")),
            1,
        )


def test_check_hypotheses_flag_skips_gate():
    H = get_hopf("kZ2")
    res = connes_moscovici_complex(
        H, counit_character(H), dict(H.unit), 2, check_hypotheses=False
    )
    assert res.dims == [1, 2, 4]


# -- the module-algebra carrier --


def test_adjoint_complex_sweedler():
    res = hopf_adjoint_complex(get_hopf("sweedler"), 2)
    assert res.kind == "module_algebra"
    assert res.dims == [5, 18, 68]
    assert cyclicity_verdict(verify_identities(res.data)) == "cyclic"


def test_adjoint_complex_kz4():
    res = hopf_adjoint_complex(get_hopf("kZ4"), 2)
    # commutative and cocommutative: the invariance condition is vacuous
    assert res.dims == [16, 64, 256]
    assert cyclicity_verdict(verify_identities(res.data)) == "cyclic"
    assert [cyclic_cohomology(res.data, n).dim for n in range(2)] == [16, 0]


def test_sweedler_trivial_module_functionals_escape():
    H = get_hopf("sweedler")
    with pytest.raises(OperatorEscapesSubspaceError) as exc:
        module_algebra_complex(
            make_trivial_module(H, "RL"), H.algebra, adjoint_action(H), 2
        )
    err = exc.value
    assert sorted({d for d, _, _ in err.failures}) == [2]
    assert {op for _, op, _ in err.failures} == {"delta_2", "tau"}
    assert "ayd_check" in err.data


# -- the plain-algebra specialization --


@pytest.fixture(scope="module")
def standard_kz2():
    return algebra_cyclic_module(Q, 2, cyclic_group_mult(Q, 2), 0, 3)


def test_usual_cyclic_homology_matches_standard_module(standard_kz2):
    A = get_hopf("kZ2").algebra
    res = usual_cyclic_complex(A, 3, "homology")
    assert res.data.direction == SIMPLICIAL
    for n in range(4):
        for built, std in zip(res.data.faces[n], standard_kz2.faces[n]):
            assert mats_equal(built, std)
        for built, std in zip(res.data.degens[n], standard_kz2.degens[n]):
            assert mats_equal(built, std)
        assert mats_equal(res.data.tau[n], standard_kz2.tau[n])
    assert [cyclic_homology(res.data, n).dim for n in range(3)] == [2, 0, 2]


def test_usual_cyclic_cohomology_matches_standard_module(standard_kz2):
    A = get_hopf("kZ2").algebra
    res = usual_cyclic_complex(A, 3, "cohomology")
    std = transpose_to_cocyclic(standard_kz2)
    assert res.data.direction == COSIMPLICIAL
    for n in range(4):
        for built, ref in zip(res.data.faces[n], std.faces[n]):
            assert mats_equal(built, ref)
        for built, ref in zip(res.data.degens[n], std.degens[n]):
            assert mats_equal(built, ref)
        assert mats_equal(res.data.tau[n], std.tau[n])
    assert [cyclic_cohomology(res.data, n).dim for n in range(3)] == [2, 0, 2]


def test_usual_cyclic_unknown_flavor():
    A = get_hopf("kZ2").algebra
    with pytest.raises(ShapeMismatchError):
        usual_cyclic_complex(A, 2, "middle")


# -- the comodule-algebra carriers --


def test_trivial_hopf_comodule_cohomology_matches_usual():
    k = make_trivial_hopf()
    A = get_hopf("kZ2").algebra
    coact = CoactionData(
        k, A.dim, "right", [{(a, 0): k.field.one} for a in range(A.dim)]
    )
    res = comodule_algebra_cohomology_complex(
        make_trivial_module(k, "RR"), A, coact, 3
    )
    assert res.dims == [2, 4, 8, 16]
    assert [cyclic_cohomology(res.data, n).dim for n in range(3)] == [2, 0, 2]


def test_self_comodule_kz2_cohomology():
    H = get_hopf("kZ2")
    res = comodule_algebra_cohomology_complex(
        make_trivial_module(H, "RR"), H.algebra, comult_coaction(H), 3
    )
    assert res.kind == "comodule_algebra_cohomology"
    assert res.dims == [1, 2, 4, 8]
    assert cyclicity_verdict(verify_identities(res.data)) == "cyclic"
    dims = [cyclic_cohomology(res.data, n).dim for n in range(3)]
    assert dims == [1, 0, 1]
    assert [bicomplex_oracle(res.data, n) for n in range(3)] == dims


def test_self_comodule_kz2_homology():
    H = get_hopf("kZ2")
    res = comodule_algebra_homology_complex(
        make_trivial_module(H, "LL"), H.algebra, comult_coaction(H), 3
    )
    assert res.kind == "comodule_algebra_homology"
    assert res.data.direction == SIMPLICIAL
    assert res.dims == [1, 2, 4, 8]
    assert cyclicity_verdict(verify_identities(res.data)) == "cyclic"
    dims = [cyclic_homology(res.data, n).dim for n in range(3)]
    assert dims == [1, 0, 1]
    assert [bicomplex_oracle(res.data, n) for n in range(3)] == dims


def test_ks3_comodule_builders_with_conjugation_coefficients():
    H = get_hopf("kS3")
    coact = comult_coaction(H)
    coh = comodule_algebra_cohomology_complex(
        conjugation_module(H, "RR"), H.algebra, coact, 2
    )
    assert coh.dims == [6, 36, 216]
    assert cyclicity_verdict(verify_identities(coh.data)) == "cyclic"
    hom = comodule_algebra_homology_complex(
        conjugation_module(H, "LL"), H.algebra, coact, 2
    )
    assert hom.dims == [6, 36, 216]
    assert cyclicity_verdict(verify_identities(hom.data)) == "cyclic"


def test_simplicial_wrap_face_is_zeroth_after_cycle():
    H = get_hopf("kZ2")
    res = comodule_algebra_homology_complex(
        make_trivial_module(H, "LL"), H.algebra, comult_coaction(H), 3
    )
    data = res.data
    for n in (1, 2, 3):
        assert mats_equal(data.faces[n][n], data.faces[n][0].mul(data.tau[n]))


def test_comodule_builders_reject_left_coaction():
    H = get_hopf("kZ2")
    left = CoactionData(
        H, H.dim, "left", [dict(H.coalgebra.comult[a]) for a in range(H.dim)]
    )
    with pytest.raises(ShapeMismatchError):
        comodule_algebra_cohomology_complex(
            make_trivial_module(H, "RR"), H.algebra, left, 1
        )


def test_comodule_version_gates():
    H = get_hopf("kZ2")
    coact = comult_coaction(H)
    with pytest.raises(VersionMismatchError):
        comodule_algebra_cohomology_complex(
            make_trivial_module(H, "RL"), H.algebra, coact, 1
        )
    with pytest.raises(VersionMismatchError):
        comodule_algebra_homology_complex(
            make_trivial_module(H, "RR"), H.algebra, coact, 1
        )


def test_complex_result_surface(cm_kz2):
    assert isinstance(cm_kz2, ComplexResult)
    assert cm_kz2.level_dim(2) == 4
    assert cm_kz2.carrier is cm_kz2.hopf.coalgebra
    assert "coalgebra" in repr(cm_kz2)

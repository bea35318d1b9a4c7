"""Worked examples: group algebras, their duals, and the Taft family.

Every constructor returns fully populated structure-constant data over an
exact field.  The test suite re-verifies all axioms for each entry, so the
catalog is a source of known-good fixtures rather than trusted input.
"""

from __future__ import annotations

import itertools

from .exactmath.linalg import Mat
from .exactmath.scalars import cyclotomic_field, rationals, totient
from .hopfcore import (
    AlgebraData,
    CoalgebraData,
    HopfData,
    _tensor_square_multiply,
    dual_hopf,
)

# -- groups as element lists with composition tables --


def cyclic_group(n):
    elements = list(range(n))
    labels = ["1"] + [f"g^{a}" if a > 1 else "g" for a in range(1, n)]

    def compose(a, b):
        return (a + b) % n

    return elements, compose, labels


_S3_LABELS = {
    (0, 1, 2): "e",
    (0, 2, 1): "(23)",
    (1, 0, 2): "(12)",
    (1, 2, 0): "(123)",
    (2, 0, 1): "(132)",
    (2, 1, 0): "(13)",
}


def symmetric_group_3():
    elements = sorted(itertools.permutations(range(3)))
    labels = [_S3_LABELS[p] for p in elements]

    def compose(p, q):
        return tuple(p[q[i]] for i in range(3))

    return elements, compose, labels


def dihedral_group_4():
    """Symmetries of the square: pairs (a, b) meaning r^a s^b."""
    elements = [(a, b) for b in range(2) for a in range(4)]
    labels = ["1", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"]

    def compose(x, y):
        a, b = x
        c, d = y
        return ((a + (c if b == 0 else -c)) % 4, (b + d) % 2)

    return elements, compose, labels


def make_group_algebra(field, elements, compose, labels, name):
    """Group algebra: basis the group, grouplike comultiplication, antipode
    the inversion permutation."""
    dim = len(elements)
    index = {g: i for i, g in enumerate(elements)}
    one = field.one
    mult = [
        [{index[compose(elements[i], elements[j])]: one} for j in range(dim)]
        for i in range(dim)
    ]
    identity = None
    for i, g in enumerate(elements):
        if all(
            compose(g, h) == h and compose(h, g) == h for h in elements
        ):
            identity = i
            break
    if identity is None:
        raise ValueError("composition table has no identity")
    unit = {identity: one}
    comult = [{(k, k): one} for k in range(dim)]
    counit = {k: one for k in range(dim)}
    inv = [None] * dim
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            if index[compose(g, h)] == identity and index[compose(h, g)] == identity:
                inv[i] = j
                break
        if inv[i] is None:
            raise ValueError("composition table has a non-invertible element")
    antipode = Mat.from_entries(
        field, dim, dim, [(inv[i], i, one) for i in range(dim)]
    )
    return HopfData(
        field,
        dim,
        labels,
        AlgebraData(field, dim, labels, mult, unit),
        CoalgebraData(field, dim, labels, comult, counit),
        antipode,
        name=name,
    )


def group_algebra_cyclic(n, field=None):
    elements, compose, labels = cyclic_group(n)
    return make_group_algebra(
        field or rationals(), elements, compose, labels, name=f"kZ{n}"
    )


def group_algebra_s3(field=None):
    elements, compose, labels = symmetric_group_3()
    return make_group_algebra(
        field or rationals(), elements, compose, labels, name="kS3"
    )


def group_algebra_dihedral4(field=None):
    elements, compose, labels = dihedral_group_4()
    return make_group_algebra(
        field or rationals(), elements, compose, labels, name="kD4"
    )


def make_function_algebra(group_hopf):
    """Functions on a finite group: the dual of its group algebra."""
    dual = dual_hopf(group_hopf)
    dual.name = f"O({group_hopf.name[1:]})" if group_hopf.name.startswith("k") else f"{group_hopf.name}*"
    return dual


def function_algebra_s3():
    return make_function_algebra(group_algebra_s3())


# -- Sweedler's four-dimensional Hopf algebra, hand coded --


def make_sweedler():
    field = rationals()
    one = field.one
    neg = field.neg(one)
    labels = ["1", "g", "x", "gx"]
    # basis order 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx
    mult = [
        [{0: one}, {1: one}, {2: one}, {3: one}],
        [{1: one}, {0: one}, {3: one}, {2: one}],
        [{2: one}, {3: neg}, {}, {}],
        [{3: one}, {2: neg}, {}, {}],
    ]
    unit = {0: one}
    comult = [
        {(0, 0): one},
        {(1, 1): one},
        {(2, 0): one, (1, 2): one},
        {(3, 1): one, (0, 3): one},
    ]
    counit = {0: one, 1: one}
    antipode = Mat.from_entries(
        field,
        4,
        4,
        [(0, 0, one), (1, 1, one), (3, 2, neg), (2, 3, one)],
    )
    return HopfData(
        field,
        4,
        labels,
        AlgebraData(field, 4, labels, mult, unit),
        CoalgebraData(field, 4, labels, comult, counit),
        antipode,
        name="sweedler",
    )


# -- Taft algebras --


def make_taft(n):
    """Taft algebra of dimension n^2: generators g (grouplike, order n) and
    x with x^n = 0, xg = zeta gx, Delta(x) = x (x) 1 + g (x) x, where zeta is
    a primitive n-th root of unity.  Basis g^a x^b at flat index b*n + a."""
    if n < 2:
        raise ValueError("Taft algebras need n >= 2")
    if totient(n) == 1:
        field = rationals()

        def zeta_pow(k):
            return field.one if k % 2 == 0 else field.neg(field.one)

    else:
        field = cyclotomic_field(n)

        def zeta_pow(k):
            return field.zeta_power(k % n)

    dim = n * n

    def flat(a, b):
        return b * n + a

    labels = []
    for b in range(n):
        for a in range(n):
            ga = "1" if a == 0 else ("g" if a == 1 else f"g^{a}")
            xb = "" if b == 0 else ("x" if b == 1 else f"x^{b}")
            labels.append((ga + xb) if (a == 0 or b == 0) else (ga + " " + xb))
    labels[0] = "1"
    for b in range(1, n):
        labels[flat(0, b)] = "x" if b == 1 else f"x^{b}"

    # (g^a x^b)(g^c x^d) = zeta^{bc} g^{a+c} x^{b+d}
    mult = [[{} for _ in range(dim)] for _ in range(dim)]
    for a, b, c, d in itertools.product(range(n), repeat=4):
        if b + d < n:
            mult[flat(a, b)][flat(c, d)] = {
                flat((a + c) % n, b + d): zeta_pow(b * c)
            }
    unit = {0: field.one}
    algebra = AlgebraData(field, dim, labels, mult, unit)

    # comultiplication as an algebra map from Delta(g), Delta(x)
    delta_g = {(flat(1, 0), flat(1, 0)): field.one}
    delta_x = {
        (flat(0, 1), 0): field.one,
        (flat(1, 0), flat(0, 1)): field.one,
    }
    comult = []
    for b in range(n):
        for a in range(n):
            acc = {(0, 0): field.one}
            for _ in range(a):
                acc = _tensor_square_multiply(algebra, acc, delta_g)
            for _ in range(b):
                acc = _tensor_square_multiply(algebra, acc, delta_x)
            comult.append(acc)
    counit = {flat(a, 0): field.one for a in range(n)}
    coalgebra = CoalgebraData(field, dim, labels, comult, counit)

    # antipode as an anti-algebra map: S(g) = g^{n-1}, S(x) = -g^{n-1} x
    s_g = {flat((n - 1) % n, 0): field.one}
    s_x = {flat(n - 1, 1): field.neg(field.one)}
    cols = []
    for b in range(n):
        for a in range(n):
            acc = dict(unit)
            for _ in range(b):
                acc = algebra.multiply(acc, s_x)
            for _ in range(a):
                acc = algebra.multiply(acc, s_g)
            cols.append(acc)
    antipode = Mat.from_columns(field, dim, cols)
    return HopfData(field, dim, labels, algebra, coalgebra, antipode, name=f"taft{n}")


def make_trivial_hopf(field=None):
    """The ground field as a one-dimensional Hopf algebra."""
    field = field or rationals()
    one = field.one
    labels = ["1"]
    algebra = AlgebraData(field, 1, labels, [[{0: one}]], {0: one})
    coalgebra = CoalgebraData(field, 1, labels, [{(0, 0): one}], {0: one})
    return HopfData(
        field, 1, labels, algebra, coalgebra, Mat.identity(field, 1), name="k"
    )


# -- registry --

HOPF_CATALOG = {
    "k": ("the ground field as a Hopf algebra", make_trivial_hopf),
    "kZ2": ("group algebra of Z/2", lambda: group_algebra_cyclic(2)),
    "kZ3": ("group algebra of Z/3", lambda: group_algebra_cyclic(3)),
    "kZ4": ("group algebra of Z/4", lambda: group_algebra_cyclic(4)),
    "kZ6": ("group algebra of Z/6", lambda: group_algebra_cyclic(6)),
    "kS3": ("group algebra of the symmetric group S3", group_algebra_s3),
    "kD4": ("group algebra of the dihedral group of order 8", group_algebra_dihedral4),
    "OS3": ("functions on S3 (dual of kS3)", function_algebra_s3),
    "sweedler": ("Sweedler's 4-dimensional Hopf algebra", make_sweedler),
    "taft2": ("Taft algebra, n = 2 (Sweedler)", lambda: make_taft(2)),
    "taft3": ("Taft algebra, n = 3, over Q(zeta_3)", lambda: make_taft(3)),
}


def get_hopf(name):
    if name not in HOPF_CATALOG:
        raise KeyError(f"unknown catalog entry {name!r}")
    return HOPF_CATALOG[name][1]()


# -- bundled modules-with-coaction --

from .hopfcore import _detect_group_form  # noqa: E402
from .sayd import (  # noqa: E402
    ActionData,
    CoactionData,
    SaydCandidate,
    galois_object_sayd,
    hopf_coefficients,
    induced_from_epimorphism,
    make_one_dim_module,
    make_trivial_module,
)


def conjugation_module(group_hopf, version="RL", name=None):
    """Group algebra carrying the conjugation action and the grading-by-
    group-element coaction.  Left versions act by h m h^{-1}, right versions
    by h^{-1} m h; the coaction tags each group basis element with itself."""
    form = _detect_group_form(group_hopf.algebra)
    if form is None:
        raise ValueError("conjugation modules need a basis-permutation group algebra")
    table, _, inv = form
    field = group_hopf.field
    dim = group_hopf.dim
    one = field.one
    if version not in ("LL", "LR", "RL", "RR"):
        raise ValueError(f"unknown version {version!r}")
    action_side = "left" if version[0] == "L" else "right"
    coaction_side = "left" if version[1] == "L" else "right"

    def act(t, s):
        if action_side == "left":
            return {table[table[t][s]][inv[t]]: one}
        return {table[inv[t]][table[s][t]]: one}

    action = ActionData.from_function(group_hopf, dim, action_side, act)
    tablec = [{(s, s): one} for s in range(dim)]
    coaction = CoactionData(group_hopf, dim, coaction_side, tablec)
    return SaydCandidate(
        group_hopf,
        dim,
        group_hopf.labels,
        action,
        coaction,
        name=name or f"{group_hopf.name}-conj({version})",
    )


def sign_character_kz(n, field=None):
    """The order-two character of Z/n (n even): g^k -> (-1)^k."""
    if n % 2:
        raise ValueError("the sign character needs an even cyclic group")
    f = field or rationals()
    return {k: (f.one if k % 2 == 0 else f.neg(f.one)) for k in range(n)}


def kz4_twisted_module(version="RL"):
    """One-dimensional module over kZ4 twisted by the sign character and
    graded by g.  It satisfies the compatibility condition but is not
    stable, which is what makes it a paracyclic (not cyclic) example."""
    H = group_algebra_cyclic(4)
    delta = sign_character_kz(4)
    sigma = {1: H.field.one}
    return H, make_one_dim_module(
        H, delta, sigma, version=version, name=f"kZ4-twisted({version})"
    )


def sweedler_mpi_module():
    """The one-dimensional module over Sweedler's algebra from the counit
    and the grouplike g."""
    H = make_sweedler()
    delta = dict(H.coalgebra.counit)
    sigma = {1: H.field.one}
    return H, make_one_dim_module(H, delta, sigma, version="RL", name="sweedler-mpi")


def taft_mpi_module(n):
    """The one-dimensional module over the Taft algebra from the counit and
    the grouplike g^{n-1}."""
    H = make_taft(n)
    delta = dict(H.coalgebra.counit)
    sigma = {n - 1: H.field.one}
    return H, make_one_dim_module(
        H, delta, sigma, version="RL", name=f"taft{n}-mpi"
    )


# conjugacy classes of S3 in the catalog basis order
S3_CLASSES = {
    "identity": [0],
    "transpositions": [1, 2, 5],
    "three_cycles": [3, 4],
    "single_transposition": [2],  # not closed under conjugation
}


def o_s3_class_module(which):
    """Functions on a subset C of S3 as a module over functions on S3: the
    restriction map is the algebra epimorphism, conjugation grades the
    coaction.  Returns (hopf, candidate, report); raises when C is not
    closed under conjugation (the coaction fails coassociativity)."""
    if which not in S3_CLASSES:
        raise KeyError(f"unknown class {which!r}")
    members = S3_CLASSES[which]
    elements, compose, _ = symmetric_group_3()
    O = function_algebra_s3()
    field = O.field
    one = field.one
    dim = len(members)
    pos = {c: u for u, c in enumerate(members)}
    labels = [O.labels[c] for c in members]

    index = {g: i for i, g in enumerate(elements)}
    # inverse permutation: g^{-1}[g[t]] = t
    inv = []
    for g in elements:
        ginv = [0, 0, 0]
        for t in range(3):
            ginv[g[t]] = t
        inv.append(index[tuple(ginv)])

    mult = [
        [({u: one} if u == v else {}) for v in range(dim)] for u in range(dim)
    ]
    unit = {u: one for u in range(dim)}
    m_algebra = AlgebraData(field, dim, labels, mult, unit)

    table = []
    for c in members:
        row = {}
        for i, g in enumerate(elements):
            conj = index[compose(compose(elements[inv[i]], elements[c]), g)]
            if conj in pos:
                row[(i, pos[conj])] = one
        table.append(row)
    coaction = CoactionData(O, dim, "left", table)

    pi = Mat.from_entries(field, dim, O.dim, [(u, c, one) for c, u in pos.items()])
    candidate, report = induced_from_epimorphism(
        O, m_algebra, coaction, pi, name=f"O({which})"
    )
    return O, candidate, report


MODULE_CATALOG = {
    "kZ2.conj.RL": (
        "conjugation module over kZ2, right action left coaction",
        lambda: (lambda H: (H, conjugation_module(H, "RL")))(group_algebra_cyclic(2)),
    ),
    "kS3.conj.RL": (
        "conjugation module over kS3, right action left coaction",
        lambda: (lambda H: (H, conjugation_module(H, "RL")))(group_algebra_s3()),
    ),
    "kS3.conj.RR": (
        "conjugation module over kS3, right action right coaction",
        lambda: (lambda H: (H, conjugation_module(H, "RR")))(group_algebra_s3()),
    ),
    "kS3.conj.LL": (
        "conjugation module over kS3, left action left coaction",
        lambda: (lambda H: (H, conjugation_module(H, "LL")))(group_algebra_s3()),
    ),
    "kD4.conj.RL": (
        "conjugation module over kD4",
        lambda: (lambda H: (H, conjugation_module(H, "RL")))(
            group_algebra_dihedral4()
        ),
    ),
    "sweedler.mpi": (
        "one-dimensional module over Sweedler's algebra (counit, g)",
        sweedler_mpi_module,
    ),
    "sweedler.trivial.RL": (
        "trivial one-dimensional module over Sweedler's algebra",
        lambda: (lambda H: (H, make_trivial_module(H, "RL")))(make_sweedler()),
    ),
    "taft3.mpi": (
        "one-dimensional module over the Taft algebra (counit, g^2)",
        lambda: taft_mpi_module(3),
    ),
    "kZ4.twisted.RL": (
        "sign-twisted one-dimensional module over kZ4 (not stable)",
        lambda: kz4_twisted_module("RL"),
    ),
    "kZ4.twisted.LL": (
        "sign-twisted one-dimensional module over kZ4 (not stable)",
        lambda: kz4_twisted_module("LL"),
    ),
    "kZ4.twisted.LR": (
        "sign-twisted one-dimensional module over kZ4 (not stable)",
        lambda: kz4_twisted_module("LR"),
    ),
    "kZ4.twisted.RR": (
        "sign-twisted one-dimensional module over kZ4 (not stable)",
        lambda: kz4_twisted_module("RR"),
    ),
    "kZ4.coefficients": (
        "kZ4 carrying the twisted two-sided action and its comultiplication",
        lambda: (lambda H: (H, hopf_coefficients(H)[0]))(group_algebra_cyclic(4)),
    ),
    "kS3.coefficients": (
        "kS3 carrying the twisted two-sided action and its comultiplication",
        lambda: (lambda H: (H, hopf_coefficients(H)[0]))(group_algebra_s3()),
    ),
    "kS3.torsor": (
        "torsor coefficients on kS3 (right-right conjugation)",
        lambda: (lambda H: (H, galois_object_sayd(H)[0]))(group_algebra_s3()),
    ),
    "sweedler.coefficients": (
        "Sweedler's algebra carrying the twisted two-sided action",
        lambda: (lambda H: (H, hopf_coefficients(H)[0]))(make_sweedler()),
    ),
    "taft3.coefficients": (
        "Taft algebra carrying the twisted two-sided action",
        lambda: (lambda H: (H, hopf_coefficients(H)[0]))(make_taft(3)),
    ),
    "OS3.class.identity": (
        "functions on the identity class as a module over functions on S3",
        lambda: o_s3_class_module("identity")[:2],
    ),
    "OS3.class.transpositions": (
        "functions on the transposition class over functions on S3",
        lambda: o_s3_class_module("transpositions")[:2],
    ),
}


def get_module(name):
    if name not in MODULE_CATALOG:
        raise KeyError(f"unknown module catalog entry {name!r}")
    return MODULE_CATALOG[name][1]()

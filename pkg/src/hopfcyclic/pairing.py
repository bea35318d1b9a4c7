"""Pairings from the coalgebra and algebra complexes into the ordinary
cyclic cohomology of the algebra.

The setting: C is an H-module coalgebra, A an H-module algebra, M a
coefficient module (right action, left coaction), and C acts on A by a
linear map satisfying c(ab) = (c1 a)(c2 b), c.1 = counit(c) 1, and
h(ca) = (hc)a.  A class at level n of the coalgebra complex pairs with a
closed 0-cocycle f of the algebra complex by

    (cls # f)(a_0 ... a_n) = f(m (x) (c_0 a_0)(c_1 a_1)...(c_n a_n)),

and a degree-0 class of the coalgebra complex pairs with a level-n class
of the algebra complex by feeding the iterated coproduct legs of c to the
slots.  Both outputs are verified to be cyclic cocycles on A; a failed
verification aborts with a full witness dump because it would contradict
the theory the engine implements.
"""

from .complexes import usual_cyclic_complex
from .cyclicmachine import hochschild_b
from .errors import (
    OutputNotCocycleError,
    RepresentativeInvalidError,
    RequiresDegreesError,
    ShapeMismatchError,
)
from .exactmath.linalg import (
    Mat,
    SubspaceChart,
    TensorIndex,
    image,
    kernel,
    serialize_vec,
    vec_add,
    vec_clean,
    vec_scale,
    vec_sub,
)
from .report import CheckReport
from .sayd import check_compat


class CoalgebraActionOnAlgebra:
    """A linear map C (x) A -> A given by its matrix; the column of the
    basis pair (c, a) sits at flat index c * a_dim + a."""

    def __init__(self, field, c_dim, a_dim, mat):
        if mat.nrows != a_dim or mat.ncols != c_dim * a_dim:
            raise ShapeMismatchError(
                f"action matrix must be {a_dim} x {c_dim * a_dim},"
                f" got {mat.nrows} x {mat.ncols}"
            )
        self.field = field
        self.c_dim = c_dim
        self.a_dim = a_dim
        self.mat = mat
        self._cols = mat.T.rows

    @classmethod
    def from_function(cls, field, c_dim, a_dim, fn):
        """fn(c, a) returns the sparse image of the basis pair in A."""
        entries = []
        for c in range(c_dim):
            for a in range(a_dim):
                for p, v in fn(c, a).items():
                    entries.append((p, c * a_dim + a, v))
        return cls(field, c_dim, a_dim, Mat.from_entries(field, a_dim, c_dim * a_dim, entries))

    @classmethod
    def from_action_data(cls, action):
        """Reuse an H-action on A as a C = H action (the matrices agree)."""
        return cls.from_function(
            action.field,
            action.hopf.dim,
            action.dim,
            lambda c, a: action.mats[c].T.rows[a],
        )

    def act_basis(self, c, a):
        return self._cols[c * self.a_dim + a]

    def act(self, c_vec, a_vec):
        field = self.field
        add, mul, is_zero = field.add, field.mul, field.is_zero
        out = {}
        for c, w in c_vec.items():
            for a, v in a_vec.items():
                wv = mul(w, v)
                for p, u in self._cols[c * self.a_dim + a].items():
                    cur = out.get(p)
                    val = mul(wv, u)
                    out[p] = val if cur is None else add(cur, val)
        return {k: v for k, v in out.items() if not is_zero(v)}


def scalar_c_action(field, a_dim):
    """The ground field as a coalgebra acting by scalars."""
    return CoalgebraActionOnAlgebra.from_function(
        field, 1, a_dim, lambda c, a: {a: field.one}
    )


def check_c_action(action, coalgebra, algebra, c_action, a_action, report=None):
    """Verify that the map C (x) A -> A measures products, preserves the
    unit, and intertwines the H-actions on C and A.  The carrier
    hypotheses (C a module coalgebra, A a module algebra) are re-checked
    into the same report."""
    hopf = c_action.hopf
    field = action.field
    if action.c_dim != coalgebra.dim or action.a_dim != algebra.dim:
        raise ShapeMismatchError("action shape does not match the carriers")
    if a_action.dim != algebra.dim or c_action.dim != coalgebra.dim:
        raise ShapeMismatchError("Hopf actions do not match the carriers")
    rep = report or CheckReport("coalgebra action on algebra")
    check_compat("module_coalgebra", c_action, coalgebra, report=rep)
    check_compat("module_algebra", a_action, algebra, report=rep)

    dc, da, dh = coalgebra.dim, algebra.dim, hopf.dim

    ok = True
    for c in range(dc):
        if not ok:
            break
        for a in range(da):
            if not ok:
                break
            for b in range(da):
                lhs = action.act(
                    {c: field.one}, algebra.mult[a][b]
                )
                rhs = {}
                for (c1, c2), w in coalgebra.comult[c].items():
                    term = algebra.multiply(
                        vec_scale(field, w, action.act_basis(c1, a)),
                        action.act_basis(c2, b),
                    )
                    rhs = vec_add(field, rhs, term)
                rhs = vec_clean(field, rhs)
                if lhs != rhs:
                    rep.add(
                        "action measures products",
                        False,
                        witness={
                            "indices": [c, a, b],
                            "labels": [
                                coalgebra.labels[c],
                                algebra.labels[a],
                                algebra.labels[b],
                            ],
                            "lhs": serialize_vec(field, lhs),
                            "rhs": serialize_vec(field, rhs),
                        },
                    )
                    ok = False
                    break
    if ok:
        rep.add("action measures products", True)

    ok = True
    for c in range(dc):
        got = action.act({c: field.one}, dict(algebra.unit))
        eps = coalgebra.counit.get(c, field.zero)
        want = vec_clean(field, vec_scale(field, eps, dict(algebra.unit)))
        if got != want:
            rep.add(
                "action preserves the unit",
                False,
                witness={
                    "indices": [c],
                    "labels": [coalgebra.labels[c]],
                    "lhs": serialize_vec(field, got),
                    "rhs": serialize_vec(field, want),
                },
            )
            ok = False
            break
    if ok:
        rep.add("action preserves the unit", True)

    ok = True
    for h in range(dh):
        if not ok:
            break
        for c in range(dc):
            if not ok:
                break
            for a in range(da):
                lhs = vec_clean(
                    field,
                    a_action.act_basis(h, action.act_basis(c, a)),
                )
                rhs = vec_clean(
                    field,
                    action.act(
                        c_action.act_basis(h, {c: field.one}), {a: field.one}
                    ),
                )
                if lhs != rhs:
                    rep.add(
                        "action intertwines the Hopf action",
                        False,
                        witness={
                            "indices": [h, c, a],
                            "labels": [
                                hopf.labels[h],
                                coalgebra.labels[c],
                                algebra.labels[a],
                            ],
                            "lhs": serialize_vec(field, lhs),
                            "rhs": serialize_vec(field, rhs),
                        },
                    )
                    ok = False
                    break
    if ok:
        rep.add("action intertwines the Hopf action", True)
    return rep


def is_closed_zero_cocycle(f, complex_result):
    """Decide whether the ambient functional f on M (x) A is a closed
    0-cocycle of the algebra complex: it must lie in the invariant
    subspace and vanish under the degree-zero coboundary.  Returns
    (verdict, report); for a one-dimensional coefficient module the two
    items are exactly delta-invariance and the sigma-trace condition and
    the report names them that way."""
    data = complex_result.data
    if len(data.dims) < 2:
        raise RequiresDegreesError(
            "the closedness check needs the complex built through level 1",
            needed=1,
        )
    field = data.field
    module = complex_result.module
    one_dim = module is not None and module.dim == 1
    if one_dim:
        sigma_label = " + ".join(
            complex_result.hopf.labels[h]
            for (h, _), _ in sorted(module.coaction.table[0].items())
        )
        inv_name = "delta-invariance"
        inv_detail = (
            "the functional is invariant under the Hopf action twisted by the"
            " character delta"
        )
        trace_name = "sigma-trace condition"
        trace_detail = (
            f"f(a0 a1) = f((S^-1({sigma_label}) a1) a0) for all basis a0, a1"
        )
    else:
        inv_name = "functional is invariant"
        inv_detail = ""
        trace_name = "closed under the degree-zero coboundary"
        trace_detail = ""
    rep = CheckReport("closed 0-cocycle")
    residue = complex_result.charts[0].subspace.reduce(vec_clean(field, dict(f)))
    invariant = not residue
    rep.add(
        inv_name,
        invariant,
        witness=None if invariant else {"residue": serialize_vec(field, residue)},
        detail=inv_detail,
    )
    if invariant:
        coords = complex_result.charts[0].project_vec(f)
        defect = vec_clean(field, hochschild_b(data, 0).apply(coords))
        closed = not defect
        rep.add(
            trace_name,
            closed,
            witness=None if closed else {"defect": serialize_vec(field, defect)},
            detail=trace_detail,
        )
    else:
        rep.add(
            trace_name,
            False,
            detail="not evaluated: the functional leaves the invariant subspace",
        )
    return rep.ok(), rep


def _require_cycle(data, vec, n, which):
    """Raise unless vec (level-n coordinates) is a cyclic cocycle."""
    field = data.field
    if len(data.dims) < n + 2:
        raise RequiresDegreesError(
            f"verifying a level-{n} representative needs level {n + 1}",
            needed=n + 1,
        )
    sign = field.one if n % 2 == 0 else field.neg(field.one)
    cyc = vec_clean(
        field, vec_sub(field, data.tau[n].apply(vec), vec_scale(field, sign, vec))
    )
    if cyc:
        raise RepresentativeInvalidError(
            f"the {which} representative is not cyclic at level {n}",
            which=which,
            condition="cyclicity",
            defect=serialize_vec(field, cyc),
        )
    closed = vec_clean(field, hochschild_b(data, n).apply(vec))
    if closed:
        raise RepresentativeInvalidError(
            f"the {which} representative is not closed at level {n}",
            which=which,
            condition="closedness",
            defect=serialize_vec(field, closed),
        )


class PairingResult:
    """A verified cyclic n-cocycle on A produced by a pairing, together
    with the boundary space needed to compare classes."""

    def __init__(self, degree, field, cochain, boundaries, usual):
        self.degree = degree
        self.field = field
        self.cochain = cochain
        self.boundaries = boundaries
        self.usual = usual
        self.is_coboundary = (
            not cochain if boundaries is None else boundaries.contains(cochain)
        )

    def cochain_serialized(self):
        return serialize_vec(self.field, self.cochain)

    def same_class(self, other):
        """True when the output and the given cochain differ by a
        coboundary."""
        diff = vec_clean(self.field, vec_sub(self.field, self.cochain, other))
        if self.boundaries is None:
            return not diff
        return self.boundaries.contains(diff)

    def to_dict(self):
        return {
            "degree": self.degree,
            "cochain": self.cochain_serialized(),
            "is_coboundary": self.is_coboundary,
        }


def _boundary_space(usual, n):
    """B^n of the usual cyclic complex: the coboundaries of cyclic
    (n-1)-cochains; None marks the zero space at n = 0."""
    if n == 0:
        return None
    data = usual.data
    field = data.field
    sign = field.one if (n - 1) % 2 == 0 else field.neg(field.one)
    cyc = data.tau[n - 1].sub(Mat.identity(field, data.dims[n - 1]).scale(sign))
    prev = SubspaceChart(kernel(cyc))
    return image(hochschild_b(data, n - 1).mul(prev.section_mat))


def _verified_output(algebra, n, chi, usual):
    """Check chi against the cyclicity and closedness conditions of the
    usual cyclic complex of A; abort on failure, reduce on success."""
    if usual is None:
        usual = usual_cyclic_complex(algebra, n + 1, "cohomology")
    data = usual.data
    field = data.field
    chi = vec_clean(field, chi)
    sign = field.one if n % 2 == 0 else field.neg(field.one)
    cyc = vec_clean(
        field, vec_sub(field, data.tau[n].apply(chi), vec_scale(field, sign, chi))
    )
    if cyc:
        raise OutputNotCocycleError(
            "pairing output fails the cyclicity condition",
            degree=n,
            condition="cyclicity",
            cochain=serialize_vec(field, chi),
            defect=serialize_vec(field, cyc),
        )
    closed = vec_clean(field, hochschild_b(data, n).apply(chi))
    if closed:
        raise OutputNotCocycleError(
            "pairing output fails closedness",
            degree=n,
            condition="closedness",
            cochain=serialize_vec(field, chi),
            defect=serialize_vec(field, closed),
        )
    return PairingResult(n, field, chi, _boundary_space(usual, n), usual)


def _check_scenario(c_complex, a_complex, action):
    if c_complex.kind != "coalgebra":
        raise ShapeMismatchError("first argument must be a coalgebra complex")
    if a_complex.kind != "module_algebra":
        raise ShapeMismatchError("second argument must be a module-algebra complex")
    if c_complex.hopf is not a_complex.hopf:
        raise ShapeMismatchError("the complexes live over different Hopf data")
    if (
        action.c_dim != c_complex.carrier.dim
        or action.a_dim != a_complex.carrier.dim
    ):
        raise ShapeMismatchError("action shape does not match the complexes")


def pair_n0(c_complex, cls, n, a_complex, f, action, usual=None):
    """Pair a level-n cyclic cocycle of the coalgebra complex (level
    coordinates) with a closed 0-cocycle f of the algebra complex (ambient
    functional on M (x) A): the output sends a_0 ... a_n to
    f(m (x) (c_0 a_0)(c_1 a_1)...(c_n a_n))."""
    _check_scenario(c_complex, a_complex, action)
    field = c_complex.hopf.field
    algebra = a_complex.carrier

    closed, freport = is_closed_zero_cocycle(f, a_complex)
    if not closed:
        raise RepresentativeInvalidError(
            "the functional argument is not a closed 0-cocycle",
            which="f",
            report=freport.to_dict(),
        )
    _require_cycle(c_complex.data, cls, n, "coalgebra-side")

    amb = c_complex.charts[n].section_vec(cls)
    cidx = c_complex.ambient[n]
    da = algebra.dim
    aidx = TensorIndex([da] * (n + 1))
    midx = a_complex.ambient[0]
    add, mul, is_zero = field.add, field.mul, field.is_zero

    chi = {}
    for flat_s, w in amb.items():
        key = cidx.unflat(flat_s)
        m, cs = key[0], key[1:]
        for atup in aidx:
            cur = action.act_basis(cs[0], atup[0])
            for i in range(1, n + 1):
                cur = algebra.multiply(cur, action.act_basis(cs[i], atup[i]))
                if not cur:
                    break
            total = field.zero
            hit = False
            for p, v in cur.items():
                fv = f.get(midx.flat((m, p)))
                if fv is not None:
                    total = add(total, mul(v, fv))
                    hit = True
            if hit and not is_zero(total):
                k = aidx.flat(atup)
                prev = chi.get(k)
                val = mul(w, total)
                chi[k] = val if prev is None else add(prev, val)
    return _verified_output(algebra, n, chi, usual)


def _iterated_comult(coalgebra, n):
    """Delta^(n) of the carrier coalgebra: basis index -> sparse dict over
    (n+1)-leg tuples, expanding the first slot."""
    field = coalgebra.field
    add, mul = field.add, field.mul
    table = [{(c,): field.one} for c in range(coalgebra.dim)]
    for _ in range(n):
        nxt = []
        for c in range(coalgebra.dim):
            out = {}
            for legs, w in table[c].items():
                for (x, y), v in coalgebra.comult[legs[0]].items():
                    key = (x, y) + legs[1:]
                    cur = out.get(key)
                    val = mul(w, v)
                    out[key] = val if cur is None else add(cur, val)
            nxt.append(out)
        table = nxt
    return table


def pair_0n(c_complex, z, a_complex, cls, n, action, usual=None):
    """Pair a closed degree-0 cocycle z of the coalgebra complex (level
    coordinates) with a level-n cyclic cocycle of the algebra complex: the
    output sends a_0 ... a_n to f(m (x) (c1 a_0) (x) ... (x) (c^(n+1) a_n))
    over the iterated coproduct legs of c."""
    _check_scenario(c_complex, a_complex, action)
    field = c_complex.hopf.field
    algebra = a_complex.carrier
    coalgebra = c_complex.carrier

    _require_cycle(c_complex.data, z, 0, "coalgebra-side")
    _require_cycle(a_complex.data, cls, n, "algebra-side")

    amb_z = c_complex.charts[0].section_vec(z)
    zidx = c_complex.ambient[0]
    f_amb = a_complex.charts[n].section_vec(cls)
    fidx = a_complex.ambient[n]
    da = algebra.dim
    aidx = TensorIndex([da] * (n + 1))
    legs_of = _iterated_comult(coalgebra, n)
    add, mul, is_zero = field.add, field.mul, field.is_zero

    chi = {}
    for flat_z, w in amb_z.items():
        m, c = zidx.unflat(flat_z)
        for legs, u in legs_of[c].items():
            wu = mul(w, u)
            for atup in aidx:
                terms = {(): wu}
                for i in range(n + 1):
                    nxt = {}
                    act = action.act_basis(legs[i], atup[i])
                    if not act:
                        terms = {}
                        break
                    for pref, coeff in terms.items():
                        for b, v in act.items():
                            key = pref + (b,)
                            cur = nxt.get(key)
                            val = mul(coeff, v)
                            nxt[key] = val if cur is None else add(cur, val)
                    terms = nxt
                if not terms:
                    continue
                total = field.zero
                hit = False
                for btup, coeff in terms.items():
                    fv = f_amb.get(fidx.flat((m,) + btup))
                    if fv is not None:
                        total = add(total, mul(coeff, fv))
                        hit = True
                if hit and not is_zero(total):
                    k = aidx.flat(atup)
                    prev = chi.get(k)
                    chi[k] = total if prev is None else add(prev, total)
    return _verified_output(algebra, n, chi, usual)

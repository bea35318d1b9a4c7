"""Builders turning Hopf data with coefficients into cyclic module data.

Four carrier types are supported.  With a right-action left-coaction
coefficient module M over H:

* ``coalgebra_complex``: levels are M tensored over H with powers of an
  H-module coalgebra; the quotient charts kill mh (x) x - m (x) hx, the
  cofaces split comultiplication slots, the last coface and the cyclic
  operator wrap the first slot around through the coaction.  When an
  operator fails to descend, the builder collects every failing degree and
  raises with the coefficient module's compatibility report attached.
* ``module_algebra_complex``: levels are the H-invariant functionals on
  M (x) A^(n+1) for an H-module algebra A; operators are transposes of
  slot multiplication, unit insertion, and the coaction-twisted rotation,
  restricted to the invariant subspace.

With a right-action right-coaction module, ``comodule_algebra_cohomology_
complex`` builds the colinear maps from powers of a comodule algebra into
M; with a left-action left-coaction module, ``comodule_algebra_homology_
complex`` builds the cotensor spaces.  Operators that leave the cut-out
subspace raise with per-degree witnesses.
"""

from .cyclicmachine import COSIMPLICIAL, SIMPLICIAL, CyclicModuleData, enforce_caps
from .errors import (
    HypothesisFailedError,
    NotWellDefinedError,
    OperatorEscapesSubspaceError,
    ShapeMismatchError,
    TauNotWellDefinedError,
)
from .exactmath.linalg import (
    Mat,
    QuotientChart,
    RowBasis,
    Subspace,
    SubspaceChart,
    TensorIndex,
    induced_map,
    kernel,
    restricted_map,
)
from .sayd import (
    ActionData,
    CoactionData,
    adjoint_action,
    check_compat,
    check_comodule,
    check_module,
    check_sayd,
    hopf_coefficients,
    left_multiplication_action,
    make_one_dim_module,
    make_trivial_module,
    require_version,
)


def _require_ok(report, which):
    if not report.ok():
        item = report.first_failure()
        raise HypothesisFailedError(
            f"{which}: {item.name} fails",
            which=which,
            item=item.name,
            witness=item.witness,
        )


def _columns(mats):
    """Column dictionaries of each matrix, indexed [t][source]."""
    return [m.T.rows for m in mats]


class ComplexResult:
    """A built complex: cyclic data plus the coordinate chart of each level.

    ``charts[n]`` translates between level coordinates and the ambient
    tensor space indexed by ``ambient[n]`` (project_vec / section_vec work
    on both quotient and subspace charts).
    """

    def __init__(self, kind, hopf, module, data, charts, ambient, carrier=None):
        self.kind = kind
        self.hopf = hopf
        self.module = module
        self.data = data
        self.charts = charts
        self.ambient = ambient
        self.carrier = carrier

    @property
    def dims(self):
        return self.data.dims

    def level_dim(self, n):
        return self.data.dims[n]

    def __repr__(self):
        return f"<ComplexResult {self.kind} dims {self.data.dims}>"


def _diagonal_expand(field, legs, cols, slots, start_coeff):
    """Slotwise action of one comultiplication leg tuple on basis slots."""
    terms = {(): start_coeff}
    add, mul = field.add, field.mul
    for leg, slot in zip(legs, slots):
        nxt = {}
        for pref, c in terms.items():
            for out, d in cols[leg][slot].items():
                key = pref + (out,)
                cur = nxt.get(key)
                val = mul(c, d)
                nxt[key] = val if cur is None else add(cur, val)
        terms = nxt
    return terms


# -- coalgebra carrier: quotient levels M (x)_H C^(n+1) --


def coalgebra_complex(module, coalgebra, c_action, n_max, check_hypotheses=True):
    """Cosimplicial levels M (x)_H C^(n+1) for an H-module coalgebra C."""
    hopf = module.hopf
    field = hopf.field
    require_version(module, "RL", "the coalgebra complex")
    if c_action.hopf is not hopf:
        raise ShapeMismatchError("carrier action lives over a different Hopf datum")
    if c_action.dim != coalgebra.dim:
        raise ShapeMismatchError("carrier action dimension differs from the coalgebra")
    if check_hypotheses:
        _require_ok(check_module(module.action), "module")
        _require_ok(check_comodule(module.coaction), "comodule")
        _require_ok(check_module(c_action), "module coalgebra")
        _require_ok(check_compat("module_coalgebra", c_action, coalgebra), "module coalgebra")
    dm, dc, dh = module.dim, coalgebra.dim, hopf.dim
    enforce_caps([dm * dc ** (n + 1) for n in range(n_max + 1)])

    act_cols = _columns(c_action.mats)
    mod_cols = _columns(module.action.mats)

    indices = [TensorIndex([dm] + [dc] * (n + 1)) for n in range(n_max + 1)]

    def killed_subspace(n):
        idx = indices[n]
        rb = RowBasis(field, idx.size)
        delta_n = hopf.iterated_delta(n)
        cidx = TensorIndex([dc] * (n + 1))
        sub, is_zero = field.sub, field.is_zero
        for t in range(dh):
            for m in range(dm):
                mt = mod_cols[t][m]
                for x in cidx:
                    gen = {}
                    for m2, c in mt.items():
                        gen[idx.flat((m2,) + x)] = c
                    for legs, c0 in delta_n[t].items():
                        for tup, c in _diagonal_expand(field, legs, act_cols, x, c0).items():
                            k = idx.flat((m,) + tup)
                            cur = gen.get(k)
                            gen[k] = sub(field.zero, c) if cur is None else sub(cur, c)
                    rb.insert({k: v for k, v in gen.items() if not is_zero(v)})
        return Subspace(field, idx.size, rb.rref_rows())

    charts = [QuotientChart(killed_subspace(n)) for n in range(n_max + 1)]

    def split_coface(n, i):
        def fn(key):
            m, cs = key[0], key[1:]
            return {
                (m,) + cs[:i] + (a, b) + cs[i + 1 :]: c
                for (a, b), c in coalgebra.comult[cs[i]].items()
            }

        return Mat.from_basis_map(field, indices[n - 1], indices[n], fn)

    def flip_coface(n):
        add, mul = field.add, field.mul

        def fn(key):
            m, cs = key[0], key[1:]
            out = {}
            for (h, m0), c in module.coaction.table[m].items():
                for (a, b), d in coalgebra.comult[cs[0]].items():
                    cd = mul(c, d)
                    for cp, e in act_cols[h][a].items():
                        tup = (m0, b) + cs[1:] + (cp,)
                        cur = out.get(tup)
                        val = mul(cd, e)
                        out[tup] = val if cur is None else add(cur, val)
            return out

        return Mat.from_basis_map(field, indices[n - 1], indices[n], fn)

    def codegen_op(n, i):
        def fn(key):
            m, cs = key[0], key[1:]
            e = coalgebra.counit.get(cs[i + 1], field.zero)
            if field.is_zero(e):
                return {}
            return {(m,) + cs[: i + 1] + cs[i + 2 :]: e}

        return Mat.from_basis_map(field, indices[n + 1], indices[n], fn)

    def cyclic_op(n):
        add, mul = field.add, field.mul

        def fn(key):
            m, cs = key[0], key[1:]
            out = {}
            for (h, m0), c in module.coaction.table[m].items():
                for cp, e in act_cols[h][cs[0]].items():
                    tup = (m0,) + cs[1:] + (cp,)
                    cur = out.get(tup)
                    val = mul(c, e)
                    out[tup] = val if cur is None else add(cur, val)
            return out

        return Mat.from_basis_map(field, indices[n], indices[n], fn)

    failures = []

    def induce(amb, src, tgt, degree, opname):
        try:
            return induced_map(amb, charts[src], charts[tgt], name=opname)
        except NotWellDefinedError as err:
            failures.append((degree, opname, err.to_dict()))
            return None

    faces, degens, tau = [[]], [], []
    for n in range(n_max + 1):
        if n >= 1:
            ops = [
                induce(split_coface(n, i), n - 1, n, n, f"delta_{i}")
                for i in range(n)
            ]
            ops.append(induce(flip_coface(n), n - 1, n, n, f"delta_{n}"))
            faces.append(ops)
        if n < n_max:
            degens.append(
                [
                    induce(codegen_op(n, i), n + 1, n, n, f"sigma_{i}")
                    for i in range(n + 1)
                ]
            )
        else:
            degens.append([])
        tau.append(induce(cyclic_op(n), n, n, n, "tau"))

    if failures:
        raise TauNotWellDefinedError(
            "operators do not descend to the tensor-over-H quotient",
            failures=failures,
            ayd_report=check_sayd(module),
        )

    data = CyclicModuleData(
        field,
        COSIMPLICIAL,
        [chart.dim for chart in charts],
        faces,
        degens,
        tau,
        name=f"coalgebra complex over {hopf.name}",
    )
    return ComplexResult("coalgebra", hopf, module, data, charts, indices, coalgebra)


# -- module-algebra carrier: invariant functionals on M (x) A^(n+1) --


def module_algebra_complex(module, algebra, a_action, n_max, check_hypotheses=True):
    """Cosimplicial levels of H-linear functionals on M (x) A^(n+1)."""
    hopf = module.hopf
    field = hopf.field
    require_version(module, "RL", "the module-algebra complex")
    if a_action.hopf is not hopf:
        raise ShapeMismatchError("carrier action lives over a different Hopf datum")
    if a_action.dim != algebra.dim:
        raise ShapeMismatchError("carrier action dimension differs from the algebra")
    if check_hypotheses:
        _require_ok(check_module(module.action), "module")
        _require_ok(check_comodule(module.coaction), "comodule")
        _require_ok(check_module(a_action), "module algebra")
        _require_ok(check_compat("module_algebra", a_action, algebra), "module algebra")
    dm, da, dh = module.dim, algebra.dim, hopf.dim
    enforce_caps([dm * da ** (n + 1) for n in range(n_max + 1)])

    act_cols = _columns(a_action.mats)
    mod_cols = _columns(module.action.mats)
    s_cols = hopf.antipode.T.rows
    sinv_cols = hopf.antipode_inv.T.rows
    add, mul = field.add, field.mul

    indices = [TensorIndex([dm] + [da] * (n + 1)) for n in range(n_max + 1)]

    def rho(t, n):
        """Right action of e_t on M (x) A^(n+1): m.t1 (x) S(t2) acting
        diagonally on the algebra slots."""
        idx = indices[n]
        delta_n = hopf.iterated_delta(n)

        def fn(key):
            m, av = key[0], key[1:]
            out = {}
            for (t1, t2), c in hopf.coalgebra.comult[t].items():
                for m2, cm in mod_cols[t1][m].items():
                    base = mul(c, cm)
                    for u, cu in s_cols[t2].items():
                        for legs, c0 in delta_n[u].items():
                            coeff = mul(base, mul(cu, c0))
                            for tup, cc in _diagonal_expand(
                                field, legs, act_cols, av, coeff
                            ).items():
                                k = (m2,) + tup
                                cur = out.get(k)
                                out[k] = cc if cur is None else add(cur, cc)
            return out

        return Mat.from_basis_map(field, idx, idx, fn)

    def invariant_subspace(n):
        dim = indices[n].size
        stacked = None
        for t in range(dh):
            cond = rho(t, n).T
            eps = hopf.coalgebra.counit.get(t, field.zero)
            if not field.is_zero(eps):
                cond = cond.sub(Mat.identity(field, dim).scale(eps))
            stacked = cond if stacked is None else stacked.stack_below(cond)
        return kernel(stacked)

    charts = [SubspaceChart(invariant_subspace(n)) for n in range(n_max + 1)]

    def mult_face(n, i):
        """Underlying map level-n ambient -> level-(n-1) ambient."""

        def fn(key):
            m, av = key[0], key[1:]
            return {
                (m,) + av[:i] + (p,) + av[i + 2 :]: c
                for p, c in algebra.mult[av[i]][av[i + 1]].items()
            }

        return Mat.from_basis_map(field, indices[n], indices[n - 1], fn)

    def wrap_face(n):
        def fn(key):
            m, av = key[0], key[1:]
            out = {}
            for (h, m0), c in module.coaction.table[m].items():
                for u, cu in sinv_cols[h].items():
                    base = mul(c, cu)
                    for ap, d in act_cols[u][av[-1]].items():
                        bd = mul(base, d)
                        for p, e in algebra.mult[ap][av[0]].items():
                            tup = (m0, p) + av[1:-1]
                            cur = out.get(tup)
                            val = mul(bd, e)
                            out[tup] = val if cur is None else add(cur, val)
            return out

        return Mat.from_basis_map(field, indices[n], indices[n - 1], fn)

    def insert_op(n, i):
        def fn(key):
            m, av = key[0], key[1:]
            return {
                (m,) + av[: i + 1] + (w,) + av[i + 1 :]: cw
                for w, cw in algebra.unit.items()
            }

        return Mat.from_basis_map(field, indices[n], indices[n + 1], fn)

    def rotate_op(n):
        def fn(key):
            m, av = key[0], key[1:]
            out = {}
            for (h, m0), c in module.coaction.table[m].items():
                for u, cu in sinv_cols[h].items():
                    base = mul(c, cu)
                    for ap, d in act_cols[u][av[-1]].items():
                        tup = (m0, ap) + av[:-1]
                        cur = out.get(tup)
                        val = mul(base, d)
                        out[tup] = val if cur is None else add(cur, val)
            return out

        return Mat.from_basis_map(field, indices[n], indices[n], fn)

    failures = []

    def restrict(amb_t, src, tgt, degree, opname):
        try:
            return restricted_map(amb_t, charts[src], charts[tgt], name=opname)
        except NotWellDefinedError as err:
            failures.append((degree, opname, err.to_dict()))
            return None

    faces, degens, tau = [[]], [], []
    for n in range(n_max + 1):
        if n >= 1:
            ops = [
                restrict(mult_face(n, i).T, n - 1, n, n, f"delta_{i}")
                for i in range(n)
            ]
            ops.append(restrict(wrap_face(n).T, n - 1, n, n, f"delta_{n}"))
            faces.append(ops)
        if n < n_max:
            degens.append(
                [
                    restrict(insert_op(n, i).T, n + 1, n, n, f"sigma_{i}")
                    for i in range(n + 1)
                ]
            )
        else:
            degens.append([])
        tau.append(restrict(rotate_op(n).T, n, n, n, "tau"))

    if failures:
        raise OperatorEscapesSubspaceError(
            "operators do not preserve the invariant-functional subspace",
            failures=failures,
            ayd_check=check_sayd(module).to_dict(),
        )

    data = CyclicModuleData(
        field,
        COSIMPLICIAL,
        [chart.dim for chart in charts],
        faces,
        degens,
        tau,
        name=f"module-algebra complex over {hopf.name}",
    )
    return ComplexResult("module_algebra", hopf, module, data, charts, indices, algebra)


# -- comodule-algebra carriers --


def _diag_coaction_factory(hopf, a_coaction):
    """Diagonal right coaction on tuples of algebra basis elements: returns
    a map tuple -> {(tuple, H-index): coeff}."""
    field = hopf.field
    add, mul = field.add, field.mul
    hmult = hopf.algebra.mult

    def diag(w):
        state = {((), h0): c0 for h0, c0 in hopf.algebra.unit.items()}
        for wj in w:
            nxt = {}
            for (pref, h), c in state.items():
                for (aj, hj), d in a_coaction.table[wj].items():
                    cd = mul(c, d)
                    for h2, e in hmult[h][hj].items():
                        key = (pref + (aj,), h2)
                        cur = nxt.get(key)
                        val = mul(cd, e)
                        nxt[key] = val if cur is None else add(cur, val)
            state = nxt
        return {k: v for k, v in state.items() if not field.is_zero(v)}

    return diag


def comodule_algebra_cohomology_complex(
    module, algebra, a_coaction, n_max, check_hypotheses=True
):
    """Cosimplicial levels of colinear maps A^(n+1) -> M for a right
    H-comodule algebra A and a right-action right-coaction module M."""
    hopf = module.hopf
    field = hopf.field
    require_version(module, "RR", "the comodule-algebra cohomology complex")
    if a_coaction.hopf is not hopf:
        raise ShapeMismatchError("carrier coaction lives over a different Hopf datum")
    if a_coaction.dim != algebra.dim:
        raise ShapeMismatchError("carrier coaction dimension differs from the algebra")
    if a_coaction.side != "right":
        raise ShapeMismatchError("the comodule algebra needs a right coaction")
    if check_hypotheses:
        _require_ok(check_module(module.action), "module")
        _require_ok(check_comodule(module.coaction), "comodule")
        _require_ok(check_comodule(a_coaction), "comodule algebra")
        _require_ok(
            check_compat("comodule_algebra", a_coaction, algebra), "comodule algebra"
        )
    dm, da, dh = module.dim, algebra.dim, hopf.dim
    enforce_caps([dm * da ** (n + 1) for n in range(n_max + 1)])

    mod_cols = _columns(module.action.mats)
    diag = _diag_coaction_factory(hopf, a_coaction)
    mul = field.mul

    v_indices = [TensorIndex([da] * (n + 1)) for n in range(n_max + 1)]

    def colinear_subspace(n):
        vidx = v_indices[n]
        dv = vidx.size
        hom_dim = dm * dv
        # left side: apply the module coaction to the output
        mh = TensorIndex([dm, dh])
        lam_m = Mat.from_basis_map(
            field,
            TensorIndex([dm]),
            mh,
            lambda key: dict(module.coaction.table[key[0]]),
        )
        lhs = lam_m.kron(Mat.identity(field, dv))
        # right side: feed the diagonal coaction of the input
        entries = []
        for w in vidx:
            wf = vidx.flat(w)
            for (v2, h), c in diag(w).items():
                v2f = vidx.flat(v2)
                for u in range(dm):
                    entries.append(((u * dh + h) * dv + wf, u * dv + v2f, c))
        rhs = Mat.from_entries(field, dm * dh * dv, hom_dim, entries)
        return kernel(lhs.sub(rhs))

    charts = [SubspaceChart(colinear_subspace(n)) for n in range(n_max + 1)]

    def precompose(g):
        """Hom(V_src, M) -> Hom(V_tgt, M) by feeding g: V_tgt -> V_src."""
        return Mat.identity(field, dm).kron(g.T)

    def mult_map(n, i):
        """V_n -> V_{n-1}: multiply slots i, i+1."""

        def fn(w):
            return {
                w[:i] + (p,) + w[i + 2 :]: c
                for p, c in algebra.mult[w[i]][w[i + 1]].items()
            }

        return Mat.from_basis_map(field, v_indices[n], v_indices[n - 1], fn)

    def insert_map(n, i):
        """V_n -> V_{n+1}: insert the unit after slot i."""

        def fn(w):
            return {
                w[: i + 1] + (p,) + w[i + 1 :]: c for p, c in algebra.unit.items()
            }

        return Mat.from_basis_map(field, v_indices[n], v_indices[n + 1], fn)

    def wrap_coface(n):
        """Hom(V_{n-1}, M) -> Hom(V_n, M): rotate the last input through
        the coaction, multiply it onto the front, act on the output."""
        vn, vp = v_indices[n], v_indices[n - 1]
        entries = []
        for w in vn:
            wf = vn.flat(w)
            for (ap, h), c in a_coaction.table[w[-1]].items():
                for p, d in algebra.mult[ap][w[0]].items():
                    vpf = vp.flat((p,) + w[1:-1])
                    cd = mul(c, d)
                    for u in range(dm):
                        for u2, e in mod_cols[h][u].items():
                            entries.append(
                                (u2 * vn.size + wf, u * vp.size + vpf, mul(cd, e))
                            )
        return Mat.from_entries(field, dm * vn.size, dm * vp.size, entries)

    def cyclic_hom(n):
        vn = v_indices[n]
        entries = []
        for w in vn:
            wf = vn.flat(w)
            for (ap, h), c in a_coaction.table[w[-1]].items():
                v2f = vn.flat((ap,) + w[:-1])
                for u in range(dm):
                    for u2, e in mod_cols[h][u].items():
                        entries.append(
                            (u2 * vn.size + wf, u * vn.size + v2f, mul(c, e))
                        )
        return Mat.from_entries(field, dm * vn.size, dm * vn.size, entries)

    failures = []

    def restrict(amb, src, tgt, degree, opname):
        try:
            return restricted_map(amb, charts[src], charts[tgt], name=opname)
        except NotWellDefinedError as err:
            failures.append((degree, opname, err.to_dict()))
            return None

    faces, degens, tau = [[]], [], []
    for n in range(n_max + 1):
        if n >= 1:
            ops = [
                restrict(precompose(mult_map(n, i)), n - 1, n, n, f"delta_{i}")
                for i in range(n)
            ]
            ops.append(restrict(wrap_coface(n), n - 1, n, n, f"delta_{n}"))
            faces.append(ops)
        if n < n_max:
            degens.append(
                [
                    restrict(precompose(insert_map(n, i)), n + 1, n, n, f"sigma_{i}")
                    for i in range(n + 1)
                ]
            )
        else:
            degens.append([])
        tau.append(restrict(cyclic_hom(n), n, n, n, "tau"))

    if failures:
        raise OperatorEscapesSubspaceError(
            "operators do not preserve the colinear subspace",
            failures=failures,
            ayd_check=check_sayd(module).to_dict(),
        )

    data = CyclicModuleData(
        field,
        COSIMPLICIAL,
        [chart.dim for chart in charts],
        faces,
        degens,
        tau,
        name=f"comodule-algebra cohomology complex over {hopf.name}",
    )
    hom_indices = [TensorIndex([dm, v.size]) for v in v_indices]
    return ComplexResult(
        "comodule_algebra_cohomology", hopf, module, data, charts, hom_indices, algebra
    )


def comodule_algebra_homology_complex(
    module, algebra, a_coaction, n_max, check_hypotheses=True
):
    """Simplicial levels A^(n+1) cotensor M for a right H-comodule algebra
    A and a left-action left-coaction module M."""
    hopf = module.hopf
    field = hopf.field
    require_version(module, "LL", "the comodule-algebra homology complex")
    if a_coaction.hopf is not hopf:
        raise ShapeMismatchError("carrier coaction lives over a different Hopf datum")
    if a_coaction.dim != algebra.dim:
        raise ShapeMismatchError("carrier coaction dimension differs from the algebra")
    if a_coaction.side != "right":
        raise ShapeMismatchError("the comodule algebra needs a right coaction")
    if check_hypotheses:
        _require_ok(check_module(module.action), "module")
        _require_ok(check_comodule(module.coaction), "comodule")
        _require_ok(check_comodule(a_coaction), "comodule algebra")
        _require_ok(
            check_compat("comodule_algebra", a_coaction, algebra), "comodule algebra"
        )
    dm, da, dh = module.dim, algebra.dim, hopf.dim
    enforce_caps([dm * da ** (n + 1) for n in range(n_max + 1)])

    lact_cols = _columns(module.action.mats)
    diag = _diag_coaction_factory(hopf, a_coaction)
    add, mul = field.add, field.mul

    indices = [TensorIndex([da] * (n + 1) + [dm]) for n in range(n_max + 1)]

    def cotensor_subspace(n):
        idx = indices[n]
        out_idx = TensorIndex([da] * (n + 1) + [dh, dm])

        def fn(key):
            av, m = key[:-1], key[-1]
            out = {}
            for (v2, h), c in diag(av).items():
                k = v2 + (h, m)
                cur = out.get(k)
                out[k] = c if cur is None else add(cur, c)
            for (h, m0), c in module.coaction.table[m].items():
                k = av + (h, m0)
                cur = out.get(k)
                neg = field.neg(c)
                out[k] = neg if cur is None else add(cur, neg)
            return out

        cond = Mat.from_basis_map(field, idx, out_idx, fn)
        return kernel(cond)

    charts = [SubspaceChart(cotensor_subspace(n)) for n in range(n_max + 1)]

    def mult_face(n, i):
        def fn(key):
            av, m = key[:-1], key[-1]
            return {
                av[:i] + (p,) + av[i + 2 :] + (m,): c
                for p, c in algebra.mult[av[i]][av[i + 1]].items()
            }

        return Mat.from_basis_map(field, indices[n], indices[n - 1], fn)

    def wrap_face(n):
        def fn(key):
            av, m = key[:-1], key[-1]
            out = {}
            for (ap, h), c in a_coaction.table[av[-1]].items():
                for p, d in algebra.mult[ap][av[0]].items():
                    cd = mul(c, d)
                    for m2, e in lact_cols[h][m].items():
                        tup = (p,) + av[1:-1] + (m2,)
                        cur = out.get(tup)
                        val = mul(cd, e)
                        out[tup] = val if cur is None else add(cur, val)
            return out

        return Mat.from_basis_map(field, indices[n], indices[n - 1], fn)

    def degen_map(n, i):
        def fn(key):
            av, m = key[:-1], key[-1]
            return {
                av[: i + 1] + (p,) + av[i + 1 :] + (m,): c
                for p, c in algebra.unit.items()
            }

        return Mat.from_basis_map(field, indices[n], indices[n + 1], fn)

    def cyclic_chain(n):
        def fn(key):
            av, m = key[:-1], key[-1]
            out = {}
            for (ap, h), c in a_coaction.table[av[-1]].items():
                for m2, e in lact_cols[h][m].items():
                    tup = (ap,) + av[:-1] + (m2,)
                    cur = out.get(tup)
                    val = mul(c, e)
                    out[tup] = val if cur is None else add(cur, val)
            return out

        return Mat.from_basis_map(field, indices[n], indices[n], fn)

    failures = []

    def restrict(amb, src, tgt, degree, opname):
        try:
            return restricted_map(amb, charts[src], charts[tgt], name=opname)
        except NotWellDefinedError as err:
            failures.append((degree, opname, err.to_dict()))
            return None

    faces, degens, tau = [[]], [], []
    for n in range(n_max + 1):
        if n >= 1:
            ops = [restrict(mult_face(n, i), n, n - 1, n, f"d_{i}") for i in range(n)]
            ops.append(restrict(wrap_face(n), n, n - 1, n, f"d_{n}"))
            faces.append(ops)
        if n < n_max:
            degens.append(
                [restrict(degen_map(n, i), n, n + 1, n, f"s_{i}") for i in range(n + 1)]
            )
        else:
            degens.append([])
        tau.append(restrict(cyclic_chain(n), n, n, n, "t"))

    if failures:
        raise OperatorEscapesSubspaceError(
            "operators do not preserve the cotensor subspace",
            failures=failures,
            ayd_check=check_sayd(module).to_dict(),
        )

    data = CyclicModuleData(
        field,
        SIMPLICIAL,
        [chart.dim for chart in charts],
        faces,
        degens,
        tau,
        name=f"comodule-algebra homology complex over {hopf.name}",
    )
    return ComplexResult(
        "comodule_algebra_homology", hopf, module, data, charts, indices, algebra
    )


# -- specializations --


def connes_moscovici_complex(hopf, delta, sigma, n_max, check_hypotheses=True):
    """Coalgebra complex of H acting on itself by left multiplication, with
    the one-dimensional coefficient module twisted by (delta, sigma)."""
    module = make_one_dim_module(hopf, delta, sigma, version="RL")
    return coalgebra_complex(
        module,
        hopf.coalgebra,
        left_multiplication_action(hopf),
        n_max,
        check_hypotheses=check_hypotheses,
    )


def usual_cyclic_complex(algebra, n_max, flavor="cohomology"):
    """Cyclic (co)homology of a plain algebra: the Hopf datum collapses to
    the ground field and the coefficient module to the field itself."""
    from .catalog import make_trivial_hopf

    field = algebra.field
    hopf = make_trivial_hopf(field)
    if flavor == "cohomology":
        module = make_trivial_module(hopf, "RL")
        act = ActionData(hopf, algebra.dim, "left", [Mat.identity(field, algebra.dim)])
        return module_algebra_complex(module, algebra, act, n_max)
    if flavor == "homology":
        module = make_trivial_module(hopf, "LL")
        coact = CoactionData(
            hopf,
            algebra.dim,
            "right",
            [{(a, 0): field.one} for a in range(algebra.dim)],
        )
        return comodule_algebra_homology_complex(module, algebra, coact, n_max)
    raise ShapeMismatchError(f"unknown flavor {flavor!r}")


def twisted_kz4_complex(n_max):
    """Coalgebra complex over the cyclic group of order four with the
    sign-and-shift twisted one-dimensional module: compatible but not
    stable, so the cyclic operator descends yet has infinite order."""
    from .catalog import kz4_twisted_module

    hopf, module = kz4_twisted_module("RL")
    return coalgebra_complex(
        module, hopf.coalgebra, left_multiplication_action(hopf), n_max
    )


def hopf_adjoint_complex(hopf, n_max):
    """Module-algebra complex of H acting on itself by the adjoint action,
    with the two-sided crossing coefficients."""
    module, _ = hopf_coefficients(hopf)
    return module_algebra_complex(module, hopf.algebra, adjoint_action(hopf), n_max)

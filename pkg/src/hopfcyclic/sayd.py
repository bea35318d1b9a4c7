"""Modules-with-coaction over a Hopf algebra and their compatibility laws.

A candidate bundles an action (left or right) and a coaction (left or
right) on the same space.  The four side combinations each carry their own
compatibility condition in two flavors, differing only in which of the
antipode or its inverse appears; ``check_yd_ayd`` implements the four
version formulas as separate code paths and reports the lexicographically
first failing basis pair.

Constructions: one-dimensional modules from a character and a grouplike,
tensor products of two compatible candidates, modules induced along an
algebra epimorphism, conjugation-style coefficients on the Hopf algebra
itself, and the torsor construction that recovers them.  Every constructor
re-verifies its advertised properties through the public checkers instead
of assuming them.
"""

from __future__ import annotations

import itertools

from .errors import (
    CoinvariantsTooLargeError,
    HypothesisFailedError,
    NotEpimorphismError,
    NotGaloisError,
    NoSolutionError,
    ShapeMismatchError,
    VersionMismatchError,
)
from .exactmath.linalg import (
    Mat,
    TensorIndex,
    image,
    invert,
    kernel,
    serialize_vec,
    vec_add,
    vec_scale,
)
from .report import CheckReport

LEFT = "left"
RIGHT = "right"


def _ser_pairs(field, d):
    return [[list(k), field.serialize(c)] for k, c in sorted(d.items())]


class ActionData:
    """Action of H on a finite-dimensional space, one matrix per H-basis
    element.  ``side`` records whether the matrices mean h.m or m.h."""

    def __init__(self, hopf, dim, side, mats):
        if side not in (LEFT, RIGHT):
            raise ShapeMismatchError("action side must be 'left' or 'right'")
        if len(mats) != hopf.dim:
            raise ShapeMismatchError("one action matrix per Hopf basis element")
        for m in mats:
            if m.nrows != dim or m.ncols != dim:
                raise ShapeMismatchError("action matrices must be dim x dim")
        self.hopf = hopf
        self.field = hopf.field
        self.dim = dim
        self.side = side
        self.mats = mats

    @classmethod
    def from_function(cls, hopf, dim, side, fn):
        """fn(h_index, m_index) -> sparse result vector."""
        field = hopf.field
        mats = []
        for t in range(hopf.dim):
            cols = [fn(t, s) for s in range(dim)]
            mats.append(Mat.from_columns(field, dim, cols))
        return cls(hopf, dim, side, mats)

    def act_basis(self, t, v):
        return self.mats[t].apply(v)

    def act(self, h_vec, v):
        field = self.field
        out = {}
        for t, c in h_vec.items():
            out = vec_add(field, out, vec_scale(field, c, self.mats[t].apply(v)))
        return out


class CoactionData:
    """Coaction on a finite-dimensional space.  For a left coaction the
    table sends a basis index to a sparse dict over (H-index, M-index);
    for a right coaction over (M-index, H-index)."""

    def __init__(self, hopf, dim, side, table):
        if side not in (LEFT, RIGHT):
            raise ShapeMismatchError("coaction side must be 'left' or 'right'")
        if len(table) != dim:
            raise ShapeMismatchError("one coaction row per module basis element")
        self.hopf = hopf
        self.field = hopf.field
        self.dim = dim
        self.side = side
        self.table = table

    @classmethod
    def from_function(cls, hopf, dim, side, fn):
        field = hopf.field
        table = []
        for s in range(dim):
            row = {k: c for k, c in fn(s).items() if not field.is_zero(c)}
            table.append(row)
        return cls(hopf, dim, side, table)

    def apply(self, v):
        field = self.field
        out = {}
        for s, c in v.items():
            for key, d in self.table[s].items():
                cur = out.get(key)
                val = field.mul(c, d)
                out[key] = val if cur is None else field.add(cur, val)
        return {k: c for k, c in out.items() if not field.is_zero(c)}


class SaydCandidate:
    def __init__(self, hopf, dim, labels, action, coaction, name="M"):
        if action.dim != dim or coaction.dim != dim:
            raise ShapeMismatchError("action/coaction dimension mismatch")
        if action.hopf is not hopf or coaction.hopf is not hopf:
            raise ShapeMismatchError("action/coaction over a different Hopf datum")
        self.hopf = hopf
        self.field = hopf.field
        self.dim = dim
        self.labels = list(labels) if labels else [f"m{i}" for i in range(dim)]
        self.action = action
        self.coaction = coaction
        self.name = name

    @property
    def version(self):
        return ("L" if self.action.side == LEFT else "R") + (
            "L" if self.coaction.side == LEFT else "R"
        )

    def __repr__(self):
        return (
            f"<SaydCandidate {self.name}: dim {self.dim}, version {self.version},"
            f" over {self.hopf.name}>"
        )


def require_version(candidate, version, where):
    if candidate.version != version:
        raise VersionMismatchError(
            f"{where} needs action-coaction version {version},"
            f" got {candidate.version}"
        )


# -- basic laws --


def check_module(action, labels=None, report=None):
    hopf = action.hopf
    field = action.field
    labels = labels or [f"m{i}" for i in range(action.dim)]
    rep = report or CheckReport("module")
    dim_h, dim_m = hopf.dim, action.dim

    ok = True
    for t1, t2, s in itertools.product(range(dim_h), range(dim_h), range(dim_m)):
        if not ok:
            break
        e_s = {s: field.one}
        via_product = action.act(hopf.algebra.mult[t1][t2], e_s)
        if action.side == LEFT:
            stepwise = action.act_basis(t1, action.act_basis(t2, e_s))
        else:
            stepwise = action.act_basis(t2, action.act_basis(t1, e_s))
        if via_product != stepwise:
            rep.add(
                "action multiplicative",
                False,
                witness={
                    "indices": [t1, t2, s],
                    "labels": [hopf.labels[t1], hopf.labels[t2], labels[s]],
                    "lhs": serialize_vec(field, stepwise),
                    "rhs": serialize_vec(field, via_product),
                },
            )
            ok = False
    if ok:
        rep.add("action multiplicative", True)

    ok = True
    for s in range(dim_m):
        e_s = {s: field.one}
        got = action.act(hopf.unit, e_s)
        if got != e_s:
            rep.add(
                "action unital",
                False,
                witness={
                    "indices": [s],
                    "labels": [labels[s]],
                    "lhs": serialize_vec(field, got),
                    "rhs": serialize_vec(field, e_s),
                },
            )
            ok = False
            break
    if ok:
        rep.add("action unital", True)
    return rep


def check_comodule(coaction, labels=None, report=None):
    hopf = coaction.hopf
    field = coaction.field
    labels = labels or [f"m{i}" for i in range(coaction.dim)]
    rep = report or CheckReport("comodule")

    ok = True
    for s in range(coaction.dim):
        lhs, rhs = {}, {}
        if coaction.side == LEFT:
            # (Delta (x) id) lambda vs (id (x) lambda) lambda, triples (i, j, u)
            for (p, u), c in coaction.table[s].items():
                for (i, j), d in hopf.coalgebra.comult[p].items():
                    key = (i, j, u)
                    cur = lhs.get(key)
                    val = field.mul(c, d)
                    lhs[key] = val if cur is None else field.add(cur, val)
                for (q, w), d in coaction.table[u].items():
                    key = (p, q, w)
                    cur = rhs.get(key)
                    val = field.mul(c, d)
                    rhs[key] = val if cur is None else field.add(cur, val)
        else:
            # (id (x) Delta) rho vs (rho (x) id) rho, triples (u, i, j)
            for (u, p), c in coaction.table[s].items():
                for (i, j), d in hopf.coalgebra.comult[p].items():
                    key = (u, i, j)
                    cur = lhs.get(key)
                    val = field.mul(c, d)
                    lhs[key] = val if cur is None else field.add(cur, val)
                for (w, q), d in coaction.table[u].items():
                    key = (w, q, p)
                    cur = rhs.get(key)
                    val = field.mul(c, d)
                    rhs[key] = val if cur is None else field.add(cur, val)
        lhs = {k: c for k, c in lhs.items() if not field.is_zero(c)}
        rhs = {k: c for k, c in rhs.items() if not field.is_zero(c)}
        if lhs != rhs:
            rep.add(
                "coaction coassociative",
                False,
                witness={
                    "indices": [s],
                    "labels": [labels[s]],
                    "lhs": _ser_pairs(field, lhs),
                    "rhs": _ser_pairs(field, rhs),
                },
            )
            ok = False
            break
    if ok:
        rep.add("coaction coassociative", True)

    ok = True
    for s in range(coaction.dim):
        got = {}
        for key, c in coaction.table[s].items():
            p, u = key if coaction.side == LEFT else (key[1], key[0])
            e = hopf.coalgebra.counit.get(p, field.zero)
            if not field.is_zero(e):
                cur = got.get(u)
                val = field.mul(e, c)
                got[u] = val if cur is None else field.add(cur, val)
        got = {u: c for u, c in got.items() if not field.is_zero(c)}
        if got != {s: field.one}:
            rep.add(
                "coaction counital",
                False,
                witness={
                    "indices": [s],
                    "labels": [labels[s]],
                    "lhs": serialize_vec(field, got),
                    "rhs": serialize_vec(field, {s: field.one}),
                },
            )
            ok = False
            break
    if ok:
        rep.add("coaction counital", True)
    return rep


# -- compatibility with extra structure on the module --


def check_module_algebra(action, m_algebra, report=None):
    """The action respects a product on M: acting on a product equals the
    coproduct-spread action on the factors, and the unit of M is scaled by
    the counit."""
    hopf = action.hopf
    field = action.field
    rep = report or CheckReport("module algebra")
    dim_h, dim_m = hopf.dim, action.dim

    ok = True
    for t, a, b in itertools.product(range(dim_h), range(dim_m), range(dim_m)):
        if not ok:
            break
        prod = m_algebra.mult[a][b]
        lhs = action.act_basis(t, prod)
        rhs = {}
        for (i, j), c in hopf.coalgebra.comult[t].items():
            pa = action.act_basis(i, {a: field.one})
            pb = action.act_basis(j, {b: field.one})
            rhs = vec_add(field, rhs, vec_scale(field, c, m_algebra.multiply(pa, pb)))
        if lhs != rhs:
            rep.add(
                "action distributes over product",
                False,
                witness={
                    "indices": [t, a, b],
                    "labels": [
                        hopf.labels[t],
                        m_algebra.labels[a],
                        m_algebra.labels[b],
                    ],
                    "lhs": serialize_vec(field, lhs),
                    "rhs": serialize_vec(field, rhs),
                },
            )
            ok = False
    if ok:
        rep.add("action distributes over product", True)

    ok = True
    for t in range(dim_h):
        lhs = action.act_basis(t, m_algebra.unit)
        eps = hopf.coalgebra.counit.get(t, field.zero)
        rhs = vec_scale(field, eps, m_algebra.unit)
        if lhs != rhs:
            rep.add(
                "action scales unit by counit",
                False,
                witness={
                    "indices": [t],
                    "labels": [hopf.labels[t]],
                    "lhs": serialize_vec(field, lhs),
                    "rhs": serialize_vec(field, rhs),
                },
            )
            ok = False
            break
    if ok:
        rep.add("action scales unit by counit", True)
    return rep


def check_module_coalgebra(action, m_coalgebra, report=None):
    """The action respects a coproduct on M: the coproduct of h.c spreads h
    through its own coproduct, and the counit of M intertwines."""
    hopf = action.hopf
    field = action.field
    rep = report or CheckReport("module coalgebra")
    dim_h, dim_m = hopf.dim, action.dim

    ok = True
    for t, s in itertools.product(range(dim_h), range(dim_m)):
        if not ok:
            break
        lhs = m_coalgebra.delta(action.act_basis(t, {s: field.one}))
        rhs = {}
        for (i, j), c in hopf.coalgebra.comult[t].items():
            for (a, b), d in m_coalgebra.comult[s].items():
                va = action.act_basis(i, {a: field.one})
                vb = action.act_basis(j, {b: field.one})
                cd = field.mul(c, d)
                for p, cp in va.items():
                    for q, cq in vb.items():
                        key = (p, q)
                        cur = rhs.get(key)
                        val = field.mul(cd, field.mul(cp, cq))
                        rhs[key] = val if cur is None else field.add(cur, val)
        rhs = {k: c for k, c in rhs.items() if not field.is_zero(c)}
        if lhs != rhs:
            rep.add(
                "coproduct of acted element",
                False,
                witness={
                    "indices": [t, s],
                    "labels": [hopf.labels[t], m_coalgebra.labels[s]],
                    "lhs": _ser_pairs(field, lhs),
                    "rhs": _ser_pairs(field, rhs),
                },
            )
            ok = False
    if ok:
        rep.add("coproduct of acted element", True)

    ok = True
    for t, s in itertools.product(range(dim_h), range(dim_m)):
        if not ok:
            break
        lhs = m_coalgebra.eps(action.act_basis(t, {s: field.one}))
        rhs = field.mul(
            hopf.coalgebra.counit.get(t, field.zero),
            m_coalgebra.counit.get(s, field.zero),
        )
        if not field.eq(lhs, rhs):
            rep.add(
                "counit of acted element",
                False,
                witness={
                    "indices": [t, s],
                    "labels": [hopf.labels[t], m_coalgebra.labels[s]],
                    "lhs": field.serialize(lhs),
                    "rhs": field.serialize(rhs),
                },
            )
            ok = False
    if ok:
        rep.add("counit of acted element", True)
    return rep


def check_comodule_algebra(coaction, m_algebra, report=None):
    """The coaction is an algebra map into H (x) M (resp. M (x) H)."""
    hopf = coaction.hopf
    field = coaction.field
    rep = report or CheckReport("comodule algebra")
    dim_m = coaction.dim

    def mixed_product(u, v):
        out = {}
        for k1, c1 in u.items():
            for k2, c2 in v.items():
                if coaction.side == LEFT:
                    hpart = hopf.algebra.mult[k1[0]][k2[0]]
                    mpart = m_algebra.mult[k1[1]][k2[1]]
                    pairs = ((h, m) for h in hpart for m in mpart)
                    coeffs = {
                        (h, m): field.mul(hpart[h], mpart[m])
                        for h in hpart
                        for m in mpart
                    }
                else:
                    hpart = hopf.algebra.mult[k1[1]][k2[1]]
                    mpart = m_algebra.mult[k1[0]][k2[0]]
                    coeffs = {
                        (m, h): field.mul(mpart[m], hpart[h])
                        for m in mpart
                        for h in hpart
                    }
                c12 = field.mul(c1, c2)
                for key, d in coeffs.items():
                    cur = out.get(key)
                    val = field.mul(c12, d)
                    out[key] = val if cur is None else field.add(cur, val)
        return {k: c for k, c in out.items() if not field.is_zero(c)}

    ok = True
    for a, b in itertools.product(range(dim_m), repeat=2):
        if not ok:
            break
        lhs = coaction.apply(m_algebra.mult[a][b])
        rhs = mixed_product(coaction.table[a], coaction.table[b])
        if lhs != rhs:
            rep.add(
                "coaction multiplicative",
                False,
                witness={
                    "indices": [a, b],
                    "labels": [m_algebra.labels[a], m_algebra.labels[b]],
                    "lhs": _ser_pairs(field, lhs),
                    "rhs": _ser_pairs(field, rhs),
                },
            )
            ok = False
    if ok:
        rep.add("coaction multiplicative", True)

    lhs = coaction.apply(m_algebra.unit)
    rhs = {}
    for i, c in hopf.unit.items():
        for u, d in m_algebra.unit.items():
            key = (i, u) if coaction.side == LEFT else (u, i)
            rhs[key] = field.mul(c, d)
    rhs = {k: c for k, c in rhs.items() if not field.is_zero(c)}
    rep.add(
        "coaction unital",
        lhs == rhs,
        witness=None
        if lhs == rhs
        else {"lhs": _ser_pairs(field, lhs), "rhs": _ser_pairs(field, rhs)},
    )
    return rep


def check_compat(kind, action_or_coaction, structure, report=None):
    if kind == "module_algebra":
        return check_module_algebra(action_or_coaction, structure, report)
    if kind == "module_coalgebra":
        return check_module_coalgebra(action_or_coaction, structure, report)
    if kind == "comodule_algebra":
        return check_comodule_algebra(action_or_coaction, structure, report)
    raise ShapeMismatchError(f"unknown compatibility kind {kind!r}")


# -- the four compatibility conditions --


def _condition_pair(candidate, flavor, t, s):
    """LHS and RHS of the version condition on the basis pair (e_t, e_s),
    both as sparse dicts in the coaction's leg order."""
    hopf = candidate.hopf
    field = candidate.field
    action, coaction = candidate.action, candidate.coaction
    version = candidate.version
    ayd = flavor == "ayd"
    S = hopf.antipode_vec
    Sinv = hopf.antipode_inv_vec
    one = field.one

    e_s = {s: one}
    lhs = coaction.apply(action.act_basis(t, e_s))
    trip = hopf.iterated_delta(2)[t]
    rhs = {}

    if version == "LL":
        twist = Sinv if ayd else S
        for (a, b, c), alpha in trip.items():
            tw = twist({c: one})
            for (p, u), beta in coaction.table[s].items():
                hpart = hopf.mul_vec({a: one}, hopf.mul_vec({p: one}, tw))
                mpart = action.act_basis(b, {u: one})
                coeff = field.mul(alpha, beta)
                for i, ci in hpart.items():
                    for w, cw in mpart.items():
                        key = (i, w)
                        cur = rhs.get(key)
                        val = field.mul(coeff, field.mul(ci, cw))
                        rhs[key] = val if cur is None else field.add(cur, val)
    elif version == "LR":
        twist = S if ayd else Sinv
        for (a, b, c), alpha in trip.items():
            tw = twist({a: one})
            for (u, p), beta in coaction.table[s].items():
                hpart = hopf.mul_vec({c: one}, hopf.mul_vec({p: one}, tw))
                mpart = action.act_basis(b, {u: one})
                coeff = field.mul(alpha, beta)
                for w, cw in mpart.items():
                    for i, ci in hpart.items():
                        key = (w, i)
                        cur = rhs.get(key)
                        val = field.mul(coeff, field.mul(cw, ci))
                        rhs[key] = val if cur is None else field.add(cur, val)
    elif version == "RL":
        twist = S if ayd else Sinv
        for (a, b, c), alpha in trip.items():
            tw = twist({c: one})
            for (p, u), beta in coaction.table[s].items():
                hpart = hopf.mul_vec(tw, hopf.mul_vec({p: one}, {a: one}))
                mpart = action.act_basis(b, {u: one})
                coeff = field.mul(alpha, beta)
                for i, ci in hpart.items():
                    for w, cw in mpart.items():
                        key = (i, w)
                        cur = rhs.get(key)
                        val = field.mul(coeff, field.mul(ci, cw))
                        rhs[key] = val if cur is None else field.add(cur, val)
    elif version == "RR":
        twist = Sinv if ayd else S
        for (a, b, c), alpha in trip.items():
            tw = twist({a: one})
            for (u, p), beta in coaction.table[s].items():
                hpart = hopf.mul_vec(tw, hopf.mul_vec({p: one}, {c: one}))
                mpart = action.act_basis(b, {u: one})
                coeff = field.mul(alpha, beta)
                for w, cw in mpart.items():
                    for i, ci in hpart.items():
                        key = (w, i)
                        cur = rhs.get(key)
                        val = field.mul(coeff, field.mul(cw, ci))
                        rhs[key] = val if cur is None else field.add(cur, val)
    else:  # pragma: no cover - version is always two letters
        raise ShapeMismatchError(f"unknown version {version}")

    rhs = {k: c for k, c in rhs.items() if not field.is_zero(c)}
    return lhs, rhs


_CONDITION_NAMES = {
    "ayd": "anti-Yetter-Drinfeld condition",
    "yd": "Yetter-Drinfeld condition",
}


def check_yd_ayd(candidate, flavor="ayd", report=None):
    """Verify module + comodule laws and the version condition of the
    requested flavor ('ayd' or 'yd')."""
    if flavor not in _CONDITION_NAMES:
        raise ShapeMismatchError(f"unknown flavor {flavor!r}")
    hopf = candidate.hopf
    field = candidate.field
    rep = report or CheckReport(f"{candidate.name} ({candidate.version})")
    check_module(candidate.action, candidate.labels, rep)
    check_comodule(candidate.coaction, candidate.labels, rep)

    ok = True
    for t, s in itertools.product(range(hopf.dim), range(candidate.dim)):
        if not ok:
            break
        lhs, rhs = _condition_pair(candidate, flavor, t, s)
        if lhs != rhs:
            rep.add(
                _CONDITION_NAMES[flavor],
                False,
                witness={
                    "indices": [t, s],
                    "labels": [hopf.labels[t], candidate.labels[s]],
                    "lhs": _ser_pairs(field, lhs),
                    "rhs": _ser_pairs(field, rhs),
                },
            )
            ok = False
    if ok:
        rep.add(_CONDITION_NAMES[flavor], True)
    return rep


def check_stable(candidate, report=None):
    """Feeding the coaction back through the action must be the identity."""
    field = candidate.field
    action, coaction = candidate.action, candidate.coaction
    rep = report or CheckReport(f"{candidate.name} stability")

    ok = True
    for s in range(candidate.dim):
        e_s = {s: field.one}
        got = {}
        for key, c in coaction.table[s].items():
            p, u = key if coaction.side == LEFT else (key[1], key[0])
            got = vec_add(
                field, got, vec_scale(field, c, action.act_basis(p, {u: field.one}))
            )
        if got != e_s:
            rep.add(
                "stability",
                False,
                witness={
                    "indices": [s],
                    "labels": [candidate.labels[s]],
                    "lhs": serialize_vec(field, got),
                    "rhs": serialize_vec(field, e_s),
                },
            )
            ok = False
            break
    if ok:
        rep.add("stability", True)
    return rep


def check_sayd(candidate, report=None):
    rep = report or CheckReport(f"{candidate.name} ({candidate.version}) SAYD")
    check_yd_ayd(candidate, "ayd", rep)
    check_stable(candidate, rep)
    return rep


# -- one-dimensional modules, modular pairs --


def make_one_dim_module(hopf, delta, sigma, version="RL", name=None):
    """One-dimensional space with the action through the character delta
    and the coaction through the element sigma."""
    field = hopf.field
    if version not in ("LL", "LR", "RL", "RR"):
        raise ShapeMismatchError(f"unknown version {version!r}")
    action_side = LEFT if version[0] == "L" else RIGHT
    coaction_side = LEFT if version[1] == "L" else RIGHT
    mats = [
        Mat.from_entries(field, 1, 1, [(0, 0, delta.get(t, field.zero))])
        for t in range(hopf.dim)
    ]
    action = ActionData(hopf, 1, action_side, mats)
    if coaction_side == LEFT:
        table = [{(i, 0): c for i, c in sigma.items()}]
    else:
        table = [{(0, i): c for i, c in sigma.items()}]
    coaction = CoactionData(hopf, 1, coaction_side, table)
    return SaydCandidate(
        hopf, 1, ["m"], action, coaction, name=name or f"k({version})"
    )


def counit_character(hopf):
    return dict(hopf.coalgebra.counit)


def make_trivial_module(hopf, version="RL"):
    return make_one_dim_module(
        hopf,
        counit_character(hopf),
        dict(hopf.unit),
        version=version,
        name=f"k_triv({version})",
    )


def check_mpi(hopf, delta, sigma):
    """Modular pair in involution: classical equations alongside the
    operational verdict on the associated one-dimensional module.  The two
    must agree; a disagreement is reported as its own failing item."""
    field = hopf.field
    rep = CheckReport("modular pair")

    from .hopfcore import _verify_character

    is_char = _verify_character(hopf.algebra, delta)
    rep.add("delta is a character", is_char)
    is_gl = hopf.is_grouplike(sigma)
    rep.add("sigma is grouplike", is_gl)

    # delta(sigma) = 1
    val = field.sum(
        field.mul(c, delta.get(i, field.zero)) for i, c in sigma.items()
    )
    pairing_ok = field.eq(val, field.one)
    rep.add(
        "delta of sigma is one",
        pairing_ok,
        witness=None if pairing_ok else {"value": field.serialize(val)},
    )

    # twisted antipode squares to conjugation by sigma
    d_delta = Mat.from_columns(
        field,
        hopf.dim,
        [
            {
                j: field.mul(delta.get(i, field.zero), c)
                for (i, j), c in hopf.coalgebra.comult[k].items()
                if not field.is_zero(delta.get(i, field.zero))
            }
            for k in range(hopf.dim)
        ],
    )
    s_delta = hopf.antipode.mul(d_delta)
    s_delta_sq = s_delta.mul(s_delta)
    sig_inv = hopf.antipode_vec(sigma)
    conj_cols = [
        hopf.mul_vec(sigma, hopf.mul_vec({k: field.one}, sig_inv))
        for k in range(hopf.dim)
    ]
    ad_sigma = Mat.from_columns(field, hopf.dim, conj_cols)
    invol_ok = s_delta_sq.eq(ad_sigma)
    witness = None
    if not invol_ok:
        for k in range(hopf.dim):
            got = s_delta_sq.apply({k: field.one})
            want = ad_sigma.apply({k: field.one})
            if got != want:
                witness = {
                    "indices": [k],
                    "labels": [hopf.labels[k]],
                    "lhs": serialize_vec(field, got),
                    "rhs": serialize_vec(field, want),
                }
                break
    rep.add("twisted antipode squares to conjugation", invol_ok, witness=witness)
    classical = is_char and is_gl and pairing_ok and invol_ok

    operational = False
    if is_char and is_gl:
        module = make_one_dim_module(hopf, delta, sigma, version="RL")
        mod_rep = check_sayd(module)
        operational = mod_rep.ok()
        rep.extend(mod_rep, prefix="module: ")
        rep.add(
            "classical and operational verdicts agree",
            classical == operational,
            detail=f"classical={classical}, operational={operational}",
        )
    return rep


# -- tensor products of candidates --


def tensor_yd_ayd(first, second, name=None):
    """Tensor product carrying the version-specific action and coaction.
    Both factors must live over the same Hopf datum in the same version."""
    if first.hopf is not second.hopf:
        raise ShapeMismatchError("tensor factors over different Hopf data")
    if first.version != second.version:
        raise VersionMismatchError(
            f"tensor factors in different versions"
            f" ({first.version} vs {second.version})"
        )
    hopf = first.hopf
    field = hopf.field
    version = first.version
    idx = TensorIndex([first.dim, second.dim])
    dim = idx.size
    labels = [
        f"{first.labels[a]}(x){second.labels[b]}"
        for a in range(first.dim)
        for b in range(second.dim)
    ]

    def act(t, flat_s):
        a, b = idx.unflat(flat_s)
        out = {}
        for (i, j), c in hopf.coalgebra.comult[t].items():
            if version == "LL":
                va = first.action.act_basis(i, {a: field.one})
                vb = second.action.act_basis(j, {b: field.one})
            elif version == "LR":
                va = first.action.act_basis(j, {a: field.one})
                vb = second.action.act_basis(i, {b: field.one})
            elif version == "RL":
                va = first.action.act_basis(j, {a: field.one})
                vb = second.action.act_basis(i, {b: field.one})
            else:  # RR
                va = first.action.act_basis(i, {a: field.one})
                vb = second.action.act_basis(j, {b: field.one})
            for p, cp in va.items():
                for q, cq in vb.items():
                    key = idx.flat((p, q))
                    cur = out.get(key)
                    val = field.mul(c, field.mul(cp, cq))
                    out[key] = val if cur is None else field.add(cur, val)
        return {k: c for k, c in out.items() if not field.is_zero(c)}

    action = ActionData.from_function(hopf, dim, first.action.side, act)

    def coact(flat_s):
        a, b = idx.unflat(flat_s)
        out = {}
        for ka, ca in first.coaction.table[a].items():
            for kb, cb in second.coaction.table[b].items():
                if version in ("LL", "RL"):
                    (pa, ua), (pb, ub) = ka, kb
                    hvec = hopf.mul_vec({pa: field.one}, {pb: field.one})
                    for i, ci in hvec.items():
                        key = (i, idx.flat((ua, ub)))
                        cur = out.get(key)
                        val = field.mul(field.mul(ca, cb), ci)
                        out[key] = val if cur is None else field.add(cur, val)
                else:
                    (ua, pa), (ub, pb) = ka, kb
                    hvec = hopf.mul_vec({pa: field.one}, {pb: field.one})
                    for i, ci in hvec.items():
                        key = (idx.flat((ua, ub)), i)
                        cur = out.get(key)
                        val = field.mul(field.mul(ca, cb), ci)
                        out[key] = val if cur is None else field.add(cur, val)
        return out

    coaction = CoactionData.from_function(hopf, dim, first.coaction.side, coact)
    return SaydCandidate(
        hopf,
        dim,
        labels,
        action,
        coaction,
        name=name or f"{first.name}(x){second.name}",
    )


# -- induced modules along an algebra epimorphism --


def induced_from_epimorphism(hopf, m_algebra, coaction, pi, name="induced"):
    """Left action through an algebra epimorphism pi: H -> M on a left
    comodule algebra M.  The hypotheses are verified before construction
    and the conclusion (compatibility + stability) is re-verified after."""
    field = hopf.field
    dim_m = m_algebra.dim
    if coaction.side != LEFT:
        raise VersionMismatchError("induced modules need a left coaction")
    if pi.nrows != dim_m or pi.ncols != hopf.dim:
        raise ShapeMismatchError("pi must map H to M")

    # pi is an algebra map
    for i, j in itertools.product(range(hopf.dim), repeat=2):
        lhs = pi.apply(hopf.algebra.mult[i][j])
        rhs = m_algebra.multiply(
            pi.apply({i: field.one}), pi.apply({j: field.one})
        )
        if lhs != rhs:
            raise NotEpimorphismError(
                "projection is not multiplicative",
                witness={
                    "indices": [i, j],
                    "labels": [hopf.labels[i], hopf.labels[j]],
                    "lhs": serialize_vec(field, lhs),
                    "rhs": serialize_vec(field, rhs),
                },
            )
    if pi.apply(hopf.unit) != m_algebra.unit:
        raise NotEpimorphismError(
            "projection does not preserve the unit",
            witness={"lhs": serialize_vec(field, pi.apply(hopf.unit))},
        )
    if image(pi).dim != dim_m:
        raise NotEpimorphismError(
            "projection is not surjective", rank=image(pi).dim, dim=dim_m
        )

    comodule_rep = check_comodule(coaction, m_algebra.labels)
    if not comodule_rep.ok():
        item = comodule_rep.first_failure()
        raise HypothesisFailedError(
            which="left comodule", item=item.name, witness=item.witness
        )
    comodule_alg_rep = check_comodule_algebra(coaction, m_algebra)
    if not comodule_alg_rep.ok():
        item = comodule_alg_rep.first_failure()
        raise HypothesisFailedError(
            which="comodule algebra", item=item.name, witness=item.witness
        )

    # unit coinvariance: multiplying the projected coaction legs of 1 gives 1
    got = {}
    for (p, u), c in coaction.apply(m_algebra.unit).items():
        got = vec_add(
            field,
            got,
            vec_scale(
                field,
                c,
                m_algebra.multiply(pi.apply({p: field.one}), {u: field.one}),
            ),
        )
    if got != m_algebra.unit:
        raise HypothesisFailedError(
            which="unit coinvariance", witness={"lhs": serialize_vec(field, got)}
        )

    def act(t, s):
        return m_algebra.multiply(pi.apply({t: field.one}), {s: field.one})

    action = ActionData.from_function(hopf, dim_m, LEFT, act)
    candidate = SaydCandidate(
        hopf, dim_m, m_algebra.labels, action, coaction, name=name
    )
    report = check_sayd(candidate)
    return candidate, report


# -- coefficients carried by the Hopf algebra itself --


def hopf_coefficients(hopf, name=None):
    """The underlying space of H with the two-sided twisted action
    m.h = S(h2) m h1 and the comultiplication as a left coaction."""
    field = hopf.field

    def act(t, s):
        out = {}
        for (i, j), c in hopf.coalgebra.comult[t].items():
            term = hopf.mul_vec(
                hopf.antipode_vec({j: field.one}),
                hopf.mul_vec({s: field.one}, {i: field.one}),
            )
            out = vec_add(field, out, vec_scale(field, c, term))
        return out

    action = ActionData.from_function(hopf, hopf.dim, RIGHT, act)
    table = [
        {(i, j): c for (i, j), c in hopf.coalgebra.comult[s].items()}
        for s in range(hopf.dim)
    ]
    coaction = CoactionData(hopf, hopf.dim, LEFT, table)
    candidate = SaydCandidate(
        hopf,
        hopf.dim,
        hopf.labels,
        action,
        coaction,
        name=name or f"{hopf.name}-coefficients",
    )
    report = check_sayd(candidate)
    return candidate, report


# -- torsor (Galois object) coefficients, scope P = H --


def galois_object_sayd(hopf, name=None):
    """Coefficients from the Hopf algebra seen as a torsor over itself: the
    translation map of the invertible canonical map yields a right action,
    the comultiplication the right coaction.  Only the one-dimensional
    coinvariant case is in scope."""
    field = hopf.field
    dim = hopf.dim
    one = field.one

    # coinvariants of the right coaction Delta: p with Delta p = p (x) 1
    idx2 = TensorIndex([dim, dim])

    def coinv_map(src):
        (p,) = src
        out = {}
        for (i, j), c in hopf.coalgebra.comult[p].items():
            key = idx2.flat((i, j))
            out[key] = field.add(out.get(key, field.zero), c)
        for u, cu in hopf.unit.items():
            key = idx2.flat((p, u))
            out[key] = field.sub(out.get(key, field.zero), cu)
        return out

    coinv_mat = Mat.from_basis_map(field, TensorIndex([dim]), idx2, coinv_map)
    coinv = kernel(coinv_mat)
    if coinv.dim != 1:
        raise CoinvariantsTooLargeError(
            f"coinvariant subspace has dimension {coinv.dim}, expected 1"
        )

    # canonical map P (x) P -> P (x) H, p (x) p' -> p p'(1) (x) p'(2)
    def can_map(src):
        p, q = src
        out = {}
        for (i, j), c in hopf.coalgebra.comult[q].items():
            prod = hopf.mul_vec({p: one}, {i: one})
            for w, cw in prod.items():
                key = idx2.flat((w, j))
                out[key] = field.add(out.get(key, field.zero), field.mul(c, cw))
        return out

    can = Mat.from_basis_map(field, idx2, idx2, can_map)
    try:
        can_inv = invert(can)
    except NoSolutionError:
        raise NotGaloisError("canonical map is singular") from None

    # translation map T(h) = can^{-1}(1 (x) h), used through S^{-1}
    translations = []
    for t in range(dim):
        rhs = {}
        for u, cu in hopf.unit.items():
            rhs[idx2.flat((u, t))] = cu
        translations.append(can_inv.apply(rhs))

    def act(t, s):
        out = {}
        hprime = hopf.antipode_inv_vec({t: one})
        for k, ck in hprime.items():
            for flat, gamma in translations[k].items():
                p1, p2 = idx2.unflat(flat)
                term = hopf.mul_vec(
                    {p2: one}, hopf.mul_vec({s: one}, {p1: one})
                )
                out = vec_add(
                    field, out, vec_scale(field, field.mul(ck, gamma), term)
                )
        return out

    action = ActionData.from_function(hopf, dim, RIGHT, act)
    table = [
        {(i, j): c for (i, j), c in hopf.coalgebra.comult[s].items()}
        for s in range(dim)
    ]
    coaction = CoactionData(hopf, dim, RIGHT, table)
    candidate = SaydCandidate(
        hopf, dim, hopf.labels, action, coaction, name=name or f"{hopf.name}-torsor"
    )
    report = check_sayd(candidate)
    return candidate, report


# -- standard actions of H on its own underlying space --


def adjoint_action(hopf):
    """Left action h.a = h1 a S(h2); makes H a module algebra over itself."""
    field = hopf.field

    def act(t, s):
        out = {}
        for (i, j), c in hopf.coalgebra.comult[t].items():
            term = hopf.mul_vec(
                {i: field.one},
                hopf.mul_vec({s: field.one}, hopf.antipode_vec({j: field.one})),
            )
            out = vec_add(field, out, vec_scale(field, c, term))
        return out

    return ActionData.from_function(hopf, hopf.dim, LEFT, act)


def left_multiplication_action(hopf):
    """Left action h.c = hc; makes H a module coalgebra over itself."""
    mats = [hopf.algebra.left_mult_matrix(t) for t in range(hopf.dim)]
    return ActionData(hopf, hopf.dim, LEFT, mats)

"""Finite-dimensional Hopf algebras presented by structure constants.

An algebra is (mult, unit) with mult[i][j] the sparse expansion of e_i e_j;
a coalgebra is (comult, counit) with comult[k] a sparse dict over index
pairs (i, j) giving Delta(e_k); a Hopf algebra bundles both with an exact
antipode matrix (its inverse is computed once and cached).

``check_structure`` verifies the axioms literally over the structure
constants and reports the lexicographically first violating basis tuple with
both sides serialized.  Nothing downstream trusts a Hopf datum that has not
passed these checks.
"""

from __future__ import annotations

import itertools

from .errors import AntipodeNotBijectiveError, NoSolutionError, ShapeMismatchError
from .exactmath.linalg import Mat, invert, serialize_vec, vec_add, vec_scale
from .report import CheckReport


class AlgebraData:
    def __init__(self, field, dim, labels, mult, unit):
        self.field = field
        self.dim = dim
        self.labels = list(labels) if labels else [f"e{i}" for i in range(dim)]
        if len(self.labels) != dim:
            raise ShapeMismatchError("label count != dim")
        if len(mult) != dim or any(len(row) != dim for row in mult):
            raise ShapeMismatchError("mult table must be dim x dim")
        self.mult = mult  # mult[i][j]: dict {k: coeff} = e_i e_j
        self.unit = dict(unit)  # sparse vector of 1
        self._left_mats = {}
        self._right_mats = {}

    def multiply(self, u, v):
        """Bilinear extension of the multiplication table."""
        field = self.field
        out = {}
        add, mul, is_zero = field.add, field.mul, field.is_zero
        for i, a in u.items():
            mi = self.mult[i]
            for j, b in v.items():
                ab = mul(a, b)
                for k, c in mi[j].items():
                    cur = out.get(k)
                    val = mul(ab, c)
                    out[k] = val if cur is None else add(cur, val)
        return {k: v2 for k, v2 in out.items() if not is_zero(v2)}

    def multiply_many(self, vecs):
        acc = self.unit
        for v in vecs:
            acc = self.multiply(acc, v)
        return acc

    def left_mult_matrix(self, i):
        """Matrix of v -> e_i v."""
        if i not in self._left_mats:
            cols = [dict(self.mult[i][j]) for j in range(self.dim)]
            self._left_mats[i] = Mat.from_columns(self.field, self.dim, cols)
        return self._left_mats[i]

    def right_mult_matrix(self, j):
        """Matrix of v -> v e_j."""
        if j not in self._right_mats:
            cols = [dict(self.mult[i][j]) for i in range(self.dim)]
            self._right_mats[j] = Mat.from_columns(self.field, self.dim, cols)
        return self._right_mats[j]

    def power(self, i, m):
        v = {i: self.field.one}
        out = dict(self.unit)
        for _ in range(m):
            out = self.multiply(out, v)
        return out

    def is_nilpotent_basis_element(self, i):
        v = {i: self.field.one}
        for _ in range(self.dim + 1):
            if not v:
                return True
            v = self.multiply(v, {i: self.field.one})
        return not v


class CoalgebraData:
    def __init__(self, field, dim, labels, comult, counit):
        self.field = field
        self.dim = dim
        self.labels = list(labels) if labels else [f"e{i}" for i in range(dim)]
        if len(comult) != dim:
            raise ShapeMismatchError("comult table must have dim entries")
        self.comult = comult  # comult[k]: dict {(i, j): coeff}
        self.counit = dict(counit)  # sparse functional values
        self._iterated = {}

    def delta(self, v):
        field = self.field
        out = {}
        add, mul, is_zero = field.add, field.mul, field.is_zero
        for k, c in v.items():
            for (i, j), d in self.comult[k].items():
                cur = out.get((i, j))
                val = mul(c, d)
                out[(i, j)] = val if cur is None else add(cur, val)
        return {key: v2 for key, v2 in out.items() if not is_zero(v2)}

    def eps(self, v):
        field = self.field
        out = field.zero
        for k, c in v.items():
            e = self.counit.get(k)
            if e is not None:
                out = field.add(out, field.mul(c, e))
        return out

    def iterated_delta(self, n):
        """Delta^(n): basis -> sparse dicts over (n+1)-tuples; Delta^(0)=id."""
        if n in self._iterated:
            return self._iterated[n]
        field = self.field
        if n == 0:
            table = [{(k,): field.one} for k in range(self.dim)]
        else:
            prev = self.iterated_delta(n - 1)
            add, mul, is_zero = field.add, field.mul, field.is_zero
            table = []
            for k in range(self.dim):
                out = {}
                for tup, c in prev[k].items():
                    for (a, b), d in self.comult[tup[0]].items():
                        key = (a, b) + tup[1:]
                        cur = out.get(key)
                        val = mul(c, d)
                        out[key] = val if cur is None else add(cur, val)
                table.append({key: v for key, v in out.items() if not is_zero(v)})
        self._iterated[n] = table
        return table


class HopfData:
    def __init__(self, field, dim, labels, algebra, coalgebra, antipode, name=""):
        self.field = field
        self.dim = dim
        self.labels = list(labels) if labels else [f"e{i}" for i in range(dim)]
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.antipode = antipode  # Mat, dim x dim
        self.name = name or "H"
        if antipode.nrows != dim or antipode.ncols != dim:
            raise ShapeMismatchError("antipode must be dim x dim")
        self._antipode_inv = None

    # -- convenience wrappers --

    @property
    def unit(self):
        return self.algebra.unit

    def mul_vec(self, u, v):
        return self.algebra.multiply(u, v)

    def delta_vec(self, v):
        return self.coalgebra.delta(v)

    def eps_vec(self, v):
        return self.coalgebra.eps(v)

    def antipode_vec(self, v):
        return self.antipode.apply(v)

    @property
    def antipode_inv(self):
        if self._antipode_inv is None:
            self._antipode_inv = invert_antipode(self)
        return self._antipode_inv

    def antipode_inv_vec(self, v):
        return self.antipode_inv.apply(v)

    def basis_vec(self, i):
        return {i: self.field.one}

    def iterated_delta(self, n):
        return self.coalgebra.iterated_delta(n)

    def is_grouplike(self, v):
        field = self.field
        dv = self.delta_vec(v)
        vv = {}
        for i, a in v.items():
            for j, b in v.items():
                vv[(i, j)] = field.mul(a, b)
        vv = {k: c for k, c in vv.items() if not field.is_zero(c)}
        return dv == vv and field.eq(self.eps_vec(v), field.one)

    def grouplike_inverse(self, sigma):
        """Inverse of a grouplike element: its antipode."""
        return self.antipode_vec(sigma)

    def __repr__(self):
        return f"<HopfData {self.name}: dim {self.dim} over {self.field.name}>"


def invert_antipode(hopf):
    try:
        return invert(hopf.antipode)
    except NoSolutionError:
        raise AntipodeNotBijectiveError(
            f"antipode of {hopf.name} is singular"
        ) from None


# -- structure checks --


def _tensor_square_multiply(algebra, u, v):
    """Product in H (x) H of sparse dicts keyed by index pairs."""
    field = algebra.field
    out = {}
    add, mul, is_zero = field.add, field.mul, field.is_zero
    for (i1, i2), a in u.items():
        for (j1, j2), b in v.items():
            ab = mul(a, b)
            left = algebra.mult[i1][j1]
            right = algebra.mult[i2][j2]
            for k1, c1 in left.items():
                for k2, c2 in right.items():
                    key = (k1, k2)
                    val = mul(ab, mul(c1, c2))
                    cur = out.get(key)
                    out[key] = val if cur is None else add(cur, val)
    return {k: c for k, c in out.items() if not is_zero(c)}


def _ser_pairs(field, v):
    return [[list(k), field.serialize(c)] for k, c in sorted(v.items())]


def _witness(labels, indices, field, lhs, rhs, pair_keys=False):
    ser = _ser_pairs if pair_keys else serialize_vec
    return {
        "indices": list(indices),
        "labels": [labels[i] for i in indices],
        "lhs": ser(field, lhs),
        "rhs": ser(field, rhs),
    }


def check_algebra(algebra, labels=None, report=None):
    field = algebra.field
    labels = labels or algebra.labels
    rep = report or CheckReport("algebra")
    dim = algebra.dim

    ok = True
    for i, j, k in itertools.product(range(dim), repeat=3):
        if not ok:
            break
        lhs = algebra.multiply(algebra.mult[i][j], {k: field.one})
        rhs = algebra.multiply({i: field.one}, algebra.mult[j][k])
        if lhs != rhs:
            rep.add(
                "associativity",
                False,
                witness=_witness(labels, (i, j, k), field, lhs, rhs),
            )
            ok = False
    if ok:
        rep.add("associativity", True)

    ok = True
    for i in range(dim):
        e = {i: field.one}
        left = algebra.multiply(algebra.unit, e)
        right = algebra.multiply(e, algebra.unit)
        if left != e or right != e:
            rep.add(
                "unit",
                False,
                witness=_witness(labels, (i,), field, left, right),
            )
            ok = False
            break
    if ok:
        rep.add("unit", True)
    return rep


def check_coalgebra(coalgebra, labels=None, report=None):
    field = coalgebra.field
    labels = labels or coalgebra.labels
    rep = report or CheckReport("coalgebra")
    dim = coalgebra.dim

    ok = True
    for k in range(dim):
        # (Delta (x) id) Delta vs (id (x) Delta) Delta on e_k
        lhs, rhs = {}, {}
        for (i, j), c in coalgebra.comult[k].items():
            for (a, b), d in coalgebra.comult[i].items():
                key = (a, b, j)
                cur = lhs.get(key)
                val = field.mul(c, d)
                lhs[key] = val if cur is None else field.add(cur, val)
            for (a, b), d in coalgebra.comult[j].items():
                key = (i, a, b)
                cur = rhs.get(key)
                val = field.mul(c, d)
                rhs[key] = val if cur is None else field.add(cur, val)
        lhs = {k2: v for k2, v in lhs.items() if not field.is_zero(v)}
        rhs = {k2: v for k2, v in rhs.items() if not field.is_zero(v)}
        if lhs != rhs:
            rep.add(
                "coassociativity",
                False,
                witness=_witness(labels, (k,), field, lhs, rhs, pair_keys=True),
            )
            ok = False
            break
    if ok:
        rep.add("coassociativity", True)

    ok = True
    for k in range(dim):
        left, right = {}, {}
        for (i, j), c in coalgebra.comult[k].items():
            e_i = coalgebra.counit.get(i, field.zero)
            e_j = coalgebra.counit.get(j, field.zero)
            if not field.is_zero(e_i):
                cur = left.get(j)
                val = field.mul(e_i, c)
                left[j] = val if cur is None else field.add(cur, val)
            if not field.is_zero(e_j):
                cur = right.get(i)
                val = field.mul(c, e_j)
                right[i] = val if cur is None else field.add(cur, val)
        left = {a: v for a, v in left.items() if not field.is_zero(v)}
        right = {a: v for a, v in right.items() if not field.is_zero(v)}
        want = {k: field.one}
        if left != want or right != want:
            rep.add(
                "counit",
                False,
                witness=_witness(labels, (k,), field, left, right),
            )
            ok = False
            break
    if ok:
        rep.add("counit", True)
    return rep


def check_bialgebra(hopf, report=None):
    field = hopf.field
    rep = report or CheckReport("bialgebra")
    check_algebra(hopf.algebra, hopf.labels, rep)
    check_coalgebra(hopf.coalgebra, hopf.labels, rep)
    dim = hopf.dim
    alg, coalg = hopf.algebra, hopf.coalgebra

    ok = True
    for i, j in itertools.product(range(dim), repeat=2):
        if not ok:
            break
        lhs = coalg.delta(alg.mult[i][j])
        rhs = _tensor_square_multiply(alg, coalg.comult[i], coalg.comult[j])
        if lhs != rhs:
            rep.add(
                "comultiplication multiplicative",
                False,
                witness=_witness(hopf.labels, (i, j), field, lhs, rhs, pair_keys=True),
            )
            ok = False
    if ok:
        rep.add("comultiplication multiplicative", True)

    ok = True
    for i, j in itertools.product(range(dim), repeat=2):
        if not ok:
            break
        lhs = coalg.eps(alg.mult[i][j])
        rhs = field.mul(
            coalg.counit.get(i, field.zero), coalg.counit.get(j, field.zero)
        )
        if not field.eq(lhs, rhs):
            rep.add(
                "counit multiplicative",
                False,
                witness={
                    "indices": [i, j],
                    "labels": [hopf.labels[i], hopf.labels[j]],
                    "lhs": field.serialize(lhs),
                    "rhs": field.serialize(rhs),
                },
            )
            ok = False
    if ok:
        rep.add("counit multiplicative", True)

    unit_delta = coalg.delta(alg.unit)
    expected = {}
    for i, a in alg.unit.items():
        for j, b in alg.unit.items():
            expected[(i, j)] = field.mul(a, b)
    expected = {k: c for k, c in expected.items() if not field.is_zero(c)}
    rep.add(
        "unit comultiplicative",
        unit_delta == expected,
        witness=None
        if unit_delta == expected
        else {
            "lhs": _ser_pairs(field, unit_delta),
            "rhs": _ser_pairs(field, expected),
        },
    )
    rep.add("counit of unit", field.eq(coalg.eps(alg.unit), field.one))
    return rep


def check_hopf(hopf, report=None):
    field = hopf.field
    rep = report or CheckReport(f"hopf {hopf.name}")
    check_bialgebra(hopf, rep)
    alg, coalg = hopf.algebra, hopf.coalgebra

    ok = True
    for k in range(hopf.dim):
        # sum S(k1) k2 = eps(k) 1 = sum k1 S(k2)
        left, right = {}, {}
        for (i, j), c in coalg.comult[k].items():
            si = hopf.antipode.apply({i: c})
            left = vec_add(field, left, alg.multiply(si, {j: field.one}))
            sj = hopf.antipode.apply({j: c})
            right = vec_add(field, right, alg.multiply({i: field.one}, sj))
        want = vec_scale(field, coalg.counit.get(k, field.zero), alg.unit)
        if left != want or right != want:
            rep.add(
                "antipode",
                False,
                witness=_witness(hopf.labels, (k,), field, left, right),
            )
            ok = False
            break
    if ok:
        rep.add("antipode", True)

    try:
        sinv = hopf.antipode_inv
        both = sinv.mul(hopf.antipode).eq(Mat.identity(field, hopf.dim)) and hopf.antipode.mul(
            sinv
        ).eq(Mat.identity(field, hopf.dim))
        rep.add("antipode bijective", both)
    except AntipodeNotBijectiveError:
        rep.add("antipode bijective", False)
    return rep


def check_structure(data, kind):
    if kind == "algebra":
        target = data.algebra if isinstance(data, HopfData) else data
        return check_algebra(target)
    if kind == "coalgebra":
        target = data.coalgebra if isinstance(data, HopfData) else data
        return check_coalgebra(target)
    if kind == "bialgebra":
        return check_bialgebra(data)
    if kind == "hopf":
        return check_hopf(data)
    raise ShapeMismatchError(f"unknown structure kind {kind!r}")


# -- variants and duality --


def variant(hopf, which):
    """Opposite / co-opposite / both; antipode flips to its inverse for the
    single twists and stays for the double twist."""
    field = hopf.field
    dim = hopf.dim
    alg, coalg = hopf.algebra, hopf.coalgebra
    if which == "op":
        mult = [[dict(alg.mult[j][i]) for j in range(dim)] for i in range(dim)]
        comult = [dict(coalg.comult[k]) for k in range(dim)]
        antipode = hopf.antipode_inv
    elif which == "cop":
        mult = [[dict(alg.mult[i][j]) for j in range(dim)] for i in range(dim)]
        comult = [
            {(j, i): c for (i, j), c in coalg.comult[k].items()} for k in range(dim)
        ]
        antipode = hopf.antipode_inv
    elif which == "opcop":
        mult = [[dict(alg.mult[j][i]) for j in range(dim)] for i in range(dim)]
        comult = [
            {(j, i): c for (i, j), c in coalg.comult[k].items()} for k in range(dim)
        ]
        antipode = hopf.antipode
    else:
        raise ShapeMismatchError(f"unknown variant {which!r}")
    return HopfData(
        field,
        dim,
        hopf.labels,
        AlgebraData(field, dim, hopf.labels, mult, alg.unit),
        CoalgebraData(field, dim, hopf.labels, comult, coalg.counit),
        antipode,
        name=f"{hopf.name}^{which}",
    )


def dual_hopf(hopf):
    """Dual Hopf algebra on the dual basis: multiplication transposes the
    comultiplication, comultiplication transposes the multiplication, the
    antipode transposes."""
    field = hopf.field
    dim = hopf.dim
    alg, coalg = hopf.algebra, hopf.coalgebra
    labels = [f"{l}*" for l in hopf.labels]
    mult = [[{} for _ in range(dim)] for _ in range(dim)]
    for k in range(dim):
        for (i, j), c in coalg.comult[k].items():
            cur = mult[i][j].get(k)
            mult[i][j][k] = c if cur is None else field.add(cur, c)
    unit = dict(coalg.counit)
    comult = [{} for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            for k, c in alg.mult[i][j].items():
                cur = comult[k].get((i, j))
                comult[k][(i, j)] = c if cur is None else field.add(cur, c)
    counit = dict(alg.unit)
    return HopfData(
        field,
        dim,
        labels,
        AlgebraData(field, dim, labels, mult, unit),
        CoalgebraData(field, dim, labels, comult, counit),
        hopf.antipode.T,
        name=f"{hopf.name}*",
    )


# -- grouplikes and characters --


class EnumerationResult:
    def __init__(self, items, complete):
        self.items = items
        self.complete = complete

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def __repr__(self):
        note = "complete" if self.complete else "ENUMERATION_INCOMPLETE"
        return f"<EnumerationResult {len(self.items)} items, {note}>"


def _detect_group_form(algebra):
    """If every product of basis elements is a single basis element with
    coefficient one and the table is a group, return (table, identity,
    inverse table); else None."""
    field = algebra.field
    dim = algebra.dim
    table = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            cell = algebra.mult[i][j]
            if len(cell) != 1:
                return None
            ((k, c),) = cell.items()
            if not field.eq(c, field.one):
                return None
            table[i][j] = k
    if len(algebra.unit) != 1:
        return None
    ((e, c),) = algebra.unit.items()
    if not field.eq(c, field.one):
        return None
    inv = [None] * dim
    for i in range(dim):
        for j in range(dim):
            if table[i][j] == e and table[j][i] == e:
                inv[i] = j
        if inv[i] is None:
            return None
    return table, e, inv


def _subgroup_closure(table, e, gens):
    members = {e}
    frontier = set(gens)
    members |= frontier
    while frontier:
        new = set()
        for a in frontier:
            for b in members:
                for x in (table[a][b], table[b][a]):
                    if x not in members:
                        new.add(x)
        members |= new
        frontier = new
    return members


def _group_characters(field, table, e, inv):
    """All homomorphisms G -> k^x, via the abelianization and the finite
    group of roots of unity in the field."""
    n = len(table)
    comms = {
        table[table[a][b]][table[inv[a]][inv[b]]]
        for a in range(n)
        for b in range(n)
    }
    derived = _subgroup_closure(table, e, comms)
    # cosets of the derived subgroup
    coset_of = {}
    reps = []
    for g in range(n):
        if g in coset_of:
            continue
        members = sorted(table[g][d] for d in derived)
        rep = members[0]
        for m in members:
            coset_of[m] = rep
        reps.append(rep)
    reps = sorted(set(coset_of.values()))
    rep_idx = {r: i for i, r in enumerate(reps)}
    qmul = [
        [rep_idx[coset_of[table[a][b]]] for b in reps] for a in reps
    ]
    qe = rep_idx[coset_of[e]]
    qn = len(reps)

    # greedy generating set of the abelian quotient
    gens = []
    generated = {qe}
    for g in range(qn):
        if g not in generated:
            gens.append(g)
            generated = _subgroup_closure(qmul, qe, set(gens))
        if len(generated) == qn:
            break

    def order(g):
        k, cur = 1, g
        while cur != qe:
            cur = qmul[cur][g]
            k += 1
        return k

    roots = field.roots_of_unity()

    def roots_of_order_dividing(d):
        out = []
        for u in roots:
            acc = field.one
            for _ in range(d):
                acc = field.mul(acc, u)
            if field.eq(acc, field.one):
                out.append(u)
        return out

    choices = [roots_of_order_dividing(order(g)) for g in gens]
    chars = []
    for assignment in itertools.product(*choices):
        # propagate values over the quotient by BFS on generator multiplication
        val = {qe: field.one}
        frontier = [qe]
        while frontier:
            nxt = []
            for a in frontier:
                for g, u in zip(gens, assignment):
                    b = qmul[a][g]
                    if b not in val:
                        val[b] = field.mul(val[a], u)
                        nxt.append(b)
            frontier = nxt
        if len(val) != qn:
            continue
        if any(
            not field.eq(field.mul(val[a], val[b]), val[qmul[a][b]])
            for a in range(qn)
            for b in range(qn)
        ):
            continue
        chars.append({g: val[rep_idx[coset_of[g]]] for g in range(n)})
    # dedupe and order deterministically
    uniq = {}
    for ch in chars:
        key = str([field.serialize(ch[g]) for g in range(n)])
        uniq.setdefault(key, ch)
    return [uniq[k] for k in sorted(uniq, key=str)]


def _detect_orthogonal_idempotents(algebra, basis):
    field = algebra.field
    lam = {}
    for i in basis:
        for j in basis:
            cell = algebra.mult[i][j]
            if i != j:
                if cell:
                    return None
            else:
                if len(cell) != 1 or i not in cell:
                    return None
                lam[i] = cell[i]
                if field.is_zero(lam[i]):
                    return None
    return lam


def _verify_character(algebra, chi):
    """chi: dict basis index -> value (zero values may be omitted)."""
    field = algebra.field

    def val(i):
        return chi.get(i, field.zero)

    one_val = field.sum(
        field.mul(c, val(i)) for i, c in algebra.unit.items()
    )
    if not field.eq(one_val, field.one):
        return False
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            want = field.mul(val(i), val(j))
            got = field.sum(
                field.mul(c, val(k)) for k, c in algebra.mult[i][j].items()
            )
            if not field.eq(got, want):
                return False
    return True


def enumerate_characters(algebra, extra_candidates=()):
    """Algebra characters (1-dim representations) with a completeness flag.

    Complete for three recognized shapes: basis-permutation group algebras,
    orthogonal idempotent bases, and group/idempotent bases extended by
    nilpotent basis elements (characters kill nilpotents).  Otherwise falls
    back to scaled-basis candidates plus caller-supplied ones, flagged
    incomplete.
    """
    if isinstance(algebra, HopfData):
        algebra = algebra.algebra
    field = algebra.field
    found = []
    complete = False

    group = _detect_group_form(algebra)
    if group is not None:
        table, e, inv = group
        found = _group_characters(field, table, e, inv)
        complete = True
    else:
        nilpotent = [i for i in range(algebra.dim) if algebra.is_nilpotent_basis_element(i)]
        residual = [i for i in range(algebra.dim) if i not in nilpotent]
        closed = all(
            set(algebra.mult[i][j]) <= set(residual)
            for i in residual
            for j in residual
        ) and set(algebra.unit) <= set(residual)
        if closed and residual:
            # restricted subalgebra on the residual basis
            pos = {b: t for t, b in enumerate(residual)}
            sub_mult = [
                [
                    {pos[k]: c for k, c in algebra.mult[i][j].items()}
                    for j in residual
                ]
                for i in residual
            ]
            sub_unit = {pos[k]: c for k, c in algebra.unit.items()}
            sub = AlgebraData(
                field,
                len(residual),
                [algebra.labels[i] for i in residual],
                sub_mult,
                sub_unit,
            )
            subgroup = _detect_group_form(sub)
            if subgroup is not None:
                table, e, inv = subgroup
                sub_chars = _group_characters(field, table, e, inv)
                found = [
                    {residual[t]: v for t, v in ch.items()} for ch in sub_chars
                ]
                complete = True
            else:
                lam = _detect_orthogonal_idempotents(sub, range(len(residual)))
                if lam is not None:
                    found = [
                        {residual[t]: field.inv(lam[t])} for t in range(len(residual))
                    ]
                    complete = True

    if not complete:
        # scaled dual-basis candidates
        for i in range(algebra.dim):
            if set(algebra.unit) == {i}:
                found.append({i: field.inv(algebra.unit[i])})

    if complete and any(not _verify_character(algebra, chi) for chi in found):
        # a recognized-shape candidate failing verification means the shape
        # detection overpromised; degrade honestly
        complete = False
    candidates = list(found) + [dict(c) for c in extra_candidates]
    verified = [chi for chi in candidates if _verify_character(algebra, chi)]
    uniq = {}
    for chi in verified:
        key = str(
            [field.serialize(chi.get(i, field.zero)) for i in range(algebra.dim)]
        )
        uniq.setdefault(key, chi)
    items = [uniq[k] for k in sorted(uniq, key=str)]
    return EnumerationResult(items, complete)


def enumerate_grouplikes(hopf, extra_candidates=()):
    """Grouplike elements of H = algebra characters of the dual algebra,
    mapped back to elements and re-verified coordinate-wise."""
    dual = dual_hopf(hopf)
    chars = enumerate_characters(dual.algebra, extra_candidates=extra_candidates)
    items = []
    for chi in chars.items:
        sigma = {i: v for i, v in chi.items() if not hopf.field.is_zero(v)}
        if hopf.is_grouplike(sigma):
            items.append(sigma)
    complete = chars.complete and len(items) == len(chars.items)
    return EnumerationResult(items, complete)

"""Sparse exact linear algebra over the scalar layer.

Everything is a linear map between based finite-dimensional spaces.  A ``Mat``
maps column vectors: column j is the image of the j-th basis vector of the
source.  Vectors are sparse dicts {index: nonzero value}.  Storage is
row-major dicts; a transpose is cached when column access is needed.

Subspaces are canonically represented by reduced-row-echelon bases with
strictly increasing pivot columns, so equality of subspaces is equality of
their RREF rows, and every derived object (kernel bases, quotient sections,
witnesses) is deterministic.

Quotients use the pivot-column-complement section: the killed subspace's
RREF pivots mark dependent coordinates, the complementary free columns index
the quotient basis, and projection is "fully reduce, then read free
coordinates".  ``induced_map`` refuses (with a witness) whenever a map fails
to send the source's killed subspace into the target's.
"""

from __future__ import annotations

import heapq
import itertools

from ..errors import (
    NoSolutionError,
    NotWellDefinedError,
    ShapeMismatchError,
)


def vec_add(field, u, v):
    out = dict(u)
    add, is_zero = field.add, field.is_zero
    for k, val in v.items():
        cur = out.get(k)
        nv = add(cur, val) if cur is not None else val
        if is_zero(nv):
            out.pop(k, None)
        else:
            out[k] = nv
    return out


def vec_sub(field, u, v):
    return vec_add(field, u, vec_scale(field, field.neg(field.one), v))


def vec_scale(field, c, v):
    if field.is_zero(c):
        return {}
    mul = field.mul
    return {k: mul(c, val) for k, val in v.items()}


def vec_clean(field, v):
    return {k: val for k, val in v.items() if not field.is_zero(val)}


def vec_eq(field, u, v):
    return vec_clean(field, vec_sub(field, u, v)) == {}


def serialize_vec(field, v):
    return [[int(k), field.serialize(val)] for k, val in sorted(v.items())]


class TensorIndex:
    """Row-major flattening of multi-indices: the last factor varies fastest."""

    def __init__(self, dims):
        self.dims = tuple(dims)
        self.size = 1
        for d in self.dims:
            self.size *= d
        strides = []
        acc = 1
        for d in reversed(self.dims):
            strides.append(acc)
            acc *= d
        self.strides = tuple(reversed(strides))

    def flat(self, tup):
        return sum(i * s for i, s in zip(tup, self.strides))

    def unflat(self, idx):
        out = []
        for s in self.strides:
            out.append(idx // s)
            idx %= s
        return tuple(out)

    def __iter__(self):
        return itertools.product(*(range(d) for d in self.dims))


class Mat:
    """Sparse exact matrix; immutable by convention after construction."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_transpose")

    def __init__(self, field, nrows, ncols, rows=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [{} for _ in range(nrows)]
        self._transpose = None

    # -- constructors --

    @classmethod
    def zero(cls, field, nrows, ncols):
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, [{i: field.one} for i in range(n)])

    @classmethod
    def from_entries(cls, field, nrows, ncols, entries):
        """entries: iterable of (row, col, value); repeats accumulate."""
        rows = [{} for _ in range(nrows)]
        add, is_zero = field.add, field.is_zero
        for i, j, v in entries:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise ShapeMismatchError(f"entry ({i},{j}) outside {nrows}x{ncols}")
            cur = rows[i].get(j)
            nv = add(cur, v) if cur is not None else v
            if is_zero(nv):
                rows[i].pop(j, None)
            else:
                rows[i][j] = nv
        return cls(field, nrows, ncols, rows)

    @classmethod
    def from_dense(cls, field, grid):
        nrows = len(grid)
        ncols = len(grid[0]) if nrows else 0
        rows = []
        for r in grid:
            if len(r) != ncols:
                raise ShapeMismatchError("ragged dense matrix")
            rows.append({j: v for j, v in enumerate(r) if not field.is_zero(v)})
        return cls(field, nrows, ncols, rows)

    @classmethod
    def from_columns(cls, field, nrows, cols):
        """cols: list of sparse dicts, column j = image of e_j."""
        rows = [{} for _ in range(nrows)]
        for j, col in enumerate(cols):
            for i, v in col.items():
                if not (0 <= i < nrows):
                    raise ShapeMismatchError(f"row index {i} outside height {nrows}")
                rows[i][j] = v
        return cls(field, nrows, len(cols), rows)

    @classmethod
    def from_basis_map(cls, field, src_index, tgt_index, fn):
        """Build the matrix of a map given on basis multi-indices.

        fn(src_tuple) returns a sparse dict {tgt_tuple_or_flat: value}.
        """
        cols = []
        for tup in src_index:
            img = fn(tup)
            col = {}
            for key, v in img.items():
                flatk = tgt_index.flat(key) if isinstance(key, tuple) else key
                cur = col.get(flatk)
                nv = field.add(cur, v) if cur is not None else v
                if field.is_zero(nv):
                    col.pop(flatk, None)
                else:
                    col[flatk] = nv
            cols.append(col)
        return cls.from_columns(field, tgt_index.size, cols)

    # -- basics --

    def entry(self, i, j):
        return self.rows[i].get(j, self.field.zero)

    def to_dense(self):
        z = self.field.zero
        return [
            [self.rows[i].get(j, z) for j in range(self.ncols)]
            for i in range(self.nrows)
        ]

    def nnz(self):
        return sum(len(r) for r in self.rows)

    @property
    def T(self):
        if self._transpose is None:
            rows = [{} for _ in range(self.ncols)]
            for i, row in enumerate(self.rows):
                for j, v in row.items():
                    rows[j][i] = v
            t = Mat(self.field, self.ncols, self.nrows, rows)
            t._transpose = self
            self._transpose = t
        return self._transpose

    def _require_same_field(self, other):
        from ..errors import FieldMismatchError

        if self.field != other.field:
            raise FieldMismatchError("matrices over different fields")

    def add(self, other):
        self._require_same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatchError("matrix add shape mismatch")
        rows = [vec_add(self.field, a, b) for a, b in zip(self.rows, other.rows)]
        return Mat(self.field, self.nrows, self.ncols, rows)

    def sub(self, other):
        return self.add(other.scale(self.field.neg(self.field.one)))

    def scale(self, c):
        if self.field.is_zero(c):
            return Mat.zero(self.field, self.nrows, self.ncols)
        mul = self.field.mul
        rows = [{j: mul(c, v) for j, v in row.items()} for row in self.rows]
        return Mat(self.field, self.nrows, self.ncols, rows)

    def mul(self, other):
        """Matrix product self @ other (composition: self after other)."""
        self._require_same_field(other)
        if self.ncols != other.nrows:
            raise ShapeMismatchError(
                f"cannot compose {self.nrows}x{self.ncols} with {other.nrows}x{other.ncols}"
            )
        field = self.field
        add, mul, is_zero = field.add, field.mul, field.is_zero
        orows = other.rows
        rows = []
        for row in self.rows:
            out = {}
            for j, a in row.items():
                for k, b in orows[j].items():
                    cur = out.get(k)
                    nv = mul(a, b) if cur is None else add(cur, mul(a, b))
                    out[k] = nv
            rows.append({k: v for k, v in out.items() if not is_zero(v)})
        return Mat(field, self.nrows, other.ncols, rows)

    def apply(self, vec):
        """Image of a sparse column vector."""
        field = self.field
        cols = self.T.rows
        out = {}
        add, mul, is_zero = field.add, field.mul, field.is_zero
        for j, c in vec.items():
            for i, a in cols[j].items():
                cur = out.get(i)
                nv = mul(a, c) if cur is None else add(cur, mul(a, c))
                out[i] = nv
        return {i: v for i, v in out.items() if not is_zero(v)}

    def stack_below(self, other):
        self._require_same_field(other)
        if self.ncols != other.ncols:
            raise ShapeMismatchError("vertical stack needs equal widths")
        rows = [dict(r) for r in self.rows] + [dict(r) for r in other.rows]
        return Mat(self.field, self.nrows + other.nrows, self.ncols, rows)

    def kron(self, other):
        """Kronecker product; index (i1,i2) flattens to i1*other.nrows+i2."""
        self._require_same_field(other)
        field = self.field
        mul = field.mul
        rows = [{} for _ in range(self.nrows * other.nrows)]
        for i1, r1 in enumerate(self.rows):
            for i2, r2 in enumerate(other.rows):
                tgt = rows[i1 * other.nrows + i2]
                for j1, a in r1.items():
                    for j2, b in r2.items():
                        tgt[j1 * other.ncols + j2] = mul(a, b)
        return Mat(field, self.nrows * other.nrows, self.ncols * other.ncols, rows)

    def eq(self, other):
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def is_zero(self):
        return all(not r for r in self.rows)

    def __repr__(self):
        return f"<Mat {self.nrows}x{self.ncols} over {self.field.name}, nnz={self.nnz()}>"


class RowBasis:
    """Incremental echelon structure for sparse rows.

    Rows are stored keyed by pivot column, normalized so the pivot entry is
    one and the pivot is the row's minimal support column.  Insertion fully
    forward-reduces; back-elimination happens once in ``rref_rows``.
    """

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.pivots = {}
        self._rref = None

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vec):
        """Fully forward-reduce a sparse vector; the residue has no support
        on pivot columns."""
        field = self.field
        sub_ = field.sub
        mul = field.mul
        is_zero = field.is_zero
        pivots = self.pivots
        vec = dict(vec)
        heap = [c for c in vec]
        heapq.heapify(heap)
        while heap:
            j = heapq.heappop(heap)
            c = vec.get(j)
            if c is None or is_zero(c):
                vec.pop(j, None)
                continue
            row = pivots.get(j)
            if row is None:
                continue
            del vec[j]
            for col, val in row.items():
                if col == j:
                    continue
                cur = vec.get(col)
                if cur is None:
                    nv = field.neg(mul(c, val))
                    if not is_zero(nv):
                        vec[col] = nv
                        heapq.heappush(heap, col)
                else:
                    nv = sub_(cur, mul(c, val))
                    if is_zero(nv):
                        del vec[col]
                    else:
                        vec[col] = nv
        return vec

    def insert(self, vec):
        """Add a vector to the span; returns the new pivot column or None if
        the vector was already in the span."""
        res = self.reduce(vec)
        if not res:
            return None
        pivot = min(res)
        inv_lead = self.field.inv(res[pivot])
        mul = self.field.mul
        row = {c: mul(inv_lead, v) for c, v in res.items()}
        row[pivot] = self.field.one
        self.pivots[pivot] = row
        self._rref = None
        return pivot

    def contains(self, vec):
        return not self.reduce(vec)

    def rref_rows(self):
        """Back-eliminated rows as [(pivot, row)] sorted by pivot."""
        if self._rref is None:
            field = self.field
            sub_, mul, is_zero = field.sub, field.mul, field.is_zero
            done = {}
            for p in sorted(self.pivots, reverse=True):
                row = self.pivots[p]
                out = dict(row)
                for q in [c for c in row if c != p and c in self.pivots]:
                    c = out.pop(q, None)
                    if c is None:
                        continue
                    for col, val in done[q].items():
                        if col == q:
                            continue
                        cur = out.get(col)
                        nv = sub_(cur, mul(c, val)) if cur is not None else field.neg(mul(c, val))
                        if is_zero(nv):
                            out.pop(col, None)
                        else:
                            out[col] = nv
                done[p] = out
            self._rref = [(p, done[p]) for p in sorted(done)]
        return self._rref


class Subspace:
    """A subspace of k^ambient_dim, canonically an RREF row basis."""

    def __init__(self, field, ambient_dim, rref):
        self.field = field
        self.ambient_dim = ambient_dim
        self.rref = rref  # [(pivot, row_dict)] sorted by pivot
        self.pivot_set = {p for p, _ in rref}

    @classmethod
    def from_vectors(cls, field, ambient_dim, vectors):
        rb = RowBasis(field, ambient_dim)
        for v in vectors:
            rb.insert(v)
        return cls(field, ambient_dim, rb.rref_rows())

    @classmethod
    def full(cls, field, ambient_dim):
        one = field.one
        return cls(field, ambient_dim, [(i, {i: one}) for i in range(ambient_dim)])

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim, [])

    @property
    def dim(self):
        return len(self.rref)

    def basis_vectors(self):
        return [dict(row) for _, row in self.rref]

    def reduce(self, vec):
        """Residue of vec modulo the subspace; single pass is enough because
        RREF tails live on free columns only."""
        field = self.field
        sub_, mul, is_zero = field.sub, field.mul, field.is_zero
        out = dict(vec)
        for p, row in self.rref:
            c = out.get(p)
            if c is None or is_zero(c):
                continue
            del out[p]
            for col, val in row.items():
                if col == p:
                    continue
                cur = out.get(col)
                nv = sub_(cur, mul(c, val)) if cur is not None else field.neg(mul(c, val))
                if is_zero(nv):
                    out.pop(col, None)
                else:
                    out[col] = nv
        return out

    def contains(self, vec):
        return not self.reduce(vec)

    def contains_subspace(self, other):
        return all(self.contains(row) for _, row in other.rref)

    def free_columns(self):
        return [j for j in range(self.ambient_dim) if j not in self.pivot_set]

    def eq(self, other):
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.rref == other.rref
        )

    def intersect(self, other):
        """Intersection via kernels: x in both iff stacked reductions vanish;
        computed by intersecting kernels of the two residue maps is overkill,
        so use the classical sum-kernel construction instead."""
        # span(self) ∩ span(other) = {sum a_i u_i : exists b_j, sum a_i u_i = sum b_j v_j}
        u = self.basis_vectors()
        v = other.basis_vectors()
        cols = []
        for vec in u:
            cols.append(dict(vec))
        for vec in v:
            cols.append({k: self.field.neg(val) for k, val in vec.items()})
        m = Mat.from_columns(self.field, self.ambient_dim, cols)
        ker = kernel(m)
        vecs = []
        for kv in ker.basis_vectors():
            acc = {}
            for i, vec in enumerate(u):
                c = kv.get(i)
                if c is not None:
                    acc = vec_add(self.field, acc, vec_scale(self.field, c, vec))
            vecs.append(acc)
        return Subspace.from_vectors(self.field, self.ambient_dim, vecs)

    def __repr__(self):
        return f"<Subspace dim {self.dim} of k^{self.ambient_dim}>"


def row_basis_of(mat):
    rb = RowBasis(mat.field, mat.ncols)
    for row in mat.rows:
        rb.insert(row)
    return rb


def rank(mat):
    return row_basis_of(mat).rank


def kernel(mat):
    """Null space {x : mat @ x = 0} as a Subspace of the source."""
    rb = row_basis_of(mat)
    rref = rb.rref_rows()
    field = mat.field
    pivot_rows = {p: row for p, row in rref}
    free = [j for j in range(mat.ncols) if j not in pivot_rows]
    vecs = []
    for f in free:
        v = {f: field.one}
        for p, row in rref:
            c = row.get(f)
            if c is not None:
                v[p] = field.neg(c)
        vecs.append(v)
    return Subspace.from_vectors(field, mat.ncols, vecs)


def image(mat):
    """Column space as a Subspace of the target."""
    rb = RowBasis(mat.field, mat.nrows)
    for row in mat.T.rows:
        rb.insert(row)
    return Subspace(mat.field, mat.nrows, rb.rref_rows())


def solve(mat, b):
    """One solution x of mat @ x = b (free coordinates zero).

    Raises NoSolutionError when b is outside the image.
    """
    field = mat.field
    n = mat.ncols
    rb = RowBasis(field, n + 1)
    bcol = dict(b)
    for i, row in enumerate(mat.rows):
        aug = dict(row)
        if i in bcol:
            aug[n] = bcol[i]
        rb.insert(aug)
    # rows whose pivot is the b-column certify inconsistency
    if n in rb.pivots:
        raise NoSolutionError("right-hand side outside the image")
    x = {}
    for p, row in rb.rref_rows():
        c = row.get(n)
        if c is not None and not field.is_zero(c):
            x[p] = c
    return x


def invert(mat):
    """Exact inverse of a square matrix; raises NoSolutionError if singular."""
    if mat.nrows != mat.ncols:
        raise ShapeMismatchError("only square matrices invert")
    field = mat.field
    n = mat.nrows
    rb = RowBasis(field, 2 * n)
    for i, row in enumerate(mat.rows):
        aug = dict(row)
        aug[n + i] = field.one
        rb.insert(aug)
    if sorted(p for p in rb.pivots if p < n) != list(range(n)):
        raise NoSolutionError("matrix is singular")
    rows = [None] * n
    for p, row in rb.rref_rows():
        rows[p] = {c - n: v for c, v in row.items() if c >= n}
    return Mat(field, n, n, rows)


class QuotientChart:
    """Coordinates on ambient/killed with the pivot-column-complement section.

    ``project`` is defined on every ambient vector (reduce modulo killed,
    read free coordinates); ``section`` embeds quotient coordinates on the
    free columns.  project . section = id and ker(project) = killed.
    """

    def __init__(self, killed):
        self.field = killed.field
        self.ambient_dim = killed.ambient_dim
        self.killed = killed
        self.free = killed.free_columns()
        self.dim = len(self.free)
        self._index = {c: i for i, c in enumerate(self.free)}
        self._proj_mat = None
        self._section_mat = None

    def project_vec(self, vec):
        res = self.killed.reduce(vec)
        return {self._index[c]: v for c, v in res.items()}

    def section_vec(self, qvec):
        return {self.free[i]: v for i, v in qvec.items()}

    @property
    def proj_mat(self):
        if self._proj_mat is None:
            cols = [self.project_vec({j: self.field.one}) for j in range(self.ambient_dim)]
            self._proj_mat = Mat.from_columns(self.field, self.dim, cols)
        return self._proj_mat

    @property
    def section_mat(self):
        if self._section_mat is None:
            cols = [{self.free[i]: self.field.one} for i in range(self.dim)]
            self._section_mat = Mat.from_columns(self.field, self.ambient_dim, cols)
        return self._section_mat

    def __repr__(self):
        return f"<QuotientChart k^{self.ambient_dim} -> k^{self.dim}>"


class SubspaceChart:
    """Coordinates on a subspace via its RREF basis.

    ``section`` sends coordinates to the ambient combination of basis rows;
    ``project`` reads the pivot coordinates and is a left inverse of the
    section (it is only meaningful on vectors inside the subspace).
    """

    def __init__(self, subspace):
        self.field = subspace.field
        self.ambient_dim = subspace.ambient_dim
        self.subspace = subspace
        self.dim = subspace.dim
        self._proj_mat = None
        self._section_mat = None

    @property
    def section_mat(self):
        if self._section_mat is None:
            cols = [dict(row) for _, row in self.subspace.rref]
            self._section_mat = Mat.from_columns(self.field, self.ambient_dim, cols)
        return self._section_mat

    @property
    def proj_mat(self):
        if self._proj_mat is None:
            cols = [{} for _ in range(self.ambient_dim)]
            for i, (p, _) in enumerate(self.subspace.rref):
                cols[p] = {i: self.field.one}
            self._proj_mat = Mat.from_columns(self.field, self.dim, cols)
        return self._proj_mat

    def project_vec(self, vec):
        return {
            i: vec[p]
            for i, (p, _) in enumerate(self.subspace.rref)
            if p in vec
        }

    def section_vec(self, coords):
        out = {}
        for i, c in coords.items():
            _, row = self.subspace.rref[i]
            out = vec_add(self.field, out, vec_scale(self.field, c, row))
        return out

    def __repr__(self):
        return f"<SubspaceChart dim {self.dim} in k^{self.ambient_dim}>"


def apply_to_row(field, ft, row):
    """Image of a sparse vector under the matrix whose transpose is ft."""
    out = {}
    add, mul, is_zero = field.add, field.mul, field.is_zero
    for j, c in row.items():
        for i, a in ft.rows[j].items():
            cur = out.get(i)
            out[i] = mul(a, c) if cur is None else add(cur, mul(a, c))
    return {i: v for i, v in out.items() if not is_zero(v)}


def induced_map(f, src_chart, tgt_chart, name="map"):
    """Matrix of the map induced on quotient coordinates.

    Requires f(src.killed) inside tgt.killed; otherwise raises
    NotWellDefinedError carrying the first violating killed-basis vector
    (by pivot order) as a witness.
    """
    if f.ncols != src_chart.ambient_dim or f.nrows != tgt_chart.ambient_dim:
        raise ShapeMismatchError(f"{name}: ambient shape mismatch")
    ft = f.T
    for p, row in src_chart.killed.rref:
        img = apply_to_row(f.field, ft, row)
        if not tgt_chart.killed.contains(img):
            raise NotWellDefinedError(
                f"{name} does not preserve the killed subspace",
                witness=serialize_vec(f.field, row),
                image_residue=serialize_vec(f.field, tgt_chart.killed.reduce(img)),
                pivot=p,
            )
    return tgt_chart.proj_mat.mul(f).mul(src_chart.section_mat)


def restricted_map(f, src_chart, tgt_chart, name="map"):
    """Matrix of f restricted to subspace charts.

    Requires f(src.subspace) inside tgt.subspace; otherwise raises
    NotWellDefinedError with the first escaping basis vector as witness.
    """
    if f.ncols != src_chart.ambient_dim or f.nrows != tgt_chart.ambient_dim:
        raise ShapeMismatchError(f"{name}: ambient shape mismatch")
    field = f.field
    ft = f.T
    for p, row in src_chart.subspace.rref:
        img = apply_to_row(field, ft, row)
        if not tgt_chart.subspace.contains(img):
            raise NotWellDefinedError(
                f"{name} escapes the subspace",
                witness=serialize_vec(field, row),
                image_residue=serialize_vec(field, tgt_chart.subspace.reduce(img)),
                pivot=p,
            )
    return tgt_chart.proj_mat.mul(f).mul(src_chart.section_mat)

"""Cyclic and cocyclic modules presented by exact matrices.

A datum stores finitely many levels.  In the cosimplicial direction,
``faces[n]`` holds the cofaces into level n from level n-1, ``degens[n]``
the codegeneracies from level n+1 down to n, and ``tau[n]`` the cyclic
operator on level n.  The simplicial direction mirrors this: ``faces[n]``
maps level n down to n-1 and ``degens[n]`` maps level n up to n+1.

From the same data the module derives alternating-sum Hochschild
(co)boundaries, cyclic cohomology and homology with explicit
representatives, and a totalized-bicomplex dimension oracle that computes
the same numbers along an independent route.
"""

from .errors import (
    EngineError,
    NotCyclicError,
    RequiresDegreesError,
    ResourceCapError,
    ShapeMismatchError,
)
from .exactmath.linalg import (
    Mat,
    QuotientChart,
    RowBasis,
    Subspace,
    image,
    induced_map,
    kernel,
    rank,
)

COSIMPLICIAL = "cosimplicial"
SIMPLICIAL = "simplicial"

MAX_LEVEL = 5
MAX_AMBIENT_DIM = 10_000


def enforce_caps(dims):
    """Refuse level towers that are too tall or too wide to handle exactly."""
    top = len(dims) - 1
    if top > MAX_LEVEL:
        raise ResourceCapError(
            f"levels up to {top} requested, cap is {MAX_LEVEL}",
            requested=top,
            cap=MAX_LEVEL,
        )
    for n, d in enumerate(dims):
        if d > MAX_AMBIENT_DIM:
            raise ResourceCapError(
                f"level {n} has dimension {d}, cap is {MAX_AMBIENT_DIM}",
                level=n,
                dimension=d,
                cap=MAX_AMBIENT_DIM,
            )


class CyclicModuleData:
    """Levels 0..max_level with (co)faces, (co)degeneracies and cyclic maps.

    ``faces`` and ``degens`` are lists indexed by level; ``faces[0]`` is
    empty and ``degens[max_level]`` is empty, the other entries at level n
    hold exactly n+1 matrices.  Shapes are validated on construction, the
    simplicial identities are not; run ``verify_identities`` for those.
    """

    def __init__(self, field, direction, dims, faces, degens, tau, name=""):
        if direction not in (COSIMPLICIAL, SIMPLICIAL):
            raise ShapeMismatchError(f"unknown direction {direction!r}")
        enforce_caps(dims)
        self.field = field
        self.direction = direction
        self.dims = list(dims)
        self.max_level = len(dims) - 1
        self.faces = faces
        self.degens = degens
        self.tau = tau
        self.name = name
        self._identity_report = None
        self._validate_shapes()

    def _validate_shapes(self):
        top = self.max_level
        if not (len(self.faces) == len(self.degens) == len(self.tau) == top + 1):
            raise ShapeMismatchError("operator lists must match the level count")
        if self.faces[0]:
            raise ShapeMismatchError("no faces at level zero")
        if self.degens[top]:
            raise ShapeMismatchError("no degeneracies at the top level")
        for n in range(top + 1):
            if n >= 1 and len(self.faces[n]) != n + 1:
                raise ShapeMismatchError(f"level {n} needs {n + 1} faces")
            if n < top and len(self.degens[n]) != n + 1:
                raise ShapeMismatchError(f"level {n} needs {n + 1} degeneracies")
            if self.direction == COSIMPLICIAL:
                fshape = (self.dims[n], self.dims[n - 1]) if n >= 1 else None
                dshape = (self.dims[n], self.dims[n + 1]) if n < top else None
            else:
                fshape = (self.dims[n - 1], self.dims[n]) if n >= 1 else None
                dshape = (self.dims[n + 1], self.dims[n]) if n < top else None
            for i, f in enumerate(self.faces[n]):
                if (f.nrows, f.ncols) != fshape:
                    raise ShapeMismatchError(
                        f"face {i} at level {n} has shape "
                        f"{(f.nrows, f.ncols)}, expected {fshape}"
                    )
            for i, s in enumerate(self.degens[n]):
                if (s.nrows, s.ncols) != dshape:
                    raise ShapeMismatchError(
                        f"degeneracy {i} at level {n} has shape "
                        f"{(s.nrows, s.ncols)}, expected {dshape}"
                    )
            t = self.tau[n]
            if (t.nrows, t.ncols) != (self.dims[n], self.dims[n]):
                raise ShapeMismatchError(f"cyclic operator at level {n} not square")

    def identity_report(self):
        """Memoized full identity suite."""
        if self._identity_report is None:
            self._identity_report = verify_identities(self)
        return self._identity_report

    def verdict(self):
        return cyclicity_verdict(self.identity_report())

    def __repr__(self):
        word = "cocyclic" if self.direction == COSIMPLICIAL else "cyclic"
        return f"<{word} data {self.name!r} dims {self.dims}>"


def _first_entry_diff(a, b):
    field = a.field
    for r in range(a.nrows):
        ra, rb = a.rows[r], b.rows[r]
        for c in sorted(set(ra) | set(rb)):
            va = ra.get(c, field.zero)
            vb = rb.get(c, field.zero)
            if not field.eq(va, vb):
                return [r, c], field.serialize(va), field.serialize(vb)
    return None


def _check_family(report, name, instances):
    """One report item per family; instances yield (indices, lhs, rhs)."""
    for indices, lhs, rhs in instances:
        diff = _first_entry_diff(lhs, rhs)
        if diff is not None:
            entry, lv, rv = diff
            report.add(
                name,
                False,
                witness={"indices": indices, "entry": entry, "lhs": lv, "rhs": rv},
            )
            return
    report.add(name, True)


def verify_identities(data):
    """Check every (co)simplicial, mixed, and cyclic relation the level
    tower can express; one report item per relation family per level."""
    from .report import CheckReport

    report = CheckReport()
    top = data.max_level
    faces, degens, tau = data.faces, data.degens, data.tau
    co = data.direction == COSIMPLICIAL

    def compose(second, first):
        # apply ``first`` then ``second`` as linear maps
        return second.mul(first)

    for n in range(2, top + 1):

        def face_pairs(n=n):
            for j in range(n + 1):
                for i in range(j):
                    if co:
                        lhs = compose(faces[n][j], faces[n - 1][i])
                        rhs = compose(faces[n][i], faces[n - 1][j - 1])
                    else:
                        lhs = compose(faces[n - 1][i], faces[n][j])
                        rhs = compose(faces[n - 1][j - 1], faces[n][i])
                    yield [i, j], lhs, rhs

        word = "coface pairs" if co else "face pairs"
        _check_family(report, f"{word} (level {n})", face_pairs())

    for n in range(0, top - 1):

        def degen_pairs(n=n):
            for j in range(n + 1):
                for i in range(j + 1):
                    if co:
                        lhs = compose(degens[n][j], degens[n + 1][i])
                        rhs = compose(degens[n][i], degens[n + 1][j + 1])
                    else:
                        lhs = compose(degens[n + 1][i], degens[n][j])
                        rhs = compose(degens[n + 1][j + 1], degens[n][i])
                    yield [i, j], lhs, rhs

        word = "codegeneracy pairs" if co else "degeneracy pairs"
        _check_family(report, f"{word} (level {n})", degen_pairs())

    for n in range(0, top):

        def mixed(n=n):
            ident = Mat.identity(data.field, data.dims[n])
            for j in range(n + 1):
                for i in range(n + 2):
                    if co:
                        lhs = compose(degens[n][j], faces[n + 1][i])
                    else:
                        lhs = compose(faces[n + 1][i], degens[n][j])
                    if i == j or i == j + 1:
                        rhs = ident
                    elif i < j:
                        if co:
                            rhs = compose(faces[n][i], degens[n - 1][j - 1])
                        else:
                            rhs = compose(degens[n - 1][j - 1], faces[n][i])
                    else:
                        if co:
                            rhs = compose(faces[n][i - 1], degens[n - 1][j])
                        else:
                            rhs = compose(degens[n - 1][j], faces[n][i - 1])
                    yield [i, j], lhs, rhs

        word = "mixed coface codegeneracy" if co else "mixed face degeneracy"
        _check_family(report, f"{word} (level {n})", mixed())

    for n in range(1, top + 1):

        def cyc_faces(n=n):
            if co:
                yield [0], compose(tau[n], faces[n][0]), faces[n][n]
            else:
                yield [0], compose(faces[n][0], tau[n]), faces[n][n]
            for i in range(1, n + 1):
                if co:
                    lhs = compose(tau[n], faces[n][i])
                    rhs = compose(faces[n][i - 1], tau[n - 1])
                else:
                    lhs = compose(faces[n][i], tau[n])
                    rhs = compose(tau[n - 1], faces[n][i - 1])
                yield [i], lhs, rhs

        word = "cyclic with cofaces" if co else "cyclic with faces"
        _check_family(report, f"{word} (level {n})", cyc_faces())

    for n in range(0, top):

        def cyc_degens(n=n):
            tsq = tau[n + 1].mul(tau[n + 1])
            if co:
                yield [0], compose(tau[n], degens[n][0]), compose(degens[n][n], tsq)
            else:
                yield [0], compose(degens[n][0], tau[n]), compose(tsq, degens[n][n])
            for i in range(1, n + 1):
                if co:
                    lhs = compose(tau[n], degens[n][i])
                    rhs = compose(degens[n][i - 1], tau[n + 1])
                else:
                    lhs = compose(degens[n][i], tau[n])
                    rhs = compose(tau[n + 1], degens[n][i - 1])
                yield [i], lhs, rhs

        word = "cyclic with codegeneracies" if co else "cyclic with degeneracies"
        _check_family(report, f"{word} (level {n})", cyc_degens())

    for n in range(0, top + 1):

        def power(n=n):
            acc = Mat.identity(data.field, data.dims[n])
            for _ in range(n + 1):
                acc = tau[n].mul(acc)
            yield [n + 1], acc, Mat.identity(data.field, data.dims[n])

        _check_family(report, f"cyclic operator power (level {n})", power())

    return report


def cyclicity_verdict(report):
    """'cyclic' when everything holds, 'paracyclic' when only the cyclic
    operator powers fail, 'fail' otherwise."""
    if report.ok():
        return "cyclic"
    if all(
        item.name.startswith("cyclic operator power") for item in report.failures()
    ):
        return "paracyclic"
    return "fail"


def hochschild_b(data, n, prime=False):
    """Alternating-sum Hochschild operator with source level n.

    Cosimplicial data: the coboundary into level n+1 (the primed variant
    omits the last coface).  Simplicial data: the boundary into level n-1
    (the primed variant omits the last face); at level zero this is the
    empty map into the zero space.
    """
    if n < 0 or n > data.max_level:
        raise RequiresDegreesError(f"degree {n} outside the level tower", needed=max(n, 0))
    if data.direction == COSIMPLICIAL:
        if n + 1 > data.max_level:
            raise RequiresDegreesError(f"degree {n} needs levels up to {n + 1}", needed=n + 1)
        ops = data.faces[n + 1]
        last = n if prime else n + 1
        acc = Mat.zero(data.field, data.dims[n + 1], data.dims[n])
    else:
        if n == 0:
            return Mat.zero(data.field, 0, data.dims[0])
        ops = data.faces[n]
        last = n - 1 if prime else n
        acc = Mat.zero(data.field, data.dims[n - 1], data.dims[n])
    for i in range(last + 1):
        term = ops[i] if i % 2 == 0 else ops[i].scale(data.field.neg(data.field.one))
        acc = acc.add(term)
    return acc


def _signed_cyclic(data, n):
    """The signed cyclic operator (-1)^n tau_n."""
    t = data.tau[n]
    return t if n % 2 == 0 else t.scale(data.field.neg(data.field.one))


def _cyclic_norm(data, n):
    """1 + lambda + ... + lambda^n for the signed operator at level n."""
    lam = _signed_cyclic(data, n)
    acc = Mat.identity(data.field, data.dims[n])
    power = Mat.identity(data.field, data.dims[n])
    for _ in range(n):
        power = lam.mul(power)
        acc = acc.add(power)
    return acc


def _require_cyclic(data):
    verdict = data.verdict()
    if verdict != "cyclic":
        first = data.identity_report().first_failure()
        raise NotCyclicError(
            f"identities do not hold (verdict: {verdict})",
            verdict=verdict,
            item=first.name if first else None,
            witness=first.witness if first else None,
        )


class HCResult:
    """Cyclic (co)homology at one level, with representing vectors."""

    def __init__(self, level, dim, cycle_dim, boundary_dim, representatives):
        self.level = level
        self.dim = dim
        self.cycle_dim = cycle_dim
        self.boundary_dim = boundary_dim
        self.representatives = representatives

    def to_dict(self, field):
        from .exactmath.linalg import serialize_vec

        return {
            "level": self.level,
            "dim": self.dim,
            "cycle_dim": self.cycle_dim,
            "boundary_dim": self.boundary_dim,
            "representatives": [
                serialize_vec(field, v) for v in self.representatives
            ],
        }

    def __repr__(self):
        return f"<HC level {self.level} dim {self.dim}>"


def cyclic_cohomology(data, n, check_identities=True):
    """Cocycles are Hochschild cocycles fixed by the signed cyclic operator;
    coboundaries come from invariant cochains one level down."""
    if data.direction != COSIMPLICIAL:
        raise ShapeMismatchError("cyclic cohomology needs cosimplicial data")
    if n < 0:
        raise RequiresDegreesError("negative degree", needed=0)
    if n + 1 > data.max_level:
        raise RequiresDegreesError(f"degree {n} needs levels up to {n + 1}", needed=n + 1)
    if check_identities:
        _require_cyclic(data)
    field = data.field
    ident_n = Mat.identity(field, data.dims[n])
    b_n = hochschild_b(data, n)
    stacked = b_n.stack_below(data.tau[n].sub(_sign_scale(ident_n, n)))
    cocycles = kernel(stacked)
    if n == 0:
        boundaries = Subspace.zero(field, data.dims[0])
    else:
        ident_prev = Mat.identity(field, data.dims[n - 1])
        invariant = kernel(data.tau[n - 1].sub(_sign_scale(ident_prev, n - 1)))
        b_prev = hochschild_b(data, n - 1)
        vecs = [b_prev.apply(v) for v in invariant.basis_vectors()]
        boundaries = Subspace.from_vectors(field, data.dims[n], vecs)
    return _quotient_result(n, field, cocycles, boundaries)


def _sign_scale(mat, n):
    if n % 2 == 0:
        return mat
    return mat.scale(mat.field.neg(mat.field.one))


def _quotient_result(level, field, cycles, boundaries):
    for row in boundaries.basis_vectors():
        if not cycles.contains(row):
            raise EngineError(
                "boundaries escape the cycle space", level=level
            )
    rb = RowBasis(field, cycles.ambient_dim)
    for row in boundaries.basis_vectors():
        rb.insert(row)
    reps = []
    for row in cycles.basis_vectors():
        if rb.insert(row) is not None:
            reps.append(row)
    return HCResult(
        level=level,
        dim=cycles.dim - boundaries.dim,
        cycle_dim=cycles.dim,
        boundary_dim=boundaries.dim,
        representatives=reps,
    )


def cyclic_homology(data, n, check_identities=True):
    """Homology of the quotient by the image of 1 minus the signed cyclic
    operator, with the Hochschild boundary pushed down to the quotient."""
    if data.direction != SIMPLICIAL:
        raise ShapeMismatchError("cyclic homology needs simplicial data")
    if n < 0:
        raise RequiresDegreesError("negative degree", needed=0)
    if n + 1 > data.max_level:
        raise RequiresDegreesError(f"degree {n} needs levels up to {n + 1}", needed=n + 1)
    if check_identities:
        _require_cyclic(data)
    field = data.field

    def chart(level):
        ident = Mat.identity(field, data.dims[level])
        return QuotientChart(image(ident.sub(_signed_cyclic(data, level))))

    chart_n = chart(n)
    chart_up = chart(n + 1)
    b_up = induced_map(
        hochschild_b(data, n + 1), chart_up, chart_n, name="hochschild boundary"
    )
    if n == 0:
        cycles = Subspace.full(field, chart_n.dim)
    else:
        chart_dn = chart(n - 1)
        b_n = induced_map(
            hochschild_b(data, n), chart_n, chart_dn, name="hochschild boundary"
        )
        cycles = kernel(b_n)
    boundaries = image(b_up)
    result = _quotient_result(n, field, cycles, boundaries)
    # lift representatives from quotient coordinates back to chains
    result.representatives = [
        chart_n.section_vec(v) for v in result.representatives
    ]
    return result


def bicomplex_oracle(data, n, check_identities=True):
    """Dimension at level n computed through the totalized first-quadrant
    bicomplex whose columns alternate the Hochschild operator and the
    negated primed variant, and whose rows alternate 1 minus the signed
    cyclic operator and its norm.  Returns the dimension only."""
    if n < 0:
        raise RequiresDegreesError("negative degree", needed=0)
    if n + 1 > data.max_level:
        raise RequiresDegreesError(f"degree {n} needs levels up to {n + 1}", needed=n + 1)
    if check_identities:
        _require_cyclic(data)
    field = data.field
    co = data.direction == COSIMPLICIAL

    def block_rows(m):
        """Levels q appearing in the total space at degree m, as (p, q)."""
        return [(p, m - p) for p in range(m + 1)]

    def vertical(p, q):
        # column p even: plain operator; odd: negated primed variant
        b = hochschild_b(data, q, prime=(p % 2 == 1))
        if p % 2 == 1:
            b = b.scale(field.neg(field.one))
        return b

    def horizontal(p, q):
        ident = Mat.identity(field, data.dims[q])
        if p % 2 == (0 if co else 1):
            return ident.sub(_signed_cyclic(data, q))
        return _cyclic_norm(data, q)

    def total_dim(m):
        return sum(data.dims[q] for _, q in block_rows(m))

    def differential(m):
        """Total differential leaving degree m (cosimplicial: into m+1;
        simplicial: into m-1)."""
        src = block_rows(m)
        tgt = block_rows(m + 1) if co else block_rows(m - 1)
        src_off = {}
        acc = 0
        for p, q in src:
            src_off[(p, q)] = acc
            acc += data.dims[q]
        tgt_off = {}
        acc = 0
        for p, q in tgt:
            tgt_off[(p, q)] = acc
            acc += data.dims[q]
        nrows = acc
        ncols = sum(data.dims[q] for _, q in src)
        entries = []

        def place(block, roff, coff):
            for r, row in enumerate(block.rows):
                for c, v in row.items():
                    entries.append((roff + r, coff + c, v))

        for p, q in src:
            vt = (p, q + 1) if co else (p, q - 1)
            ht = (p + 1, q) if co else (p - 1, q)
            if vt in tgt_off:
                place(vertical(p, q), tgt_off[vt], src_off[(p, q)])
            if ht in tgt_off:
                place(horizontal(p, q), tgt_off[ht], src_off[(p, q)])
        return Mat.from_entries(field, nrows, ncols, entries)

    d_out = differential(n)
    if co:
        # homology at degree n of ... -> Tot^{n-1} -> Tot^n -> Tot^{n+1}
        if n >= 1:
            d_prev = differential(n - 1)
            if not d_out.mul(d_prev).is_zero():
                raise EngineError("total differential does not square to zero")
            incoming = rank(d_prev)
        else:
            incoming = 0
        return total_dim(n) - rank(d_out) - incoming
    # homology at degree n of ... -> Tot_{n+1} -> Tot_n -> Tot_{n-1}
    d_in = differential(n + 1)
    if not d_out.mul(d_in).is_zero():
        raise EngineError("total differential does not square to zero")
    return total_dim(n) - rank(d_out) - rank(d_in)

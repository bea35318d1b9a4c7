"""Directly constructed cyclic modules of small algebras.

These builders are deliberately independent of the package's complex
builders: levels are plain tensor powers, faces multiply neighbouring
slots (the last face wraps around, optionally through an algebra
automorphism), degeneracies insert the unit, and the cyclic operator
rotates the factors.  The cocyclic mirror is the entrywise transpose.
"""

from hopfcyclic.cyclicmachine import CyclicModuleData
from hopfcyclic.exactmath.linalg import Mat, TensorIndex


def algebra_cyclic_module(field, dim, mult, unit_index, max_level, twist=None):
    dims = [dim ** (n + 1) for n in range(max_level + 1)]
    tw = twist or (lambda i: {i: field.one})
    faces, degens, tau = [[]], [], []
    for n in range(max_level + 1):
        src = TensorIndex([dim] * (n + 1))
        if n >= 1:
            tgt = TensorIndex([dim] * n)
            ops = []
            for i in range(n):

                def inner(t, i=i):
                    return {
                        t[:i] + (k,) + t[i + 2 :]: c
                        for k, c in mult(t[i], t[i + 1]).items()
                    }

                ops.append(Mat.from_basis_map(field, src, tgt, inner))

            def wrap(t):
                out = {}
                for j, cj in tw(t[n]).items():
                    for k, c in mult(j, t[0]).items():
                        key = (k,) + t[1:n]
                        prev = out.get(key, field.zero)
                        out[key] = field.add(prev, field.mul(cj, c))
                return out

            ops.append(Mat.from_basis_map(field, src, tgt, wrap))
            faces.append(ops)
        if n < max_level:
            up = TensorIndex([dim] * (n + 2))
            degens.append(
                [
                    Mat.from_basis_map(
                        field,
                        src,
                        up,
                        lambda t, i=i: {
                            t[: i + 1] + (unit_index,) + t[i + 1 :]: field.one
                        },
                    )
                    for i in range(n + 1)
                ]
            )
        else:
            degens.append([])

        def rot(t, n=n):
            return {(j,) + t[:n]: cj for j, cj in tw(t[n]).items()}

        tau.append(Mat.from_basis_map(field, src, src, rot))
    return CyclicModuleData(field, "simplicial", dims, faces, degens, tau)


def transpose_to_cocyclic(data):
    return CyclicModuleData(
        data.field,
        "cosimplicial",
        data.dims,
        [[f.T for f in fs] for fs in data.faces],
        [[s.T for s in ss] for ss in data.degens],
        [t.T for t in data.tau],
    )


def ground_field_mult(field):
    return lambda i, j: {0: field.one}


def cyclic_group_mult(field, order):
    return lambda i, j: {(i + j) % order: field.one}

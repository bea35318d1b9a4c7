"""Exact scalars and sparse exact linear algebra."""

from .scalars import (
    CyclotomicField,
    RationalField,
    Scalar,
    cyclotomic_field,
    cyclotomic_polynomial,
    make_field,
    rationals,
    totient,
)
from .linalg import (
    Mat,
    QuotientChart,
    RowBasis,
    Subspace,
    SubspaceChart,
    TensorIndex,
    image,
    induced_map,
    invert,
    kernel,
    rank,
    restricted_map,
    serialize_vec,
    solve,
    vec_add,
    vec_eq,
    vec_scale,
    vec_sub,
)

__all__ = [
    "CyclotomicField",
    "RationalField",
    "Scalar",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "make_field",
    "rationals",
    "totient",
    "Mat",
    "QuotientChart",
    "RowBasis",
    "Subspace",
    "SubspaceChart",
    "TensorIndex",
    "image",
    "induced_map",
    "invert",
    "kernel",
    "rank",
    "restricted_map",
    "serialize_vec",
    "solve",
    "vec_add",
    "vec_eq",
    "vec_scale",
    "vec_sub",
]

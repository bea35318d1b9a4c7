"""Exact scalar arithmetic over QQ and cyclotomic fields QQ(zeta_N).

Characteristic 0 only.  Rationals are ``fractions.Fraction``.  Cyclotomic
values are coefficient tuples of length totient(N) representing elements of
QQ[x]/(Phi_N), low degree first.  Phi_N is computed exactly by dividing
x^N - 1 by the cyclotomic polynomials of the proper divisors of N.

Two layers on purpose:

* ``Field`` objects own raw-value operations (``field.add(a, b)`` on bare
  Fractions / tuples).  The linear algebra kernel uses these; they do not
  validate per call.
* ``Scalar`` wraps (field, value) and checks FIELD_MISMATCH on every binary
  operation.  The CLI and catalog serialization go through ``Scalar``.

Serialized form: rationals are canonical strings "p" or "p/q" with positive
denominator; cyclotomic values are length-totient(N) arrays of such strings.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import DivisionByZeroError, FieldMismatchError, ParseError

ZERO = Fraction(0)
ONE = Fraction(1)


def divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def totient(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


# -- polynomial helpers (dense lists of Fraction, low degree first) --


def poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(p, q):
    out = [ZERO] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b == 0:
                continue
            out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p, q):
    """Exact division of Fraction polynomials; q must be nonzero."""
    p = list(p)
    q = poly_trim(list(q))
    assert q, "division by zero polynomial"
    out = [ZERO] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    for k in range(len(p) - len(q), -1, -1):
        c = p[k + len(q) - 1] / lead
        if c != 0:
            out[k] = c
            for j, b in enumerate(q):
                p[k + j] -= c * b
    return poly_trim(out), poly_trim(p)


def cyclotomic_polynomial(n):
    """Phi_n as a list of Fractions, computed by exact division of x^n - 1
    by the product of Phi_d over proper divisors d of n."""
    assert n >= 1
    num = [ZERO] * (n + 1)
    num[0], num[n] = Fraction(-1), ONE
    den = [ONE]
    for d in divisors(n)[:-1]:
        den = poly_mul(den, cyclotomic_polynomial(d))
    quo, rem = poly_divmod(num, den)
    assert rem == [], f"x^{n}-1 not divisible by product of proper Phi_d"
    return quo


def _format_fraction(a):
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def _parse_fraction(s, where=""):
    if isinstance(s, bool):
        raise ParseError(f"expected a rational, got {s!r}", where=where)
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, Fraction):
        return s
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {s!r}: {exc}", where=where) from None
    raise ParseError(f"expected a rational string, got {type(s).__name__}", where=where)


class Field:
    """Common interface; see RationalField and CyclotomicField."""

    kind = None

    def scalar(self, value):
        return Scalar(self, self.coerce(value))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b):
        return self.is_zero(self.sub(a, b))

    def sum(self, values):
        total = self.zero
        for v in values:
            total = self.add(total, v)
        return total

    def __ne__(self, other):
        return not self.__eq__(other)


class RationalField(Field):
    kind = "Q"
    name = "Q"

    zero = ZERO
    one = ONE

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZeroError("inverse of zero in Q")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return Fraction(n)

    def from_rational(self, a):
        return a

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError("scalar from a different field")
            return value.value
        return _parse_fraction(value)

    def serialize(self, a):
        return _format_fraction(a)

    def format(self, a):
        return _format_fraction(a)

    def parse(self, obj, where=""):
        return _parse_fraction(obj, where=where)

    def roots_of_unity(self):
        return [ONE, -ONE]

    def spec(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class CyclotomicField(Field):
    """QQ(zeta_n); values are tuples of Fractions of length totient(n)."""

    kind = "cyclotomic"

    def __init__(self, n):
        assert n >= 1
        self.n = n
        self.name = f"Q(zeta_{n})"
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1
        d = self.degree
        self.zero = tuple([ZERO] * d)
        self.one = tuple([ONE] + [ZERO] * (d - 1)) if d >= 1 else tuple()
        # gen = class of x = zeta_n
        if d >= 2:
            g = [ZERO] * d
            g[1] = ONE
            self.gen = tuple(g)
        else:
            # degree 1: x ≡ -modulus[0]
            self.gen = (-self.modulus[0],)
        # reduction table: x^(d+k) mod Phi_n for k = 0..d-2
        self._red = []
        if d >= 1:
            cur = [-c for c in self.modulus[:d]]  # x^d
            self._red.append(tuple(cur))
            for _ in range(d - 2):
                top = cur[-1]
                shifted = [ZERO] + cur[:-1]
                cur = [shifted[j] + top * self._red[0][j] for j in range(d)]
                self._red.append(tuple(cur))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        conv = [ZERO] * (2 * d - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y == 0:
                    continue
                conv[i + j] += x * y
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c != 0:
                red = self._red[k - d]
                for j in range(d):
                    out[j] += c * red[j]
        return tuple(out)

    def inv(self, a):
        if self.is_zero(a):
            raise DivisionByZeroError(f"inverse of zero in {self.name}")
        # extended Euclid in QQ[x]: u*a + v*Phi = gcd = const
        r0, r1 = list(self.modulus), poly_trim(list(a))
        s0, s1 = [], [ONE]
        while True:
            q, r = poly_divmod(r0, r1)
            if not r:
                break
            s = [x for x in s0]
            prod = poly_mul(q, s1)
            m = max(len(s), len(prod))
            s = [(s[i] if i < len(s) else ZERO) - (prod[i] if i < len(prod) else ZERO) for i in range(m)]
            r0, r1, s0, s1 = r1, r, s1, poly_trim(s)
        assert len(r1) == 1, "gcd with irreducible modulus must be a unit"
        assert len(s1) <= self.degree, "xgcd cofactor exceeds field degree"
        c = r1[0]
        inv = [x / c for x in s1] + [ZERO] * (self.degree - len(s1))
        return tuple(inv)

    def scale(self, a, rational):
        return tuple(x * rational for x in a)

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def from_int(self, n):
        return self.from_rational(Fraction(n))

    def from_rational(self, a):
        return tuple([a] + [ZERO] * (self.degree - 1))

    def zeta_power(self, k):
        out = self.one
        for _ in range(k % self.n):
            out = self.mul(out, self.gen)
        return out

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError("scalar from a different field")
            return value.value
        if isinstance(value, tuple) and len(value) == self.degree:
            if all(isinstance(x, Fraction) for x in value):
                return value
        if isinstance(value, (int, Fraction)):
            return self.from_rational(Fraction(value))
        if isinstance(value, str):
            return self.from_rational(_parse_fraction(value))
        if isinstance(value, (list, tuple)):
            return self.parse(list(value))
        raise ParseError(f"cannot coerce {value!r} into {self.name}")

    def serialize(self, a):
        return [_format_fraction(x) for x in a]

    def format(self, a):
        if self.is_zero(a):
            return "0"
        parts = []
        for j, x in enumerate(a):
            if x == 0:
                continue
            if j == 0:
                parts.append(_format_fraction(x))
            else:
                power = "z" if j == 1 else f"z^{j}"
                if x == 1:
                    parts.append(power)
                elif x == -1:
                    parts.append(f"-{power}")
                else:
                    parts.append(f"{_format_fraction(x)}*{power}")
        return " + ".join(parts).replace("+ -", "- ")

    def parse(self, obj, where=""):
        if isinstance(obj, (int, str, Fraction)):
            return self.from_rational(_parse_fraction(obj, where=where))
        if isinstance(obj, (list, tuple)):
            if len(obj) != self.degree:
                raise ParseError(
                    f"cyclotomic value needs {self.degree} coefficients, got {len(obj)}",
                    where=where,
                )
            return tuple(_parse_fraction(x, where=where) for x in obj)
        raise ParseError(f"bad cyclotomic value {obj!r}", where=where)

    def roots_of_unity(self):
        """All roots of unity in the field: the cyclic group generated by
        zeta_n (n even) or -zeta_n (n odd)."""
        order = self.n if self.n % 2 == 0 else 2 * self.n
        g = self.gen if self.n % 2 == 0 else self.neg(self.gen)
        out = []
        cur = self.one
        for _ in range(order):
            out.append(cur)
            cur = self.mul(cur, g)
        return out

    def spec(self):
        return {"cyclotomic": self.n}

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self):
        return hash(("cyclotomic", self.n))

    def __repr__(self):
        return self.name


_QQ = RationalField()
_CYC_CACHE = {}


def rationals():
    return _QQ


def cyclotomic_field(n):
    if n not in _CYC_CACHE:
        _CYC_CACHE[n] = CyclotomicField(n)
    return _CYC_CACHE[n]


def make_field(spec):
    """Field from a spec: "Q", {"cyclotomic": N}, or "cyclotomic:N"."""
    if isinstance(spec, Field):
        return spec
    if spec == "Q" or spec == "QQ":
        return _QQ
    if isinstance(spec, str) and spec.startswith("cyclotomic:"):
        try:
            return cyclotomic_field(int(spec.split(":", 1)[1]))
        except ValueError:
            raise ParseError(f"bad field spec {spec!r}") from None
    if isinstance(spec, dict) and set(spec) == {"cyclotomic"}:
        n = spec["cyclotomic"]
        if not isinstance(n, int) or n < 1:
            raise ParseError(f"bad cyclotomic order {n!r}")
        return cyclotomic_field(n)
    raise ParseError(f"unknown field spec {spec!r}")


class Scalar:
    """A field-tagged exact scalar with mismatch-checked arithmetic."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = field.coerce(value)

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine {self.field.name} with {other.field.name}"
                )
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(Fraction(other))
        raise FieldMismatchError(f"cannot combine scalar with {type(other).__name__}")

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def inverse(self):
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self):
        return self.field.is_zero(self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError("comparing scalars from different fields")
            return self.field.eq(self.value, other.value)
        if isinstance(other, (int, Fraction)):
            return self.field.eq(self.value, self.field.from_rational(Fraction(other)))
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def serialize(self):
        return self.field.serialize(self.value)

    def __repr__(self):
        return f"Scalar({self.field.name}, {self.field.format(self.value)})"

"""Elements of PSL_2(q) as canonical projective 2x2 matrices.

A :class:`ProjMatrix` is a determinant-one matrix identified with its
negation. Of the pair ``{M, -M}`` we keep the one whose first nonzero entry
(row-major) has the smaller encoding; in characteristic 2 ``M == -M`` and
nothing needs choosing. Equality and hashing are therefore plain tuple
comparisons.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import DetNotOne, DivisionByZero, FieldMismatch
from .gf import GF, FieldElement

Raw = tuple[int, int, int, int]


def _raw_mul(field: GF, x: Raw, y: Raw) -> Raw:
    mul, add = field._mul, field._add
    a, b, c, d = x
    e, f, g, h = y
    return (
        add(mul(a, e), mul(b, g)),
        add(mul(a, f), mul(b, h)),
        add(mul(c, e), mul(d, g)),
        add(mul(c, f), mul(d, h)),
    )


def _canonical(field: GF, m: Raw) -> Raw:
    if field.p == 2:
        return m
    lead = next(v for v in m if v)
    if field._neg(lead) < lead:
        neg = field._neg
        return (neg(m[0]), neg(m[1]), neg(m[2]), neg(m[3]))
    return m


class ProjMatrix:
    """An element of PSL_2(q). Construct with :func:`matrix` or the generators."""

    __slots__ = ("field", "_e")

    def __init__(self, field: GF, entries: Raw):
        # trusted constructor: entries must already have determinant one
        self.field = field
        self._e = _canonical(field, entries)

    @property
    def entries(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, v) for v in self._e)

    m11 = property(lambda self: FieldElement(self.field, self._e[0]))
    m12 = property(lambda self: FieldElement(self.field, self._e[1]))
    m21 = property(lambda self: FieldElement(self.field, self._e[2]))
    m22 = property(lambda self: FieldElement(self.field, self._e[3]))

    def encodings(self) -> list[int]:
        return list(self._e)

    def det(self) -> FieldElement:
        a, b, c, d = self.entries
        return a * d - b * c

    def __mul__(self, other: ProjMatrix) -> ProjMatrix:
        return pmul(self, other)

    def __pow__(self, n: int) -> ProjMatrix:
        if n < 0:
            return ppow(self.inverse(), -n)
        return ppow(self, n)

    def inverse(self) -> ProjMatrix:
        a, b, c, d = self._e
        neg = self.field._neg
        return ProjMatrix(self.field, (d, neg(b), neg(c), a))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjMatrix):
            return NotImplemented
        return self._e == other._e and self.field.q == other.field.q

    def __hash__(self) -> int:
        return hash(self._e)

    def __repr__(self) -> str:
        a, b, c, d = self._e
        return f"ProjMatrix({self.field.name}, [[{a}, {b}], [{c}, {d}]])"


def matrix(m11: FieldElement, m12: FieldElement, m21: FieldElement, m22: FieldElement) -> ProjMatrix:
    """Checked constructor from four entries of one field."""
    field = m11.field
    for e in (m12, m21, m22):
        if e.field.q != field.q:
            raise FieldMismatch(f"{field.name} vs {e.field.name}")
    if m11 * m22 - m12 * m21 != field.one:
        raise DetNotOne(f"determinant of {[int(m11), int(m12), int(m21), int(m22)]} is not 1")
    return ProjMatrix(field, (m11.value, m12.value, m21.value, m22.value))


def matrix_from_ints(field: GF, values: Sequence[int]) -> ProjMatrix:
    if len(values) != 4:
        raise ValueError(f"a 2x2 matrix needs 4 entries, got {len(values)}")
    return matrix(*(field(int(v)) for v in values))


def identity(field: GF) -> ProjMatrix:
    return ProjMatrix(field, (1, 0, 0, 1))


def gen_u(x: FieldElement) -> ProjMatrix:
    return ProjMatrix(x.field, (1, x.value, 0, 1))


def gen_h(y: FieldElement) -> ProjMatrix:
    if not y:
        raise DivisionByZero("h(0) is undefined")
    return ProjMatrix(y.field, (y.value, 0, 0, y.field._inv(y.value)))


def gen_s(field: GF) -> ProjMatrix:
    return ProjMatrix(field, (0, 1, field._neg(1), 0))


def pmul(A: ProjMatrix, B: ProjMatrix) -> ProjMatrix:
    if A.field is not B.field and A.field.q != B.field.q:
        raise FieldMismatch(f"{A.field.name} vs {B.field.name}")
    return ProjMatrix(A.field, _raw_mul(A.field, A._e, B._e))


def ppow(A: ProjMatrix, n: int) -> ProjMatrix:
    """``A**n`` by square-and-multiply."""
    if n < 0:
        raise ValueError("ppow takes a non-negative exponent; use A.inverse()")
    field = A.field
    result: Raw = (1, 0, 0, 1)
    base = A._e
    while n:
        if n & 1:
            result = _raw_mul(field, result, base)
        base = _raw_mul(field, base, base)
        n >>= 1
    return ProjMatrix(field, result)


def group_order(field: GF) -> int:
    q = field.q
    return q * (q * q - 1) // (1 if q % 2 == 0 else 2)


def element_order(A: ProjMatrix, cap: int | None = None) -> int:
    """Smallest ``n >= 1`` with ``A**n`` the identity, by iteration."""
    field = A.field
    cap = group_order(field) if cap is None else cap
    one = identity(field)._e
    cur = A._e
    for n in range(1, cap + 1):
        if cur == one:
            return n
        cur = _canonical(field, _raw_mul(field, cur, A._e))
    raise ValueError(f"order of {A} exceeds {cap}")


def us_raw(field: GF, a: FieldElement) -> Raw:
    """The SL_2 matrix u(a)s = [[-a, 1], [-1, 0]] with no sign identification."""
    return (field._neg(a.value), 1, field._neg(1), 0)


def sl2_order_of_us(field: GF, a: FieldElement) -> int:
    """Order of the matrix u(a)s in SL_2(q), where -I is not the identity.

    This equals the multiplicative order of a root of ``z**2 + a*z + 1``
    in GF(q^2), without building GF(q^2).
    """
    m = us_raw(field, a)
    cur = m
    n = 1
    while cur != (1, 0, 0, 1):
        cur = _raw_mul(field, cur, m)
        n += 1
        if n > 2 * field.q + 2:
            raise AssertionError("u(a)s has order above 2(q+1)")
    return n


def in_borel(A: ProjMatrix) -> bool:
    return A._e[2] == 0

"""Exact arithmetic in GF(p^kappa).

Elements are stored by their canonical integer encoding
``sum(coeffs[i] * p**i)``, where ``coeffs`` is the coefficient vector of the
element as a polynomial of degree < kappa in the generator ``lam`` of the
extension. The encoding orders the field; "smallest element" anywhere in the
package means smallest encoding.

Fields are cached: ``field_new(p, kappa)`` always returns the same object
for the same arguments, so elements of "the same" field compare equal.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Iterator, Sequence

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    NotPrimePower,
    OutOfRange,
    TooLarge,
)

MAX_ORDER = 1 << 20
# Extension fields up to this order get log/antilog tables for multiplication.
TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``(p, kappa)`` with ``q == p**kappa``."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    kappa = 0
    n = q
    while n % p == 0:
        n //= p
        kappa += 1
    if n != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, kappa


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), coefficient lists with the constant term first --

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    r = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise DivisionByZero("polynomial division by zero")
    lead_inv = pow(b[-1], -1, p)
    quo = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        c = r[-1] * lead_inv % p
        quo[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % p
        _trim(r)
    return _trim(quo), r


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_inverse_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Inverse of ``a`` modulo the irreducible ``m`` by extended Euclid."""
    r0, r1 = _trim(list(m)), _trim(list(a))
    s0, s1 = [], [1]
    while r1:
        quo, rem = _poly_divmod(r0, r1, p)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(quo, s1, p), p)
    # r0 is a nonzero constant because m is irreducible
    c = pow(r0[0], -1, p)
    return [x * c % p for x in s0]


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f) / 2."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not _poly_divmod(f, list(tail) + [1], p)[1]:
                return False
    return True


def _smallest_modulus(p: int, kappa: int) -> tuple[int, ...]:
    for n in range(p**kappa):
        coeffs = [(n // p**i) % p for i in range(kappa)] + [1]
        if coeffs[0] == 0:
            continue
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError(f"no irreducible polynomial of degree {kappa} over GF({p})")


class GF:
    """The finite field of order ``p**kappa``. Build with :func:`field_new`."""

    def __init__(self, p: int, kappa: int, modulus: tuple[int, ...]):
        self.p = p
        self.kappa = kappa
        self.q = p**kappa
        self.modulus = modulus
        self._pows = tuple(p**i for i in range(kappa))
        self._inv_cache: dict[int, int] = {}
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._digits: list[tuple[int, ...]] | None = None
        if kappa > 1 and self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers --

    def _build_tables(self) -> None:
        q = self.q
        self._digits = [self._to_coeffs(n) for n in range(q)]
        g = self._primitive_element()
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_poly(x, g)
        exp[q - 1:] = exp[: q - 1]
        self._exp, self._log = exp, log

    def _primitive_element(self) -> int:
        order = self.q - 1
        cofactors = [order // r for r in _prime_factors(order)]
        for g in range(2, self.q):
            if all(self._pow_poly(g, c) != 1 for c in cofactors):
                return g
        raise AssertionError("multiplicative group has no generator")

    # -- encoding --

    def _to_coeffs(self, n: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.kappa):
            n, r = divmod(n, p)
            out.append(r)
        return tuple(out)

    def _from_coeffs(self, coeffs: Sequence[int]) -> int:
        return sum(c * w for c, w in zip(coeffs, self._pows))

    def _coeffs(self, n: int) -> tuple[int, ...]:
        if self._digits is not None:
            return self._digits[n]
        return self._to_coeffs(n)

    # -- raw arithmetic on encodings --

    def _add(self, u: int, v: int) -> int:
        p = self.p
        if self.kappa == 1:
            return (u + v) % p
        if p == 2:
            return u ^ v
        cu, cv = self._coeffs(u), self._coeffs(v)
        return sum(((a + b) % p) * w for a, b, w in zip(cu, cv, self._pows))

    def _neg(self, u: int) -> int:
        p = self.p
        if self.kappa == 1:
            return -u % p
        if p == 2:
            return u
        return sum((-a % p) * w for a, w in zip(self._coeffs(u), self._pows))

    def _sub(self, u: int, v: int) -> int:
        return self._add(u, self._neg(v))

    def _mul(self, u: int, v: int) -> int:
        if self.kappa == 1:
            return u * v % self.p
        if not u or not v:
            return 0
        if self._log is not None:
            return self._exp[self._log[u] + self._log[v]]
        return self._mul_poly(u, v)

    def _mul_poly(self, u: int, v: int) -> int:
        prod = _poly_mul(self._coeffs(u), self._coeffs(v), self.p)
        rem = _poly_divmod(prod, self.modulus, self.p)[1]
        return self._from_coeffs(rem)

    def _pow_poly(self, u: int, n: int) -> int:
        result = 1
        while n:
            if n & 1:
                result = self._mul_poly(result, u)
            u = self._mul_poly(u, u)
            n >>= 1
        return result

    def _inv(self, u: int) -> int:
        if u == 0:
            raise DivisionByZero(f"0 has no inverse in {self.name}")
        cached = self._inv_cache.get(u)
        if cached is None:
            if self.kappa == 1:
                cached = pow(u, -1, self.p)
            else:
                inv = _poly_inverse_mod(_trim(list(self._coeffs(u))), self.modulus, self.p)
                cached = self._from_coeffs(inv)
            self._inv_cache[u] = cached
        return cached

    def _inv_by_power(self, u: int) -> int:
        """Inverse as ``u**(q-2)``; kept as an independent cross-check."""
        if u == 0:
            raise DivisionByZero(f"0 has no inverse in {self.name}")
        if self.kappa == 1:
            return pow(u, self.q - 2, self.p)
        return self._pow_poly(u, self.q - 2)

    # -- public surface --

    @property
    def name(self) -> str:
        return f"GF{self.q}" if self.kappa == 1 else f"GF{self.p}^{self.kappa}"

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def __call__(self, n: int) -> FieldElement:
        return decode(self, n)

    def __iter__(self) -> Iterator[FieldElement]:
        for n in range(self.q):
            yield FieldElement(self, n)

    def __len__(self) -> int:
        return self.q

    def nonzero(self) -> Iterator[FieldElement]:
        for n in range(1, self.q):
            yield FieldElement(self, n)

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        if len(coeffs) > self.kappa:
            raise OutOfRange(f"{len(coeffs)} coefficients for a degree-{self.kappa} extension")
        return FieldElement(self, self._from_coeffs([c % self.p for c in coeffs]))

    def to_dict(self) -> dict:
        return {"p": self.p, "kappa": self.kappa, "modulus": list(self.modulus)}

    def __repr__(self) -> str:
        return f"{self.name}(modulus={list(self.modulus)})"

    def __reduce__(self):
        return field_new, (self.p, self.kappa)


class FieldElement:
    """An element of a :class:`GF`. Immutable; supports ``+ - * / **``.

    Arithmetic with plain ints is refused on purpose: in an extension field
    the int ``2`` would mean the generator, not ``1 + 1``.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        self.field = field
        self.value = value

    def _check(self, other: object) -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field is not self.field and other.field.q != self.field.q:
            raise FieldMismatch(f"{self.field.name} vs {other.field.name}")
        return other.value

    def __add__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.field._add(self.value, self._check(other)))

    def __sub__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.field._sub(self.value, self._check(other)))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field._neg(self.value))

    def __mul__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.field._mul(self.value, self._check(other)))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        v = self.field._inv(self._check(other))
        return FieldElement(self.field, self.field._mul(self.value, v))

    def __pow__(self, n: int) -> FieldElement:
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = self.field.one
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field._inv(self.value))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field._coeffs(self.value)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.value == other.value and self.field.q == other.field.q

    def __hash__(self) -> int:
        return hash((self.field.q, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.field.name}({self.value})"


@functools.lru_cache(maxsize=None)
def field_new(p: int, kappa: int = 1) -> GF:
    """The field GF(p^kappa), with the smallest monic irreducible modulus.

    Candidate moduli are ordered by their non-leading coefficients read
    low-to-high as a base-p integer. A prime field stores the placeholder
    modulus ``lam`` (coefficients ``(0, 1)``).
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if kappa < 1:
        raise OutOfRange(f"extension degree must be >= 1, got {kappa}")
    if p**kappa > MAX_ORDER:
        raise TooLarge(f"{p}^{kappa} exceeds the supported order {MAX_ORDER}")
    modulus = (0, 1) if kappa == 1 else _smallest_modulus(p, kappa)
    return GF(p, kappa, modulus)


def field_for_order(q: int) -> GF:
    p, kappa = prime_power(q)
    return field_new(p, kappa)


def field_from_dict(data: dict) -> GF:
    field = field_new(int(data["p"]), int(data["kappa"]))
    if "modulus" in data and list(data["modulus"]) != list(field.modulus):
        raise ValueError(f"modulus {data['modulus']} is not the canonical one {list(field.modulus)}")
    return field


def add(u: FieldElement, v: FieldElement) -> FieldElement:
    return u + v


def sub(u: FieldElement, v: FieldElement) -> FieldElement:
    return u - v


def neg(u: FieldElement) -> FieldElement:
    return -u


def mul(u: FieldElement, v: FieldElement) -> FieldElement:
    return u * v


def inv(u: FieldElement) -> FieldElement:
    return u.inverse()


def encode(u: FieldElement) -> int:
    return u.value


def decode(field: GF, n: int) -> FieldElement:
    if not 0 <= n < field.q:
        raise OutOfRange(f"{n} is not an encoding in 0..{field.q - 1}")
    return FieldElement(field, int(n))


def sign_canonical(y: FieldElement) -> FieldElement:
    """Representative of ``{y, -y}`` with the smaller encoding."""
    m = -y
    return m if m.value < y.value else y


def quadratic_is_irreducible(field: GF, a: FieldElement) -> bool:
    """Whether ``z**2 + a*z + 1`` has no root in the field (exhaustive scan)."""
    one = field.one
    return all(z * z + a * z + one for z in field)

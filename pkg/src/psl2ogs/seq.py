"""Parameter selection and the recursive sequences over F_q.

Index conventions are fixed and shared by every module:

* ``a_k`` for ``1 <= k <= t-1`` (``a_1 = a``),
* ``b_l`` for ``0 <= l <= t-1`` (``b_0 = b``, odd q only),
* ``alpha_r``, ``beta_r``, ``gamma_r`` for ``-1 <= r <= t-1``,

where ``t = (q+1) / gcd(2, q+1)`` is the order of u(a)s in PSL_2(q).
:class:`SeqTables` hides the offsets behind accessor methods; serialised
tables carry explicit index keys.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .errors import (
    EvenCharacteristic,
    IndexOutOfRange,
    InternalInvariantViolation,
    InvalidA,
    InvalidB,
    NoValidA,
    NotOddCharacteristic,
)
from .gf import GF, FieldElement, quadratic_is_irreducible
from .psl2 import sl2_order_of_us


def coset_count(field: GF) -> int:
    q = field.q
    return (q + 1) // math.gcd(2, q + 1)


def is_valid_a(field: GF, a: FieldElement) -> bool:
    return quadratic_is_irreducible(field, a) and sl2_order_of_us(field, a) == field.q + 1


def select_a(field: GF) -> FieldElement:
    """Smallest a with ``z^2 + a z + 1`` irreducible and u(a)s of order q+1 in SL_2."""
    for a in field:
        if is_valid_a(field, a):
            return a
    raise NoValidA(f"no admissible a in {field.name}")


def _a_terms(field: GF, a: FieldElement, t: int) -> list[FieldElement]:
    terms = [a]
    for k in range(1, t - 1):
        prev = terms[-1]
        if not prev:
            raise InternalInvariantViolation(f"a_{k} = 0 before k = t-1 = {t - 1}")
        terms.append(a - prev.inverse())
    if terms[-1]:
        raise InternalInvariantViolation(f"a_{t - 1} = {int(terms[-1])}, expected 0")
    return terms


def select_b(field: GF, a: FieldElement, override: FieldElement | None = None) -> FieldElement:
    """1 if it avoids every a_k, otherwise -1; or a validated user choice."""
    if field.p == 2:
        raise NotOddCharacteristic("b is not used in characteristic 2")
    excluded = set(_a_terms(field, a, coset_count(field)))
    if override is not None:
        if override in excluded:
            raise InvalidB(f"b = {int(override)} coincides with some a_k")
        return override
    one = field.one
    b = one if one not in excluded else -one
    if b in excluded:
        raise InternalInvariantViolation("both 1 and -1 occur among the a_k")
    return b


@dataclass(frozen=True)
class OgsParams:
    field: GF
    a: FieldElement
    b: FieldElement | None
    t: int

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def odd(self) -> bool:
        return self.field.p != 2

    def to_dict(self) -> dict:
        out = {**self.field.to_dict(), "q": self.q, "t": self.t, "a": int(self.a)}
        if self.b is not None:
            out["b"] = int(self.b)
        return out


def make_params(field: GF, a: FieldElement | None = None, b: FieldElement | None = None) -> OgsParams:
    if a is None:
        a = select_a(field)
    elif not is_valid_a(field, a):
        raise InvalidA(
            f"a = {int(a)}: need z^2 + a z + 1 irreducible with a root of order {field.q + 1}"
        )
    if field.p == 2:
        if b is not None:
            raise NotOddCharacteristic("b is not used in characteristic 2")
        return OgsParams(field, a, None, coset_count(field))
    return OgsParams(field, a, select_b(field, a, b), coset_count(field))


def a_sequence(params: OgsParams) -> list[FieldElement]:
    """``[a_1, ..., a_{t-1}]`` from ``a_{k+1} = a - 1/a_k``; the last term is 0."""
    return _a_terms(params.field, params.a, params.t)


def b_sequence(params: OgsParams) -> list[FieldElement]:
    """``[b_0, ..., b_{t-1}]`` from ``b_{l+1} = a - 1/b_l``, checked to wrap to b_0."""
    if params.b is None:
        raise NotOddCharacteristic("b_l is only defined for odd q")
    a = params.a
    terms = [params.b]
    for l in range(params.t):
        prev = terms[-1]
        if not prev:
            raise InternalInvariantViolation(f"b_{l} = 0")
        terms.append(a - prev.inverse())
    if terms.pop() != params.b:
        raise InternalInvariantViolation("b sequence does not return to b_0 after t steps")
    return terms


def alpha_recursive(params: OgsParams) -> list[FieldElement]:
    """``[alpha_{-1}, ..., alpha_{t-1}]`` from ``alpha_{k+1} = a alpha_k - alpha_{k-1}``."""
    field, a = params.field, params.a
    vals = [field.zero, field.one]
    for _ in range(params.t - 1):
        vals.append(a * vals[-1] - vals[-2])
    if vals[-1]:
        raise InternalInvariantViolation(f"alpha_(t-1) = {int(vals[-1])}, expected 0")
    return vals


def _check_alpha_index(params: OgsParams, k: int) -> None:
    if not -1 <= k <= params.t - 1:
        raise IndexOutOfRange(f"alpha index {k} outside -1..{params.t - 1}")


def alpha_closed_form(params: OgsParams, k: int) -> FieldElement:
    """Second-kind Dickson value ``E_k(a, 1) = sum_i (-1)^i C(k-i, i) a^(k-2i)``.

    Binomials are exact integers reduced mod p only at the end.
    """
    _check_alpha_index(params, k)
    field, a = params.field, params.a
    if k == -1:
        return field.zero
    acc = field.zero
    for i in range(k // 2 + 1):
        coeff = (-1) ** i * math.comb(k - i, i) % field.p
        if coeff:
            acc = acc + _int_times(field, coeff) * a ** (k - 2 * i)
    return acc


def _int_times(field: GF, n: int) -> FieldElement:
    """The field element n * 1 (n reduced mod p beforehand)."""
    return field.from_coeffs([n % field.p])


def alpha_chebyshev(params: OgsParams, k: int) -> FieldElement:
    """``U_k(a/2)`` by the Chebyshev recurrence ``U_{n+1} = 2z U_n - U_{n-1}``."""
    field = params.field
    if field.p == 2:
        raise EvenCharacteristic("2 is not invertible in characteristic 2")
    _check_alpha_index(params, k)
    two = field.one + field.one
    z = params.a / two
    prev, cur = field.zero, field.one
    if k == -1:
        return prev
    for _ in range(k):
        prev, cur = cur, two * z * cur - prev
    return cur


def beta_gamma(params: OgsParams, alpha: list[FieldElement] | None = None):
    """``(beta, gamma)``, each indexed -1..t-1 like ``alpha``.

    ``beta_{-1} = 1`` by definition; ``beta_k = b alpha_k - alpha_{k-1}``
    for ``k >= 0`` and ``gamma_r = alpha_r + b beta_r``.
    """
    if params.b is None:
        raise NotOddCharacteristic("beta and gamma need b, which exists only for odd q")
    alpha = alpha_recursive(params) if alpha is None else alpha
    b = params.b
    beta = [params.field.one]
    for i in range(1, len(alpha)):
        beta.append(b * alpha[i] - alpha[i - 1])
    gamma = [al + b * be for al, be in zip(alpha, beta)]
    return beta, gamma


@dataclass(frozen=True)
class SeqTables:
    """All sequences for one :class:`OgsParams`, with offset-aware accessors."""

    params: OgsParams
    a_values: tuple[FieldElement, ...]
    b_values: tuple[FieldElement, ...] | None
    alpha_values: tuple[FieldElement, ...]
    beta_values: tuple[FieldElement, ...] | None
    gamma_values: tuple[FieldElement, ...] | None
    # encode(a~) -> (branch, k), branch 0 for a_k and 1 for b_k
    lookup: dict[int, tuple[int, int]] = dc_field(repr=False, compare=False)
    cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    @property
    def field(self) -> GF:
        return self.params.field

    @property
    def t(self) -> int:
        return self.params.t

    @property
    def odd(self) -> bool:
        return self.params.odd

    def a(self, k: int) -> FieldElement:
        if not 1 <= k <= self.t - 1:
            raise IndexOutOfRange(f"a_k needs 1 <= k <= {self.t - 1}, got {k}")
        return self.a_values[k - 1]

    def b(self, l: int) -> FieldElement:
        if self.b_values is None:
            raise NotOddCharacteristic("b_l is only defined for odd q")
        if not 0 <= l <= self.t - 1:
            raise IndexOutOfRange(f"b_l needs 0 <= l <= {self.t - 1}, got {l}")
        return self.b_values[l]

    def _signed(self, values, r: int, name: str) -> FieldElement:
        if values is None:
            raise NotOddCharacteristic(f"{name} is only defined for odd q")
        if not -1 <= r <= self.t - 1:
            raise IndexOutOfRange(f"{name} index {r} outside -1..{self.t - 1}")
        return values[r + 1]

    def alpha(self, r: int) -> FieldElement:
        return self._signed(self.alpha_values, r, "alpha")

    def beta(self, r: int) -> FieldElement:
        return self._signed(self.beta_values, r, "beta")

    def gamma(self, r: int) -> FieldElement:
        return self._signed(self.gamma_values, r, "gamma")

    def to_dict(self) -> dict:
        def indexed(values, start):
            if values is None:
                return None
            return {str(i): int(v) for i, v in enumerate(values, start)}

        out = self.params.to_dict()
        out["a_seq"] = indexed(self.a_values, 1)
        if self.odd:
            out["b_seq"] = indexed(self.b_values, 0)
        out["alpha"] = indexed(self.alpha_values, -1)
        if self.odd:
            out["beta"] = indexed(self.beta_values, -1)
            out["gamma"] = indexed(self.gamma_values, -1)
        return out

    def to_tsv(self) -> str:
        def cell(values, i, start):
            if values is None or not 0 <= i - start < len(values):
                return ""
            return str(int(values[i - start]))

        lines = ["index\ta_k\tb_k\talpha\tbeta\tgamma"]
        for i in range(-1, self.t):
            lines.append("\t".join([
                str(i),
                cell(self.a_values, i, 1),
                cell(self.b_values, i, 0),
                cell(self.alpha_values, i, -1),
                cell(self.beta_values, i, -1),
                cell(self.gamma_values, i, -1),
            ]))
        return "\n".join(lines) + "\n"


def build_tables(params: OgsParams) -> SeqTables:
    a_vals = a_sequence(params)
    alpha = alpha_recursive(params)
    lookup = {v.value: (0, k) for k, v in enumerate(a_vals, 1)}
    b_vals = beta = gamma = None
    if params.odd:
        b_vals = b_sequence(params)
        beta, gamma = beta_gamma(params, alpha)
        for l, v in enumerate(b_vals):
            if v.value in lookup:
                raise InternalInvariantViolation(f"b_{l} = {int(v)} repeats an earlier coset label")
            lookup[v.value] = (1, l)
    return SeqTables(
        params,
        tuple(a_vals),
        None if b_vals is None else tuple(b_vals),
        tuple(alpha),
        None if beta is None else tuple(beta),
        None if gamma is None else tuple(gamma),
        lookup,
    )


def tables_for(field: GF, a: FieldElement | None = None, b: FieldElement | None = None) -> SeqTables:
    return build_tables(make_params(field, a, b))


def product_formulas(tables: SeqTables) -> dict[str, dict | None]:
    """Check the ratio and running-product descriptions of a_k, b_l.

    Returns identity name -> first counterexample, or ``None`` when the
    identity holds everywhere.
    """
    t = tables.t
    out: dict[str, dict | None] = {}

    def first(cases):
        for case in cases:
            if case is not None:
                return case
        return None

    def ratio(num, den, lhs, idx):
        if not den:
            return {"index": idx, "reason": "zero denominator"}
        if lhs != num / den:
            return {"index": idx, "expected": int(num / den), "actual": int(lhs)}
        return None

    out["a_k = alpha_k / alpha_(k-1)"] = first(
        ratio(tables.alpha(k), tables.alpha(k - 1), tables.a(k), k) for k in range(1, t)
    )

    def running(values, start, targets):
        prod = tables.field.one
        for i, v in enumerate(values):
            prod = prod * v
            if prod != targets(i + start):
                return {"index": i + start, "expected": int(prod), "actual": int(targets(i + start))}
        return None

    out["alpha_k = a_1 ... a_k"] = running(tables.a_values, 1, tables.alpha)
    if tables.odd:
        out["b_l = beta_l / beta_(l-1)"] = first(
            ratio(tables.beta(l), tables.beta(l - 1), tables.b(l), l) for l in range(t)
        )
        out["beta_l = b_0 ... b_l"] = running(tables.b_values, 0, tables.beta)
    return out

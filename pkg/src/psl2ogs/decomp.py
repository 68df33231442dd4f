"""BN-pair and OGS canonical forms of PSL_2(q) elements.

BN form: an element of the Borel subgroup B is ``u(x) h(y)``; anything else
is ``u(a~) s u(x) h(y)``. OGS form, for fixed parameters (a, b):

    odd q:  [u(a)s]^k [u(b) s u(-b)]^ell u(x) h(y),   0 <= k < t, ell in {0, 1}
    q even: [u(a)s]^k u(x) h(y),                      0 <= k <= q

Since ``h(y) == h(-y)`` in PSL_2(q) for odd q, the ``y`` of both forms is
stored sign-canonically (smaller encoding of ``{y, -y}``).
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .errors import IndexOutOfRange, InternalInvariantViolation
from .gf import GF, FieldElement, sign_canonical
from .psl2 import ProjMatrix, gen_h, gen_s, gen_u, ppow
from .seq import SeqTables


@dataclass(frozen=True)
class BnForm:
    """``a_tilde is None`` marks the Borel case ``u(x) h(y)``."""

    a_tilde: FieldElement | None
    x: FieldElement
    y: FieldElement

    @property
    def in_borel(self) -> bool:
        return self.a_tilde is None

    def realize(self) -> ProjMatrix:
        m = gen_u(self.x) * gen_h(self.y)
        if self.a_tilde is None:
            return m
        return gen_u(self.a_tilde) * gen_s(self.x.field) * m

    def to_dict(self) -> dict:
        a = None if self.a_tilde is None else int(self.a_tilde)
        return {"a": a, "x": int(self.x), "y": int(self.y)}


def bn_form(a_tilde: FieldElement | None, x: FieldElement, y: FieldElement) -> BnForm:
    return BnForm(a_tilde, x, sign_canonical(y))


@dataclass(frozen=True)
class OgsForm:
    k: int
    ell: int
    x: FieldElement
    y: FieldElement

    def to_dict(self) -> dict:
        return {"k": self.k, "ell": self.ell, "x": int(self.x), "y": int(self.y)}


def ogs_form(k: int, ell: int, x: FieldElement, y: FieldElement) -> OgsForm:
    return OgsForm(k, ell, x, sign_canonical(y))


def bn_decompose(M: ProjMatrix) -> BnForm:
    """Read the BN form straight off the matrix entries [[A, B], [C, D]]."""
    A, B, C, D = M.entries
    if not C:
        return bn_form(None, B * A, A)
    return bn_form(A / C, D * C, -C)


def _check_indices(tables: SeqTables, form: OgsForm) -> None:
    if form.ell not in (0, 1) or (form.ell == 1 and not tables.odd):
        raise IndexOutOfRange(f"ell = {form.ell} is not allowed for q = {tables.field.q}")
    if not 0 <= form.k < tables.t:
        raise IndexOutOfRange(f"k = {form.k} outside 0..{tables.t - 1}")
    if not form.y:
        raise IndexOutOfRange("y must be nonzero")


def ogs_to_bn(tables: SeqTables, form: OgsForm) -> BnForm:
    """Closed-form conversion through the a, b, alpha, beta, gamma tables."""
    _check_indices(tables, form)
    k, x, y = form.k, form.x, form.y
    if form.ell == 0:
        if k == 0:
            return bn_form(None, x, y)
        al = tables.alpha(k - 1)
        return bn_form(tables.a(k), al * al * (x + tables.a(k) - tables.params.a), al * y)
    be, ga = tables.beta(k - 1), tables.gamma(k - 1)
    return bn_form(tables.b(k), be * (be * x - ga), be * y)


def bn_to_ogs(tables: SeqTables, form: BnForm) -> OgsForm:
    """Inverse of :func:`ogs_to_bn`; the coset label a~ picks the branch and k."""
    if form.a_tilde is None:
        return ogs_form(0, 0, form.x, form.y)
    hit = tables.lookup.get(form.a_tilde.value)
    if hit is None:
        raise InternalInvariantViolation(
            f"a~ = {int(form.a_tilde)} is neither some a_k nor some b_k"
        )
    branch, k = hit
    if branch == 0:
        inv_al = tables.alpha(k - 1).inverse()
        x = form.x * inv_al * inv_al + tables.params.a - tables.a(k)
        return ogs_form(k, 0, x, form.y * inv_al)
    inv_be = tables.beta(k - 1).inverse()
    x = (form.x * inv_be + tables.gamma(k - 1)) * inv_be
    return ogs_form(k, 1, x, form.y * inv_be)


def coset_generators(tables: SeqTables) -> tuple[ProjMatrix, ProjMatrix | None]:
    """``(u(a)s, u(b) s u(-b))``; the second is ``None`` in characteristic 2."""
    field, a, b = tables.field, tables.params.a, tables.params.b
    s = gen_s(field)
    us = gen_u(a) * s
    return us, None if b is None else gen_u(b) * s * gen_u(-b)


def coset_representative(tables: SeqTables, k: int, ell: int) -> ProjMatrix:
    """``[u(a)s]^k [u(b) s u(-b)]^ell`` as a literal matrix product (memoised)."""
    key = ("rep", k, ell)
    rep = tables.cache.get(key)
    if rep is None:
        us, w = coset_generators(tables)
        rep = ppow(us, k)
        if ell:
            rep = rep * w
        tables.cache[key] = rep
    return rep


def ogs_compose(tables: SeqTables, form: OgsForm) -> ProjMatrix:
    _check_indices(tables, form)
    return coset_representative(tables, form.k, form.ell) * gen_u(form.x) * gen_h(form.y)


def matrix_to_ogs(tables: SeqTables, M: ProjMatrix) -> OgsForm:
    return bn_to_ogs(tables, bn_decompose(M))


def power_bn_forms(tables: SeqTables) -> tuple[list[BnForm], list[BnForm] | None]:
    """Closed-form BN data of the coset representatives.

    First list: ``[u(a)s]^k`` for ``1 <= k <= t-1`` as
    ``(a_k, -alpha_{k-2} alpha_{k-1}, alpha_{k-1})``. Second list (odd q):
    ``[u(a)s]^k [u(b) s u(-b)]`` for ``0 <= k <= t-1`` as
    ``(b_k, -beta_{k-1} gamma_{k-1}, beta_{k-1})``.
    """
    t = tables.t
    plain = [
        bn_form(tables.a(k), -tables.alpha(k - 2) * tables.alpha(k - 1), tables.alpha(k - 1))
        for k in range(1, t)
    ]
    if not tables.odd:
        return plain, None
    twisted = [
        bn_form(tables.b(k), -tables.beta(k - 1) * tables.gamma(k - 1), tables.beta(k - 1))
        for k in range(t)
    ]
    return plain, twisted


def canonical_ys(field: GF) -> list[FieldElement]:
    """One representative of each ``{y, -y}``, y nonzero."""
    return [y for y in field.nonzero() if sign_canonical(y) == y]


def iter_ogs_forms(tables: SeqTables) -> Iterator[OgsForm]:
    """Every legal canonical OGS form, in (ell, k, x, y) order."""
    field = tables.field
    ys = canonical_ys(field)
    for ell in ((0, 1) if tables.odd else (0,)):
        for k in range(tables.t):
            for x in field:
                for y in ys:
                    yield OgsForm(k, ell, x, y)


"""Named, exhaustive checks of every identity the package relies on.

Each check returns ``None`` on success or a counterexample dict (inputs,
expected, actual) for the first failure found. Ground truth for the
sequence and conversion checks always comes from raw matrix arithmetic in
:mod:`psl2ogs.psl2`, never from the closed forms being tested.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field as dc_field

from . import decomp, gf, psl2, seq
from .errors import IndexOutOfRange, Psl2Error, UnsupportedQ
from .gf import GF, FieldElement

SUITES = ("field", "matrix", "sequences", "identities", "conversion", "enumeration")

# Elementwise checks over all of PSL_2(q) run exhaustively up to this group
# order and on a deterministic sample beyond it.
EXHAUSTIVE_GROUP_ORDER = 40_000
SAMPLE_SIZE = 2_000
PAIRWISE_COSET_MAX_Q = 7
ENUMERATION_MAX_Q = 32
# Scans that are quadratic in q (or t) are sampled above this size.
QUADRATIC_SCAN_LIMIT = 1024
VERIFY_MAX_Q = 4096

# Every structural fact the decompositions rest on; each must be covered by
# at least one registered check.
PROPERTY_CHECKLIST = (
    "final_a_term_vanishes",
    "a_b_recursions",
    "product_formulas",
    "coset_covering",
    "a_reciprocal_and_sum_symmetry",
    "a_midpoint_values",
    "a_k_from_earlier_terms",
    "b_closed_forms",
    "b_unit_symmetry",
    "alpha_identities",
    "power_bn_data",
    "ogs_to_bn_formulas",
    "coset_generator_order",
    "admissible_parameter_exists",
    "ogs_unique_presentation",
    "bn_coset_criterion",
    "generator_relations",
    "chebyshev_agreement",
)


@dataclass
class CheckResult:
    name: str
    q: int
    passed: bool
    counterexample: dict | None = None
    skipped: str | None = None
    info: dict | None = None
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        out: dict = {"name": self.name, "pass": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.info:
            out["info"] = self.info
        if self.skipped is not None:
            out["skipped"] = self.skipped
        return out


@dataclass
class CheckReport:
    suite: str
    q: int
    checks: list[CheckResult] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        # elapsed times are left out so that reports are byte-stable
        return {"suite": self.suite, "q": self.q, "checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            if c.skipped is not None:
                out.append(f"SKIP  q={c.q:<4} {c.name}  ({c.skipped})")
            else:
                extra = "".join(f"  {k}={v}" for k, v in sorted((c.info or {}).items()))
                out.append(f"{'PASS' if c.passed else 'FAIL'}  q={c.q:<4} {c.name}{extra}")
                if c.counterexample is not None:
                    out.append(f"      counterexample: {json.dumps(c.counterexample, sort_keys=True)}")
        return out


class Context:
    """Lazily built field, parameters and tables for one q."""

    def __init__(self, field: GF):
        self.field = field
        self._tables: seq.SeqTables | None = None
        self._elements: list[psl2.ProjMatrix] | None = None
        # scratch space a check may fill with reportable facts
        self.info: dict = {}

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def tables(self) -> seq.SeqTables:
        if self._tables is None:
            self._tables = seq.tables_for(self.field)
        return self._tables

    @property
    def params(self) -> seq.OgsParams:
        return self.tables.params

    @property
    def rng(self) -> random.Random:
        return random.Random(self.q)

    def exhaustive(self) -> bool:
        return psl2.group_order(self.field) <= EXHAUSTIVE_GROUP_ORDER

    def forms(self) -> list[decomp.OgsForm]:
        T = self.tables
        if self.exhaustive():
            return list(decomp.iter_ogs_forms(T))
        rng, F = self.rng, self.field
        return [
            decomp.ogs_form(rng.randrange(T.t), rng.randrange(2) if T.odd else 0,
                            F(rng.randrange(F.q)), F(rng.randrange(1, F.q)))
            for _ in range(SAMPLE_SIZE)
        ]

    def some(self, values, n: int) -> list:
        """All of ``values`` if there are at most ``n``, else a fixed sample."""
        values = list(values)
        return values if len(values) <= n else self.rng.sample(values, n)

    def elements(self) -> list[psl2.ProjMatrix]:
        """All of PSL_2(q) by brute force over determinant-one matrices."""
        if self._elements is None:
            self._elements = brute_force_elements(self.field)
        return self._elements


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    covers: tuple[str, ...]
    func: Callable[[Context], dict | None]
    odd_only: bool = False
    max_q: int | None = None


REGISTRY: list[Check] = []


def check(suite: str, *covers: str, odd_only: bool = False, max_q: int | None = None):
    def register(func):
        REGISTRY.append(Check(func.__name__, suite, covers, func, odd_only, max_q))
        return func

    return register


def _plain(value):
    if isinstance(value, FieldElement):
        return int(value)
    if isinstance(value, (decomp.BnForm, decomp.OgsForm)):
        return value.to_dict()
    if isinstance(value, psl2.ProjMatrix):
        return value.encodings()
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def mismatch(inputs: dict, expected, actual) -> dict:
    return {"inputs": _plain(inputs), "expected": _plain(expected), "actual": _plain(actual)}


def first_failure(cases: Iterable[tuple[dict, object, object]]) -> dict | None:
    """First ``(inputs, expected, actual)`` with ``expected != actual``."""
    for inputs, expected, actual in cases:
        if expected != actual:
            return mismatch(inputs, expected, actual)
    return None


def _pairs(ctx: Context, values: list, limit: int = 64) -> Iterable[tuple]:
    if len(values) <= limit:
        return itertools.product(values, repeat=2)
    rng = ctx.rng
    return [(rng.choice(values), rng.choice(values)) for _ in range(limit * limit)]


# -- brute-force oracles ----------------------------------------------------

def brute_force_elements(field: GF) -> list[psl2.ProjMatrix]:
    """Every determinant-one matrix mod +-I, by scanning all q^4 entry tuples."""
    mul, sub = field._mul, field._sub
    seen = set()
    out = []
    rng = range(field.q)
    for a, b, c, d in itertools.product(rng, repeat=4):
        if sub(mul(a, d), mul(b, c)) == 1:
            m = psl2.ProjMatrix(field, (a, b, c, d))
            if m not in seen:
                seen.add(m)
                out.append(m)
    return out


def oracle_bn_of_power(
    field: GF | seq.OgsParams, a: FieldElement, k: int, b: FieldElement | None = None
) -> decomp.BnForm:
    """BN form of ``[u(a)s]^k`` (times ``u(b) s u(-b)`` if ``b`` is given).

    Raw matrix power followed by reading off the entries; no sequence
    formula is involved.
    """
    if isinstance(field, seq.OgsParams):
        field = field.field
    t = seq.coset_count(field)
    if b is None and not 1 <= k <= t - 1:
        raise IndexOutOfRange(f"k = {k} outside 1..{t - 1}")
    if b is not None and not 0 <= k <= t - 1:
        raise IndexOutOfRange(f"k = {k} outside 0..{t - 1}")
    s = psl2.gen_s(field)
    m = psl2.ppow(psl2.gen_u(a) * s, k)
    if b is not None:
        m = m * psl2.gen_u(b) * s * psl2.gen_u(-b)
    return decomp.bn_decompose(m)


def euler_phi(n: int) -> int:
    return sum(1 for i in range(1, n + 1) if math.gcd(i, n) == 1)


# -- field ------------------------------------------------------------------

@check("field")
def field_axioms(ctx: Context):
    F = ctx.field
    els = list(F)
    if F.q <= 32:
        triples = itertools.product(els, repeat=3)
    else:
        rng = ctx.rng
        triples = [tuple(rng.choice(els) for _ in range(3)) for _ in range(5000)]
    zero, one = F.zero, F.one
    for u, v, w in triples:
        laws = {
            "add_assoc": ((u + v) + w, u + (v + w)),
            "mul_assoc": ((u * v) * w, u * (v * w)),
            "add_comm": (u + v, v + u),
            "mul_comm": (u * v, v * u),
            "distrib": (u * (v + w), u * v + u * w),
            "add_identity": (u + zero, u),
            "mul_identity": (u * one, u),
            "add_inverse": (u + (-u), zero),
            "sub": (u - v, u + (-v)),
        }
        if u:
            laws["mul_inverse"] = (u * u.inverse(), one)
        for law, (lhs, rhs) in laws.items():
            if lhs != rhs:
                return mismatch({"law": law, "u": u, "v": v, "w": w}, rhs, lhs)
    return None


@check("field")
def inverse_methods_agree(ctx: Context):
    F = ctx.field
    vals = ctx.some(range(1, F.q), 500)
    return first_failure(({"u": u}, F._inv_by_power(u), F._inv(u)) for u in vals)


@check("field")
def table_multiplication_matches_polynomial(ctx: Context):
    F = ctx.field
    if F.kappa == 1:
        return first_failure(({"u": u, "v": v}, u * v % F.p, F._mul(u, v)) for u, v in _pairs(ctx, list(range(F.q))))
    return first_failure(
        ({"u": u, "v": v}, F._mul_poly(u, v), F._mul(u, v)) for u, v in _pairs(ctx, list(range(F.q)))
    )


@check("field")
def encode_decode_roundtrip(ctx: Context):
    F = ctx.field
    for n in range(F.q):
        e = gf.decode(F, n)
        if gf.encode(e) != n or F.from_coeffs(e.coeffs) != e:
            return mismatch({"n": n}, n, gf.encode(e))
    if gf.encode(F.zero) != 0 or gf.encode(F.one) != 1:
        return {"reason": "0 or 1 has the wrong encoding"}
    return None


@check("field")
def quadratic_irreducibility_oracle(ctx: Context):
    """Root scan agrees with trying every factorisation (z - r)(z - 1/r)."""
    F = ctx.field
    split = {-(r + r.inverse()) for r in F.nonzero()}
    return first_failure(
        ({"a": a}, a not in split, gf.quadratic_is_irreducible(F, a))
        for a in ctx.some(F, QUADRATIC_SCAN_LIMIT)
    )


# -- matrix -----------------------------------------------------------------

def _random_word(ctx: Context, rng: random.Random, length: int) -> psl2.ProjMatrix:
    F = ctx.field
    m = psl2.identity(F)
    for _ in range(length):
        kind = rng.randrange(3)
        if kind == 0:
            m = m * psl2.gen_u(F(rng.randrange(F.q)))
        elif kind == 1:
            m = m * psl2.gen_h(F(rng.randrange(1, F.q)))
        else:
            m = m * psl2.gen_s(F)
    return m


def _samples(ctx: Context, n: int = 300) -> list[psl2.ProjMatrix]:
    if ctx.q <= 13:
        return ctx.elements()
    rng = ctx.rng
    return [_random_word(ctx, rng, rng.randrange(1, 12)) for _ in range(n)]


@check("matrix")
def determinant_and_canonical_form(ctx: Context):
    F = ctx.field
    for m in _samples(ctx):
        if m.det() != F.one:
            return mismatch({"matrix": m}, 1, m.det())
        raw = m._e
        negated = tuple(F._neg(v) for v in raw)
        if psl2.ProjMatrix(F, negated) != m or psl2.ProjMatrix(F, raw)._e != raw:
            return mismatch({"matrix": m}, "canonical and sign-invariant", list(negated))
        if F.p != 2:
            lead = next(v for v in raw if v)
            if not lead < F._neg(lead):
                return mismatch({"matrix": m}, "leading entry below its negation", lead)
    return None


@check("matrix")
def group_laws(ctx: Context):
    F = ctx.field
    rng = ctx.rng
    els = _samples(ctx)
    one = psl2.identity(F)
    for _ in range(300):
        A, B, C = (rng.choice(els) for _ in range(3))
        if (A * B) * C != A * (B * C):
            return mismatch({"A": A, "B": B, "C": C}, (A * B) * C, A * (B * C))
    for A in els:
        a, b, c, d = A.entries
        inv = psl2.matrix(d, -b, -c, a)
        if A * one != A or one * A != A or A * inv != one or A.inverse() != inv:
            return mismatch({"A": A}, one, A * inv)
    return None


@check("matrix", "generator_relations")
def generator_relations(ctx: Context):
    F = ctx.field
    u, h, s = psl2.gen_u, psl2.gen_h, psl2.gen_s(F)
    xs, ys = list(F), list(F.nonzero())

    def cases():
        for x1, x2 in _pairs(ctx, xs):
            yield {"rel": "u(x1)u(x2)", "x1": x1, "x2": x2}, u(x1 + x2), u(x1) * u(x2)
        for y1, y2 in _pairs(ctx, ys):
            yield {"rel": "h(y1)h(y2)", "y1": y1, "y2": y2}, h(y1 * y2), h(y1) * h(y2)
        for x in xs:
            for y in (ys if F.q <= 64 else ys[:64]):
                yield {"rel": "h(y)u(x)", "x": x, "y": y}, u(x * y * y) * h(y), h(y) * u(x)
        for x in xs[1:]:
            yield ({"rel": "s u(x) s", "x": x},
                   u(-x.inverse()) * s * u(-x) * h(x), s * u(x) * s)
        for y in ys:
            yield {"rel": "s h(y)", "y": y}, h(y.inverse()) * s, s * h(y)
        yield {"rel": "s^2"}, psl2.identity(F), s * s
        yield {"rel": "h(y) = h(-y)"}, True, all(h(y) == h(-y) for y in ys)

    return first_failure(cases())


@check("matrix", "coset_generator_order")
def coset_generator_order(ctx: Context):
    F, a, t = ctx.field, ctx.params.a, ctx.params.t
    us = psl2.gen_u(a) * psl2.gen_s(F)
    return first_failure([
        ({"a": a, "group": "PSL2"}, t, psl2.element_order(us)),
        ({"a": a, "group": "SL2"}, F.q + 1, psl2.sl2_order_of_us(F, a)),
        ({"a": a, "power": t}, psl2.identity(F), psl2.ppow(us, t)),
    ])


@check("matrix", "admissible_parameter_exists")
def admissible_parameters(ctx: Context):
    """Valid a are exactly the traces -(w + 1/w) of roots w of order q+1.

    There are phi(q+1)/2 of them, every one has an irreducible quadratic,
    and the selected a is the smallest.
    """
    F = ctx.field
    if F.q > QUADRATIC_SCAN_LIMIT:
        ctx.info["sampled"] = True
        for a in ctx.some(F, 200):
            if (psl2.sl2_order_of_us(F, a) == F.q + 1) != seq.is_valid_a(F, a):
                return mismatch({"a": a}, psl2.sl2_order_of_us(F, a) == F.q + 1, seq.is_valid_a(F, a))
        return None
    valid = [a for a in F if psl2.sl2_order_of_us(F, a) == F.q + 1]
    for a in valid:
        if not gf.quadratic_is_irreducible(F, a):
            return mismatch({"a": a}, "irreducible", "reducible")
    expected = euler_phi(F.q + 1) // 2
    if len(valid) != expected:
        return mismatch({"q": F.q}, expected, len(valid))
    if seq.select_a(F) != valid[0]:
        return mismatch({"q": F.q}, valid[0], seq.select_a(F))
    return None


@check("matrix")
def borel_membership(ctx: Context):
    F = ctx.field
    for m in _samples(ctx):
        expected = not m.m21
        upper = psl2.in_borel(m)
        if expected != upper:
            return mismatch({"matrix": m}, expected, upper)
    return first_failure([
        ({"gen": "u(1)"}, True, psl2.in_borel(psl2.gen_u(F.one))),
        ({"gen": "s"}, False, psl2.in_borel(psl2.gen_s(F))),
    ])


# -- sequences --------------------------------------------------------------

@check("sequences", "final_a_term_vanishes", "a_b_recursions")
def a_sequence_matches_matrix_powers(ctx: Context):
    T = ctx.tables
    a, t = T.params.a, T.t

    def cases():
        yield {"k": 1}, a, T.a(1)
        yield {"k": t - 1}, ctx.field.zero, T.a(t - 1)
        for k in range(1, t - 1):
            yield {"k": k + 1, "via": "recursion"}, a - T.a(k).inverse(), T.a(k + 1)
        for k in range(1, t):
            yield {"k": k, "via": "matrix"}, oracle_bn_of_power(ctx.field, a, k).a_tilde, T.a(k)

    return first_failure(cases())


@check("sequences", "a_b_recursions", odd_only=True)
def b_sequence_matches_matrix_products(ctx: Context):
    T = ctx.tables
    a, b, t = T.params.a, T.params.b, T.t

    def cases():
        yield {"l": 0}, b, T.b(0)
        for l in range(t - 1):
            yield {"l": l + 1, "via": "recursion"}, a - T.b(l).inverse(), T.b(l + 1)
        yield {"l": "wrap"}, b, a - T.b(t - 1).inverse()
        for l in range(t):
            yield {"l": l, "via": "matrix"}, oracle_bn_of_power(ctx.field, a, l, b).a_tilde, T.b(l)

    return first_failure(cases())


@check("sequences", "chebyshev_agreement")
def alpha_three_way(ctx: Context):
    T = ctx.tables
    P = T.params

    def cases():
        for k in ctx.some(range(-1, T.t), 256):
            yield {"k": k, "via": "dickson"}, T.alpha(k), seq.alpha_closed_form(P, k)
            if T.odd:
                yield {"k": k, "via": "chebyshev"}, T.alpha(k), seq.alpha_chebyshev(P, k)
        yield {"k": -1, "def": "alpha_-1"}, ctx.field.zero, T.alpha(-1)
        yield {"k": 0, "def": "alpha_0"}, ctx.field.one, T.alpha(0)

    return first_failure(cases())


@check("sequences", "product_formulas")
def ratio_and_product_formulas(ctx: Context):
    for name, cex in seq.product_formulas(ctx.tables).items():
        if cex is not None:
            return {"identity": name, **cex}
    return None


@check("sequences", "coset_covering")
def coset_labels_partition_field(ctx: Context):
    """The a~ labels of the q coset representatives outside B are all of F_q.

    Labels are read from the literal matrices, then compared with the
    sequence tables.
    """
    T, F = ctx.tables, ctx.field
    labels = []
    for k in range(1, T.t):
        labels.append(decomp.bn_decompose(decomp.coset_representative(T, k, 0)).a_tilde)
    if T.odd:
        for k in range(T.t):
            labels.append(decomp.bn_decompose(decomp.coset_representative(T, k, 1)).a_tilde)
    tabled = list(T.a_values) + (list(T.b_values) if T.odd else [])
    if labels != tabled:
        return mismatch({"q": F.q}, labels, tabled)
    if len(labels) != F.q or set(labels) != set(F):
        return mismatch({"q": F.q}, sorted(range(F.q)), sorted(int(v) for v in labels))
    return None


@check("sequences", "b_unit_symmetry", odd_only=True)
def b_default_is_unit(ctx: Context):
    """b = 1 or b = -1 always avoids every a_k, so the default is a unit."""
    P, T = ctx.params, ctx.tables
    one = ctx.field.one
    if P.b not in (one, -one):
        return mismatch({"q": ctx.q}, "b in {1, -1}", P.b)
    if P.b in set(T.a_values):
        return mismatch({"q": ctx.q}, "b not among a_k", P.b)
    return None


# -- identities -------------------------------------------------------------

@check("sequences", "a_reciprocal_and_sum_symmetry")
def a_reciprocal_and_sum(ctx: Context):
    T = ctx.tables
    a, t, one = T.params.a, T.t, ctx.field.one

    def cases():
        for k in range(1, t - 1):
            yield {"k": k, "rel": "a_k a_(t-k-1)"}, one, T.a(k) * T.a(t - k - 1)
        for k in range(1, t):
            yield {"k": k, "rel": "a_k + a_(t-k)"}, a, T.a(k) + T.a(t - k)

    return first_failure(cases())


@check("identities", "a_midpoint_values")
def a_midpoint(ctx: Context):
    T, F = ctx.tables, ctx.field
    q, one = F.q, F.one
    if F.p == 2:
        return first_failure([({"k": q // 2}, one, T.a(q // 2))])
    if (q - 1) % 4 == 0:
        k = (q - 1) // 4
        v = T.a(k)
        return None if v in (one, -one) else mismatch({"k": k}, "1 or -1", v)
    k = (q + 1) // 4
    return first_failure([({"k": k}, T.params.a / (one + one), T.a(k))])


@check("identities", "a_k_from_earlier_terms")
def a_from_earlier_terms(ctx: Context):
    """a_k = a_l - [(a_1..a_(l-1)) (a_(k-l)..a_(k-2)) a_(k-1)]^-1 for l < k."""
    T = ctx.tables
    t = T.t
    one = ctx.field.one
    # prefix[i] = a_1 ... a_i; every factor is nonzero up to a_(t-2)
    prefix = [one]
    for i in range(1, t - 1):
        prefix.append(prefix[-1] * T.a(i))

    def prod(lo, hi):
        return prefix[hi] / prefix[lo - 1] if hi >= lo else one

    def cases():
        for k in range(2, t):
            for l in ctx.some(range(1, k), 64):
                denom = prod(1, l - 1) * prod(k - l, k - 2) * T.a(k - 1)
                yield {"k": k, "l": l}, T.a(l) - denom.inverse(), T.a(k)
            squares = prod(1, k - 2)
            special = T.a(k - 1) - (squares * squares * T.a(k - 1)).inverse()
            yield {"k": k, "l": "k-1 squared form"}, special, T.a(k)

    return first_failure(cases())


@check("identities", "b_closed_forms", odd_only=True)
def b_closed_forms(ctx: Context):
    T = ctx.tables
    a, b, t, one = T.params.a, T.params.b, T.t, ctx.field.one

    def cases():
        yield {"l": 0}, b, T.b(0)
        for l in range(1, t):
            al = T.a(l)
            yield {"l": l, "form": "(a_l b - 1)/(b - a_(t-l))"}, (al * b - one) / (b - T.a(t - l)), T.b(l)
            yield {"l": l, "form": "(1 - a_l b)/(a - b - a_l)"}, (one - al * b) / (a - b - al), T.b(l)
            if l >= 2:
                yield ({"l": l, "form": "(a_l b - 1)/(b - 1/a_(l-1))"},
                       (al * b - one) / (b - T.a(l - 1).inverse()), T.b(l))
        yield {"l": t - 1, "form": "1/(a - b)"}, (a - b).inverse(), T.b(t - 1)
        for l in range(2, t - 1):
            lhs = T.b(l) * T.b(l + 1) / (T.a(l) * T.a(l - 1))
            rhs = (T.a(l + 1) * b - one) / (T.a(l - 1) * b - one)
            yield {"l": l, "form": "b_l b_(l+1) / (a_l a_(l-1))"}, rhs, lhs

    return first_failure(cases())


@check("identities", "b_unit_symmetry", odd_only=True)
def b_unit_symmetry(ctx: Context):
    T, F = ctx.tables, ctx.field
    a, b, t, one = T.params.a, T.params.b, T.t, F.one
    if b not in (one, -one):
        return None

    def bb(i):
        return T.b(i % t)

    def cases():
        for l in range(t):
            yield {"l": l, "rel": "b_l b_(t-l)"}, one, bb(l) * bb(t - l)
            yield {"l": l, "rel": "b_l + b_(t-l+1)"}, a, bb(l) + bb(t - l + 1)

    return first_failure(cases())


@check("identities", "alpha_identities")
def alpha_identities(ctx: Context):
    T, F = ctx.tables, ctx.field
    t, one = T.t, F.one
    al = T.alpha

    def cases():
        yield {"clause": "alpha_(t-1)"}, F.zero, al(t - 1)
        yield {"clause": "alpha_(t-2) = +-1"}, True, al(t - 2) in (one, -one)
        for k in range(-1, t):
            yield ({"clause": "alpha_(t-k-2) = +-alpha_k", "k": k},
                   True, al(t - k - 2) in (al(k), -al(k)))
            yield ({"clause": "alpha_(t-2) alpha_k = alpha_(t-k-2)", "k": k},
                   al(t - k - 2), al(t - 2) * al(k))
        for k in range(t):
            for l in ctx.some(range(k + 1), 64):
                yield ({"clause": "alpha_l alpha_(k-1) - alpha_(l-1) alpha_k", "k": k, "l": l},
                       al(k - l - 1), al(l) * al(k - 1) - al(l - 1) * al(k))
        for k in range(t - 1):
            yield ({"clause": "(alpha_k + 1)(alpha_k - 1)", "k": k},
                   al(k + 1) * al(k - 1), (al(k) + one) * (al(k) - one))

    return first_failure(cases())


@check("identities", "alpha_identities", "b_unit_symmetry", odd_only=True)
def beta_gamma_identities(ctx: Context):
    T, F = ctx.tables, ctx.field
    t, b, one = T.t, T.params.b, F.one
    al, be, ga = T.alpha, T.beta, T.gamma

    def cases():
        for k in range(t):
            yield ({"clause": "1 + alpha_(k-1) beta_k", "k": k},
                   al(k) * be(k - 1), one + al(k - 1) * be(k))
            yield ({"clause": "1 + gamma_(k-1) beta_k", "k": k},
                   ga(k) * be(k - 1), one + ga(k - 1) * be(k))
            if b in (one, -one):
                # exact sign: beta_(t-k-1) = b beta_k holds only up to -alpha_(t-2)
                yield ({"clause": "beta_(t-k-1) = -alpha_(t-2) b beta_k", "k": k},
                       -al(t - 2) * b * be(k), be(t - k - 1))
                yield ({"clause": "beta_(t-k-1) = +-b beta_k", "k": k},
                       True, be(t - k - 1) in (b * be(k), -b * be(k)))

    return first_failure(cases())


# -- conversion -------------------------------------------------------------

@check("conversion", "power_bn_data")
def power_bn_forms_match_matrices(ctx: Context):
    T, F = ctx.tables, ctx.field
    plain, twisted = decomp.power_bn_forms(T)

    def cases():
        for k, form in enumerate(plain, 1):
            yield {"k": k, "ell": 0}, oracle_bn_of_power(F, T.params.a, k), form
        for k, form in enumerate(twisted or [], 0):
            yield {"k": k, "ell": 1}, oracle_bn_of_power(F, T.params.a, k, T.params.b), form
        yield {"k": 1, "x_1": 0, "y_1": 1}, decomp.bn_form(T.params.a, F.zero, F.one), plain[0]

    return first_failure(cases())


@check("conversion", "ogs_to_bn_formulas")
def ogs_to_bn_matches_composition(ctx: Context):
    T = ctx.tables
    return first_failure(
        ({"form": f}, decomp.bn_decompose(decomp.ogs_compose(T, f)), decomp.ogs_to_bn(T, f))
        for f in ctx.forms()
    )


@check("conversion", "ogs_unique_presentation")
def round_trips(ctx: Context):
    T = ctx.tables

    def cases():
        for f in ctx.forms():
            m = decomp.ogs_compose(T, f)
            bn = decomp.ogs_to_bn(T, f)
            yield {"form": f, "via": "matrix"}, f, decomp.matrix_to_ogs(T, m)
            yield {"form": f, "via": "bn"}, f, decomp.bn_to_ogs(T, bn)
            yield {"form": f, "via": "realize"}, m, bn.realize()
        if ctx.q <= 13:
            for m in ctx.elements():
                yield {"matrix": m}, m, decomp.ogs_compose(T, decomp.matrix_to_ogs(T, m))

    return first_failure(cases())


@check("conversion")
def bn_decompose_realizes(ctx: Context):
    """bn_decompose(M) recomposes to M, and flipping the sign of y is harmless."""
    def cases():
        for m in (ctx.elements() if ctx.q <= 13 else _samples(ctx)):
            bn = decomp.bn_decompose(m)
            yield {"matrix": m}, m, bn.realize()
            flipped = decomp.BnForm(bn.a_tilde, bn.x, -bn.y)
            yield {"matrix": m, "y": "negated"}, m, flipped.realize()
        yield {"matrix": "identity"}, decomp.bn_form(None, ctx.field.zero, ctx.field.one), \
            decomp.bn_decompose(psl2.identity(ctx.field))

    return first_failure(cases())


@check("conversion", "bn_coset_criterion")
def bn_label_identifies_left_coset(ctx: Context):
    """Equal a~ labels <=> same left coset gB, for elements outside B.

    Every q: each label class is one full coset (size |B|, all members
    related to a fixed one by B) and there are q classes. For small q the
    criterion is also checked over all pairs.
    """
    F = ctx.field
    if ctx.exhaustive():
        outside = [decomp.ogs_compose(ctx.tables, f) for f in decomp.iter_ogs_forms(ctx.tables)]
    else:
        outside = [decomp.ogs_compose(ctx.tables, f) for f in ctx.forms()]
    outside = [m for m in outside if not psl2.in_borel(m)]
    classes: dict[int, list] = {}
    for m in outside:
        classes.setdefault(decomp.bn_decompose(m).a_tilde.value, []).append(m)
    borel_order = psl2.group_order(F) // (F.q + 1)
    for label, members in classes.items():
        g1 = members[0]
        for g2 in members:
            if not psl2.in_borel(g2.inverse() * g1):
                return mismatch({"a~": label, "g1": g1, "g2": g2}, "g2^-1 g1 in B", "not in B")
        if ctx.exhaustive() and len(members) != borel_order:
            return mismatch({"a~": label}, borel_order, len(members))
    if ctx.exhaustive() and len(classes) != F.q:
        return mismatch({"q": F.q}, F.q, len(classes))
    if F.q <= PAIRWISE_COSET_MAX_Q:
        labels = [decomp.bn_decompose(m).a_tilde for m in outside]
        for (g1, l1), (g2, l2) in itertools.product(zip(outside, labels), repeat=2):
            same_coset = psl2.in_borel(g2.inverse() * g1)
            if (l1 == l2) != same_coset:
                return mismatch({"g1": g1, "g2": g2}, same_coset, l1 == l2)
    return None


@check("conversion", "ogs_to_bn_formulas", "final_a_term_vanishes")
def zero_x_elements(ctx: Context):
    """Matrices [[r1, -1/r2], [r2, 0]] have x~ = 0 and a~ = r1/r2."""
    T, F = ctx.tables, ctx.field
    a = T.params.a
    r1s, r2s = list(F), list(F.nonzero())
    if not ctx.exhaustive():
        r1s, r2s = ctx.some(r1s, 64), ctx.some(r2s, 16)

    def cases():
        for r1 in r1s:
            for r2 in r2s:
                m = psl2.matrix(r1, -r2.inverse(), r2, F.zero)
                bn = decomp.bn_decompose(m)
                yield {"r1": r1, "r2": r2}, decomp.bn_form(r1 / r2, F.zero, r2), bn
                branch, k = T.lookup[bn.a_tilde.value]
                ogs = decomp.bn_to_ogs(T, bn)
                if branch == 0:
                    expected_x = a - T.a(k)
                else:
                    expected_x = T.params.b + T.alpha(k - 1) / T.beta(k - 1)
                    yield {"r1": r1, "r2": r2, "x": "gamma/beta"}, expected_x, T.gamma(k - 1) / T.beta(k - 1)
                yield {"r1": r1, "r2": r2, "branch": branch, "k": k}, expected_x, ogs.x
        s = psl2.gen_s(F)
        inverse_gen = s * psl2.gen_u(-a)
        form = decomp.ogs_form(T.t - 1, 0, F.zero, F.one)
        yield {"form": form, "rel": "[u(a)s]^(t-1) = s u(-a)"}, inverse_gen, decomp.ogs_compose(T, form)

    return first_failure(cases())


# -- enumeration ------------------------------------------------------------

@check("enumeration", "ogs_unique_presentation", max_q=ENUMERATION_MAX_Q)
def ogs_bijection(ctx: Context):
    """Composing every legal OGS form hits each element of PSL_2(q) exactly once."""
    T = ctx.tables
    composed: dict = {}
    n_forms = 0
    for f in decomp.iter_ogs_forms(T):
        n_forms += 1
        m = decomp.ogs_compose(T, f)
        if m in composed:
            return mismatch({"form": f, "other": composed[m]}, "distinct elements", m)
        composed[m] = f
    brute = set(ctx.elements())
    ctx.info["elements"] = len(brute)
    if len(composed) != len(brute) or set(composed) != brute:
        return mismatch({"q": ctx.q, "forms": n_forms}, len(brute), len(composed))
    return None


def _supported_field(q: int | GF) -> GF:
    if not isinstance(q, GF):
        try:
            q = gf.field_for_order(int(q))
        except Psl2Error as exc:
            raise UnsupportedQ(str(exc)) from exc
    if q.q > VERIFY_MAX_Q:
        raise UnsupportedQ(f"verification supports q <= {VERIFY_MAX_Q}, got {q.q}")
    return q


def checks_for(suite: str) -> list[Check]:
    if suite == "all":
        return list(REGISTRY)
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    return [c for c in REGISTRY if c.suite == suite]


def run_check(c: Check, ctx: Context) -> CheckResult:
    if c.odd_only and ctx.field.p == 2:
        return CheckResult(c.name, ctx.q, True, skipped="char 2")
    if c.max_q is not None and ctx.q > c.max_q:
        return CheckResult(c.name, ctx.q, True, skipped=f"exhaustive check limited to q <= {c.max_q}")
    start = time.perf_counter()
    ctx.info = {}
    try:
        cex = c.func(ctx)
    except Psl2Error as exc:
        cex = {"error": type(exc).__name__, "message": str(exc)}
    return CheckResult(c.name, ctx.q, cex is None, cex, info=ctx.info or None,
                       elapsed=time.perf_counter() - start)


def run_suite(q: int | GF, suite: str = "all") -> CheckReport:
    """Run one suite (or ``"all"``) for the field of order ``q``."""
    field = _supported_field(q)
    selected = checks_for(suite)
    ctx = Context(field)
    report = CheckReport(suite, field.q)
    for c in selected:
        report.checks.append(run_check(c, ctx))
    return report


def coverage() -> dict[str, list[str]]:
    """Checklist property -> names of the checks covering it."""
    out: dict[str, list[str]] = {p: [] for p in PROPERTY_CHECKLIST}
    for c in REGISTRY:
        for p in c.covers:
            out.setdefault(p, []).append(c.name)
    return out

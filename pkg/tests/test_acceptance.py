"""Acceptance gate: one test and one summary line per criterion."""

import json
import time

from click.testing import CliRunner
from conftest import ACCEPTANCE, DESK_Q, SMALL_Q

from psl2ogs import decomp, gf, psl2, seq, verify
from psl2ogs.cli import cli

A29 = [4, 11, 25, 26, 14, 6, 28, 5, 27, 19, 7, 8, 22, 0]
B29 = [1, 3, 23, 9, 20, 17, 21, 15, 2, 18, 12, 16, 13, 24, 10]
ALPHA29 = [0, 1, 4, 15, 27, 6, 26, 11, 18, 3, 23, 2, 14, 25, 28, 0]
BETA29 = [1, 1, 3, 11, 12, 8, 20, 14, 7, 14, 20, 8, 12, 11, 3, 1]

CONVERSIONS_29 = [
    ((5, 0, 7, 9), (14, 3, 4)),
    ((6, 0, 27, 3), (6, 0, 9)),
    ((7, 1, 10, 3), (15, 15, 13)),
    ((7, 1, 8, 5), (15, 0, 12)),
]


def record(n, title, ok, elapsed, limit, detail=""):
    ok = ok and (limit is None or elapsed < limit)
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}  [{elapsed:.2f}s{budget}]"
    ACCEPTANCE[n] = line + (f"  {detail}" if detail else "")
    assert ok, ACCEPTANCE[n]


def test_criterion_1_table_reproduction():
    start = time.perf_counter()
    res = CliRunner().invoke(cli, ["tables", "--q", "29", "--format", "json"])
    data = json.loads(res.output)
    got = (
        [data["a_seq"][str(i)] for i in range(1, 15)],
        [data["b_seq"][str(i)] for i in range(0, 15)],
        [data["alpha"][str(i)] for i in range(-1, 15)],
        [data["beta"][str(i)] for i in range(-1, 15)],
    )
    ok = res.exit_code == 0 and got == (A29, B29, ALPHA29, BETA29)
    record(1, "q=29 a, b, alpha, beta tables exact", ok, time.perf_counter() - start, 1.0)


def test_criterion_2_worked_conversions():
    start = time.perf_counter()
    F = gf.field_for_order(29)
    T = seq.tables_for(F)
    bad = []
    for (k, ell, x, y), (a, bx, by) in CONVERSIONS_29:
        form = decomp.ogs_form(k, ell, F(x), F(y))
        bn = decomp.bn_form(F(a), F(bx), F(by))
        if not (decomp.ogs_to_bn(T, form) == bn
                and decomp.bn_to_ogs(T, bn) == form
                and decomp.bn_decompose(decomp.ogs_compose(T, form)) == bn):
            bad.append((k, ell, x, y))
    record(2, "four q=29 conversions hold both ways", not bad, time.perf_counter() - start, 1.0,
           f"failing: {bad}" if bad else "")


def test_criterion_3_uniqueness_bijection():
    start = time.perf_counter()
    counts, bad = {}, []
    for q in SMALL_Q:
        r = verify.run_suite(q, "enumeration")
        counts[q] = r.checks[0].info["elements"] if r.checks[0].info else None
        if not r.passed or counts[q] != psl2.group_order(gf.field_for_order(q)):
            bad.append(q)
    record(3, "OGS forms biject onto brute-force PSL_2(q)", not bad, time.perf_counter() - start, 30.0,
           f"counts {counts}" + (f" failing {bad}" if bad else ""))


def test_criterion_4_identity_suites():
    start = time.perf_counter()
    bad = []
    for q in DESK_Q:
        for suite in ("sequences", "identities", "conversion"):
            r = verify.run_suite(q, suite)
            bad += [(q, c.name) for c in r.checks if not c.passed]
    record(4, f"sequence, identity and conversion suites for {len(DESK_Q)} fields", not bad,
           time.perf_counter() - start, 60.0, f"failing: {bad}" if bad else "")


def test_criterion_5_order_law():
    start = time.perf_counter()
    bad = []
    for q in DESK_Q:
        F = gf.field_for_order(q)
        a = seq.select_a(F)
        t = (q + 1) // (2 if q % 2 else 1)
        if psl2.element_order(psl2.gen_u(a) * psl2.gen_s(F)) != t or psl2.sl2_order_of_us(F, a) != q + 1:
            bad.append(q)
    record(5, "u(a)s has order t in PSL_2 and q+1 in SL_2", not bad, time.perf_counter() - start, None,
           f"failing: {bad}" if bad else "")


def test_criterion_6_covering_law():
    start = time.perf_counter()
    bad = []
    for q in DESK_Q:
        F = gf.field_for_order(q)
        T = seq.tables_for(F)
        a_labels = [decomp.bn_decompose(decomp.coset_representative(T, k, 0)).a_tilde for k in range(1, T.t)]
        labels = list(a_labels)
        if T.odd:
            labels += [decomp.bn_decompose(decomp.coset_representative(T, k, 1)).a_tilde for k in range(T.t)]
        if len(labels) != q or set(labels) != set(F):
            bad.append(q)
    record(6, "coset labels partition F_q", not bad, time.perf_counter() - start, None,
           f"failing: {bad}" if bad else "")

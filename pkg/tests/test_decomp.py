import itertools

import pytest
from hypothesis import given, settings, strategies as st

from psl2ogs import decomp, gf, psl2, seq, verify
from psl2ogs.errors import IndexOutOfRange

# (k, ell, x, y) -> (a~, x~, y~) over GF(29)
CONVERSIONS_29 = [
    ((5, 0, 7, 9), (14, 3, 4)),
    ((6, 0, 27, 3), (6, 0, 9)),
    ((7, 1, 10, 3), (15, 15, 13)),
    ((7, 1, 8, 5), (15, 0, 12)),
]


def ogs(F, k, ell, x, y):
    return decomp.ogs_form(k, ell, F(x), F(y))


def bn(F, a, x, y):
    return decomp.bn_form(None if a is None else F(a), F(x), F(y))


@pytest.mark.parametrize("src, dst", CONVERSIONS_29)
def test_worked_conversions(F29, T29, src, dst):
    f, b = ogs(F29, *src), bn(F29, *dst)
    assert decomp.ogs_to_bn(T29, f) == b
    assert decomp.bn_decompose(decomp.ogs_compose(T29, f)) == b
    assert decomp.bn_to_ogs(T29, b) == f
    assert decomp.matrix_to_ogs(T29, b.realize()) == f


def test_identity(F29, T29):
    I = psl2.identity(F29)
    assert decomp.bn_decompose(I) == bn(F29, None, 0, 1)
    assert decomp.matrix_to_ogs(T29, I) == ogs(F29, 0, 0, 0, 1)
    assert decomp.ogs_compose(T29, ogs(F29, 0, 0, 0, 1)) == I


def test_borel_round_trip(F29, T29):
    f = decomp.bn_to_ogs(T29, bn(F29, None, 5, 7))
    assert f == ogs(F29, 0, 0, 5, 7)


def test_bn_of_explicit_product(F29):
    m = psl2.gen_u(F29(14)) * psl2.gen_s(F29) * psl2.gen_u(F29(3)) * psl2.gen_h(F29(4))
    assert decomp.bn_decompose(m) == bn(F29, 14, 3, 4)


def test_zero_x_matrices(F29):
    for r1, r2 in [(3, 5), (0, 1), (28, 27)]:
        r1, r2 = F29(r1), F29(r2)
        m = psl2.matrix(r1, -r2.inverse(), r2, F29.zero)
        assert decomp.bn_decompose(m) == decomp.bn_form(r1 / r2, F29.zero, r2)


def test_last_power_is_inverse_generator(F29, T29):
    a = T29.params.a
    m = decomp.ogs_compose(T29, ogs(F29, 14, 0, 0, 1))
    assert m == psl2.gen_s(F29) * psl2.gen_u(-a)
    assert decomp.bn_decompose(m) == decomp.bn_form(F29.zero, -a, F29.one)


def test_power_data(F29, T29):
    plain, twisted = decomp.power_bn_forms(T29)
    assert plain[0] == bn(F29, 4, 0, 1)
    assert int(plain[4].y) == 6  # y_5 = alpha_4
    assert int(twisted[7].y) == int(gf.sign_canonical(F29(14)))  # y'_7 = beta_6
    assert verify.oracle_bn_of_power(F29, F29(4), 2).a_tilde == F29(11)
    assert verify.oracle_bn_of_power(F29, F29(4), 14).a_tilde == F29.zero
    with pytest.raises(IndexOutOfRange):
        verify.oracle_bn_of_power(F29, F29(4), 15)


def test_power_oracle_gf4(F4):
    T = seq.tables_for(F4)
    for k in range(1, T.t):
        assert verify.oracle_bn_of_power(F4, F4(2), k).a_tilde == T.a(k)


def test_illegal_forms(F29, T29, F4):
    with pytest.raises(IndexOutOfRange):
        decomp.ogs_compose(T29, ogs(F29, 15, 0, 0, 1))
    with pytest.raises(IndexOutOfRange):
        decomp.ogs_to_bn(T29, ogs(F29, 1, 2, 0, 1))
    with pytest.raises(IndexOutOfRange):
        decomp.ogs_to_bn(T29, ogs(F29, 1, 0, 0, 0))
    with pytest.raises(IndexOutOfRange):
        decomp.ogs_compose(seq.tables_for(F4), ogs(F4, 1, 1, 0, 1))


def test_y_canonical(F29):
    assert decomp.ogs_form(1, 0, F29(0), F29(28)).y == F29.one
    assert decomp.bn_form(None, F29(0), F29(20)).y == F29(9)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_every_element_round_trips(q):
    F = gf.field_for_order(q)
    T = seq.tables_for(F)
    elements = verify.brute_force_elements(F)
    assert len(elements) == psl2.group_order(F)
    for m in elements:
        assert decomp.ogs_compose(T, decomp.matrix_to_ogs(T, m)) == m
        assert decomp.bn_decompose(m).realize() == m


def test_psl2_7_has_168_elements():
    assert len(verify.brute_force_elements(gf.field_for_order(7))) == 168


@settings(deadline=None, max_examples=200)
@given(q=st.sampled_from([49, 64, 81, 97, 121, 125, 128]), data=st.data())
def test_random_forms_larger_q(q, data):
    F = gf.field_for_order(q)
    T = seq.tables_for(F)
    ell = data.draw(st.integers(0, 1 if T.odd else 0))
    k = data.draw(st.integers(0, T.t - 1))
    x = F(data.draw(st.integers(0, q - 1)))
    y = F(data.draw(st.integers(1, q - 1)))
    f = decomp.ogs_form(k, ell, x, y)
    m = decomp.ogs_compose(T, f)
    assert decomp.ogs_to_bn(T, f) == decomp.bn_decompose(m)
    assert decomp.matrix_to_ogs(T, m) == f


def test_form_count_matches_group_order():
    for q in (4, 5, 8, 9):
        F = gf.field_for_order(q)
        T = seq.tables_for(F)
        assert sum(1 for _ in decomp.iter_ogs_forms(T)) == psl2.group_order(F)


def test_bn_labels_pairwise_small():
    F = gf.field_for_order(5)
    els = [m for m in verify.brute_force_elements(F) if not psl2.in_borel(m)]
    for g1, g2 in itertools.product(els, repeat=2):
        same = decomp.bn_decompose(g1).a_tilde == decomp.bn_decompose(g2).a_tilde
        assert same == psl2.in_borel(g2.inverse() * g1)

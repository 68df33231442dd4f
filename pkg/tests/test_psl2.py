import pytest

from psl2ogs import gf, psl2
from psl2ogs.errors import DetNotOne, DivisionByZero, FieldMismatch


def test_generators_basic(F29):
    I = psl2.identity(F29)
    assert psl2.gen_u(F29.zero) == I
    assert psl2.gen_s(F29) * psl2.gen_s(F29) == I
    for y in F29.nonzero():
        assert psl2.gen_h(y) == psl2.gen_h(-y)
    with pytest.raises(DivisionByZero):
        psl2.gen_h(F29.zero)


def test_canonical_form(F29):
    m = psl2.matrix_from_ints(F29, [28, 0, 0, 28])
    assert m == psl2.identity(F29)
    assert m.encodings() == [1, 0, 0, 1]
    # first nonzero entry 28 flips to 1
    assert psl2.matrix_from_ints(F29, [0, 28, 1, 0]).encodings() == [0, 1, 28, 0]


def test_checked_constructor(F29, F4):
    with pytest.raises(DetNotOne):
        psl2.matrix_from_ints(F29, [1, 2, 3, 4])
    with pytest.raises(FieldMismatch):
        psl2.matrix(F29.one, F29.zero, F4.zero, F29.one)
    with pytest.raises(ValueError):
        psl2.matrix_from_ints(F29, [1, 0, 1])


def test_relations(F29):
    u, h, s = psl2.gen_u, psl2.gen_h, psl2.gen_s(F29)
    x1, x2, x, y = F29(5), F29(17), F29(6), F29(11)
    assert u(x1) * u(x2) == u(x1 + x2)
    assert h(y) * u(x) == u(x * y * y) * h(y)
    assert s * u(x) * s == u(-x.inverse()) * s * u(-x) * h(x)


def test_powers(F29):
    A = psl2.gen_u(F29(4)) * psl2.gen_s(F29)
    assert psl2.ppow(A, 0) == psl2.identity(F29)
    assert psl2.ppow(A, 2) == A * A
    assert psl2.ppow(A, 15) == psl2.identity(F29)
    assert A**-1 == A.inverse() == psl2.ppow(A, 14)
    with pytest.raises(ValueError):
        psl2.ppow(A, -1)


def test_orders(F29, F4):
    assert psl2.element_order(psl2.identity(F29)) == 1
    assert psl2.element_order(psl2.gen_u(F29(4)) * psl2.gen_s(F29)) == 15
    assert psl2.element_order(psl2.gen_u(F4(2)) * psl2.gen_s(F4)) == 5
    assert psl2.sl2_order_of_us(F29, F29(4)) == 30
    assert psl2.sl2_order_of_us(F29, F29(1)) == 3
    assert psl2.sl2_order_of_us(F4, F4(2)) == 5


def test_group_order():
    assert psl2.group_order(gf.field_for_order(7)) == 168
    assert psl2.group_order(gf.field_for_order(4)) == 60
    assert psl2.group_order(gf.field_for_order(5)) == 60


def test_borel(F29):
    assert psl2.in_borel(psl2.gen_u(F29(3)))
    assert not psl2.in_borel(psl2.gen_s(F29))
    m = psl2.gen_u(F29(14)) * psl2.gen_s(F29) * psl2.gen_u(F29(3)) * psl2.gen_h(F29(4))
    assert not psl2.in_borel(m)


def test_det_preserved_under_products(F29):
    m = psl2.identity(F29)
    for i in range(1, 40):
        m = m * psl2.gen_u(F29(i % 29)) * psl2.gen_s(F29) * psl2.gen_h(F29(1 + i % 28))
        assert m.det() == F29.one


def test_hash_matches_equality(F29):
    a = psl2.matrix_from_ints(F29, [2, 3, 5, 8])
    b = psl2.matrix_from_ints(F29, [27, 26, 24, 21])
    assert a == b and hash(a) == hash(b) and len({a, b}) == 1

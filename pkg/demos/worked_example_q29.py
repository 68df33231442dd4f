"""
The q = 29 worked example
=========================

With a = 4 and b = 1 the coset representatives [u(4)s]^k and
[u(4)s]^k u(1)s u(-1) carry the labels a_k and b_k. Their BN data comes from
the alpha, beta and gamma sequences. Below, the four tables are printed and
four elements are converted in both directions.
"""

from psl2ogs import decomp, gf, seq

F = gf.field_for_order(29)
T = seq.tables_for(F)
print(T.to_tsv())

# a_k a_(14-k) = 1 and b_k b_(15-k) = 1 (indices mod 15)
print("a_k * a_(14-k):", {int(T.a(k) * T.a(14 - k)) for k in range(1, 14)})
print("b_k * b_(15-k):", {int(T.b(k) * T.b((15 - k) % 15)) for k in range(15)})

for k, ell, x, y in [(5, 0, 7, 9), (6, 0, 27, 3), (7, 1, 10, 3), (7, 1, 8, 5)]:
    form = decomp.ogs_form(k, ell, F(x), F(y))
    bn = decomp.ogs_to_bn(T, form)
    m = decomp.ogs_compose(T, form)
    # the matrix route and the closed form agree, and the inverse map recovers the input
    assert decomp.bn_decompose(m) == bn and decomp.bn_to_ogs(T, bn) == form
    print(f"OGS {form.to_dict()}  ->  BN {bn.to_dict()}  matrix {m.encodings()}")

"""
Normal forms of arbitrary elements
==================================

Any determinant-one matrix can be decomposed. Here that happens over
GF(27), a degree-3 extension, and over GF(32), where there is no b branch.
The element is rebuilt from both normal forms.
"""

import random

from psl2ogs import decomp, gf, psl2, seq

rng = random.Random(0)

for q in (27, 32):
    F = gf.field_for_order(q)
    T = seq.tables_for(F)
    # a random word in the generators
    m = psl2.identity(F)
    for _ in range(8):
        m = m * psl2.gen_u(F(rng.randrange(q))) * psl2.gen_s(F) * psl2.gen_h(F(rng.randrange(1, q)))

    bn = decomp.bn_decompose(m)
    ogs = decomp.bn_to_ogs(T, bn)
    print(f"GF({q}) matrix {m.encodings()}")
    print("   BN ", bn.to_dict())
    print("   OGS", ogs.to_dict())
    assert bn.realize() == m == decomp.ogs_compose(T, ogs)

# the entry (t-1, 0, 0, 1) is the inverse of the coset generator u(a)s
F = gf.field_for_order(29)
T = seq.tables_for(F)
last = decomp.ogs_compose(T, decomp.ogs_form(T.t - 1, 0, F.zero, F.one))
print("[u(4)s]^14 == s u(-4):", last == psl2.gen_s(F) * psl2.gen_u(-T.params.a))

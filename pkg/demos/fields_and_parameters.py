"""
Finite fields and the choice of (a, b)
======================================

Every field GF(p^k) is built from the smallest monic irreducible modulus, and
elements travel as integers 0..q-1 (base-p digits of the coefficient vector).
"""

from psl2ogs import gf, psl2, seq
from psl2ogs.errors import InvalidA

# GF(4): modulus z^2 + z + 1, and w = encoding 2 satisfies w^2 = w + 1
F4 = gf.field_for_order(4)
w = F4(2)
print(F4, "w*w =", int(w * w), "w+1 =", int(w + F4.one))

# prime fields just reduce mod p
F29 = gf.field_for_order(29)
print("1/4 in GF(29):", int(F29(4).inverse()))

# a is the smallest element with z^2 + a z + 1 irreducible and u(a)s of
# order q+1 in SL_2(q); in PSL_2(q) that becomes t = (q+1)/gcd(2, q+1)
for q in (4, 9, 27, 29, 32):
    F = gf.field_for_order(q)
    params = seq.make_params(F)
    us = psl2.gen_u(params.a) * psl2.gen_s(F)
    print(f"q={q:>2}  a={int(params.a):>2}  b={None if params.b is None else int(params.b)}  t={params.t:>2}  "
          f"order of u(a)s = {psl2.element_order(us)}")

# other valid a can be requested; invalid ones are refused
print([int(a) for a in F29 if seq.is_valid_a(F29, a)])
print(seq.make_params(F29, F29(14)).to_dict())
try:
    seq.make_params(F29, F29(2))
except InvalidA as exc:
    print("rejected:", exc)

"""
The field and its point set
===========================

Points of PG(3,8) as roots of unity in GF(4096).
"""

import numpy as np

from cyclicpg import geometry as geo
from cyclicpg.gf2e import get_context

# q = 2^3, so E = GF(2^12); elements are plain ints, bit i is the coefficient of X^i
ctx = get_context(3)
print("modulus", ctx.modulus_hex, "generator", ctx.to_hex(ctx.generator))
print("|E*| =", ctx.order, "=", " * ".join(map(str, ctx.order_factorization)))

# multiplication goes through log tables; the carry-less path gives the same answer
x, y = 0x5A3, 0x0F1
print(ctx.to_hex(ctx.mul(x, y)), ctx.to_hex(ctx.mul_clmul(x, y)))

# the points are the (q^3+q^2+q+1)-th roots of unity
P = geo.subgroup_array(ctx, "P")
print("points:", len(P))

# and each one splits uniquely as lam * u * v over S, O_s and O_t
s, t = geo.s_and_t(ctx)
print("s =", s, " t =", t, " s*t =", s * t)
x = int(P[100])
lam, u, v = geo.decompose_luv(ctx, x)
print(ctx.to_hex(x), "=", ctx.to_hex(lam), "*", ctx.to_hex(u), "*", ctx.to_hex(v))
assert ctx.mul(ctx.mul(lam, u), v) == x

# subgroup orders divide |E*|
for tag in ("P", "S", "O", "Os", "Ot"):
    n = geo.subgroup_order(ctx, tag)
    print(f"{tag:>2}: {n:4d}  divides {ctx.order}: {ctx.order % n == 0}")

# vectorised arithmetic: every point raised to |P| is 1
print(np.all(ctx.vpow(P, len(P)) == 1))

"""
Suzuki-Tits ovoids and their polynomials
========================================

Build T_0 and T_1 at q = 8 and q = 32 and compare them with the zero sets
of Q_0 and Q_1.
"""

import time

from cyclicpg import geometry as geo
from cyclicpg import ovoids as ov
from cyclicpg import verify
from cyclicpg.gf2e import get_context

for m in (3, 5):
    ctx = get_context(m)
    q = ctx.q
    print(f"q = {q}")
    for i, poly in enumerate((ov.poly_Q0(ctx), ov.poly_Q1(ctx))):
        t0 = time.perf_counter()
        zeros = set(verify.brute_roots(ctx, poly))
        T = ov.build_T(ctx, i)
        print(f"  Q{i}(x) = {poly}")
        print(f"    {len(zeros)} zeros in E, equal to T{i}: {zeros == T.points}  ({time.perf_counter() - t0:.2f} s)")

# the elliptic quadric is the norm-one group; T_0 is none of its cosets
ctx = get_context(3)
q = ctx.q
O = ov.elliptic_quadric(ctx).points
T0 = ov.build_T(ctx, 0).points
S = geo.enumerate_subgroup(ctx, "S")
print("T0 is a coset of O:", any({ctx.mul(lam, u) for u in O} == T0 for lam in S))

# tangent map: tau(tau(x)^(q/2)) = x
for kind in ("elliptic", "tits0", "tits1"):
    ovd = ov.ovoid_for(ctx, kind)
    tau = ov.tau_for(ctx, kind)
    ok = all(ov.tau_apply(ctx, ovd, tau, ctx.pow(ov.tau_apply(ctx, ovd, tau, x), q // 2)) == x for x in ovd.points)
    print(f"{kind:>8}: tau exponent {tau.exponent}, involutive up to x -> x^(q/2): {ok}")

# a full report for one check
print(verify.run_check(ctx, "ovoid-property").to_json())

"""
W(q) and its polarities
=======================

The symplectic polarity omega, the lines L(beta) of W(q) and the
correlations delta, pi_0 and pi_1.
"""

from cyclicpg import geometry as geo
from cyclicpg import ovoids as ov
from cyclicpg.gf2e import get_context

ctx = get_context(3)
P = geo.enumerate_subgroup(ctx, "P")

# every point lies in its own omega-plane
print(all(ov.omega_eval(ctx, lam, lam) == 0 for lam in P))

# one totally isotropic line per point
lines = ov.wq_lines(ctx)
print(len(lines), "lines in W(8)")
print("L(1) isotropic:", ov.is_totally_isotropic(ctx, lines[0]))

# a point goes to a line and back to a point: delta returns x^(2q), pi_0 and pi_1 return x
for kind in ("delta", "pi0", "pi1"):
    c = ov.correlation(ctx, kind)
    back = [ov.apply_correlation_line(ctx, c, ov.apply_correlation_point(ctx, c, x)) for x in P]
    print(f"{kind:>5}: exponents {c.point_exponent:3d} / {c.line_exponent:3d}  involution: {back == P}")

# absolute points of pi_i
for i in (0, 1):
    pts = ov.absolute_points(ctx, ov.correlation(ctx, f"pi{i}"))
    print(f"pi{i}: {len(pts)} absolute points, equal to T{i}: {pts == ov.build_T(ctx, i).points}")

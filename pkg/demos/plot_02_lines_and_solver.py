"""
Lines and the projective polynomial
===================================

Lines are zero sets of x^(q+1) + alpha x + beta; their points come from
solving Y^(q+1) + Y + a = 0 in closed form.
"""

from cyclicpg import geometry as geo
from cyclicpg.gf2e import get_context

ctx = get_context(3)
q = ctx.q
P = geo.enumerate_subgroup(ctx, "P")

# the line through two points
y, z = P[3], P[200]
line = geo.line_through(ctx, y, z)
print("alpha", ctx.to_hex(line.alpha), "beta", ctx.to_hex(line.beta))
print("points:", [ctx.to_hex(p) for p in line.points])
assert y in line.points and z in line.points

# there are (q^2+1)(q^2+q+1) lines in all
alphas, betas = geo.enumerate_lines(ctx)
print(len(alphas), "lines")

# the solver takes the closed-form route exactly when F(a) = 1 + a^q + a^(q^2) vanishes
fast = [a for a in range(1, ctx.size) if geo.F_poly(ctx, a) == 0]
a = fast[0]
roots = geo.solve_projective_fast(ctx, a)
print("a =", ctx.to_hex(a), "->", len(roots), "roots via the closed form")
print("brute force agrees:", roots == geo.projective_roots_bruteforce(ctx, a))

# otherwise it tries every element of E
print("a = 0x001 ->", [ctx.to_hex(r) for r in geo.solve_projective(ctx, 1)])

# planes have q^2+q+1 points and meet each line in 1 or q+1 points
plane = geo.Plane(P[7])
members = set(geo.plane_points(ctx, plane))
print("plane size", len(members), "meets our line in", len(members & set(line.points)))

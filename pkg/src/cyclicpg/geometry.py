"""The cyclic model of PG(3,q) inside E = GF(q^4).

Points are the (q^3+q^2+q+1)-th roots of unity.  A line is the zero set in P
of x^(q+1) + alpha*x + beta, with beta a point and

    alpha^(q+1) = beta^q + beta^(q^2+q+1),

and a plane is the zero set of
sigma^(q^2+q+1) x^(q^2+q+1) + sigma^(q+1) x^(q+1) + sigma x + 1 with sigma in P.
"""

from __future__ import annotations

import enum
import functools
import threading
from dataclasses import dataclass, field

import numpy as np

from .errors import ConditionViolated, DegeneratePair, NotAPoint, ParityError
from .gf2e import FieldContext


class Subgroup(enum.Enum):
    P = "P"
    S = "S"
    O = "O"  # noqa: E741
    Os = "Os"
    Ot = "Ot"


def sqrt_2q(ctx: FieldContext) -> int:
    """The integer sqrt(2q) = 2^((m+1)/2); needs m odd."""
    if ctx.m % 2 == 0:
        raise ParityError(f"sqrt(2q) is not an integer for q = {ctx.q} (m even)")
    return 1 << ((ctx.m + 1) // 2)


def s_and_t(ctx: FieldContext) -> tuple[int, int]:
    r = sqrt_2q(ctx)
    return ctx.q - r + 1, ctx.q + r + 1


def point_count(ctx: FieldContext) -> int:
    q = ctx.q
    return q**3 + q**2 + q + 1


def subgroup_order(ctx: FieldContext, tag: Subgroup | str) -> int:
    tag = Subgroup(tag)
    q = ctx.q
    if tag is Subgroup.P:
        return point_count(ctx)
    if tag is Subgroup.S:
        return q + 1
    if tag is Subgroup.O:
        return q * q + 1
    s, t = s_and_t(ctx)
    return s if tag is Subgroup.Os else t


def subgroup_array(ctx: FieldContext, tag: Subgroup | str) -> np.ndarray:
    """Members of the subgroup as powers g^(k*N/n), k = 0..n-1 (sorted by discrete log)."""
    n = subgroup_order(ctx, tag)
    step = ctx.order // n
    return ctx.exp[np.arange(n, dtype=np.int64) * step]


def enumerate_subgroup(ctx: FieldContext, tag: Subgroup | str) -> list[int]:
    return subgroup_array(ctx, tag).tolist()


def is_point(ctx: FieldContext, x: int) -> bool:
    return x != 0 and ctx.pow(x, point_count(ctx)) == 1


def _check_point(ctx, x):
    if not is_point(ctx, x):
        raise NotAPoint(f"{ctx.to_hex(x)} is not a point of the cyclic model")


def _crt_idempotents(orders: list[int]) -> list[int]:
    """e_i with e_i = 1 mod orders[i] and 0 mod the others (orders pairwise coprime)."""
    total = 1
    for o in orders:
        total *= o
    out = []
    for o in orders:
        rest = total // o
        out.append(rest * pow(rest, -1, o) % total)
    return out


def decompose_lambda_u(ctx: FieldContext, x: int) -> tuple[int, int]:
    """Unique x = lam*u with lam in S, u in O."""
    _check_point(ctx, x)
    q = ctx.q
    e_lam, e_u = _crt_idempotents([q + 1, q * q + 1])
    return ctx.pow(x, e_lam), ctx.pow(x, e_u)


def decompose_luv(ctx: FieldContext, x: int) -> tuple[int, int, int]:
    """Unique x = lam*u*v with lam in S, u in O_s, v in O_t (m odd)."""
    s, t = s_and_t(ctx)
    _check_point(ctx, x)
    e_lam, e_u, e_v = _crt_idempotents([ctx.q + 1, s, t])
    return ctx.pow(x, e_lam), ctx.pow(x, e_u), ctx.pow(x, e_v)


# --- lines --------------------------------------------------------------------

def eq1_holds(ctx: FieldContext, alpha: int, beta: int) -> bool:
    q = ctx.q
    return ctx.pow(alpha, q + 1) == ctx.pow(beta, q) ^ ctx.pow(beta, q * q + q + 1)


@dataclass(frozen=True)
class Line:
    """Line with equation x^(q+1) + alpha*x + beta = 0.

    Build through :func:`line_new` (or :func:`line_through`) so the defining
    condition is checked.  ``points`` is computed on first access.
    """

    alpha: int
    beta: int
    ctx: FieldContext = field(repr=False, compare=False, hash=False)

    @functools.cached_property
    def points(self) -> tuple[int, ...]:
        return tuple(line_points(self.ctx, self))

    def evaluate(self, x: int) -> int:
        c = self.ctx
        return c.pow(x, c.q + 1) ^ c.mul(self.alpha, x) ^ self.beta

    def to_json(self) -> dict:
        return {"alpha": self.ctx.to_hex(self.alpha), "beta": self.ctx.to_hex(self.beta)}


def line_new(ctx: FieldContext, alpha: int, beta: int) -> Line:
    if not is_point(ctx, beta):
        raise ConditionViolated(f"beta = {ctx.to_hex(beta)} is not a point")
    if not eq1_holds(ctx, alpha, beta):
        raise ConditionViolated(
            f"alpha^(q+1) != beta^q + beta^(q^2+q+1) for alpha={ctx.to_hex(alpha)}, beta={ctx.to_hex(beta)}"
        )
    q = ctx.q
    if alpha and ctx.mul(ctx.pow(alpha, q * q - 1), ctx.pow(beta, q + 1)) != 1:
        raise AssertionError("alpha^(q^2-1) beta^(q+1) != 1 on a valid line")
    return Line(alpha, beta, ctx)


def line_through(ctx: FieldContext, y: int, z: int) -> Line:
    if y == z:
        raise DegeneratePair("a line needs two distinct points")
    q = ctx.q
    yq, zq = ctx.pow(y, q + 1), ctx.pow(z, q + 1)
    d = ctx.inv(y ^ z)
    alpha = ctx.mul(yq ^ zq, d)
    beta = ctx.mul(ctx.mul(yq, z) ^ ctx.mul(zq, y), d)
    return line_new(ctx, alpha, beta)


def line_points(ctx: FieldContext, line: Line) -> list[int]:
    """The q+1 points of a line, sorted, obtained from the closed-form roots.

    alpha = 0: pick e with e^(q^2-1) = beta; the line is {lam * e^(q-1) : lam in S}.
    alpha != 0: substitute x = alpha^(q^3) y, which turns the equation into
    y^(q+1) + y + a = 0 with a = beta * alpha^-(q^3+1), and solve that.
    """
    q = ctx.q
    alpha, beta = line.alpha, line.beta
    if alpha == 0:
        k = ctx.dlog(beta)
        if k % (q * q - 1):
            raise ConditionViolated("alpha = 0 but beta is not a (q^2-1)-th power")
        e = ctx.gen_pow(k // (q * q - 1))
        base = ctx.pow(e, q - 1)
        pts = [ctx.mul(lam, base) for lam in enumerate_subgroup(ctx, Subgroup.S)]
    else:
        a = ctx.mul(beta, ctx.pow(alpha, -(q**3 + 1)))
        shift = ctx.pow(alpha, q**3)
        pts = [ctx.mul(shift, y) for y in solve_projective(ctx, a)]
    pts = sorted(set(pts))
    if len(pts) != q + 1:
        raise ConditionViolated(f"line has {len(pts)} points, expected {q + 1}")
    return pts


def enumerate_lines(ctx: FieldContext) -> tuple[np.ndarray, np.ndarray]:
    """All valid (alpha, beta) pairs, sorted by (alpha, beta).

    For each point beta the right-hand side r = beta^q + beta^(q^2+q+1) is
    either 0 (alpha = 0) or has q+1 distinct (q+1)-th roots, found from its
    discrete logarithm.
    """
    q = ctx.q
    betas = subgroup_array(ctx, Subgroup.P)
    r = ctx.vpow(betas, q) ^ ctx.vpow(betas, q * q + q + 1)
    step = ctx.order // (q + 1)
    zero = r == 0
    alphas = [np.zeros(int(zero.sum()), dtype=np.int64)]
    out_betas = [betas[zero]]
    rb, rr = betas[~zero], r[~zero]
    logs = ctx.log[rr]
    ok = logs % (q + 1) == 0
    rb, logs = rb[ok], logs[ok] // (q + 1)
    for k in range(q + 1):
        alphas.append(ctx.exp[(logs + k * step) % ctx.order])
        out_betas.append(rb)
    a = np.concatenate(alphas)
    b = np.concatenate(out_betas)
    order = np.lexsort((b, a))
    return a[order], b[order]


def all_lines(ctx: FieldContext) -> list[Line]:
    a, b = enumerate_lines(ctx)
    return [Line(int(x), int(y), ctx) for x, y in zip(a.tolist(), b.tolist())]


# --- planes -------------------------------------------------------------------

@dataclass(frozen=True)
class Plane:
    sigma: int


def plane_eval(ctx: FieldContext, plane: Plane, x: int) -> int:
    q = ctx.q
    sx = ctx.mul(plane.sigma, x)
    return ctx.pow(sx, q * q + q + 1) ^ ctx.pow(sx, q + 1) ^ sx ^ 1


def plane_contains(ctx: FieldContext, plane: Plane, x: int) -> bool:
    return plane_eval(ctx, plane, x) == 0


def plane_points(ctx: FieldContext, plane: Plane) -> list[int]:
    q = ctx.q
    pts = subgroup_array(ctx, Subgroup.P)
    sx = ctx.vmul(plane.sigma, pts)
    val = ctx.vpow(sx, q * q + q + 1) ^ ctx.vpow(sx, q + 1) ^ sx ^ 1
    return sorted(pts[val == 0].tolist())


# --- X^(q+1) + X + a ----------------------------------------------------------

def F_poly(ctx: FieldContext, a: int) -> int:
    """F(a) = 1 + a^q + a^(q^2)."""
    return 1 ^ ctx.frobenius_q(a, 1) ^ ctx.frobenius_q(a, 2)


def fast_path_applies(ctx: FieldContext, a: int) -> bool:
    return a != 0 and F_poly(ctx, a) == 0


_u_tables: dict[tuple[int, int], np.ndarray] = {}
_u_lock = threading.Lock()


def _u_table(ctx: FieldContext) -> np.ndarray:
    """For each a, the first u outside K (encoding order) with
    a = (u + u^q)^(q^2+1) / (u + u^(q^2))^(q+1), or -1."""
    key = (ctx.m, ctx.modulus)
    table = _u_tables.get(key)
    if table is not None:
        return table
    with _u_lock:
        table = _u_tables.get(key)
        if table is None:
            q = ctx.q
            u = ctx.elements()
            uq = ctx.vpow(u, q)
            uq2 = ctx.vpow(u, q * q)
            u = u[uq2 != u]
            uq, uq2 = ctx.vpow(u, q), ctx.vpow(u, q * q)
            num = ctx.vpow(u ^ uq, q * q + 1)
            den = ctx.vpow(u ^ uq2, q + 1)
            avals = ctx.vmul(num, ctx.vinv(den))
            uniq, first = np.unique(avals, return_index=True)
            table = np.full(ctx.size, -1, dtype=np.int64)
            table[uniq] = u[first]
            table.flags.writeable = False
            _u_tables[key] = table
    return table


def find_u(ctx: FieldContext, a: int) -> int | None:
    u = int(_u_table(ctx)[a])
    return None if u < 0 else u


def projective_roots_bruteforce(ctx: FieldContext, a: int) -> list[int]:
    xs = ctx.elements()
    val = ctx.vpow(xs, ctx.q + 1) ^ xs ^ a
    return xs[val == 0].tolist()


@functools.lru_cache(maxsize=None)
def _subfield_F(ctx: FieldContext) -> tuple[int, ...]:
    return tuple(ctx.subfield_elements("F"))


def solve_projective_fast(ctx: FieldContext, a: int) -> list[int] | None:
    """Closed-form roots of X^(q+1) + X + a, or None when F(a) != 0.

    Writes a = (u + u^q)^(q^2+1) / (u + u^(q^2))^(q+1) with u outside GF(q^2);
    with c = (u + u^q)^(q-1) the roots are x0 = 1/(1+c) and
    x0 * (u + gamma)^(q^2-q) for gamma in GF(q).
    """
    if not fast_path_applies(ctx, a):
        return None
    u = find_u(ctx, a)
    if u is None:
        return None
    q = ctx.q
    c = ctx.pow(u ^ ctx.pow(u, q), q - 1)
    x0 = ctx.inv(1 ^ c)
    roots = {x0}
    for gamma in _subfield_F(ctx):
        roots.add(ctx.mul(x0, ctx.pow(u ^ gamma, q * q - q)))
    return sorted(roots)


def solve_projective(ctx: FieldContext, a: int) -> list[int]:
    """Roots in E of X^(q+1) + X + a, sorted.

    Uses the closed form when F(a) = 0 and falls back to trying every element
    of E otherwise.
    """
    roots = solve_projective_fast(ctx, a)
    return roots if roots is not None else projective_roots_bruteforce(ctx, a)


def subgroup_listing(ctx: FieldContext, tag: Subgroup | str) -> dict:
    tag = Subgroup(tag)
    return {
        "q": ctx.q,
        "modulus": ctx.modulus_hex,
        "tag": tag.value,
        "members": [ctx.to_hex(x) for x in enumerate_subgroup(ctx, tag)],
    }

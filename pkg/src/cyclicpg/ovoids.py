"""Ovoids of the cyclic model: the elliptic quadric O and the Suzuki-Tits ovoids.

Also hosts the symplectic polarity omega, its totally isotropic lines L(beta),
the correlations delta, pi_0, pi_1 of the generalized quadrangle W(q), the
polynomials Q_0 and Q_1 and the tangent-line map tau.

Fractional exponents on points (1/sqrt(2q), sqrt(2/q), ...) are realised as
integer exponents modulo |P| = q^3+q^2+q+1, which is odd.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import geometry as geo
from .errors import NotOnOvoid, OutOfDomain, ParityError
from .gf2e import FieldContext
from .geometry import Line, Plane, Subgroup, line_new, point_count, s_and_t, sqrt_2q
from .poly import SparsePoly


def _require_tits(ctx: FieldContext):
    if ctx.m % 2 == 0 or ctx.m < 3:
        raise ParityError(f"Suzuki-Tits constructions need q = 2^m with m odd and m >= 3 (got q = {ctx.q})")


def _frac_exponent(ctx: FieldContext, num: int, den: int) -> int:
    """Integer e with x^e = x^(num/den) on every point."""
    n = point_count(ctx)
    return num * pow(den, -1, n) % n


# --- the quadratic form and the elliptic quadric ------------------------------

def quadratic_form_Q(ctx: FieldContext, x: int) -> int:
    """Tr_{K/F}(N_{E/K}(x)) = x^(q^2+1) + x^(q(q^2+1))."""
    q = ctx.q
    nx = ctx.pow(x, q * q + 1)
    return nx ^ ctx.pow(nx, q)


def polar_form(ctx: FieldContext, x: int, y: int) -> int:
    return quadratic_form_Q(ctx, x ^ y) ^ quadratic_form_Q(ctx, x) ^ quadratic_form_Q(ctx, y)


class OvoidKind(enum.Enum):
    ELLIPTIC = "elliptic"
    TITS0 = "tits0"
    TITS1 = "tits1"


@dataclass(frozen=True)
class Ovoid:
    kind: OvoidKind
    points: frozenset[int]

    def __len__(self):
        return len(self.points)

    def __contains__(self, x):
        return x in self.points

    def sorted_points(self) -> list[int]:
        return sorted(self.points)

    def to_json(self, ctx: FieldContext) -> dict:
        return {
            "q": ctx.q,
            "modulus": ctx.modulus_hex,
            "kind": self.kind.value,
            "points": [ctx.to_hex(x) for x in self.sorted_points()],
        }


def elliptic_quadric(ctx: FieldContext) -> Ovoid:
    return Ovoid(OvoidKind.ELLIPTIC, frozenset(geo.enumerate_subgroup(ctx, Subgroup.O)))


# --- omega and W(q) -----------------------------------------------------------

def omega_plane(ctx: FieldContext, lam: int) -> Plane:
    """Image of the point lam under the symplectic polarity: sigma = lam^(q^2)."""
    return Plane(ctx.pow(lam, ctx.q**2))


def omega_eval(ctx: FieldContext, lam: int, x: int) -> int:
    return geo.plane_eval(ctx, omega_plane(ctx, lam), x)


def wq_alpha(ctx: FieldContext, beta: int) -> int:
    """beta^((q^2+q+2)/2) + beta^((q+1)/2); the half power is a square root."""
    q = ctx.q
    return ctx.pow(beta, (q * q + q + 2) // 2) ^ ctx.sqrt(ctx.pow(beta, q + 1))


@dataclass(frozen=True)
class WqLine:
    """Totally isotropic line L(beta) of W(q)."""

    beta: int

    def line(self, ctx: FieldContext) -> Line:
        return line_new(ctx, wq_alpha(ctx, self.beta), self.beta)


def wq_line(ctx: FieldContext, beta: int) -> WqLine:
    wl = WqLine(beta)
    wl.line(ctx)  # raises ConditionViolated if beta is not a point
    return wl


def wq_lines(ctx: FieldContext) -> list[WqLine]:
    """L(beta) for every point beta; the line condition is checked for each.

    Total isotropy is a sweep over pairs of points and lives in
    :func:`is_totally_isotropic`.
    """
    q = ctx.q
    betas = geo.subgroup_array(ctx, Subgroup.P)
    alphas = ctx.vpow(betas, (q * q + q + 2) // 2) ^ ctx.vsqrt(ctx.vpow(betas, q + 1))
    lhs = ctx.vpow(alphas, q + 1)
    rhs = ctx.vpow(betas, q) ^ ctx.vpow(betas, q * q + q + 1)
    if not np.array_equal(lhs, rhs):
        raise AssertionError("some L(beta) violates the line condition")
    return [WqLine(b) for b in betas.tolist()]


def is_totally_isotropic(ctx: FieldContext, wl: WqLine) -> bool:
    pts = wl.line(ctx).points
    return all(omega_eval(ctx, x, y) == 0 for x in pts for y in pts)


def on_wq_line(ctx: FieldContext, x: int, beta: int) -> bool:
    return ctx.pow(x, ctx.q + 1) ^ ctx.mul(wq_alpha(ctx, beta), x) ^ beta == 0


# --- correlations -------------------------------------------------------------

class CorrelationKind(enum.Enum):
    DELTA = "delta"
    PI0 = "pi0"
    PI1 = "pi1"


@dataclass(frozen=True)
class Correlation:
    """x -> L(x^point_exponent) and L(b) -> b^line_exponent."""

    kind: CorrelationKind
    point_exponent: int
    line_exponent: int


def correlation(ctx: FieldContext, kind: CorrelationKind | str) -> Correlation:
    kind = CorrelationKind(kind)
    q = ctx.q
    n = point_count(ctx)
    if kind is CorrelationKind.DELTA:
        return Correlation(kind, 2 * q % n, 1)
    r = sqrt_2q(ctx)
    if kind is CorrelationKind.PI0:
        return Correlation(kind, r, _frac_exponent(ctx, 1, r))
    return Correlation(kind, q * q * r % n, _frac_exponent(ctx, q * q, r))


def apply_correlation_point(ctx: FieldContext, corr: Correlation, x: int) -> WqLine:
    return WqLine(ctx.pow(x, corr.point_exponent))


def apply_correlation_line(ctx: FieldContext, corr: Correlation, wl: WqLine) -> int:
    return ctx.pow(wl.beta, corr.line_exponent)


def absolute_points(ctx: FieldContext, corr: Correlation) -> frozenset[int]:
    """Points x lying on their image line L(x^e)."""
    if corr.kind is CorrelationKind.DELTA:
        raise ValueError("absolute points are only defined here for pi0 and pi1")
    _require_tits(ctx)
    q = ctx.q
    xs = geo.subgroup_array(ctx, Subgroup.P)
    betas = ctx.vpow(xs, corr.point_exponent)
    alphas = ctx.vpow(betas, (q * q + q + 2) // 2) ^ ctx.vsqrt(ctx.vpow(betas, q + 1))
    val = ctx.vpow(xs, q + 1) ^ ctx.vmul(alphas, xs) ^ betas
    return frozenset(xs[val == 0].tolist())


# --- Suzuki-Tits ovoids -------------------------------------------------------

def _twist(ctx: FieldContext, w: int) -> int:
    """(w^(q-1) + w^-(q-1))^(q-1), an element of S for w in O_s or O_t, w != 1."""
    q = ctx.q
    a = ctx.pow(w, q - 1)
    return ctx.pow(a ^ ctx.inv(a), q - 1)


def build_T(ctx: FieldContext, i: int) -> Ovoid:
    _require_tits(ctx)
    if i not in (0, 1):
        raise ValueError("i must be 0 or 1")
    os_ = geo.enumerate_subgroup(ctx, Subgroup.Os)
    ot = geo.enumerate_subgroup(ctx, Subgroup.Ot)
    if i == 0:
        pts = set(os_)
        for v in ot:
            if v == 1:
                continue
            lv = _twist(ctx, v)
            pts.update(ctx.mul(lv, ctx.mul(u, v)) for u in os_)
    else:
        pts = set(ot)
        for u in os_:
            if u == 1:
                continue
            lu = _twist(ctx, u)
            pts.update(ctx.mul(lu, ctx.mul(u, v)) for v in ot)
    q = ctx.q
    if len(pts) != q * q + 1:
        raise AssertionError(f"T_{i} has {len(pts)} points, expected {q * q + 1}")
    return Ovoid(OvoidKind.TITS0 if i == 0 else OvoidKind.TITS1, frozenset(pts))


def lemma43_check(ctx: FieldContext, x: int) -> bool:
    """x^(q+1) + sqrt((lam^r + 1) lam) x + lam^(r/2) == 0 with r = sqrt(2q)
    and lam = (x^(q-1) + x^-(q-1))^(q-1), for x in O_s or O_t other than 1."""
    s, t = s_and_t(ctx)
    if x == 1 or not (ctx.pow(x, s) == 1 or ctx.pow(x, t) == 1):
        raise OutOfDomain(f"{ctx.to_hex(x)} is not in (O_s u O_t) minus {{1}}")
    q = ctx.q
    r = sqrt_2q(ctx)
    lam = _twist(ctx, x)
    if ctx.pow(lam, q + 1) != 1:
        raise AssertionError("lambda is not in S")
    coef = ctx.sqrt(ctx.mul(ctx.pow(lam, r) ^ 1, lam))
    return ctx.pow(x, q + 1) ^ ctx.mul(coef, x) ^ ctx.pow(lam, r // 2) == 0


def poly_Q0(ctx: FieldContext) -> SparsePoly:
    _require_tits(ctx)
    q = ctx.q
    s, _ = s_and_t(ctx)
    r = sqrt_2q(ctx)
    return SparsePoly.from_terms([q * q + 1, s * (r + 1), s, 0])


def poly_Q1(ctx: FieldContext) -> SparsePoly:
    """Expand Q_1 over F_2.

    With r = sqrt(2q), h = sqrt(q/2) and y = x^(r t):
      x^t (1 + y^(h-1)) / (1 + y) = x^t * sum_{k < h-1} y^k,
      (1 + y)^(2^j - 1) = sum_{k < 2^j} y^k   (all binomials odd),
    summed for j = 0 .. log2(h) - 1.
    """
    _require_tits(ctx)
    q = ctx.q
    _, t = s_and_t(ctx)
    r = sqrt_2q(ctx)
    h = q // r  # sqrt(q/2) = q / sqrt(2q)
    y = r * t

    num = SparsePoly.from_terms([y * (h - 1), 0])
    quot = SparsePoly.from_terms([k * y for k in range(h - 1)])
    # exact division check: quot * (1 + y) must reproduce the numerator
    back = SparsePoly.from_terms([e + d for e in quot.exponents for d in (y, 0)])
    if back != num:
        raise ArithmeticError("numerator of Q_1 is not divisible by 1 + x^(sqrt(2q) t)")

    terms = [q * q + 1, 0]
    terms += [t + e for e in quot.exponents]
    for j in range(h.bit_length() - 1):
        shift = t + (1 << j) * (r - 2) * t
        terms += [shift + k * y for k in range(1 << j)]
    poly = SparsePoly.from_terms(terms)
    if poly.degree != q * q + 1:
        raise AssertionError(f"Q_1 has degree {poly.degree}")
    return poly


# --- tangent lines and tau ----------------------------------------------------

def ell_line(ctx: FieldContext, e: int) -> Line:
    """x^(q+1) + (e^(q^2+q+2) + e^(q+1)) x + e^2 = 0, which is L(e^2)."""
    q = ctx.q
    alpha = ctx.pow(e, q * q + q + 2) ^ ctx.pow(e, q + 1)
    return line_new(ctx, alpha, ctx.mul(e, e))


def on_ell_line(ctx: FieldContext, x: int, e: int) -> bool:
    q = ctx.q
    alpha = ctx.pow(e, q * q + q + 2) ^ ctx.pow(e, q + 1)
    return ctx.pow(x, q + 1) ^ ctx.mul(alpha, x) ^ ctx.mul(e, e) == 0


@dataclass(frozen=True)
class TauMap:
    exponent: int


def tau_for(ctx: FieldContext, kind: OvoidKind | str) -> TauMap:
    """x^(1-q) for O, x^sqrt(2/q) for T_0, x^(q^2 sqrt(2/q)) for T_1."""
    kind = OvoidKind(kind)
    q = ctx.q
    n = point_count(ctx)
    if kind is OvoidKind.ELLIPTIC:
        return TauMap((1 - q) % n)
    _require_tits(ctx)
    h = q // sqrt_2q(ctx)  # sqrt(q/2)
    if kind is OvoidKind.TITS0:
        return TauMap(_frac_exponent(ctx, 1, h))
    return TauMap(_frac_exponent(ctx, q * q, h))


def tau_apply(ctx: FieldContext, ovoid: Ovoid, tau: TauMap, x: int) -> int:
    if x not in ovoid:
        raise NotOnOvoid(f"{ctx.to_hex(x)} is not on the {ovoid.kind.value} ovoid")
    y = ctx.pow(x, tau.exponent)
    if y not in ovoid or not on_ell_line(ctx, y, x):
        raise AssertionError(f"tau({ctx.to_hex(x)}) leaves the ovoid or misses l_x")
    return y


def frobenius_fixed(ctx: FieldContext, ovoid: Ovoid | frozenset | set) -> bool:
    pts = ovoid.points if isinstance(ovoid, Ovoid) else ovoid
    return {ctx.mul(x, x) for x in pts} == set(pts)


def ovoid_for(ctx: FieldContext, kind: OvoidKind | str) -> Ovoid:
    kind = OvoidKind(kind)
    if kind is OvoidKind.ELLIPTIC:
        return elliptic_quadric(ctx)
    return build_T(ctx, 0 if kind is OvoidKind.TITS0 else 1)

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclicpg import geometry as geo
from cyclicpg.errors import ConditionViolated, DegeneratePair, NotAPoint, ParityError
from cyclicpg.gf2e import get_context


def scan_roots_of_unity(ctx, n):
    """Every x in E with x^n = 1, by square-and-multiply on the whole field."""
    return sorted(x for x in range(1, ctx.size) if ctx.pow_clmul(x, n) == 1)


def scan_line(ctx, pts, alpha, beta):
    q = ctx.q
    return sorted(x for x in pts if ctx.pow_clmul(x, q + 1) ^ ctx.mul_clmul(alpha, x) ^ beta == 0)


@pytest.fixture(scope="module")
def P8(ctx8):
    return geo.enumerate_subgroup(ctx8, "P")


def test_subgroup_sizes(ctx8, ctx32):
    assert len(geo.enumerate_subgroup(ctx8, "P")) == 585
    assert len(geo.enumerate_subgroup(ctx8, "Os")) == 5
    assert len(geo.enumerate_subgroup(ctx8, "Ot")) == 13
    assert len(geo.enumerate_subgroup(ctx32, "O")) == 1025
    assert geo.s_and_t(ctx8) == (5, 13) and geo.s_and_t(ctx32) == (25, 41)
    assert geo.sqrt_2q(ctx8) == 4 and geo.sqrt_2q(ctx32) == 8


@pytest.mark.parametrize("tag", ["P", "S", "O", "Os", "Ot"])
def test_subgroups_match_scan(ctx8, tag):
    n = geo.subgroup_order(ctx8, tag)
    assert (ctx8.order % n) == 0
    assert sorted(geo.enumerate_subgroup(ctx8, tag)) == scan_roots_of_unity(ctx8, n)


def test_subgroup_listing_sorted_by_dlog(ctx8):
    listing = geo.enumerate_subgroup(ctx8, "S")
    assert listing[0] == 1
    logs = [ctx8.dlog(x) for x in listing]
    assert logs == sorted(logs)
    doc = geo.subgroup_listing(ctx8, "S")
    assert doc["tag"] == "S" and doc["q"] == 8 and len(doc["members"]) == 9


def test_os_ot_need_odd_m():
    c = get_context(2)
    for tag in ("Os", "Ot"):
        with pytest.raises(ParityError):
            geo.enumerate_subgroup(c, tag)
    with pytest.raises(ParityError):
        geo.decompose_luv(c, 1)


def test_decompose_lambda_u_vs_brute(ctx8, P8):
    S = geo.enumerate_subgroup(ctx8, "S")
    O = geo.enumerate_subgroup(ctx8, "O")
    table = {}
    for lam, u in itertools.product(S, O):
        x = ctx8.mul(lam, u)
        assert x not in table  # uniqueness
        table[x] = (lam, u)
    assert set(table) == set(P8)
    for x in P8:
        assert geo.decompose_lambda_u(ctx8, x) == table[x]
    assert geo.decompose_lambda_u(ctx8, 1) == (1, 1)
    for u in O:
        assert geo.decompose_lambda_u(ctx8, u) == (1, u)


def test_decompose_luv_vs_brute(ctx8, P8):
    S, Os, Ot = (geo.enumerate_subgroup(ctx8, t) for t in ("S", "Os", "Ot"))
    table = {ctx8.mul(ctx8.mul(a, b), c): (a, b, c) for a, b, c in itertools.product(S, Os, Ot)}
    assert len(table) == 585
    for x in P8:
        assert geo.decompose_luv(ctx8, x) == table[x]
    assert geo.decompose_luv(ctx8, 1) == (1, 1, 1)
    for v in Ot:
        assert geo.decompose_luv(ctx8, v) == (1, 1, v)


def test_decompose_sampled_q32(ctx32):
    P = geo.enumerate_subgroup(ctx32, "P")
    for x in random.Random(32).sample(P, 3000):
        lam, u = geo.decompose_lambda_u(ctx32, x)
        assert ctx32.mul(lam, u) == x
        assert ctx32.pow(lam, 33) == 1 and ctx32.pow(u, 1025) == 1
        lam, u, v = geo.decompose_luv(ctx32, x)
        assert ctx32.mul(ctx32.mul(lam, u), v) == x
        assert ctx32.pow(u, 25) == 1 and ctx32.pow(v, 41) == 1


def test_decompose_rejects_non_points(ctx8):
    with pytest.raises(NotAPoint):
        geo.decompose_lambda_u(ctx8, ctx8.generator)
    with pytest.raises(NotAPoint):
        geo.decompose_luv(ctx8, 0)


def test_line_new_alpha_zero(ctx8):
    q = ctx8.q
    for b in geo.enumerate_subgroup(ctx8, "P"):
        if ctx8.pow(b, q * q + 1) == 1:
            line = geo.line_new(ctx8, 0, b)
            assert line.alpha == 0
        else:
            with pytest.raises(ConditionViolated):
                geo.line_new(ctx8, 0, b)


def test_line_new_rejects_non_point_beta(ctx8):
    with pytest.raises(ConditionViolated):
        geo.line_new(ctx8, 0, 0)


def test_alpha_zero_line_is_S_coset(ctx8, P8):
    line = geo.line_new(ctx8, 0, 1)
    pts = line.points
    assert len(pts) == 9
    assert list(pts) == scan_line(ctx8, P8, 0, 1)
    S = geo.enumerate_subgroup(ctx8, "S")
    assert {ctx8.mul(lam, x) for lam in S for x in pts} == set(pts)


def test_line_through_examples(ctx8, P8):
    with pytest.raises(DegeneratePair):
        geo.line_through(ctx8, 5, 5)
    q = ctx8.q
    rng = random.Random(8)
    for z in rng.sample(P8[1:], 30):
        line = geo.line_through(ctx8, 1, z)
        d = ctx8.inv(1 ^ z)
        zq = ctx8.pow(z, q + 1)
        assert line.alpha == ctx8.mul(1 ^ zq, d)
        assert line.beta == ctx8.mul(z ^ zq, d)
        assert line.evaluate(1) == 0 and line.evaluate(z) == 0


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 584), st.integers(0, 584))
def test_line_through_symmetric_and_contains(i, j):
    ctx = get_context(3)
    P = geo.enumerate_subgroup(ctx, "P")
    if i == j:
        return
    y, z = P[i], P[j]
    line = geo.line_through(ctx, y, z)
    assert line == geo.line_through(ctx, z, y)
    assert y in line.points and z in line.points
    assert list(line.points) == scan_line(ctx, P, line.alpha, line.beta)


def test_enumerate_lines_count_and_validity(ctx8):
    a, b = geo.enumerate_lines(ctx8)
    # PG(3,q) has (q^2+1)(q^2+q+1) lines
    assert len(a) == (ctx8.q**2 + 1) * (ctx8.q**2 + ctx8.q + 1) == 4745
    pairs = list(zip(a.tolist(), b.tolist()))
    assert len(set(pairs)) == len(pairs) and pairs == sorted(pairs)
    for alpha, beta in pairs[::37]:
        assert geo.eq1_holds(ctx8, alpha, beta)


def test_lines_brute_sample(ctx8, P8):
    lines = geo.all_lines(ctx8)
    for line in random.Random(3).sample(lines, 150):
        assert list(line.points) == scan_line(ctx8, P8, line.alpha, line.beta)


def test_line_json(ctx8):
    line = geo.line_new(ctx8, 0, 1)
    assert line.to_json() == {"alpha": "0x000", "beta": "0x001"}


def test_plane_counts_and_incidence(ctx8):
    P = geo.enumerate_subgroup(ctx8, "P")
    lines = random.Random(4).sample(geo.all_lines(ctx8), 60)
    for sigma in P[::13]:
        plane = geo.Plane(sigma)
        pts = geo.plane_points(ctx8, plane)
        assert len(pts) == 73
        assert all(geo.plane_contains(ctx8, plane, x) for x in pts)
        members = set(pts)
        for line in lines:
            k = len(members.intersection(line.points))
            assert k in (1, 9)


def test_solver_examples(ctx8):
    assert geo.solve_projective(ctx8, 0) == [0, 1]
    assert geo.solve_projective_fast(ctx8, 0) is None
    assert geo.F_poly(ctx8, 1) == 1
    roots = geo.solve_projective(ctx8, 1)
    assert len(roots) != 9
    assert roots == geo.projective_roots_bruteforce(ctx8, 1)


def _scan_projective(ctx, a):
    q = ctx.q
    return sorted(x for x in range(ctx.size) if ctx.pow_clmul(x, q + 1) ^ x ^ a == 0)


def test_solver_fast_path_sample(ctx8):
    fast = [a for a in range(1, ctx8.size) if geo.F_poly(ctx8, a) == 0]
    assert fast
    for a in fast[::20]:
        roots = geo.solve_projective_fast(ctx8, a)
        assert roots is not None and len(roots) == 9
        assert roots == _scan_projective(ctx8, a)
        u = geo.find_u(ctx8, a)
        assert not ctx8.in_subfield(u, "K")


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 4095))
def test_solver_matches_scan(a):
    ctx = get_context(3)
    assert geo.solve_projective(ctx, a) == _scan_projective(ctx, a)

"""Acceptance suite: twelve criteria, each printing one PASS/FAIL line.

Runtimes are wall-clock limits measured around the work itself; criteria 1, 2
and 12 go through the installed command line in a fresh interpreter.
"""

import json
import subprocess
import sys
import time

import pytest

from cyclicpg import geometry as geo
from cyclicpg import ovoids as ov
from cyclicpg import verify
from cyclicpg.gf2e import get_context


@pytest.fixture
def report(capsys):
    def emit(num, title, ok, elapsed, limit=None):
        budget = f" (limit {limit:g} s)" if limit is not None else ""
        line = f"[criterion {num:>2}] {'PASS' if ok else 'FAIL'}  {title}  {elapsed:.2f} s{budget}"
        with capsys.disabled():
            print("\n" + line)
        return ok

    return emit


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def cli(*args):
    proc = subprocess.run([sys.executable, "-m", "cyclicpg", *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout


def run_checks(ctx, names):
    return [verify.run_check(ctx, n) for n in names]


def all_exhaustive_pass(reports):
    return all(r.passed and not r.sampled and r.total_cases > 0 for r in reports)


@pytest.mark.parametrize(
    "num,q,expected",
    [(1, 8, [65, 39, 13, 0]), (2, 32, [1025, 861, 697, 533, 369, 287, 41, 0])],
)
def test_q1_exponents(report, num, q, expected):
    (status, out), dt = timed(lambda: cli("poly", "Q1", "--q", str(q)))
    doc = json.loads(out)
    ok = status == 0 and doc["exponents"] == expected and doc["q"] == q and dt < 1.0
    assert report(num, f"Q1 exponents at q={q}: {doc['exponents']}", ok, dt, 1.0)


@pytest.mark.parametrize("q,limit", [(8, 5.0), (32, 60.0)])
def test_zero_sets(report, q, limit):
    ctx = get_context(q.bit_length() - 1)

    def work():
        out = []
        for i, poly in enumerate((ov.poly_Q0(ctx), ov.poly_Q1(ctx))):
            zeros = verify.brute_roots(ctx, poly, "E")
            out.append(set(zeros) == ov.build_T(ctx, i).points and len(zeros) == q * q + 1)
        reports = run_checks(ctx, ["thm45-Q0", "thm47-Q1"])
        out.append(all_exhaustive_pass(reports))
        return out

    results, dt = timed(work)
    ok = all(results) and dt < limit
    assert report(3, f"Q0/Q1 zero sets over all {ctx.size} elements of E equal T0/T1 at q={q}", ok, dt, limit)


@pytest.mark.parametrize("q,limit", [(8, 10.0), (32, 300.0)])
def test_absolute_points(report, q, limit):
    ctx = get_context(q.bit_length() - 1)

    def work():
        direct = all(
            ov.absolute_points(ctx, ov.correlation(ctx, f"pi{i}")) == ov.build_T(ctx, i).points for i in (0, 1)
        )
        return direct and all_exhaustive_pass(run_checks(ctx, ["thm44-absolute"]))

    ok, dt = timed(work)
    ok = ok and dt < limit
    assert report(4, f"absolute points of pi0/pi1 equal T0/T1 at q={q}", ok, dt, limit)


@pytest.mark.parametrize("q,limit", [(8, 5.0), (32, 300.0)])
def test_ovoid_property(report, q, limit):
    ctx = get_context(q.bit_length() - 1)
    r, dt = timed(lambda: verify.run_check(ctx, "ovoid-property"))
    pairs = (q * q + 1) * q * q // 2
    ok = all_exhaustive_pass([r]) and r.total_cases >= 3 * pairs and dt < limit
    assert report(5, f"no 3 ovoid points collinear, 3 x {pairs} pairs at q={q}", ok, dt, limit)


def test_norm_system_on_lines(report, ctx8):
    r, dt = timed(lambda: verify.run_check(ctx8, "thm32-system"))
    ok = all_exhaustive_pass([r]) and r.total_cases >= 4745 * 9
    assert report(6, "system (I) has at most 2 solutions for every line and lambda in S, q=8", ok, dt)


def test_solver_equivalence(report, ctx8):
    def work():
        q = ctx8.q
        xs = ctx8.elements()
        ok = True
        for a in range(ctx8.size):
            fast = geo.solve_projective_fast(ctx8, a)
            brute = xs[(ctx8.vpow(xs, q + 1) ^ xs ^ a) == 0].tolist()
            fires = a != 0 and geo.F_poly(ctx8, a) == 0
            ok &= (fast is not None) == fires
            ok &= geo.solve_projective(ctx8, a) == brute
            if fires:
                ok &= len(fast) == q + 1
        return ok and all_exhaustive_pass(run_checks(ctx8, ["lemma21-solver"]))

    ok, dt = timed(work)
    ok = ok and dt < 10.0
    assert report(7, "solver equals brute force for all 4096 a, fast path iff F(a)=0", ok, dt, 10.0)


def test_line_root_counts(report, ctx8):
    r, dt = timed(lambda: verify.run_check(ctx8, "lemma23"))
    ok = all_exhaustive_pass([r]) and r.total_cases >= 4745
    assert report(8, "every valid line has 9 roots in P matching a scan of P, q=8", ok, dt)


def test_symplectic_suite(report, ctx8):
    reports, dt = timed(lambda: run_checks(ctx8, ["omega-symplectic", "wqlines-isotropic", "remark1-delta"]))
    ok = all_exhaustive_pass(reports)
    assert report(9, "omega symplectic, W(q) lines isotropic, delta reverses incidence, q=8", ok, dt)


def test_quadratic_form(report, ctx8):
    r, dt = timed(lambda: verify.run_check(ctx8, "thm31-form"))
    ok = all_exhaustive_pass([r])
    assert report(10, "Q(cx) = c^2 Q(x), polar form bi-additive with trivial radical, q=8", ok, dt)


def test_tau(report, ctx8):
    def work():
        ok = True
        for kind in ("elliptic", "tits0", "tits1"):
            O = ov.ovoid_for(ctx8, kind)
            tau = ov.tau_for(ctx8, kind)
            for x in O.points:
                y = ov.tau_apply(ctx8, O, tau, x)
                ok &= ov.tau_apply(ctx8, O, tau, ctx8.pow(y, ctx8.q // 2)) == x
        ok &= all(ctx8.pow(x, 3 * (ctx8.q**2 + 1)) == 1 for x in ov.elliptic_quadric(ctx8).points)
        return ok and all_exhaustive_pass(run_checks(ctx8, ["lemma46-tau"]))

    ok, dt = timed(work)
    assert report(11, "tau(tau(x)^(q/2)) = x on all three ovoids, q=8", ok, dt)


def test_determinism(report):
    def work():
        a = cli("verify", "all", "--q", "8", "--threads", "1")
        b = cli("verify", "all", "--q", "8", "--threads", "8")
        return a, b

    ((sa, oa), (sb, ob)), dt = timed(work)
    docs = [json.loads(x) for x in oa.splitlines()]
    ok = sa == sb == 0 and oa == ob and len(docs) == len(verify.CHECKS) and all(d["passed"] for d in docs)
    assert report(12, "verify all --q 8 is byte-identical with 1 and 8 threads", ok, dt)

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclicpg.errors import NotInSubfield, NotIrreducible, ParseError, UnsupportedSize, ZeroToNegativePower
from cyclicpg.gf2e import FieldContext, clmul, factorize, get_context, is_irreducible, poly_mod


def xgcd_inverse(x, mod):
    """Inverse of x modulo the bit-polynomial mod by the extended Euclidean algorithm."""
    r0, r1, s0, s1 = mod, x, 0, 1
    while r1:
        d = r0.bit_length() - r1.bit_length()
        if d < 0:
            r0, r1, s0, s1 = r1, r0, s1, s0
            continue
        r0 ^= r1 << d
        s0 ^= s1 << d
        if r0.bit_length() < r1.bit_length():
            r0, r1, s0, s1 = r1, r0, s1, s0
    assert r0 == 1
    return poly_mod(s0, mod)


def trial_factor(n):
    out, p = [], 2
    while n > 1:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    return tuple(out)


def irreducible_by_trial_division(poly):
    n = poly.bit_length() - 1
    for d in range(2, 1 << (n // 2 + 1)):
        if d.bit_length() - 1 <= n // 2 and poly_mod(poly, d) == 0:
            return False
    return True


def test_context_m1():
    c = FieldContext(1)
    assert c.n == 4 and c.modulus.bit_length() - 1 == 4 and c.q == 2


def test_context_m3_factorization():
    c = get_context(3)
    assert c.order == 4095
    assert c.order_factorization == (3, 3, 5, 7, 13) == trial_factor(4095)


@pytest.mark.parametrize("n", [4, 8, 12, 16, 20, 24])
def test_factorize_matches_trial_division(n):
    assert factorize((1 << n) - 1) == trial_factor((1 << n) - 1)


def test_reducible_override():
    with pytest.raises(NotIrreducible):
        FieldContext(3, (1 << 12) | 1)


def test_wrong_degree_override():
    with pytest.raises(NotIrreducible):
        FieldContext(3, 0b10011)


def test_size_limits():
    for m in (0, 7, 2.5):
        with pytest.raises(UnsupportedSize):
            FieldContext(m)


def _x_has_full_order(mod, n):
    x, k = 2, 1
    while x != 1:
        x = poly_mod(clmul(x, 2), mod)
        k += 1
    return k == (1 << n) - 1


@pytest.mark.parametrize("m", [1, 2, 3])
def test_default_modulus_is_smallest_primitive(m):
    c = get_context(m)
    n = 4 * m
    assert c.generator == 2
    assert irreducible_by_trial_division(c.modulus) and _x_has_full_order(c.modulus, n)
    for cand in range((1 << n) + 1, c.modulus, 2):
        if irreducible_by_trial_division(cand):
            assert not _x_has_full_order(cand, n)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_is_irreducible_agrees_with_trial_division(m):
    n = 4 * m
    rng = random.Random(m)
    for cand in [(1 << n) | rng.getrandbits(n) | 1 for _ in range(200)]:
        assert is_irreducible(cand) == irreducible_by_trial_division(cand)


def test_override_with_non_primitive_irreducible():
    # X^4 + X^3 + X^2 + X + 1 is irreducible but X has order 5
    c = FieldContext(1, 0b11111)
    assert c.generator != 2
    assert len(set(c.exp[: c.order].tolist())) == c.order


def test_antilog_log_roundtrip(ctx_any):
    xs = np.arange(1, ctx_any.size)
    assert np.array_equal(ctx_any.exp[ctx_any.log[xs]], xs)


def test_basic_examples(ctx8):
    c = ctx8
    g = c.generator
    assert c.add(g, g) == 0 and c.add(g, 0) == g and c.add(1, g) == 1 ^ g
    assert c.mul(g, 1) == g and c.mul(g, 0) == 0
    assert c.mul(g, c.pow(g, c.size - 2)) == 1
    assert c.pow(g, c.size - 2) == xgcd_inverse(g, c.modulus)


def test_pow_examples(ctx_any):
    c = ctx_any
    xs = range(1, c.size) if c.size <= 4096 else random.Random(0).sample(range(1, c.size), 2000)
    for x in xs:
        assert c.pow(x, 0) == 1
        assert c.pow(x, c.order) == 1
    w = c.pow(c.generator, c.order // 3)
    assert w != 1 and c.pow(w, 3) == 1


def test_zero_to_negative_power(ctx8):
    with pytest.raises(ZeroToNegativePower):
        ctx8.pow(0, -1)
    with pytest.raises(ZeroToNegativePower):
        ctx8.vpow(np.array([0, 1]), -2)
    assert ctx8.pow(0, 0) == 1 and ctx8.pow(0, 5) == 0


def test_inverse_matches_xgcd(ctx8):
    for x in range(1, ctx8.size):
        assert ctx8.inv(x) == xgcd_inverse(x, ctx8.modulus)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_table_and_clmul_agree(m):
    c = get_context(m)
    rng = np.random.default_rng(m)
    xs = rng.integers(0, c.size, 10_000).tolist()
    ys = rng.integers(0, c.size, 10_000).tolist()
    table = c.vmul(np.array(xs), np.array(ys)).tolist()
    for x, y, t in zip(xs, ys, table):
        assert c.mul(x, y) == c.mul_clmul(x, y) == t


def test_frobenius(ctx_any):
    c = ctx_any
    for x in random.Random(1).sample(range(c.size), min(c.size, 500)):
        assert c.frobenius_q(x, 0) == x
        assert c.frobenius_q(x, 4) == x
        y = x
        for _ in range(4):
            y = c.frobenius_q(y, 1)
        assert y == x
        assert c.frobenius_q(x, -1) == c.frobenius_q(x, 3)


def test_sqrt_exhaustive_small():
    for m in (1, 2, 3):
        c = get_context(m)
        for x in range(c.size):
            assert c.sqrt(c.mul(x, x)) == x
            r = c.sqrt(x)
            assert c.mul(r, r) == x


def test_sqrt_sampled_m5(ctx32):
    c = ctx32
    xs = np.random.default_rng(5).integers(0, c.size, 20_000)
    assert np.array_equal(c.vsqrt(c.vmul(xs, xs)), xs)
    g = c.generator
    assert c.sqrt(c.mul(g, g)) == g and c.sqrt(0) == 0 and c.sqrt(1) == 1


def test_norm_and_trace(ctx8):
    c = ctx8
    q = c.q
    assert c.norm_E_K(1) == 1
    for x in range(c.size):
        assert c.in_subfield(c.norm_E_K(x), "K")
    u = c.pow(c.generator, (q - 1) * (q + 1))  # order q^2 + 1
    assert c.norm_E_K(u) == 1
    g = c.generator
    assert c.norm_E_K(g) == c.pow(g, q * q + 1) and c.in_subfield(c.norm_E_K(g), "K")
    assert c.trace_K_F(1) == 0 and c.trace_K_F(0) == 0
    y = next(y for y in c.subfield_elements("K") if not c.in_subfield(y, "F"))
    tr = c.trace_K_F(y)
    assert tr == y ^ c.frobenius_q(y, 1) and c.frobenius_q(tr, 1) == tr
    K = c.subfield_elements("K")
    F = c.subfield_elements("F")
    assert len(K) == q * q and len(F) == q
    assert sorted({c.trace_K_F(y) for y in K}) == F  # onto F
    for y1 in K[::7]:
        for y2 in K[::5]:
            assert c.trace_K_F(y1 ^ y2) == c.trace_K_F(y1) ^ c.trace_K_F(y2)
        for a in F:
            assert c.trace_K_F(c.mul(a, y1)) == c.mul(a, c.trace_K_F(y1))
    with pytest.raises(NotInSubfield):
        c.trace_K_F(c.generator)


def test_in_subfield(ctx8):
    c = ctx8
    q = c.q
    assert c.in_subfield(1, "F")
    assert not c.in_subfield(c.generator, "F")
    assert not c.in_subfield(c.generator, "K")
    assert c.in_subfield(c.pow(c.generator, (q * q + 1) * (q + 1)), "K")
    # K* is the subgroup of order q^2 - 1
    for k in range(0, c.order, 97):
        x = c.gen_pow(k)
        assert c.in_subfield(x, "K") == (k % (q * q + 1) == 0)
    with pytest.raises(ValueError):
        c.in_subfield(1, "Q")


def test_hex_format(ctx8, ctx32):
    assert ctx8.to_hex(5) == "0x005"
    assert ctx32.to_hex(5) == "0x00005"
    assert ctx8.modulus_hex == f"0x{ctx8.modulus:x}"
    for x in (0, 1, 4095):
        assert ctx8.from_hex(ctx8.to_hex(x)) == x
    for bad in ("12", "0xg", "0x1000", None):
        with pytest.raises(ParseError):
            ctx8.from_hex(bad)


elements8 = st.integers(0, 4095)


@settings(max_examples=300, deadline=None)
@given(elements8, elements8, elements8)
def test_field_axioms(x, y, z):
    c = get_context(3)
    assert c.mul(x, y) == c.mul(y, x)
    assert c.mul(c.mul(x, y), z) == c.mul(x, c.mul(y, z))
    assert c.mul(x, y ^ z) == c.mul(x, y) ^ c.mul(x, z)
    assert c.frobenius_q(c.mul(x, y), 1) == c.mul(c.frobenius_q(x, 1), c.frobenius_q(y, 1))
    if x:
        assert c.mul(x, c.pow(x, -1)) == 1


@settings(max_examples=200, deadline=None)
@given(st.integers(0, (1 << 20) - 1), st.integers(-(1 << 40), 1 << 40))
def test_pow_table_vs_square_and_multiply(x, e):
    c = get_context(5)
    if x == 0 and e < 0:
        return
    assert c.pow(x, e) == c.pow_clmul(x, e) == int(c.vpow(np.array([x]), e)[0])

"""Arithmetic in the binary field E = GF(2^(4m)), q = 2^m.

Elements are plain Python ints whose bit i is the coefficient of X^i in the
polynomial basis.  A :class:`FieldContext` fixes the modulus, a primitive
element and the exp/log tables used for fast multiplication.  Every scalar
operation has a vectorised twin (prefixed ``v``) working on numpy integer
arrays, which the exhaustive sweeps rely on.

The subfields K = GF(q^2) and F = GF(q) are never modelled separately; they
are the fixed fields of x -> x^(q^2) and x -> x^q inside E.
"""

from __future__ import annotations

import functools
import math

import numpy as np

from .errors import NotInSubfield, NotIrreducible, ParseError, UnsupportedSize, ZeroToNegativePower

MIN_M = 1
MAX_M = 6


# --- bit-polynomials over F_2 ------------------------------------------------

def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a: int, mod: int) -> int:
    dm = mod.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= mod << (a.bit_length() - 1 - dm)
    return a


def poly_mulmod(a: int, b: int, mod: int) -> int:
    return poly_mod(clmul(a, b), mod)


def poly_powmod(a: int, e: int, mod: int) -> int:
    r = 1
    a = poly_mod(a, mod)
    while e:
        if e & 1:
            r = poly_mulmod(r, a, mod)
        a = poly_mulmod(a, a, mod)
        e >>= 1
    return r


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(poly: int) -> bool:
    """Rabin's test: no factor of degree d for any maximal proper divisor d of deg(poly)."""
    n = poly.bit_length() - 1
    if n < 1:
        return False
    x = 2
    if poly_powmod(x, 1 << n, poly) != poly_mod(x, poly):
        return False
    for p in set(_prime_factors(n)):
        h = poly_powmod(x, 1 << (n // p), poly) ^ poly_mod(x, poly)
        if poly_gcd(poly, h) != 1:
            return False
    return True


# --- factorisation of 2^n - 1 -----------------------------------------------

_TRIAL_BOUND = 1 << 12


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"pollard rho failed on {n}")


def factorize(n: int) -> tuple[int, ...]:
    """Prime factors of n with multiplicity, ascending.

    Trial division by everything below 2^12, then Pollard rho on whatever
    composite cofactor is left.
    """
    out = []
    p = 2
    while p < _TRIAL_BOUND and p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    stack = [n] if n > 1 else []
    while stack:
        k = stack.pop()
        if _is_probable_prime(k):
            out.append(k)
        else:
            d = _pollard_rho(k)
            stack.extend((d, k // d))
    return tuple(sorted(out))


def _has_full_order(x: int, mod: int, order: int, primes) -> bool:
    if poly_powmod(x, order, mod) != 1:
        return False
    return all(poly_powmod(x, order // p, mod) != 1 for p in primes)


@functools.lru_cache(maxsize=None)
def default_modulus(n: int) -> int:
    """Smallest primitive polynomial of degree n, in integer encoding order."""
    order = (1 << n) - 1
    primes = sorted(set(factorize(order)))
    for cand in range((1 << n) + 1, 1 << (n + 1), 2):
        if is_irreducible(cand) and _has_full_order(2, cand, order, primes):
            return cand
    raise AssertionError(f"no primitive polynomial of degree {n}")


# --- vectorised helpers used to build the tables ----------------------------

def _vmulmod_const(arr: np.ndarray, c: int, mod: int, n: int) -> np.ndarray:
    res = np.zeros_like(arr)
    for i in range(c.bit_length()):
        if (c >> i) & 1:
            res ^= arr << i
    for bit in range(2 * n - 2, n - 1, -1):
        hi = (res >> bit) & 1
        res ^= hi * (mod << (bit - n))
    return res


class FieldContext:
    """The field E = GF(2^(4m)) together with the integers tied to q = 2^m.

    Instances are immutable after construction and may be shared freely.
    """

    def __init__(self, m: int, modulus: int | None = None):
        if not isinstance(m, int) or not MIN_M <= m <= MAX_M:
            raise UnsupportedSize(f"m must be an integer in [{MIN_M}, {MAX_M}], got {m!r}")
        n = 4 * m
        self.m = m
        self.n = n
        self.q = 1 << m
        self.size = 1 << n
        self.order = self.size - 1
        self.order_factorization = factorize(self.order)
        primes = sorted(set(self.order_factorization))

        if modulus is None:
            modulus = default_modulus(n)
        else:
            if modulus.bit_length() - 1 != n:
                raise NotIrreducible(f"modulus must have degree {n}, got degree {modulus.bit_length() - 1}")
            if not is_irreducible(modulus):
                raise NotIrreducible(f"{modulus:#x} is reducible over F_2")
        self.modulus = modulus

        gen = next(x for x in range(2, self.size) if _has_full_order(x, modulus, self.order, primes))
        self.generator = gen

        # exp has length 2*order so that exp[log a + log b] needs no reduction
        exp = np.ones(1, dtype=np.int64)
        while exp.size < self.order:
            step = poly_powmod(gen, exp.size, modulus)
            exp = np.concatenate([exp, _vmulmod_const(exp, step, modulus, n)])
        exp = exp[: self.order]
        log = np.full(self.size, -1, dtype=np.int64)
        log[exp] = np.arange(self.order, dtype=np.int64)
        if np.count_nonzero(log[1:] < 0):
            raise AssertionError("generator does not have full order")
        self.exp = np.concatenate([exp, exp])
        self.log = log
        self.exp.flags.writeable = False
        self.log.flags.writeable = False
        self._exp_s = memoryview(self.exp)
        self._log_s = memoryview(self.log)

    def __repr__(self):
        return f"FieldContext(m={self.m}, modulus={self.modulus:#x})"

    # --- scalar arithmetic ---------------------------------------------------

    @staticmethod
    def add(x: int, y: int) -> int:
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp_s[self._log_s[x] + self._log_s[y]]

    def mul_clmul(self, x: int, y: int) -> int:
        """Multiplication without tables: carry-less product then reduction."""
        return poly_mulmod(x, y, self.modulus)

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise ZeroToNegativePower("0 has no inverse")
            return 1 if e == 0 else 0
        return self._exp_s[(self._log_s[x] * (e % self.order)) % self.order]

    def pow_clmul(self, x: int, e: int) -> int:
        if e < 0:
            if x == 0:
                raise ZeroToNegativePower("0 has no inverse")
            e = e % self.order
        return poly_powmod(x, e, self.modulus)

    def inv(self, x: int) -> int:
        return self.pow(x, -1)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def frobenius_q(self, x: int, k: int = 1) -> int:
        """x^(q^k); k is taken mod 4."""
        return self.pow(x, self.q ** (k % 4))

    def sqrt(self, x: int) -> int:
        return self.pow(x, 1 << (self.n - 1))

    def norm_E_K(self, x: int) -> int:
        return self.pow(x, self.q * self.q + 1)

    def trace_K_F(self, y: int) -> int:
        if not self.in_subfield(y, "K"):
            raise NotInSubfield(f"{self.to_hex(y)} is not in GF(q^2)")
        return y ^ self.frobenius_q(y, 1)

    def in_subfield(self, x: int, level: str) -> bool:
        if level == "F":
            return self.frobenius_q(x, 1) == x
        if level == "K":
            return self.frobenius_q(x, 2) == x
        raise ValueError(f"level must be 'F' or 'K', got {level!r}")

    def dlog(self, x: int) -> int:
        if x == 0:
            raise ValueError("log of zero")
        return self._log_s[x]

    def gen_pow(self, k: int) -> int:
        return self._exp_s[k % self.order]

    # --- vectorised arithmetic -----------------------------------------------

    def vmul(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        zero = (x == 0) | (y == 0)
        idx = np.where(zero, 0, self.log[x] + self.log[y])
        return np.where(zero, 0, self.exp[idx])

    def vpow(self, x, e: int) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        zero = x == 0
        if e < 0 and zero.any():
            raise ZeroToNegativePower("0 has no inverse")
        er = e % self.order
        idx = np.where(zero, 0, (self.log[x] * er) % self.order)
        return np.where(zero, 1 if e == 0 else 0, self.exp[idx])

    def vinv(self, x) -> np.ndarray:
        return self.vpow(x, -1)

    def vsqrt(self, x) -> np.ndarray:
        return self.vpow(x, 1 << (self.n - 1))

    def elements(self) -> np.ndarray:
        return np.arange(self.size, dtype=np.int64)

    def subfield_elements(self, level: str) -> list[int]:
        """All elements of F or K in encoding order."""
        xs = self.elements()
        k = {"F": 1, "K": 2}[level]
        return xs[self.vpow(xs, self.q**k) == xs].tolist()

    # --- serialisation -------------------------------------------------------

    def to_hex(self, x: int) -> str:
        return f"0x{x:0{self.m}x}"

    def from_hex(self, s: str) -> int:
        if not isinstance(s, str) or not s.lower().startswith("0x"):
            raise ParseError(f"expected 0x-prefixed hex, got {s!r}")
        try:
            x = int(s[2:], 16)
        except ValueError:
            raise ParseError(f"malformed hex {s!r}") from None
        if x >= self.size:
            raise ParseError(f"{s} does not fit in {self.n} bits")
        return x

    @property
    def modulus_hex(self) -> str:
        return f"0x{self.modulus:x}"


@functools.lru_cache(maxsize=16)
def get_context(m: int, modulus: int | None = None) -> FieldContext:
    """Shared, cached :class:`FieldContext` for (m, modulus)."""
    return FieldContext(m, modulus)


def context_for_q(q: int, modulus: int | None = None) -> FieldContext:
    if q < 2 or q & (q - 1):
        raise UnsupportedSize(f"q must be a power of two, got {q}")
    return get_context(q.bit_length() - 1, modulus)

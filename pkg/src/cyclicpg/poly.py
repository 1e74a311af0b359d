"""Sparse polynomials over F_2 stored as exponent lists."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

import numpy as np


@dataclass(frozen=True)
class SparsePoly:
    """Sum of X^e over ``exponents`` (strictly decreasing, coefficients all 1)."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps) or any(a <= b for a, b in zip(exps, exps[1:])):
            raise ValueError(f"exponents must be strictly decreasing and >= 0: {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def from_terms(cls, terms: Iterable[int]) -> "SparsePoly":
        """Collect monomials over F_2; repeated exponents cancel in pairs."""
        counts = Counter(terms)
        return cls(tuple(sorted((e for e, c in counts.items() if c % 2), reverse=True)))

    @property
    def degree(self) -> int:
        return self.exponents[0] if self.exponents else -1

    def __len__(self):
        return len(self.exponents)

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        return SparsePoly.from_terms(self.exponents + other.exponents)

    def __str__(self):
        if not self.exponents:
            return "0"
        parts = []
        for e in self.exponents:
            parts.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return " + ".join(parts)

    def evaluate(self, ctx, x: int) -> int:
        acc = 0
        for e in self.exponents:
            acc ^= ctx.pow(x, e)
        return acc

    def evaluate_many(self, ctx, xs) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        acc = np.zeros_like(xs)
        for e in self.exponents:
            acc ^= ctx.vpow(xs, e)
        return acc

    def to_json(self, ctx, which: str) -> dict:
        return {"q": ctx.q, "modulus": ctx.modulus_hex, "which": which, "exponents": list(self.exponents)}

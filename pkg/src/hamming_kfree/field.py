"""Finite field arithmetic: GF(2^m) by polynomial bitmasks, and GF(q) for prime q.

Elements of GF(2^m) are integer codes 0..2^m-1 whose bits are the polynomial
coefficients over GF(2). The labeling puts the zero element first and the
remaining elements in ascending code order, so ``gamma[i] == i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

# Lexicographically least irreducible polynomial of each degree.
IRREDUCIBLE = {
    1: 0x2,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x201B,
    14: 0x4021,
    15: 0x8003,
    16: 0x1002B,
}

MAX_DEGREE = 16
PRIME_CAP = 10**6


class FieldError(ValueError):
    pass


def poly_mod(a: int, b: int) -> int:
    """Remainder of GF(2)[x] division of bitmask ``a`` by bitmask ``b``."""
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    d = poly.bit_length() - 1
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if poly_mod(poly, q) == 0:
            return False
    return True


@lru_cache(maxsize=None)
def _verified_modulus(m: int) -> int:
    poly = IRREDUCIBLE[m]
    if not is_irreducible(poly):  # pragma: no cover - table corruption
        raise FieldError(f"shipped modulus {poly:#x} for m={m} is reducible")
    return poly


@dataclass(frozen=True)
class FieldTable:
    """A concrete GF(2^m) with its element labeling."""

    m: int
    modulus: int = field(default=0)

    def __post_init__(self):
        if not 1 <= self.m <= MAX_DEGREE:
            raise FieldError(f"extension degree must be in 1..{MAX_DEGREE}, got {self.m}")
        if self.modulus == 0:
            object.__setattr__(self, "modulus", _verified_modulus(self.m))
        elif self.modulus.bit_length() - 1 != self.m or not is_irreducible(self.modulus):
            raise FieldError(f"{self.modulus:#x} is not an irreducible degree-{self.m} polynomial")

    @property
    def order(self) -> int:
        return 1 << self.m

    def gamma(self, i: int) -> int:
        """Element code of gamma_i (1-based labeling, gamma_1 = 0)."""
        if not 1 <= i <= self.order:
            raise FieldError(f"label {i} out of range 1..{self.order}")
        return i - 1

    def labeling(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def _check(self, *codes: int) -> None:
        for a in codes:
            if not 0 <= a < self.order:
                raise FieldError(f"element code {a} out of range for GF(2^{self.m})")

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        return _mul(a, b, self.m, self.modulus)

    def pow(self, a: int, j: int) -> int:
        self._check(a)
        if j < 0:
            raise FieldError("negative exponent; use inv() first")
        result, base = 1, a
        while j:
            if j & 1:
                result = _mul(result, base, self.m, self.modulus)
            base = _mul(base, base, self.m, self.modulus)
            j >>= 1
        return result

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.order - 2)

    def power_table(self, exponents) -> np.ndarray:
        """``table[c, e]`` is element ``c`` raised to ``exponents[e]``."""
        exps = list(exponents)
        out = np.zeros((self.order, len(exps)), dtype=np.int64)
        for c in range(self.order):
            for e, j in enumerate(exps):
                out[c, e] = self.pow(c, j)
        return out

    def det(self, matrix) -> int:
        """Determinant of a square matrix over this field by Gaussian elimination."""
        a = [list(row) for row in matrix]
        w = len(a)
        if any(len(row) != w for row in a):
            raise FieldError("matrix must be square")
        det = 1
        for col in range(w):
            pivot = next((r for r in range(col, w) if a[r][col]), None)
            if pivot is None:
                return 0
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
            det = self.mul(det, a[col][col])
            inv = self.inv(a[col][col])
            for r in range(col + 1, w):
                if a[r][col]:
                    f = self.mul(a[r][col], inv)
                    a[r] = [x ^ self.mul(f, y) for x, y in zip(a[r], a[col])]
        return det


def _mul(a: int, b: int, m: int, modulus: int) -> int:
    result = 0
    top = 1 << m
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return result


def gf_add(table: FieldTable, a: int, b: int) -> int:
    return table.add(a, b)


def gf_mul(table: FieldTable, a: int, b: int) -> int:
    return table.mul(a, b)


def gf_pow(table: FieldTable, a: int, j: int) -> int:
    return table.pow(a, j)


# -- prime fields -----------------------------------------------------------


def is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x % 2 == 0:
        return x == 2
    d = 3
    while d * d <= x:
        if x % d == 0:
            return False
        d += 2
    return True


def next_prime(x: int) -> int:
    """Smallest prime >= x, by trial division."""
    if x < 0:
        raise ValueError(f"next_prime needs x >= 0, got {x}")
    if x > PRIME_CAP:
        raise ValueError(f"x={x} above the trial-division cap {PRIME_CAP}")
    q = max(x, 2)
    while not is_prime(q):
        q += 1
    return q


def prime_power_witness(x: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``x == p**e``, ``e >= 1``, or None. 1 is not a prime power."""
    if x < 2:
        return None
    p = 2
    while p * p <= x and x % p:
        p += 1
    if x % p:
        p = x
    e = 0
    y = x
    while y % p == 0:
        y //= p
        e += 1
    return (p, e) if y == 1 else None


def is_prime_power(x: int) -> bool:
    return prime_power_witness(x) is not None


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise FieldError(f"{self.q} is not prime")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def pow(self, a: int, j: int) -> int:
        return pow(a, j, self.q)

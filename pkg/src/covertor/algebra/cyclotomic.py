"""Cyclotomic polynomials, arithmetic in Q(zeta_d), and resultants."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import gmpy2

from ..errors import ZeroPolynomial
from .laurent import LaurentPoly, _poly_divide_exact
from .matrix import integer_det

__all__ = [
    "cyclotomic",
    "euler_phi",
    "is_zero_at_root",
    "resultant",
    "resultant_abs",
    "CycloElt",
    "exact_rank",
]


def euler_phi(d: int) -> int:
    result, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(d: int) -> tuple[int, ...]:
    num = [-1] + [0] * (d - 1) + [1]  # t^d - 1
    for e in range(1, d):
        if d % e == 0:
            num = _poly_divide_exact(num, list(_cyclotomic_coeffs(e)))
    return tuple(num)


def cyclotomic(d: int) -> LaurentPoly:
    """The d-th cyclotomic polynomial, by dividing t^d - 1 by the proper-divisor factors."""
    if d < 1:
        raise ValueError(f"cyclotomic index must be positive, got {d}")
    return LaurentPoly.from_list(_cyclotomic_coeffs(d))


def _rem_monic(a: Sequence, m: Sequence) -> list:
    """Remainder of a modulo a monic m (dense, lowest degree first)."""
    a = list(a)
    k = len(m) - 1
    for i in range(len(a) - 1, k - 1, -1):
        c = a[i]
        if c:
            for j in range(k + 1):
                a[i - k + j] -= c * m[j]
    a = a[:k] if k else []
    return a + [0] * (k - len(a))


def is_zero_at_root(p: LaurentPoly, m: int, n: int) -> bool:
    """Exact test of p(exp(2 pi i m / n)) == 0."""
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got m={m}, n={n}")
    if p.is_zero():
        return True
    d = n // math.gcd(m, n)
    rem = _rem_monic(p.polynomial_part(), _cyclotomic_coeffs(d))
    return not any(rem)


def _dense_nonnegative(p: LaurentPoly) -> list[int]:
    if p.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    if p.min_exp < 0:
        raise ValueError("resultant needs an ordinary polynomial (no negative exponents)")
    lo, coeffs = p.to_list()
    return [0] * lo + coeffs


def resultant(p: LaurentPoly, q: LaurentPoly) -> int:
    """Res(p, q) as the determinant of the Sylvester matrix."""
    a = _dense_nonnegative(p)[::-1]  # highest degree first
    b = _dense_nonnegative(q)[::-1]
    m, n = len(a) - 1, len(b) - 1
    if m == 0 and n == 0:
        return 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + a + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + b + [0] * (size - n - 1 - i))
    return integer_det(rows)


def resultant_abs(p: LaurentPoly, q: LaurentPoly) -> int:
    return abs(resultant(p, q))


# -- dense rational polynomial helpers for field inversion ---------------------

def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pdivmod(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    b = _trim([Fraction(x) for x in b])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _trim(q), _trim(a[: len(b) - 1])


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _psub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def root_of_unity(k: int, d: int) -> "gmpy2.mpc":
    """exp(2 pi i k / d) at the active gmpy2 precision."""
    k %= d
    if 4 * k % d == 0:
        # exact for 1, i, -1, -i
        return gmpy2.mpc(*[(1, 0), (0, 1), (-1, 0), (0, -1)][4 * k // d])
    theta = 2 * gmpy2.const_pi() * k / d
    return gmpy2.mpc(gmpy2.cos(theta), gmpy2.sin(theta))


class CycloElt:
    """Element of Q[t]/Phi_d, i.e. of the cyclotomic field Q(zeta_d).

    ``t`` stands for a primitive d-th root of unity; which one is chosen
    only when embedding into C via :meth:`to_complex`.
    """

    __slots__ = ("d", "c")

    def __init__(self, d: int, coeffs: Sequence):
        k = euler_phi(d)
        coeffs = [Fraction(x) for x in coeffs]
        if len(coeffs) > k:
            coeffs = _rem_monic(coeffs, _cyclotomic_coeffs(d))
        self.d = d
        self.c = tuple(coeffs) + (Fraction(0),) * (k - len(coeffs))

    @classmethod
    def from_laurent(cls, p: LaurentPoly, d: int) -> "CycloElt":
        """Image of p under t -> zeta_d (negative exponents via t^-1 = t^(d-1))."""
        dense = [Fraction(0)] * d
        for e, v in p.items():
            dense[e % d] += v
        return cls(d, _rem_monic(dense, _cyclotomic_coeffs(d)))

    @classmethod
    def const(cls, d: int, x) -> "CycloElt":
        return cls(d, [x])

    @classmethod
    def gen_power(cls, d: int, k: int) -> "CycloElt":
        return cls.from_laurent(LaurentPoly({k: 1}), d)

    def _lift(self, other) -> "CycloElt":
        if isinstance(other, CycloElt):
            if other.d != self.d:
                raise ValueError("cyclotomic conductors differ")
            return other
        return CycloElt.const(self.d, other)

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        try:
            other = self._lift(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.c == other.c

    def __hash__(self) -> int:
        return hash((self.d, self.c))

    def __add__(self, other) -> "CycloElt":
        other = self._lift(other)
        return CycloElt(self.d, [x + y for x, y in zip(self.c, other.c)])

    __radd__ = __add__

    def __neg__(self) -> "CycloElt":
        return CycloElt(self.d, [-x for x in self.c])

    def __sub__(self, other) -> "CycloElt":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "CycloElt":
        return self._lift(other) - self

    def __mul__(self, other) -> "CycloElt":
        other = self._lift(other)
        prod = _pmul(list(self.c), list(other.c))
        return CycloElt(self.d, _rem_monic(prod, _cyclotomic_coeffs(self.d)) if prod else [])

    __rmul__ = __mul__

    def conj(self) -> "CycloElt":
        """Complex conjugation, t -> t^-1."""
        d = self.d
        dense = [Fraction(0)] * d
        for e, v in enumerate(self.c):
            dense[(-e) % d] += v
        return CycloElt(d, _rem_monic(dense, _cyclotomic_coeffs(d)))

    def inverse(self) -> "CycloElt":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # extended Euclid: s*a + u*phi = g (a nonzero constant since phi is irreducible)
        a = _trim(list(self.c))
        b = [Fraction(x) for x in _cyclotomic_coeffs(self.d)]
        s0, s1 = [Fraction(1)], []
        while b:
            q, r = _pdivmod(a, b)
            a, b = b, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        # a is now a constant g with s1-side swapped: s0 * self = a (mod phi)
        g = a[0]
        return CycloElt(self.d, [x / g for x in s0])

    def __truediv__(self, other) -> "CycloElt":
        return self * self._lift(other).inverse()

    def to_complex(self, k: int = 1):
        """Embed via t -> exp(2 pi i k / d) at the active gmpy2 precision."""
        z = root_of_unity(k, self.d)
        acc = gmpy2.mpc(0)
        power = gmpy2.mpc(1)
        for x in self.c:
            if x:
                acc += gmpy2.mpq(x.numerator, x.denominator) * power
            power *= z
        return acc

    def __repr__(self) -> str:
        return f"CycloElt({self.d}, {[str(x) for x in self.c]})"


def exact_rank(rows: list[list[CycloElt]]) -> int:
    """Rank over Q(zeta_d) by exact Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if not m[r][col].is_zero()), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col].inverse()
        for r in range(rank + 1, nrows):
            if not m[r][col].is_zero():
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank

"""Integer Laurent polynomials in one variable."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """Sparse Laurent polynomial with integer coefficients.

    Stored as an exponent -> coefficient map with no zero entries, so equal
    polynomials compare and hash equal.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._c = c
        return p

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def from_list(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPoly":
        """Coefficients listed from exponent ``low`` upward."""
        return cls({low + i: v for i, v in enumerate(coeffs)})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls({0: x})
        return NotImplemented

    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def __eq__(self, other) -> bool:
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            return LaurentPoly._raw({e: v * other for e, v in self._c.items()})
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have negative powers")
            (e, v), = self._c.items()
            if abs(v) != 1:
                raise ValueError("monomial is not a unit")
            return LaurentPoly({e * k: v ** k})
        result = LaurentPoly({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def substitute_inverse(self) -> "LaurentPoly":
        """t -> t^-1."""
        return LaurentPoly._raw({-e: v for e, v in self._c.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """t -> t^k."""
        if k == 0:
            return LaurentPoly({0: sum(self._c.values())})
        return LaurentPoly._raw({e * k: v for e, v in self._c.items()})

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: e * v for e, v in self._c.items()})

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        """Exact value at a nonzero integer or rational; a Fraction."""
        x = Fraction(x)
        if x == 0:
            if any(e < 0 for e in self._c):
                raise ZeroDivisionError("negative exponent at t = 0")
            return Fraction(self._c.get(0, 0))
        return sum((v * x ** e for e, v in self._c.items()), Fraction(0))

    def to_list(self) -> tuple[int, list[int]]:
        """(lowest exponent, dense coefficient list upward)."""
        if not self._c:
            return 0, []
        lo, hi = self.min_exp, self.max_exp
        return lo, [self._c.get(e, 0) for e in range(lo, hi + 1)]

    def polynomial_part(self) -> list[int]:
        """Dense coefficients of t^(-min_exp) * p, lowest degree first."""
        return self.to_list()[1]

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other in the Laurent ring; ValueError if inexact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        lo_a, a = self.to_list()
        lo_b, b = other.to_list()
        q = _poly_divide_exact(a, b)
        return LaurentPoly.from_list(q, lo_a - lo_b)

    def is_symmetric(self) -> bool:
        return self == self.substitute_inverse()

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"

    def format(self, var: str = "t") -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                body = str(a)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = format


def _poly_divide_exact(a: list[int], b: list[int]) -> list[int]:
    """Exact division of dense integer polynomials (lowest degree first)."""
    # strip trailing zeros
    while b and b[-1] == 0:
        b = b[:-1]
    shift = 0
    while b and b[0] == 0:
        b = b[1:]
        shift += 1
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    if shift:
        if any(a[:shift]):
            raise ValueError("inexact polynomial division")
        a = a[shift:]
    if len(a) < len(b):
        if any(a):
            raise ValueError("inexact polynomial division")
        return [0]
    q = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        num = a[i + len(b) - 1]
        if num % lead:
            raise ValueError("inexact polynomial division")
        c = num // lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    if any(a):
        raise ValueError("inexact polynomial division")
    return q


T = LaurentPoly({1: 1})
ONE = LaurentPoly({0: 1})

"""Seifert matrices of braid closures and the invariants read off from them.

The surface is the Bennequin surface of the closed braid: one disk per
strand and one half-twisted band per crossing.  Each pair of consecutive
letters with the same index bounds a loop through two bands; these loops
form a basis of H_1 and the linking rules between them are local.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Literal

import gmpy2

from .algebra import (
    CycloElt,
    LaurentPoly,
    PrecisionPolicy,
    exact_rank,
    hermitian_signature,
    integer_det,
    is_zero_at_root,
    signature_numeric,
)
from .algebra.modular import pencil_det
from .errors import DegenerateAtRoot, NotAKnot, NotRationalHomologySphere, ValidationError
from .notation import BraidWord, KnotPresentation, closure_components

__all__ = [
    "SeifertMatrix",
    "SignatureProfile",
    "seifert_matrix",
    "alexander",
    "knot_determinant",
    "tl_signature",
    "tl_signature_sum",
    "signature_profile",
    "milnor_fiber_signature_oracle",
]


@dataclass(frozen=True)
class SeifertMatrix:
    matrix: tuple[tuple[int, ...], ...]
    braid: BraidWord | None = None

    def __post_init__(self):
        m = tuple(tuple(int(v) for v in r) for r in self.matrix)
        object.__setattr__(self, "matrix", m)
        n = len(m)
        if any(len(r) != n for r in m):
            raise ValidationError("Seifert matrix must be square")
        if n % 2:
            raise ValidationError(f"Seifert matrix of a knot has even size, got {n}")
        skew = [[m[i][j] - m[j][i] for j in range(n)] for i in range(n)]
        if integer_det(skew) != 1:
            raise ValidationError("V - V^T is not unimodular; not a knot Seifert matrix")

    @property
    def size(self) -> int:
        return len(self.matrix)

    @property
    def genus(self) -> int:
        return self.size // 2

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]

    def transpose(self) -> list[list[int]]:
        return [list(c) for c in zip(*self.matrix)] if self.matrix else []


def _bennequin_matrix(b: BraidWord) -> list[list[int]]:
    k = b.strand_count
    by_index: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    for pos, e in enumerate(b.letters):
        by_index[abs(e)].append((pos, 1 if e > 0 else -1))
    # gens[i] = loops between consecutive letters of index i: (start, end, sign0, sign1)
    gens: list[list[tuple[int, int, int, int]]] = [[] for _ in range(k)]
    for i in range(1, k):
        occ = by_index[i]
        gens[i] = [(p0, p1, s0, s1) for (p0, s0), (p1, s1) in zip(occ, occ[1:])]
    index = {}
    for i in range(1, k):
        for j in range(len(gens[i])):
            index[i, j] = len(index)
    v = [[0] * len(index) for _ in range(len(index))]
    for i in range(1, k):
        row = gens[i]
        for j, (p0, p1, s0, s1) in enumerate(row):
            g = index[i, j]
            if s0 == s1:
                v[g][g] = -s0
            if j + 1 < len(row):
                h = index[i, j + 1]
                if s1 > 0:
                    v[h][g] = 1
                else:
                    v[g][h] = -1
        if i + 1 < k:
            for j, (a0, a1, _, _) in enumerate(row):
                g = index[i, j]
                for l, (c0, c1, _, _) in enumerate(gens[i + 1]):
                    h = index[i + 1, l]
                    if c0 < a0 < c1 < a1:
                        v[h][g] = 1
                    elif a0 < c0 < a1 < c1:
                        v[h][g] = -1
    return v


def seifert_matrix(b) -> SeifertMatrix:
    """Seifert matrix of the Bennequin surface of a braid closure."""
    if isinstance(b, KnotPresentation):
        if b.braid is None:
            raise ValidationError("Seifert data needs a braid presentation")
        b = b.braid
    if not isinstance(b, BraidWord):
        raise ValidationError("Seifert data needs a braid presentation")
    if b.letters and closure_components(b) != 1:
        raise NotAKnot(f"braid closure has {closure_components(b)} components")
    return SeifertMatrix(tuple(map(tuple, _bennequin_matrix(b))), b)


# -- Alexander polynomial -------------------------------------------------------

def _alexander_raw(v: list[list[int]]) -> list[int]:
    """Dense coefficients of det(V - t V^T), lowest degree first."""
    vt = [list(col) for col in zip(*v)]
    return pencil_det(v, vt, 1)


@lru_cache(maxsize=256)
def alexander(V: SeifertMatrix) -> LaurentPoly:
    """det(V - t V^T), shifted and signed so that Delta(1) = 1 and Delta(t) = Delta(1/t)."""
    coeffs = _alexander_raw(V.rows())
    p = LaurentPoly.from_list(coeffs, -V.genus)
    if p.evaluate(1) < 0:
        p = -p
    if p.evaluate(1) != 1 or not p.is_symmetric():
        raise ArithmeticError(f"Alexander polynomial {p} fails normalization")
    return p


def knot_determinant(V: SeifertMatrix) -> int:
    n = V.size
    m = V.matrix
    return abs(integer_det([[m[i][j] + m[j][i] for j in range(n)] for i in range(n)]))


# -- Tristram-Levine signatures -------------------------------------------------

def _tl_matrix(V: SeifertMatrix, d: int) -> list[list[CycloElt]]:
    """(1 - w) V + (1 - w^-1) V^T with w the generator of Q(zeta_d)."""
    one = CycloElt.const(d, 1)
    w = CycloElt.gen_power(d, 1)
    a, b = one - w, one - w.conj()
    m = V.matrix
    n = V.size
    cache: dict[tuple[int, int], CycloElt] = {}
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            key = (m[i][j], m[j][i])
            if key not in cache:
                cache[key] = a * key[0] + b * key[1]
            row.append(cache[key])
        out.append(row)
    return out


def _check_root(m: int, n: int) -> tuple[int, int]:
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got m={m}, n={n}")
    g = math.gcd(m, n)
    return n // g, m // g


def _averaged(V: SeifertMatrix, m: int, n: int, policy: PrecisionPolicy | None) -> Fraction:
    mat = V.matrix
    size = V.size
    previous = None
    for j in range(6, 60):
        values = []
        for sgn in (1, -1):
            def build(sgn=sgn):
                theta = gmpy2.const_pi() * (gmpy2.mpfr(2 * m) / n + sgn * gmpy2.exp2(-j))
                z = gmpy2.mpc(gmpy2.cos(theta), gmpy2.sin(theta))
                a, b = 1 - z, 1 - z.conjugate()
                return [[a * mat[r][c] + b * mat[c][r] for c in range(size)] for r in range(size)]
            values.append(signature_numeric(build, 0, policy))
        if values == previous:
            return Fraction(sum(values), 2)
        previous = values
    raise DegenerateAtRoot("one-sided signature limits did not stabilize")


def tl_signature(
    V: SeifertMatrix,
    m: int,
    n: int,
    mode: Literal["strict", "averaged"] = "strict",
    policy: PrecisionPolicy | None = None,
) -> tuple[int, int]:
    """(sign_{m/n}(K), nullity) at w = exp(2 pi i m/n).

    In strict mode a root of the Alexander polynomial at w raises
    DegenerateAtRoot; averaged mode returns the mean of the two one-sided
    limits instead (an int when integral, else a Fraction).
    """
    d, k = _check_root(m, n)
    if V.size == 0:
        return 0, 0
    degenerate = is_zero_at_root(alexander(V), m, n)
    if degenerate and mode == "strict":
        raise DegenerateAtRoot(f"Alexander polynomial vanishes at exp(2 pi i {m}/{n})")
    if mode not in ("strict", "averaged"):
        raise ValueError(f"unknown mode {mode!r}")
    H = _tl_matrix(V, d)
    if not degenerate:
        return hermitian_signature(H, k, policy, nullity=0)
    nullity = V.size - exact_rank(H)
    avg = _averaged(V, m, n, policy)
    return (int(avg) if avg.denominator == 1 else avg), nullity


@dataclass(frozen=True)
class SignatureProfile:
    n: int
    values: dict
    nullities: dict

    @property
    def sum(self) -> int:
        return sum(self.values.values())

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "values": {str(m): int(v) for m, v in sorted(self.values.items())},
            "nullities": {str(m): v for m, v in sorted(self.nullities.items())},
            "sum": int(self.sum),
        }


def signature_profile(
    V: SeifertMatrix, n: int, mode: str = "strict", policy: PrecisionPolicy | None = None
) -> SignatureProfile:
    """All sign_{m/n} for 1 <= m <= n-1, each conjugate pair computed once."""
    if n < 2:
        raise ValueError(f"cover degree must be >= 2, got {n}")
    values, nullities = {}, {}
    for m in range(1, n // 2 + 1):
        s, z = tl_signature(V, m, n, mode, policy)
        values[m] = values[n - m] = s
        nullities[m] = nullities[n - m] = z
    return SignatureProfile(n, values, nullities)


def tl_signature_sum(V: SeifertMatrix, n: int, policy: PrecisionPolicy | None = None) -> int:
    """sum_{m=1}^{n-1} sign_{m/n}(K); the n-fold branched cover must be a QHS."""
    from .covers import is_qhs

    if n < 2:
        raise ValueError(f"cover degree must be >= 2, got {n}")
    if not is_qhs(V, n):
        raise NotRationalHomologySphere(f"{n}-fold branched cover has b_1 > 0")
    return signature_profile(V, n, "strict", policy).sum


def milnor_fiber_signature_oracle(p: int, q: int, n: int) -> int:
    """Signature of the Milnor fiber of x^p + y^q + z^n by lattice-point count."""
    if min(p, q, n) < 2:
        raise ValueError("exponents must be >= 2")
    plus = minus = 0
    for i in range(1, p):
        for j in range(1, q):
            for k in range(1, n):
                s = Fraction(i, p) + Fraction(j, q) + Fraction(k, n)
                s -= 2 * (s.numerator // (2 * s.denominator))
                if 0 < s < 1:
                    plus += 1
                elif 1 < s < 2:
                    minus += 1
    return plus - minus

"""Exact determinants of linear matrix pencils by a single large-modulus pass."""

from __future__ import annotations

import math
from typing import Sequence

import gmpy2


def _inverse_mod(a: list[list[int]], p: int) -> list[list[int]]:
    n = len(a)
    m = [[x % p for x in row] + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        inv = pow(m[col][col], -1, p)
        pr = m[col] = [x * inv % p for x in m[col]]
        for r in range(n):
            f = m[r][col]
            if r != col and f:
                m[r] = [(x - f * y) % p for x, y in zip(m[r], pr)]
    return [row[n:] for row in m]


def _charpoly_mod(c: list[list[int]], p: int) -> list[int]:
    """det(xI - C) mod p, lowest degree first, via Hessenberg reduction."""
    n = len(c)
    h = [row[:] for row in c]
    for m in range(1, n - 1):
        if not h[m][m - 1]:
            i = next((i for i in range(m + 1, n) if h[i][m - 1]), None)
            if i is None:
                continue
            h[m], h[i] = h[i], h[m]
            for row in h:
                row[m], row[i] = row[i], row[m]
        inv = pow(h[m][m - 1], -1, p)
        hm = h[m]
        for i in range(m + 1, n):
            f = h[i][m - 1] * inv % p
            if f:
                h[i] = [(x - f * y) % p for x, y in zip(h[i], hm)]
                for row in h:
                    row[m] = (row[m] + f * row[i]) % p
    polys = [[1]]
    for k in range(1, n + 1):
        prev = polys[-1]
        hkk = h[k - 1][k - 1]
        poly = [0] + prev
        poly = [(x - hkk * y) % p for x, y in zip(poly, prev + [0])]
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = prod * h[i][i - 1] % p
            if not prod:
                break
            coef = h[i - 1][k - 1] * prod % p
            if coef:
                lower = polys[i - 1]
                for idx, v in enumerate(lower):
                    poly[idx] = (poly[idx] - coef * v) % p
        polys.append(poly)
    return polys[-1]


def pencil_det(v: Sequence[Sequence[int]], w: Sequence[Sequence[int]], det_a: int) -> list[int]:
    """Integer coefficients (lowest first) of det(V - t W) where det(V - W) = det_a = +-1.

    With A = V - W, det(V - tW) = det(A) det(I - (t-1) A^-1 W).  The
    characteristic polynomial of A^-1 W is computed modulo a prime larger
    than twice a Hadamard bound on the coefficients of det(V - tW), then
    lifted to the symmetric residue range.
    """
    if det_a not in (1, -1):
        raise ValueError("V - W must be unimodular")
    n = len(v)
    if n == 0:
        return [det_a]
    a = [[v[i][j] - w[i][j] for j in range(n)] for i in range(n)]
    # row i of V - tW contributes at most |V_i| + |W_i| to any coefficient
    bound = 1
    for i in range(n):
        bound *= math.isqrt(sum(x * x for x in v[i])) + math.isqrt(sum(x * x for x in w[i])) + 2
    p = int(gmpy2.next_prime(2 * bound + 1))
    ainv = _inverse_mod(a, p)
    w_cols = [[(j, x) for j, x in enumerate(col) if x] for col in zip(*w)]
    cmat = [[sum(row[j] * x for j, x in col) % p for col in w_cols] for row in ainv]
    cp = _charpoly_mod(cmat, p)
    # det(I - uC) = sum_k cp[k] u^(n - k) with u = t - 1
    out = [0] * (n + 1)
    for k, ck in enumerate(cp):
        if ck:
            e = n - k
            for j in range(e + 1):
                out[j] += ck * math.comb(e, j) * (-1 if (e - j) % 2 else 1)
    coeffs = []
    for x in out:
        x = x * det_a % p
        coeffs.append(x - p if x > p // 2 else x)
    return coeffs

"""Small exact integer-matrix helpers."""

from __future__ import annotations

from typing import Sequence


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def transpose(m: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*m)] if m else []


def block_diag(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    na, nb = len(a), len(b)
    out = [list(r) + [0] * nb for r in a]
    out += [[0] * na + list(r) for r in b]
    return out

"""Smith normal form over the integers and finitely generated abelian groups."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

__all__ = ["AbelianGroupSNF", "smith_normal_form", "smith_diagonal"]


@dataclass(frozen=True)
class AbelianGroupSNF:
    """Z^free_rank + Z/d_1 + ... + Z/d_r with d_1 | d_2 | ... and every d_i >= 2."""

    factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        for d in self.factors:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a:
                raise ValueError(f"divisibility chain broken: {a} does not divide {b}")
        if self.free_rank < 0:
            raise ValueError("negative free rank")

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int:
        """Group order, 0 when the group is infinite."""
        if self.free_rank:
            return 0
        return math.prod(self.factors)

    @property
    def is_trivial(self) -> bool:
        return not self.factors and not self.free_rank

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.factors] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"

    def as_dict(self) -> dict:
        return {"factors": list(self.factors), "free_rank": self.free_rank, "order": self.order}


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries d_1 | d_2 | ... of the Smith form of ``matrix``.

    Elimination pivots on the entry of least nonzero absolute value, which
    keeps coefficient growth small for the sparse presentation matrices
    used here.
    """
    a = [list(map(int, r)) for r in matrix if any(r)]
    if not a:
        return []
    ncols = len(a[0])
    # drop zero columns up front
    keep = [j for j in range(ncols) if any(r[j] for r in a)]
    a = [[r[j] for j in keep] for r in a]
    diag: list[int] = []
    while a and a[0]:
        # pivot: smallest nonzero |entry|
        best = None
        for i, r in enumerate(a):
            for j, v in enumerate(r):
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        a[0], a[pi] = a[pi], a[0]
        for r in a:
            r[0], r[pj] = r[pj], r[0]
        while True:
            p = a[0][0]
            done = True
            # clear column 0
            for i in range(1, len(a)):
                v = a[i][0]
                if v:
                    q = v // p
                    if q:
                        ri, r0 = a[i], a[0]
                        for j in range(len(ri)):
                            ri[j] -= q * r0[j]
                    if a[i][0]:
                        done = False
            # clear row 0
            r0 = a[0]
            for j in range(1, len(r0)):
                v = r0[j]
                if v:
                    q = v // p
                    if q:
                        for r in a:
                            r[j] -= q * r[0]
                    if r0[j]:
                        done = False
            if done:
                break
            # a remainder smaller than the pivot exists: move it into position
            best = None
            for i in range(len(a)):
                v = a[i][0]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, 0)
            for j in range(len(a[0])):
                v = a[0][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), 0, j)
            _, pi, pj = best
            a[0], a[pi] = a[pi], a[0]
            for r in a:
                r[0], r[pj] = r[pj], r[0]
        diag.append(abs(a[0][0]))
        a = [r[1:] for r in a[1:] if any(r[1:])]
        if a:
            keep = [j for j in range(len(a[0])) if any(r[j] for r in a)]
            a = [[r[j] for j in keep] for r in a]
    return _fix_divisibility(diag)


def _fix_divisibility(diag: list[int]) -> list[int]:
    """Turn any diagonal into the divisibility chain with the same cokernel."""
    d = [x for x in diag if x]
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                g = math.gcd(d[i], d[j])
                l = d[i] // g * d[j]
                if (d[i], d[j]) != (g, l):
                    d[i], d[j] = g, l
                    changed = True
    return sorted(d)


def smith_normal_form(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> AbelianGroupSNF:
    """Cokernel of the integer matrix, Z^ncols / (row space).

    Rows are relations, columns are generators.  ``ncols`` is only needed
    for matrices with no rows.
    """
    rows = [list(r) for r in matrix]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    diag = smith_diagonal(rows)
    rank = len(diag)
    return AbelianGroupSNF(tuple(x for x in diag if x != 1), ncols - rank)

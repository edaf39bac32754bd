"""First homology of cyclic branched covers of knots in S^3."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AbelianGroupSNF, LaurentPoly, resultant_abs, smith_normal_form
from .seifert import SeifertMatrix, alexander

__all__ = ["BranchedCoverReport", "branched_homology", "fox_order", "is_qhs"]


@dataclass(frozen=True)
class BranchedCoverReport:
    n: int
    homology: AbelianGroupSNF

    @property
    def order(self) -> int:
        return self.homology.order

    @property
    def qhs(self) -> bool:
        return self.homology.is_finite

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "factors": list(self.homology.factors),
            "free_rank": self.homology.free_rank,
            "order": self.order,
            "qhs": self.qhs,
            "group": str(self.homology),
        }


def _presentation(V: SeifertMatrix, n: int) -> list[list[int]]:
    """V^T - tV over Z[Z/n], with t acting as the cyclic block shift."""
    s = V.size
    v = V.matrix
    rows = []
    for i in range(n):
        for r in range(s):
            row = [0] * (s * n)
            base = i * s
            nxt = ((i + 1) % n) * s
            for c in range(s):
                row[base + c] += v[c][r]
                row[nxt + c] -= v[r][c]
            rows.append(row)
    return rows


def branched_homology(V: SeifertMatrix, n: int) -> BranchedCoverReport:
    """H_1 of the n-fold cyclic branched cover from the Seifert matrix.

    ``n = 1`` (the identity cover) is accepted and always gives the
    trivial group.
    """
    if n < 1:
        raise ValueError(f"cover degree must be positive, got {n}")
    if V.size == 0:
        return BranchedCoverReport(n, AbelianGroupSNF())
    return BranchedCoverReport(n, smith_normal_form(_presentation(V, n)))


def fox_order(V: SeifertMatrix, n: int) -> int:
    """|prod_{m=1}^{n-1} Delta(e^{2 pi i m/n})| as an exact resultant; 0 if some factor vanishes."""
    if n < 1:
        raise ValueError(f"cover degree must be positive, got {n}")
    delta = alexander(V).shift(V.genus)
    psi = LaurentPoly.from_list([1] * n)
    return resultant_abs(delta, psi)


def is_qhs(V: SeifertMatrix, n: int) -> bool:
    return fox_order(V, n) != 0

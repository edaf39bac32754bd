"""Signatures of Hermitian matrices over cyclotomic fields.

The nullity is decided exactly (rank over Q(zeta_d)); floating point is only
ever asked for the signs of pivots that are known to be nonzero.  The
Hermitian matrix is realified to the doubled real symmetric matrix
[[X, -Y], [Y, X]] and diagonalized by symmetric congruence with 1x1/2x2
pivoting (Bunch-Parlett), at a working precision that escalates until every
pivot clears the zero tolerance.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import gmpy2
from gmpy2 import mpfr

from ..errors import NotHermitian, PrecisionExhausted
from .cyclotomic import CycloElt, exact_rank

__all__ = ["PrecisionPolicy", "hermitian_signature", "signature_numeric", "symmetric_inertia"]

_ALPHA = (1 + 17 ** 0.5) / 8


@dataclass(frozen=True)
class PrecisionPolicy:
    start_bits: int = 128
    zero_tol_log2: int = -80
    escalations: int = 4

    def __post_init__(self):
        if self.start_bits < 53:
            raise ValueError("start precision below double precision")

    @classmethod
    def from_env(cls) -> "PrecisionPolicy":
        raw = os.environ.get("COVERTOR_PRECISION")
        if raw:
            return cls(start_bits=int(raw))
        return cls()

    def schedule(self) -> list[int]:
        return [self.start_bits << i for i in range(self.escalations + 1)]


def symmetric_inertia(a: list[list], expected_zero: int, tol) -> tuple[int, int] | None:
    """(positive, negative) counts of a real symmetric mpfr matrix.

    Returns None when the elimination cannot honour ``expected_zero``
    (a pivot sits at the tolerance, or the leftover block has the wrong
    size); the caller then retries at higher precision.  ``a`` is consumed.
    """
    active = list(range(len(a)))
    pos = neg = 0
    while active:
        size = len(active)
        dmax, di = mpfr(0), -1
        omax, orc = mpfr(0), None
        for x, i in enumerate(active):
            row = a[i]
            v = abs(row[i])
            if v > dmax:
                dmax, di = v, i
            for j in active[x + 1:]:
                v = abs(row[j])
                if v > omax:
                    omax, orc = v, (i, j)
        if max(dmax, omax) <= tol:
            return (pos, neg) if size == expected_zero else None
        if size <= expected_zero:
            return None
        if dmax >= _ALPHA * omax:
            if dmax <= tol:
                return None
            p = a[di][di]
            if p > 0:
                pos += 1
            else:
                neg += 1
            active.remove(di)
            col = [a[j][di] for j in active]
            for x, j in enumerate(active):
                f = col[x] / p
                if f:
                    row = a[j]
                    for y, k in enumerate(active):
                        row[k] -= f * col[y]
        else:
            r, c = orc
            ar, ac, b = a[r][r], a[c][c], a[r][c]
            det = ar * ac - b * b  # negative: one positive and one negative square
            pos += 1
            neg += 1
            active.remove(r)
            active.remove(c)
            cr = [a[j][r] for j in active]
            cc = [a[j][c] for j in active]
            # rows of [cr cc] * B^{-1}
            ur = [(ac * x - b * y) / det for x, y in zip(cr, cc)]
            uc = [(ar * y - b * x) / det for x, y in zip(cr, cc)]
            for x, j in enumerate(active):
                fr, fc = ur[x], uc[x]
                row = a[j]
                for y, k in enumerate(active):
                    row[k] -= fr * cr[y] + fc * cc[y]
    return pos, neg


def signature_numeric(
    build: Callable[[], list[list]],
    nullity: int,
    policy: PrecisionPolicy | None = None,
    real: bool = False,
) -> int:
    """Signature of the Hermitian matrix produced by ``build()``.

    ``build`` is re-invoked at each working precision (the active gmpy2
    context) and must return mpc entries, or mpfr entries when ``real``.
    ``nullity`` is the certified complex nullity.
    """
    policy = policy or PrecisionPolicy.from_env()
    for bits in policy.schedule():
        with gmpy2.context(gmpy2.get_context(), precision=bits):
            h = build()
            n = len(h)
            if real:
                a = [[mpfr(v.real) if isinstance(v, gmpy2.mpc) else mpfr(v) for v in row] for row in h]
                zeros = nullity
            else:
                zero = mpfr(0)
                a = [[zero] * (2 * n) for _ in range(2 * n)]
                for i in range(n):
                    for j in range(n):
                        v = gmpy2.mpc(h[i][j])
                        x, y = v.real, v.imag
                        a[i][j] = a[i + n][j + n] = x
                        a[i][j + n] = -y
                        a[i + n][j] = y
                zeros = 2 * nullity
            norm = max((abs(v) for row in a for v in row), default=mpfr(0))
            if norm == 0:
                return 0
            tol = norm * gmpy2.exp2(policy.zero_tol_log2)
            res = symmetric_inertia(a, zeros, tol)
        if res is not None:
            p, q = res
            return p - q if real else (p - q) // 2
    raise PrecisionExhausted(
        f"signature undecided after {policy.escalations} precision escalations "
        f"(up to {policy.schedule()[-1]} bits)"
    )


def _as_cyclo(v, d: int) -> CycloElt:
    if isinstance(v, CycloElt):
        return v
    return CycloElt.const(d, Fraction(v))


def hermitian_signature(
    H: Sequence[Sequence],
    k: int = 1,
    policy: PrecisionPolicy | None = None,
    nullity: int | None = None,
) -> tuple[int, int]:
    """(signature, nullity) of H with entries in Q(zeta_d) embedded via zeta_d -> e^(2 pi i k/d).

    Entries may be CycloElt (all of one conductor) or plain rationals.
    ``nullity`` may be passed when already certified by the caller;
    otherwise it is computed by exact elimination over Q(zeta_d).
    """
    n = len(H)
    if any(len(r) != n for r in H):
        raise NotHermitian("matrix is not square")
    if n == 0:
        return 0, 0
    d = next((v.d for r in H for v in r if isinstance(v, CycloElt)), 1)
    h = [[_as_cyclo(v, d) for v in r] for r in H]
    for i in range(n):
        for j in range(i, n):
            if h[i][j] != h[j][i].conj():
                raise NotHermitian(f"entry ({i}, {j}) is not the conjugate of ({j}, {i})")
    if nullity is None:
        nullity = n - exact_rank(h)
    if nullity == n:
        return 0, n
    real = d <= 2

    def build():
        return [[v.to_complex(k) for v in r] for r in h]

    return signature_numeric(build, nullity, policy, real=real), nullity

"""Kauffman bracket and Jones polynomial from planar diagrams.

Bracket convention: ``<X(a,b,c,d)> = A <P(a,b) P(c,d)> + A^-1 <P(a,d) P(b,c)>``,
loop value ``-A^2 - A^-2`` and ``<unknot> = 1``.  The Jones polynomial is
``(-A^3)^(-w) <D>`` at ``A = t^(-1/4)``, which gives the right-handed trefoil
``J = t + t^3 - t^4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import LaurentPoly
from .errors import DiagramTooLarge, NotAKnot
from .notation import KnotPresentation, PlanarDiagram, as_presentation

__all__ = ["JonesReport", "kauffman_bracket", "jones", "DEFAULT_CROSSING_CAP"]

DEFAULT_CROSSING_CAP = 24

_DELTA = LaurentPoly({2: -1, -2: -1})


def _add_pair(m: dict, p: int, q: int) -> int:
    """Glue an arc p--q into the open-path matching m; return closed loops."""
    if p == q:
        return 1
    if p in m and m[p] == q:
        del m[p], m[q]
        return 1
    x = m.pop(p) if p in m else p
    y = m.pop(q) if q in m else q
    m[x] = y
    m[y] = x
    return 0


def _sweep_order(crossings) -> list[int]:
    """Greedy order keeping the open frontier small."""
    n = len(crossings)
    remaining = set(range(n))
    open_labels: set[int] = set()
    order = []
    while remaining:
        best = max(sorted(remaining), key=lambda i: sum(v in open_labels for v in crossings[i]))
        remaining.remove(best)
        order.append(best)
        for v in crossings[best]:
            if v in open_labels:
                open_labels.remove(v)
            else:
                open_labels.add(v)
    return order


def _bracket_sweep(crossings) -> LaurentPoly:
    # state: sorted tuple of matched endpoint pairs -> {loops: LaurentPoly coefficient}
    states: dict[tuple, dict[int, LaurentPoly]] = {(): {0: LaurentPoly({0: 1})}}
    for idx in _sweep_order(crossings):
        a, b, c, d = crossings[idx]
        nxt: dict[tuple, dict[int, LaurentPoly]] = {}
        for key, by_loops in states.items():
            for weight, pairs in ((1, ((a, b), (c, d))), (-1, ((a, d), (b, c)))):
                m = {}
                for u, v in key:
                    m[u] = v
                    m[v] = u
                loops = 0
                for p, q in pairs:
                    loops += _add_pair(m, p, q)
                new_key = tuple(sorted((u, v) for u, v in m.items() if u < v))
                bucket = nxt.setdefault(new_key, {})
                for l, poly in by_loops.items():
                    term = poly.shift(weight)
                    l2 = l + loops
                    bucket[l2] = bucket[l2] + term if l2 in bucket else term
        states = nxt
    (key, by_loops), = states.items()
    total = LaurentPoly()
    for loops, poly in by_loops.items():
        total = total + poly * _DELTA ** (loops - 1)
    return total


def _bracket_states(crossings) -> LaurentPoly:
    """Plain 2^c state sum; the reference for small diagrams."""
    total = LaurentPoly()
    for choice in product((0, 1), repeat=len(crossings)):
        m: dict[int, int] = {}
        loops = 0
        for (a, b, c, d), s in zip(crossings, choice):
            pairs = ((a, b), (c, d)) if s == 0 else ((a, d), (b, c))
            for p, q in pairs:
                loops += _add_pair(m, p, q)
        exp = sum(1 if s == 0 else -1 for s in choice)
        total = total + LaurentPoly({exp: 1}) * _DELTA ** (loops - 1)
    return total


def kauffman_bracket(
    d: PlanarDiagram, cap: int = DEFAULT_CROSSING_CAP, method: str = "sweep"
) -> LaurentPoly:
    """Kauffman bracket in A of a planar diagram."""
    if len(d.crossings) > cap:
        raise DiagramTooLarge(f"{len(d.crossings)} crossings exceeds the cap of {cap}")
    if not d.crossings:
        return LaurentPoly({0: 1})
    if method == "states":
        return _bracket_states(d.crossings)
    if method != "sweep":
        raise ValueError(f"unknown bracket method {method!r}")
    return _bracket_sweep(d.crossings)


@dataclass(frozen=True)
class JonesReport:
    jones: LaurentPoly
    det: int
    jprime_at_minus_one: int

    def as_dict(self) -> dict:
        return {
            "jones": {str(e): v for e, v in self.jones.items()},
            "jones_text": self.jones.format("t"),
            "det": self.det,
            "jprime_at_minus_one": self.jprime_at_minus_one,
        }


def jones_polynomial(d: PlanarDiagram, cap: int = DEFAULT_CROSSING_CAP) -> LaurentPoly:
    if not d.is_knot():
        raise NotAKnot(f"diagram has {d.components()} components")
    w = d.writhe
    norm = LaurentPoly({-3 * w: -1 if w % 2 else 1})
    in_a = kauffman_bracket(d, cap) * norm
    coeffs = {}
    for e, v in in_a.items():
        if e % 4:
            raise ArithmeticError(f"bracket exponent {e} is not a multiple of 4")
        coeffs[-e // 4] = v
    return LaurentPoly(coeffs)


def jones(k, cap: int = DEFAULT_CROSSING_CAP) -> JonesReport:
    """Jones polynomial of a knot with det = |J(-1)| and J'(-1)."""
    pres = as_presentation(k)
    J = jones_polynomial(pres.pd(), cap)
    det = abs(J.evaluate(-1))
    jp = J.derivative().evaluate(-1)
    return JonesReport(J, int(det), int(jp))

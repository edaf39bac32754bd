"""Knot presentations: braid words and planar diagram (PD) codes.

Braid letters are nonzero integers; ``e > 0`` is the generator sigma_e and
``e < 0`` its inverse.  Positive letters close up to right-handed crossings,
so ``(sigma_1)^3`` is the right-handed trefoil.

PD codes follow the usual table convention: ``X(a, b, c, d)`` lists the four
arc labels at a crossing counterclockwise, starting from the incoming
under-strand.  The under-strand therefore runs ``a -> c``; the direction of
the over-strand (``b -> d`` or ``d -> b``) is recovered from label
succession, and it fixes the crossing sign.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Union

from .errors import NotAKnot, NotCoprime, ParseError, ValidationError

__all__ = [
    "BraidWord",
    "PlanarDiagram",
    "KnotPresentation",
    "parse_braid",
    "parse_pd",
    "parse_knot",
    "braid_to_pd",
    "closure_components",
    "torus_braid",
    "mirror",
    "connected_sum",
    "UNKNOT",
]


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(e) for e in self.letters))
        k = self.strand_count
        if not isinstance(k, int) or k < 1:
            raise ValidationError(f"strand count must be a positive integer, got {k!r}")
        if self.letters and k < 2:
            raise ValidationError("a nonempty braid word needs at least 2 strands")
        for e in self.letters:
            if e == 0 or abs(e) > k - 1:
                raise ValidationError(f"letter {e} out of range for {k} strands")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def writhe(self) -> int:
        return sum(1 if e > 0 else -1 for e in self.letters)

    def permutation(self) -> list[int]:
        """Image of each starting position after running through the word."""
        pos = list(range(self.strand_count))  # pos[s] = current position of strand s
        where = list(range(self.strand_count))  # where[p] = strand at position p
        for e in self.letters:
            i = abs(e) - 1
            a, b = where[i], where[i + 1]
            where[i], where[i + 1] = b, a
            pos[a], pos[b] = i + 1, i
        return pos

    def is_knot(self) -> bool:
        return closure_components(self) == 1

    def __str__(self) -> str:
        return f"k={self.strand_count}; " + " ".join(map(str, self.letters))


UNKNOT = BraidWord(1, ())


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[tuple[int, int, int, int], ...] = ()
    # (over_in, over_out) per crossing, filled in by validation
    _over: tuple[tuple[int, int], ...] = field(default=(), repr=False, compare=False)
    _successor: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    def __post_init__(self):
        xs = tuple(tuple(int(v) for v in x) for x in self.crossings)
        object.__setattr__(self, "crossings", xs)
        for x in xs:
            if len(x) != 4:
                raise ValidationError(f"crossing {x} does not have 4 labels")
        counts: dict[int, int] = {}
        for x in xs:
            for v in x:
                counts[v] = counts.get(v, 0) + 1
        bad = sorted(v for v, c in counts.items() if c != 2)
        if bad:
            raise ValidationError(f"arc labels {bad} do not appear exactly twice")
        if xs and set(counts) != set(range(1, 2 * len(xs) + 1)):
            raise ValidationError(f"arc labels must be exactly 1..{2 * len(xs)}")
        over, succ = _orient(xs)
        object.__setattr__(self, "_over", over)
        object.__setattr__(self, "_successor", succ)

    def __len__(self) -> int:
        return len(self.crossings)

    def signs(self) -> list[int]:
        # over-strand entering at d means it runs d -> b: positive crossing
        return [1 if o[0] == x[3] else -1 for x, o in zip(self.crossings, self._over)]

    @property
    def writhe(self) -> int:
        return sum(self.signs())

    def components(self) -> int:
        seen: set[int] = set()
        count = 0
        for start in self._successor:
            if start in seen:
                continue
            count += 1
            v = start
            while v not in seen:
                seen.add(v)
                v = self._successor[v]
        return count

    def is_knot(self) -> bool:
        # the empty diagram is the crossingless unknot
        return not self.crossings or self.components() == 1

    def __str__(self) -> str:
        return " ".join("X(%d,%d,%d,%d)" % x for x in self.crossings)


def _orient(xs):
    """Direct every over-strand so each label is entered once and left once.

    Under-strands are directed by convention.  Over-strands are fixed by
    propagation from labels whose role is already known; when propagation
    stalls (a component that never passes under), the consecutive-label
    rule breaks the tie.
    """
    n = len(xs)
    incoming: dict[int, int] = {}  # label -> crossing where the arc ends
    outgoing: dict[int, int] = {}  # label -> crossing where the arc starts
    for i, (a, b, c, d) in enumerate(xs):
        if a in incoming or c in outgoing:
            raise ValidationError("inconsistent under-strand labels")
        incoming[a] = i
        outgoing[c] = i
    over: list[tuple[int, int] | None] = [None] * n

    def assign(i, into, out):
        if into in incoming or out in outgoing:
            raise ValidationError(f"cannot orient crossing {xs[i]}")
        over[i] = (into, out)
        incoming[into] = i
        outgoing[out] = i

    pending = set(range(n))
    while pending:
        progress = False
        for i in sorted(pending):
            _, b, _, d = xs[i]
            if b == d:
                raise ValidationError(f"over-strand of {xs[i]} is a single arc")
            if b in incoming or d in outgoing:
                assign(i, d, b)
            elif b in outgoing or d in incoming:
                assign(i, b, d)
            else:
                continue
            pending.discard(i)
            progress = True
        if not progress:
            i = min(pending)
            _, b, _, d = xs[i]
            top = 2 * n
            if d == b + 1 or (b == top and d == 1):
                assign(i, b, d)
            else:
                assign(i, d, b)
            pending.discard(i)
    succ: dict[int, int] = {}
    for (a, _, c, _), (oi, oo) in zip(xs, over):
        succ[a] = c
        succ[oi] = oo
    return tuple(over), succ


Presentation = Union[BraidWord, PlanarDiagram]


@dataclass(frozen=True)
class KnotPresentation:
    diagram: Presentation
    name: str | None = None

    @property
    def braid(self) -> BraidWord | None:
        return self.diagram if isinstance(self.diagram, BraidWord) else None

    def pd(self) -> PlanarDiagram:
        if isinstance(self.diagram, PlanarDiagram):
            return self.diagram
        return braid_to_pd(self.diagram)


def as_presentation(k) -> KnotPresentation:
    if isinstance(k, KnotPresentation):
        return k
    if isinstance(k, (BraidWord, PlanarDiagram)):
        return KnotPresentation(k)
    raise TypeError(f"not a knot presentation: {k!r}")


_K_PREFIX = re.compile(r"^\s*k\s*=\s*([^;]*);(.*)$", re.S)


def parse_braid(text: str) -> BraidWord:
    """Parse ``"1 -2 1"`` or ``"k=3; 1,-2,1,-2"`` into a BraidWord."""
    declared = None
    m = _K_PREFIX.match(text)
    if m:
        try:
            declared = int(m.group(1))
        except ValueError:
            raise ParseError(f"bad strand count {m.group(1)!r}") from None
        text = m.group(2)
    letters = []
    for tok in re.split(r"[\s,]+", text.replace("−", "-").strip()):
        if not tok:
            continue
        try:
            e = int(tok)
        except ValueError:
            raise ParseError(f"non-integer braid letter {tok!r}") from None
        if e == 0:
            raise ParseError("braid letter 0 is not allowed")
        letters.append(e)
    top = max((abs(e) for e in letters), default=0)
    if declared is None:
        k = top + 1
    else:
        if declared < 1:
            raise ParseError(f"strand count must be positive, got {declared}")
        if top >= declared:
            raise ParseError(f"letter {top} needs more than {declared} strands")
        k = declared
    return BraidWord(k, tuple(letters))


_PD_TERM = re.compile(r"X\s*[\(\[]([^\)\]]*)[\)\]]")


def parse_pd(text: str) -> PlanarDiagram:
    """Parse a whitespace/comma separated list of ``X(a,b,c,d)`` terms."""
    body = text.strip()
    wrapped = re.fullmatch(r"PD\s*[\(\[](.*)[\)\]]", body, re.S)
    if wrapped:
        body = wrapped.group(1)
    crossings = []
    pos = 0
    for m in _PD_TERM.finditer(body):
        gap = body[pos:m.start()]
        if gap.strip(" \t\r\n,"):
            raise ParseError(f"unexpected text {gap.strip()!r} in PD code")
        pos = m.end()
        fields = [f for f in re.split(r"[\s,]+", m.group(1).strip()) if f]
        if len(fields) != 4:
            raise ParseError(f"crossing X({m.group(1)}) must have 4 labels")
        try:
            crossings.append(tuple(int(f) for f in fields))
        except ValueError:
            raise ParseError(f"non-integer label in X({m.group(1)})") from None
    if body[pos:].strip(" \t\r\n,"):
        raise ParseError(f"unexpected text {body[pos:].strip()!r} in PD code")
    return PlanarDiagram(tuple(crossings))


def parse_knot(text: str) -> Presentation:
    """Braid word or PD code, whichever the text looks like."""
    if re.search(r"X\s*[\(\[]", text):
        return parse_pd(text)
    return parse_braid(text)


def closure_components(b: BraidWord) -> int:
    perm = b.permutation()
    seen = [False] * b.strand_count
    count = 0
    for s in range(b.strand_count):
        if not seen[s]:
            count += 1
            while not seen[s]:
                seen[s] = True
                s = perm[s]
    return count


def _require_knot(b: BraidWord, what: str = "braid closure") -> None:
    # the empty word stands for the unknot whatever its strand count
    if not b.letters:
        return
    c = closure_components(b)
    if c != 1:
        raise NotAKnot(f"{what} has {c} components")


def braid_to_pd(b: BraidWord) -> PlanarDiagram:
    """PD code of the braid closure, strands oriented downward."""
    _require_knot(b)
    if not b.letters:
        return PlanarDiagram(())
    k = b.strand_count
    parent: list[int] = list(range(k))
    cur = list(range(k))
    raw = []  # (under_in, x1, under_out, x3) with arc ids, plus over (in, out)
    for e in b.letters:
        i = abs(e) - 1
        left, right = cur[i], cur[i + 1]
        nl, nr = len(parent), len(parent) + 1
        parent.extend((nl, nr))
        cur[i], cur[i + 1] = nl, nr
        if e > 0:
            # right strand passes over, running NE -> SW
            raw.append(((left, nl, nr, right), (right, nl)))
        else:
            # left strand passes over, running NW -> SE
            raw.append(((right, left, nl, nr), (left, nr)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in range(k):
        parent[find(cur[p])] = find(p)
    succ = {}
    for (a, _, c, _), (oi, oo) in raw:
        succ[find(a)] = find(c)
        succ[find(oi)] = find(oo)
    label = {}
    v = find(0)
    while v not in label:
        label[v] = len(label) + 1
        v = succ[v]
    xs = tuple(tuple(label[find(a)] for a in x) for x, _ in raw)
    return PlanarDiagram(xs)


def torus_braid(p: int, q: int) -> BraidWord:
    """Positive braid (sigma_1 ... sigma_{p-1})^q closing to the right-handed T(p,q)."""
    if p < 2 or q < 2:
        raise ValidationError(f"torus knot parameters must be >= 2, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {math.gcd(p, q)}")
    return BraidWord(p, tuple(range(1, p)) * q)


def mirror(b: BraidWord) -> BraidWord:
    return BraidWord(b.strand_count, tuple(-e for e in b.letters))


def connected_sum(b1: BraidWord, b2: BraidWord) -> BraidWord:
    """Braid for K1 # K2: b2 stacked on strands k1 .. k1+k2-1, sharing strand k1.

    An empty first summand is the unknot and returns ``b2`` as is.
    """
    _require_knot(b1, "first summand")
    _require_knot(b2, "second summand")
    if not b1.letters:
        return b2
    shift = b1.strand_count - 1
    shifted = tuple(e + shift if e > 0 else e - shift for e in b2.letters)
    return BraidWord(b1.strand_count + b2.strand_count - 1, b1.letters + shifted)

"""Gauge-theoretic invariants assembled from signatures and cover homology.

For a knot K in an integral homology sphere Y and its n-fold cyclic branched
cover Sigma (a rational homology sphere), with tau the covering translation
and X its mapping torus:

    lambda_FO(X) = -lambda_SW(X) = n * lambda(Y) + (1/8) * sum_m sign_{m/n}(K)
    Lef(tau_*)   = lambda_FO(X) - h(Sigma, s)

h is the Froyshov invariant.  It is never computed here: callers supply it
together with a note saying where the value came from.

Sign convention: sign_{1/2}(right-handed trefoil) = -2, under which
lambda(Sigma(2,3,5)) = -1.  The opposite convention flips every output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .covers import BranchedCoverReport, branched_homology, is_qhs
from .errors import (
    DetNotOne,
    MissingFroyshov,
    NotPairwiseCoprime,
    NotPrimePower,
    NotRationalHomologySphere,
    ValidationError,
)
from .jones import JonesReport, jones
from .notation import KnotPresentation, as_presentation
from .seifert import (
    SeifertMatrix,
    SignatureProfile,
    alexander,
    milnor_fiber_signature_oracle,
    seifert_matrix,
    signature_profile,
    tl_signature,
)

__all__ = [
    "Froyshov",
    "GaugeInputs",
    "InvariantReport",
    "lambda_fo_mapping_torus",
    "lambda_sw_mapping_torus",
    "monopole_lefschetz",
    "l_n_invariant",
    "casson_double_cover_mullins",
    "brieskorn_casson",
    "chi_hm_red",
    "casson_surgery",
    "invariant_report",
    "is_prime_power",
]


@dataclass(frozen=True)
class Froyshov:
    """A Froyshov invariant h(Sigma, s) taken from outside, with its source."""

    value: Fraction
    provenance: str

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if not self.provenance or not self.provenance.strip():
            raise ValidationError("a Froyshov invariant needs a provenance note")


@dataclass(frozen=True)
class GaugeInputs:
    presentation: KnotPresentation
    n: int
    casson_base: Fraction = Fraction(0)
    froyshov: Froyshov | None = None
    _seifert: list = field(default_factory=list, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "presentation", as_presentation(self.presentation))
        object.__setattr__(self, "casson_base", Fraction(self.casson_base))
        if self.n < 2:
            raise ValidationError(f"cover degree must be >= 2, got {self.n}")

    def seifert(self) -> SeifertMatrix:
        if not self._seifert:
            self._seifert.append(seifert_matrix(self.presentation))
        return self._seifert[0]


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = next(p for p in range(2, n + 1) if n % p == 0)
    while n % p == 0:
        n //= p
    return n == 1


def _require_qhs(inp: GaugeInputs) -> SeifertMatrix:
    V = inp.seifert()
    if not is_qhs(V, inp.n):
        raise NotRationalHomologySphere(f"the {inp.n}-fold branched cover is not a rational homology sphere")
    return V


def _h_free(inp: GaugeInputs, profile: SignatureProfile) -> Fraction:
    return inp.n * inp.casson_base + Fraction(profile.sum, 8)


def lambda_fo_mapping_torus(inp: GaugeInputs) -> Fraction:
    V = _require_qhs(inp)
    return _h_free(inp, signature_profile(V, inp.n))


def lambda_sw_mapping_torus(inp: GaugeInputs) -> Fraction:
    return -lambda_fo_mapping_torus(inp)


def _require_h(inp: GaugeInputs) -> Froyshov:
    if inp.froyshov is None:
        raise MissingFroyshov("the Froyshov invariant h(Sigma, s) must be supplied")
    return inp.froyshov


def monopole_lefschetz(inp: GaugeInputs) -> Fraction:
    """Lefschetz number of tau_* on reduced monopole Floer homology of the cover."""
    h = _require_h(inp)
    return lambda_fo_mapping_torus(inp) - h.value


def l_n_invariant(inp: GaugeInputs) -> Fraction:
    """L_n(K) for a knot in S^3 and prime-power n."""
    if not is_prime_power(inp.n):
        raise NotPrimePower(f"n = {inp.n} is not a prime power")
    if inp.casson_base != 0:
        raise ValidationError("L_n is defined for knots in S^3 (casson_base = 0)")
    _require_h(inp)
    return monopole_lefschetz(inp)


def casson_double_cover_mullins(k) -> Fraction:
    """lambda(Sigma_2(K)) = -J'(-1)/12 + sign_{1/2}(K)/8 for det(K) = 1."""
    pres = as_presentation(k)
    rep = jones(pres)
    if rep.det != 1:
        raise DetNotOne(f"det(K) = {rep.det}; the double branched cover is not a homology sphere")
    sigma, _ = tl_signature(seifert_matrix(pres), 1, 2)
    return Fraction(-rep.jprime_at_minus_one, 12) + Fraction(sigma, 8)


def brieskorn_casson(n: int, q: int, r: int) -> Fraction:
    """Casson invariant of Sigma(n, q, r) as (1/8) of the lattice-point signature."""
    if min(n, q, r) < 2:
        raise ValidationError("Brieskorn exponents must be >= 2")
    if math.gcd(n, q) != 1 or math.gcd(n, r) != 1 or math.gcd(q, r) != 1:
        raise NotPairwiseCoprime(f"({n}, {q}, {r}) is not pairwise coprime")
    value = Fraction(milnor_fiber_signature_oracle(q, r, n), 8)
    assert value.denominator == 1, (n, q, r, value)
    return value


def chi_hm_red(lam, h) -> Fraction:
    """Euler characteristic of HM_red for an integral homology sphere: lambda - h."""
    return Fraction(lam) - Fraction(h)


def casson_surgery(k, p: int) -> Fraction:
    """lambda(S^3_{1/p}(K)) = (p/2) * Delta''(1) by the surgery formula."""
    V = seifert_matrix(as_presentation(k))
    d2 = alexander(V).derivative().derivative().evaluate(1)
    return Fraction(p, 2) * d2


@dataclass(frozen=True)
class InvariantReport:
    n: int
    lambda_fo: Fraction
    lambda_sw: Fraction
    lefschetz: Fraction | None
    l_n: Fraction | None
    profile: SignatureProfile
    cover: BranchedCoverReport
    jones: JonesReport | None = None
    froyshov: Froyshov | None = None

    def as_dict(self) -> dict:
        def q(x):
            return None if x is None else {"num": x.numerator, "den": x.denominator}

        return {
            "n": self.n,
            "lambda_fo": q(self.lambda_fo),
            "lambda_sw": q(self.lambda_sw),
            "lefschetz": q(self.lefschetz),
            "l_n": q(self.l_n),
            "signatures": self.profile.as_dict(),
            "cover": self.cover.as_dict(),
            "jones": None if self.jones is None else self.jones.as_dict(),
            "froyshov": None
            if self.froyshov is None
            else {**q(self.froyshov.value), "provenance": self.froyshov.provenance},
        }


def invariant_report(inp: GaugeInputs, with_jones: bool = True) -> InvariantReport:
    """Every gauge quantity for one knot and cover degree, with the data behind it."""
    V = _require_qhs(inp)
    profile = signature_profile(V, inp.n)
    lfo = _h_free(inp, profile)
    lef = None if inp.froyshov is None else lfo - inp.froyshov.value
    ln = lef if (lef is not None and is_prime_power(inp.n) and inp.casson_base == 0) else None
    return InvariantReport(
        n=inp.n,
        lambda_fo=lfo,
        lambda_sw=-lfo,
        lefschetz=lef,
        l_n=ln,
        profile=profile,
        cover=branched_homology(V, inp.n),
        jones=jones(inp.presentation) if with_jones else None,
        froyshov=inp.froyshov,
    )

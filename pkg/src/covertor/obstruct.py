"""L-space obstructions for branched covers, split into certificates and rules.

Certificates are computed from a knot; verdicts are pure functions of a
certificate, so the rules can be checked on hypothetical certificates
without any knot behind them.  Neither route ever asserts that a cover *is*
an L-space.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .gauge import GaugeInputs, is_prime_power, monopole_lefschetz
from .jones import jones

__all__ = ["VerdictKind", "Verdict", "jones_certificate", "jones_verdict", "lefschetz_verdict"]


class VerdictKind(str, enum.Enum):
    NOT_LSPACE_ALL_EVEN_COVERS = "NotLSpaceAllEvenCovers"
    NOT_LSPACE_THIS_COVER = "NotLSpaceThisCover"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    certificate: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"verdict": self.kind.value, "certificate": self.certificate}


def jones_certificate(k) -> tuple[int, int]:
    """(det K, J'(-1))."""
    rep = jones(k)
    return rep.det, rep.jprime_at_minus_one


def jones_verdict(cert: tuple[int, int]) -> Verdict:
    """det = 1 and J'(-1) != 0 rule out L-spaces among all even-fold covers."""
    det, jprime = cert
    kind = (
        VerdictKind.NOT_LSPACE_ALL_EVEN_COVERS
        if det == 1 and jprime != 0
        else VerdictKind.INCONCLUSIVE
    )
    return Verdict(kind, {"det": det, "jprime": jprime})


def lefschetz_verdict(inp: GaugeInputs) -> Verdict:
    """A nonzero Lefschetz number forces HM_red != 0 on this cover."""
    lef = monopole_lefschetz(inp)  # enforces qhs and a supplied h
    prime_power = is_prime_power(inp.n)
    cert = {
        "n": inp.n,
        "lefschetz": {"num": lef.numerator, "den": lef.denominator},
        "h": {"num": inp.froyshov.value.numerator, "den": inp.froyshov.value.denominator},
        "h_provenance": inp.froyshov.provenance,
        "casson_base": {"num": inp.casson_base.numerator, "den": inp.casson_base.denominator},
        "qhs": True,
        "prime_power": prime_power,
        "concordance_invariant": prime_power and inp.casson_base == 0,
    }
    kind = VerdictKind.NOT_LSPACE_THIS_COVER if lef != 0 else VerdictKind.INCONCLUSIVE
    return Verdict(kind, cert)

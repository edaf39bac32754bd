"""Knot-table ingestion, the invariant dispatch table, and JSON-lines batches.

Every invariant the CLI exposes goes through :func:`compute`, so a batch
record and the matching single-shot command always agree.
"""

from __future__ import annotations

import csv
import io
import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator

from . import __version__
from .covers import branched_homology, is_qhs
from .errors import CovertorError, InputError, MissingFroyshov, NotRationalHomologySphere, ParseError
from .gauge import (
    Froyshov,
    GaugeInputs,
    casson_double_cover_mullins,
    l_n_invariant,
    lambda_fo_mapping_torus,
    monopole_lefschetz,
)
from .jones import jones
from .notation import BraidWord, KnotPresentation, PlanarDiagram, parse_braid, parse_pd
from .obstruct import jones_certificate, jones_verdict, lefschetz_verdict
from .seifert import alexander, knot_determinant, seifert_matrix, signature_profile, tl_signature

__all__ = [
    "TableRow",
    "TableError",
    "INVARIANTS",
    "N_DEPENDENT",
    "parse_h",
    "ingest_csv",
    "load_corpus",
    "compute",
    "make_record",
    "row_records",
    "run_batch",
    "dumps",
]

# CLI name -> record id
INVARIANTS = {
    "jones": "jones",
    "alexander": "alexander",
    "det": "knot_determinant",
    "tl-sig": "tl_signature",
    "tl-sum": "tl_signature_sum",
    "homology": "branched_homology",
    "lambda-fo": "lambda_fo",
    "lambda-sw": "lambda_sw",
    "lefschetz": "monopole_lefschetz",
    "l-n": "l_n",
    "mullins": "casson_double_cover_mullins",
    "lspace-jones": "jones_verdict",
    "lspace-lefschetz": "lefschetz_verdict",
}

N_DEPENDENT = {"tl-sig", "tl-sum", "homology", "lambda-fo", "lambda-sw", "lefschetz", "l-n", "lspace-lefschetz"}
BATCHABLE = tuple(k for k in INVARIANTS if k != "tl-sig")
H_COLUMNS = {"h2": 2, "h3": 3, "h4": 4, "h5": 5}


class TableError(InputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class TableRow:
    name: str
    braid: BraidWord
    braid_text: str
    pd: PlanarDiagram | None = None
    h_by_n: dict = field(default_factory=dict)
    notes: str = ""
    line: int = 0

    def presentation(self) -> KnotPresentation:
        return KnotPresentation(self.braid, self.name)


_H_TEXT = re.compile(r"^\s*([+\-−]?\s*\d+(?:\s*/\s*\d+)?)\s*(?:\((.*)\))?\s*$", re.S)


def parse_h(text: str, provenance: str | None = None) -> Froyshov:
    """``"-1 (KM conventions)"`` -> Froyshov(-1, "KM conventions").

    The parenthetical wins over ``provenance``; with neither present the
    value is refused.
    """
    m = _H_TEXT.match(text)
    if not m:
        raise ParseError(f"cannot read h value {text!r}")
    value = Fraction(re.sub(r"\s", "", m.group(1)).replace("−", "-"))
    note = (m.group(2) or "").strip() or (provenance or "").strip()
    if not note:
        raise MissingFroyshov(f"h value {text.strip()!r} has no provenance")
    return Froyshov(value, note)


def _parse_row(rec: dict, line: int) -> TableRow:
    name = (rec.get("name") or "").strip()
    if not name:
        raise TableError(line, "empty name")
    text = (rec.get("braid") or "").strip()
    if not text:
        raise TableError(line, "empty braid")
    try:
        braid = parse_braid(text)
        if braid.letters and not braid.is_knot():
            raise TableError(line, f"braid {text!r} closes to a link")
        pd_text = (rec.get("pd") or "").strip()
        pd = parse_pd(pd_text) if pd_text else None
        h = {}
        for col, n in H_COLUMNS.items():
            raw = (rec.get(col) or "").strip()
            if raw:
                h[n] = parse_h(raw, rec.get("h_provenance"))
    except TableError:
        raise
    except CovertorError as e:
        raise TableError(line, str(e)) from None
    return TableRow(name, braid, text, pd, h, (rec.get("notes") or "").strip(), line)


def _ingest(stream, lenient: bool, skipped: list | None) -> list[TableRow]:
    reader = csv.DictReader(stream)
    if reader.fieldnames is None:
        return []
    missing = {"name", "braid"} - {f.strip() for f in reader.fieldnames}
    if missing:
        raise TableError(1, f"header lacks {', '.join(sorted(missing))}")
    reader.fieldnames = [f.strip() for f in reader.fieldnames]
    rows = []
    for rec in reader:
        line = reader.line_num
        if None in rec:
            err = TableError(line, "too many fields")
        else:
            try:
                rows.append(_parse_row(rec, line))
                continue
            except TableError as e:
                err = e
        if not lenient:
            raise err
        if skipped is not None:
            skipped.append((err.line, str(err)))
    return rows


def ingest_csv(source, lenient: bool = False, skipped: list | None = None) -> list[TableRow]:
    """Read a knot table from a path or text stream.

    Malformed rows raise TableError (carrying the line number) unless
    ``lenient``, in which case they are skipped and ``(line, message)``
    pairs are appended to ``skipped``.
    """
    if isinstance(source, (str, Path)):
        with open(source, newline="", encoding="utf-8") as fh:
            return _ingest(fh, lenient, skipped)
    return _ingest(source, lenient, skipped)


def load_corpus() -> list[TableRow]:
    """The bundled knot table (prime knots, torus knots and a few sums)."""
    text = resources.files("covertor").joinpath("data/knots.csv").read_text(encoding="utf-8")
    return ingest_csv(io.StringIO(text))


# -- single computations --------------------------------------------------------

def _q(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _poly_cert(p) -> dict:
    return {"coefficients": {str(e): v for e, v in p.items()}, "text": p.format("t")}


def compute(
    invariant: str,
    knot,
    n: int | None = None,
    *,
    m: int | None = None,
    mode: str = "strict",
    froyshov: Froyshov | None = None,
    casson_base: Fraction = Fraction(0),
) -> tuple[Fraction | None, dict]:
    """Value (None when not a single number) and certificate of one invariant."""
    pres = knot if isinstance(knot, KnotPresentation) else KnotPresentation(knot)
    if invariant in N_DEPENDENT and (n is None or n < 2):
        raise InputError(f"{invariant} needs a cover degree n >= 2")

    def gauge() -> GaugeInputs:
        return GaugeInputs(pres, n, casson_base, froyshov)

    if invariant == "jones":
        rep = jones(pres)
        return None, {**_poly_cert(rep.jones), "det": rep.det, "jprime_at_minus_one": rep.jprime_at_minus_one}
    if invariant == "alexander":
        return None, _poly_cert(alexander(seifert_matrix(pres)))
    if invariant == "det":
        if pres.braid is not None:
            return Fraction(knot_determinant(seifert_matrix(pres))), {"method": "seifert"}
        return Fraction(jones(pres).det), {"method": "jones"}
    if invariant == "tl-sig":
        if m is None:
            raise InputError("tl-sig needs m")
        s, z = tl_signature(seifert_matrix(pres), m, n, mode)
        return Fraction(s), {"m": m, "n": n, "nullity": z, "mode": mode}
    if invariant == "tl-sum":
        V = seifert_matrix(pres)
        if not is_qhs(V, n):
            raise NotRationalHomologySphere(f"{n}-fold branched cover has b_1 > 0")
        prof = signature_profile(V, n)
        return Fraction(prof.sum), prof.as_dict()
    if invariant == "homology":
        rep = branched_homology(seifert_matrix(pres), n)
        return (Fraction(rep.order) if rep.qhs else None), rep.as_dict()
    if invariant in ("lambda-fo", "lambda-sw"):
        v = lambda_fo_mapping_torus(gauge())
        if invariant == "lambda-sw":
            v = -v
        return v, {"n": n, "casson_base": _q(casson_base)}
    if invariant in ("lefschetz", "l-n"):
        inp = gauge()
        v = l_n_invariant(inp) if invariant == "l-n" else monopole_lefschetz(inp)
        return v, {
            "n": n,
            "casson_base": _q(casson_base),
            "h": _q(froyshov.value),
            "h_provenance": froyshov.provenance,
        }
    if invariant == "mullins":
        rep = jones(pres)
        v = casson_double_cover_mullins(pres)
        return v, {"det": rep.det, "jprime_at_minus_one": rep.jprime_at_minus_one}
    if invariant == "lspace-jones":
        return None, jones_verdict(jones_certificate(pres)).as_dict()
    if invariant == "lspace-lefschetz":
        if froyshov is None:
            raise MissingFroyshov("the Froyshov invariant h(Sigma, s) must be supplied")
        return None, lefschetz_verdict(gauge()).as_dict()
    raise InputError(f"unknown invariant {invariant!r}")


def make_record(invariant_id, name, n, value, certificate, timestamp: bool) -> dict:
    rec = {
        "invariant": invariant_id,
        "num": None if value is None else value.numerator,
        "den": None if value is None else value.denominator,
        "name": name,
        "n": n,
        "certificate": certificate,
        "version": __version__,
    }
    if timestamp:
        rec["timestamp"] = datetime.now(timezone.utc).isoformat()
    return rec


def error_record(invariant_id, name, n, err: CovertorError, timestamp: bool) -> dict:
    rec = {
        "invariant": invariant_id,
        "name": name,
        "n": n,
        "error": err.code,
        "message": str(err),
        "version": __version__,
    }
    if timestamp:
        rec["timestamp"] = datetime.now(timezone.utc).isoformat()
    return rec


def dumps(rec: dict) -> str:
    return json.dumps(rec, ensure_ascii=False, separators=(",", ":"))


def row_records(row: TableRow, invariants: Iterable[str], ns: Iterable[int], deterministic: bool = False) -> list[str]:
    """Serialized records for one row: invariants in the given order, then n ascending."""
    out = []
    pres = row.presentation()
    for inv in invariants:
        degrees = list(ns) if inv in N_DEPENDENT else [None]
        for n in degrees:
            try:
                value, cert = compute(inv, pres, n, froyshov=row.h_by_n.get(n) if n else None)
                rec = make_record(INVARIANTS[inv], row.name, n, value, cert, not deterministic)
            except CovertorError as e:
                rec = error_record(INVARIANTS[inv], row.name, n, e, not deterministic)
            out.append(dumps(rec))
    return out


def _row_job(args) -> list[str]:
    return row_records(*args)


def run_batch(
    rows: list[TableRow],
    invariants: list[str],
    ns: list[int],
    jobs: int = 1,
    deterministic: bool = False,
) -> Iterator[str]:
    """JSON lines for every (row, invariant, n), in input order whatever ``jobs`` is."""
    for inv in invariants:
        if inv not in BATCHABLE:
            raise InputError(f"invariant {inv!r} cannot be batched")
    work = [(row, tuple(invariants), tuple(ns), deterministic) for row in rows]
    if jobs <= 1 or len(work) <= 1:
        for w in work:
            yield from _row_job(w)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for lines in pool.map(_row_job, work):
            yield from lines

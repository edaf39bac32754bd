"""Command-line front end.

Data goes to stdout and diagnostics to stderr.  Exit status is 0 on
success, 2 for malformed input, 3 for a violated precondition and 4 when
the numerical precision schedule runs out.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .batch import BATCHABLE, INVARIANTS, compute, dumps, ingest_csv, make_record, parse_h, run_batch
from .errors import CovertorError, InputError, MissingFroyshov
from .gauge import brieskorn_casson
from .notation import KnotPresentation, parse_braid, parse_pd
from .seifert import milnor_fiber_signature_oracle

NEEDS_N = {"tl-sig", "tl-sum", "homology", "lambda-fo", "lambda-sw", "lefschetz", "l-n", "lspace-lefschetz"}
NEEDS_H = {"lefschetz", "l-n", "lspace-lefschetz"}
DESCRIPTIONS = {
    "jones": "Jones polynomial, determinant and J'(-1)",
    "alexander": "symmetrized Alexander polynomial",
    "det": "knot determinant",
    "tl-sig": "Tristram-Levine signature at exp(2 pi i m/n)",
    "tl-sum": "sum of sign_{m/n} over 1 <= m < n",
    "homology": "first homology of the n-fold cyclic branched cover",
    "lambda-fo": "lambda_FO of the covering-translation mapping torus",
    "lambda-sw": "lambda_SW of the covering-translation mapping torus",
    "lefschetz": "Lefschetz number on reduced monopole Floer homology",
    "l-n": "the concordance invariant L_n (prime-power n)",
    "mullins": "Casson invariant of the double branched cover (det 1)",
    "lspace-jones": "L-space obstruction for even covers from (det, J'(-1))",
    "lspace-lefschetz": "L-space obstruction for one cover from the Lefschetz number",
}


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.replace("−", "-"))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _degrees(text: str) -> list[int]:
    """``"2..5"``, ``"2,3,6"`` or a mix."""
    out = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            elif part.strip():
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad degree list {text!r}") from None
    if any(n < 2 for n in out):
        raise argparse.ArgumentTypeError("cover degrees must be >= 2")
    return sorted(set(out))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="covertor", description="Knot invariants for cyclic branched covers.")
    parser.add_argument("--version", action="version", version=f"covertor {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in DESCRIPTIONS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--braid", help='braid word, e.g. "1 1 1" or "k=3;1 -2 1 -2"')
        src.add_argument("--pd", help='PD code, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"')
        p.add_argument("--name", help="label carried into JSON output")
        p.add_argument("--json", action="store_true", help="emit a JSON record")
        if name in NEEDS_N:
            p.add_argument("--n", type=int, required=True, help="cover degree (>= 2)")
        if name == "tl-sig":
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--averaged", action="store_true", help="average one-sided limits at roots of Delta")
        if name in {"lambda-fo", "lambda-sw", "lefschetz", "lspace-lefschetz"}:
            p.add_argument("--casson-base", type=_fraction, default=Fraction(0), help="lambda(Y), default 0")
        if name in NEEDS_H:
            p.add_argument("--h", help='Froyshov invariant, e.g. "-1" or "-1 (source)"')
            p.add_argument("--h-provenance", help="where the h value comes from")

    p = sub.add_parser("brieskorn", help="Casson invariant of Sigma(p, q, r)")
    for a in ("p", "q", "r"):
        p.add_argument(a, type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("oracle-milnor", help="lattice-point signature of the Milnor fiber of x^p + y^q + z^n")
    for a in ("p", "q", "n"):
        p.add_argument(a, type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("batch", help="run invariants over a knot table, writing JSON lines")
    p.add_argument("csv", help="UTF-8 CSV with at least name,braid columns")
    p.add_argument(
        "--invariants",
        default="det,tl-sum,homology",
        help=f"comma-separated subset of {','.join(BATCHABLE)}",
    )
    p.add_argument("--n", type=_degrees, default=[2, 3, 4, 5], help='cover degrees, e.g. "2..5"')
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--deterministic", action="store_true", help="omit timestamps")
    p.add_argument("--lenient", action="store_true", help="skip malformed rows instead of failing")
    return parser


def _knot(args) -> KnotPresentation:
    diagram = parse_braid(args.braid) if args.braid is not None else parse_pd(args.pd)
    return KnotPresentation(diagram, args.name)


def _human(command: str, value, cert: dict) -> str:
    if command in ("jones", "alexander"):
        return cert["text"]
    if command == "homology":
        return cert["group"]
    if command.startswith("lspace-"):
        details = " ".join(f"{k}={v}" for k, v in cert["certificate"].items() if not isinstance(v, dict))
        return f"{cert['verdict']} ({details})"
    return str(value)


def _emit(args, invariant_id, name, n, value, cert, human: str) -> None:
    if args.json:
        print(dumps(make_record(invariant_id, name, n, value, cert, timestamp=True)))
    else:
        print(human)


def _run_knot(args) -> None:
    knot = _knot(args)
    froyshov = None
    if args.command in NEEDS_H:
        if args.h is None:
            raise MissingFroyshov("this invariant needs --h together with its provenance")
        froyshov = parse_h(args.h, args.h_provenance)
    n = getattr(args, "n", None)
    value, cert = compute(
        args.command,
        knot,
        n,
        m=getattr(args, "m", None),
        mode="averaged" if getattr(args, "averaged", False) else "strict",
        froyshov=froyshov,
        casson_base=getattr(args, "casson_base", Fraction(0)),
    )
    _emit(args, INVARIANTS[args.command], args.name, n, value, cert, _human(args.command, value, cert))


def _run_batch(args) -> None:
    invariants = [s.strip() for s in args.invariants.split(",") if s.strip()]
    for inv in invariants:
        if inv not in BATCHABLE:
            raise InputError(f"unknown batch invariant {inv!r}")
    skipped: list = []
    rows = ingest_csv(args.csv, lenient=args.lenient, skipped=skipped)
    for line, msg in skipped:
        print(f"skipped {msg}", file=sys.stderr)
    out = open(args.out, "w", encoding="utf-8", newline="\n") if args.out else sys.stdout
    try:
        for line in run_batch(rows, invariants, args.n, args.jobs, args.deterministic):
            out.write(line + "\n")
            out.flush()
    finally:
        if args.out:
            out.close()


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "batch":
            _run_batch(args)
        elif args.command == "brieskorn":
            v = brieskorn_casson(args.p, args.q, args.r)
            cert = {"p": args.p, "q": args.q, "r": args.r, "method": "milnor_fiber_lattice_count"}
            name = f"Sigma({args.p},{args.q},{args.r})"
            _emit(args, "brieskorn_casson", name, None, v, cert, str(v))
        elif args.command == "oracle-milnor":
            v = Fraction(milnor_fiber_signature_oracle(args.p, args.q, args.n))
            cert = {"p": args.p, "q": args.q, "n": args.n}
            _emit(args, "milnor_fiber_signature", None, args.n, v, cert, str(v))
        else:
            _run_knot(args)
    except CovertorError as e:
        print(f"covertor: {e.code}: {e}", file=sys.stderr)
        return e.exit_code
    except ValueError as e:
        # argument combinations the library rejects outright (e.g. m >= n)
        print(f"covertor: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"covertor: {e}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""The nine acceptance criteria, each printing one PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v``; the status
lines go straight to the terminal even when output is captured.
"""

import itertools
import json
import math
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction
from importlib import resources

import pytest

from covertor.algebra import LaurentPoly, is_zero_at_root
from covertor.batch import load_corpus
from covertor.covers import branched_homology, fox_order
from covertor.errors import DegenerateAtRoot, NotRationalHomologySphere
from covertor.gauge import (
    Froyshov,
    GaugeInputs,
    brieskorn_casson,
    casson_double_cover_mullins,
    casson_surgery,
    lambda_fo_mapping_torus,
    lambda_sw_mapping_torus,
    monopole_lefschetz,
)
from covertor.jones import jones
from covertor.notation import UNKNOT, BraidWord, connected_sum, mirror, parse_braid, torus_braid
from covertor.obstruct import VerdictKind, jones_certificate, jones_verdict, lefschetz_verdict
from covertor.seifert import alexander, milnor_fiber_signature_oracle, seifert_matrix, tl_signature, tl_signature_sum

TREFOIL = BraidWord(2, (1, 1, 1))
FIG8 = parse_braid("k=3; 1 -2 1 -2")
T35 = torus_braid(3, 5)
T37 = torus_braid(3, 7)
SOURCE = "literature value supplied as input"


def lp(d):
    return LaurentPoly(d)


@pytest.fixture
def criterion(request):
    reporter = request.config.pluginmanager.getplugin("terminalreporter")

    @contextmanager
    def run(number: int, title: str, limit: float | None = None):
        start = time.perf_counter()
        status, detail = "FAIL", ""
        try:
            yield
            elapsed = time.perf_counter() - start
            if limit is not None and elapsed >= limit:
                detail = f" (took {elapsed:.1f}s, limit {limit:.0f}s)"
                raise AssertionError(f"criterion {number} exceeded {limit}s: {elapsed:.2f}s")
            status, detail = "PASS", f" ({elapsed:.2f}s)"
        finally:
            line = f"criterion {number} {status}: {title}{detail}"
            if reporter is not None:
                reporter.write_line("")
                reporter.write_line(line)
            else:
                print(line)

    return run


def test_criterion_1_unknot_normalization(criterion):
    with criterion(1, "unknot gives lambda_FO = lambda_SW = Lef = 0 for n = 2..5", limit=1):
        for n in (2, 3, 4, 5):
            inp = GaugeInputs(UNKNOT, n, froyshov=Froyshov(0, SOURCE))
            assert lambda_fo_mapping_torus(inp) == 0
            assert lambda_sw_mapping_torus(inp) == 0
            assert monopole_lefschetz(inp) == 0


def _coprime_triples(bound):
    for n, q, r in itertools.product(range(2, bound // 4 + 1), repeat=3):
        if n * q * r <= bound and math.gcd(n, q) == math.gcd(n, r) == math.gcd(q, r) == 1:
            yield n, q, r


def test_criterion_2_brieskorn_three_routes(criterion):
    with criterion(2, "Brieskorn Casson = signature sum / 8 = Milnor lattice count / 8, n*q*r <= 210", limit=60):
        triples = list(_coprime_triples(210))
        assert len(triples) > 200
        for n, q, r in triples:
            value = brieskorn_casson(n, q, r)
            via_signatures = Fraction(tl_signature_sum(seifert_matrix(torus_braid(q, r)), n), 8)
            via_lattice = Fraction(milnor_fiber_signature_oracle(q, r, n), 8)
            assert value == via_signatures == via_lattice, (n, q, r)
            for perm in itertools.permutations((n, q, r)):
                assert brieskorn_casson(*perm) == value


def test_criterion_3_poincare_sphere(criterion):
    with criterion(3, "lambda(Sigma(2,3,5)) = -1 by three routes; Lef(T(3,5), n=2, h=-1) = 0"):
        assert brieskorn_casson(2, 3, 5) == -1
        rep = jones(T35)
        assert rep.jprime_at_minus_one == 0
        assert tl_signature(seifert_matrix(T35), 1, 2)[0] == -8
        assert casson_double_cover_mullins(T35) == -1
        d2 = alexander(seifert_matrix(TREFOIL)).derivative().derivative().evaluate(1)
        assert Fraction(-1, 2) * d2 == -1
        assert casson_surgery(TREFOIL, -1) == -1
        assert monopole_lefschetz(GaugeInputs(T35, 2, froyshov=Froyshov(-1, SOURCE))) == 0


def test_criterion_4_sigma_237(criterion):
    with criterion(4, "lambda(Sigma(2,3,7)) = -1; h = 0 gives Lef = -1 and NotLSpaceThisCover"):
        assert brieskorn_casson(2, 3, 7) == -1
        inp = GaugeInputs(T37, 2, froyshov=Froyshov(0, SOURCE))
        assert monopole_lefschetz(inp) == -1
        assert lefschetz_verdict(inp).kind is VerdictKind.NOT_LSPACE_THIS_COVER


def test_criterion_5_fox_vs_snf(criterion):
    corpus = load_corpus()
    with criterion(5, f"Fox order = SNF order on {len(corpus)} corpus knots, 2 <= n <= 8", limit=60):
        assert len(corpus) >= 25
        for row in corpus:
            V = seifert_matrix(row.braid)
            for n in range(2, 9):
                assert fox_order(V, n) == branched_homology(V, n).order, (row.name, n)
        tv = seifert_matrix(TREFOIL)
        assert branched_homology(tv, 2).homology.factors == (3,)
        assert branched_homology(seifert_matrix(FIG8), 2).homology.factors == (5,)
        assert branched_homology(tv, 3).order == 4
        six = branched_homology(tv, 6)
        assert six.homology.free_rank > 0 and not six.qhs


def test_criterion_6_jones_suite(criterion):
    corpus = load_corpus()
    with criterion(6, "Jones values, mirror, connected sum, stabilization, |J(-1)| = |Delta(-1)|", limit=120):
        assert jones(TREFOIL).jones == lp({4: -1, 3: 1, 1: 1})
        assert jones(FIG8).jones == lp({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
        assert jones(T35).jones == lp({4: 1, 6: 1, 10: -1})
        braids = [r.braid for r in corpus]
        for b in braids:
            J = jones(b).jones
            assert jones(mirror(b)).jones == J.substitute_inverse()
            k = b.strand_count
            assert jones(BraidWord(k + 1, b.letters + (k,))).jones == J
            assert jones(BraidWord(k + 1, b.letters + (-k,))).jones == J
            assert abs(J.evaluate(-1)) == abs(alexander(seifert_matrix(b)).evaluate(-1))
        small = [b for b in braids if len(b) <= 8]
        for b1, b2 in zip(small, small[1:]):
            assert jones(connected_sum(b1, b2)).jones == jones(b1).jones * jones(b2).jones


def test_criterion_7_signature_properties(criterion):
    corpus = load_corpus()
    with criterion(7, "signature symmetry, evenness, mirror, additivity, degenerate-root detection"):
        for row in corpus:
            V, Vm = seifert_matrix(row.braid), seifert_matrix(mirror(row.braid))
            delta = alexander(V)
            for n in range(2, 9):
                for m in range(1, n):
                    if is_zero_at_root(delta, m, n):
                        with pytest.raises(DegenerateAtRoot):
                            tl_signature(V, m, n)
                        continue
                    s = tl_signature(V, m, n)[0]
                    assert s % 2 == 0
                    assert s == tl_signature(V, n - m, n)[0]
                    assert tl_signature(Vm, m, n)[0] == -s
        small = [r.braid for r in corpus if len(r.braid) <= 8]
        for b1, b2 in zip(small, small[2:]):
            Vs = seifert_matrix(connected_sum(b1, b2))
            V1, V2 = seifert_matrix(b1), seifert_matrix(b2)
            for n in (2, 3, 4, 5, 7, 8):
                for m in range(1, n):
                    if not is_zero_at_root(alexander(Vs), m, n):
                        assert tl_signature(Vs, m, n)[0] == tl_signature(V1, m, n)[0] + tl_signature(V2, m, n)[0]
                try:
                    s_sum = lambda_fo_mapping_torus(GaugeInputs(connected_sum(b1, b2), n))
                except NotRationalHomologySphere:
                    continue
                parts = lambda_fo_mapping_torus(GaugeInputs(b1, n)) + lambda_fo_mapping_torus(GaugeInputs(b2, n))
                assert s_sum == parts
        tv = seifert_matrix(TREFOIL)
        assert is_zero_at_root(alexander(tv), 1, 6)
        with pytest.raises(DegenerateAtRoot):
            tl_signature(tv, 1, 6)


def test_criterion_8_verdict_logic(criterion):
    with criterion(8, "jones_verdict rule table and no obstruction on the Poincare-sphere cover", limit=1):
        for det, jp in itertools.product((1, 3, 5), (-8, 0, 8)):
            expected = (
                VerdictKind.NOT_LSPACE_ALL_EVEN_COVERS if det == 1 and jp != 0 else VerdictKind.INCONCLUSIVE
            )
            assert jones_verdict((det, jp)).kind is expected
        assert jones_verdict(jones_certificate(T35)).kind is VerdictKind.INCONCLUSIVE
        poincare = GaugeInputs(T35, 2, froyshov=Froyshov(-1, SOURCE))
        assert lefschetz_verdict(poincare).kind is VerdictKind.INCONCLUSIVE
        assert jones_verdict(jones_certificate(T37)).kind is VerdictKind.INCONCLUSIVE
        assert lefschetz_verdict(GaugeInputs(T37, 2, froyshov=Froyshov(0, SOURCE))).kind is (
            VerdictKind.NOT_LSPACE_THIS_COVER
        )


def _batch(csv_path, out_path, jobs, degrees="2..5"):
    cmd = [
        sys.executable, "-m", "covertor.cli", "batch", str(csv_path),
        "--invariants", "det,tl-sum,homology", "--n", degrees,
        "--deterministic", "--jobs", str(jobs), "--out", str(out_path),
    ]
    subprocess.run(cmd, check=True, capture_output=True)
    return out_path.read_bytes()


def test_criterion_9_batch_determinism(criterion, tmp_path):
    with criterion(9, "25-row batch byte-identical across runs and job counts; trefoil n=6 error record", limit=120):
        corpus_text = resources.files("covertor").joinpath("data/knots.csv").read_text(encoding="utf-8")
        lines = corpus_text.splitlines()
        table = tmp_path / "table.csv"
        table.write_text("\n".join(lines[:26]) + "\n", encoding="utf-8")
        outputs = [
            _batch(table, tmp_path / f"out_{jobs}_{rep}.jsonl", jobs)
            for jobs in (1, 2)
            for rep in (0, 1)
        ]
        assert all(o == outputs[0] for o in outputs)
        records = [json.loads(x) for x in outputs[0].decode().splitlines()]
        assert len(records) == 25 * (1 + 4 + 4)
        assert len({r["name"] for r in records}) == 25
        assert all("timestamp" not in r for r in records)

        errors = _batch(table, tmp_path / "six.jsonl", 2, degrees="6")
        trefoil_six = [
            json.loads(x) for x in errors.decode().splitlines()
            if json.loads(x)["name"] == "3_1" and json.loads(x)["invariant"] == "tl_signature_sum"
        ]
        assert trefoil_six and trefoil_six[0]["error"] == "NotRationalHomologySphere"

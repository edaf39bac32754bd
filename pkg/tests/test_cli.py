import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from covertor.batch import TableError, ingest_csv, parse_h, run_batch
from covertor.cli import run
from covertor.errors import MissingFroyshov


def cli(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows_from(text, **kw):
    return ingest_csv(io.StringIO(text), **kw)


class TestSingleShot:
    def test_brieskorn_json(self, capsys):
        code, out, _ = cli(capsys, "brieskorn", "2", "3", "5", "--json")
        rec = json.loads(out)
        assert code == 0
        assert (rec["invariant"], rec["num"], rec["den"]) == ("brieskorn_casson", -1, 1)

    def test_tl_sum(self, capsys):
        assert cli(capsys, "tl-sum", "--braid", "1 1 1", "--n", "5")[:2] == (0, "-8\n")

    def test_lspace_jones_t35(self, capsys):
        code, out, _ = cli(capsys, "lspace-jones", "--braid", "k=3;1 2 1 2 1 2 1 2 1 2", "--json")
        cert = json.loads(out)["certificate"]
        assert code == 0
        assert cert["verdict"] == "Inconclusive"
        assert cert["certificate"] == {"det": 1, "jprime": 0}

    def test_human_outputs(self, capsys):
        assert cli(capsys, "jones", "--braid", "1 1 1")[1] == "-t^4 + t^3 + t\n"
        assert cli(capsys, "alexander", "--braid", "k=3;1 -2 1 -2")[1] == "-t + 3 - t^-1\n"
        assert cli(capsys, "det", "--pd", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")[1] == "3\n"
        assert cli(capsys, "homology", "--braid", "1 1 1", "--n", "3")[1] == "Z/2 + Z/2\n"
        assert cli(capsys, "tl-sig", "--braid", "1 1 1", "--m", "1", "--n", "3")[1] == "-2\n"
        assert cli(capsys, "lambda-sw", "--braid", "1 1 1", "--n", "2")[1] == "1/4\n"
        assert cli(capsys, "mullins", "--braid", "k=3;1 2 1 2 1 2 1 2 1 2")[1] == "-1\n"
        assert cli(capsys, "oracle-milnor", "3", "5", "2")[1] == "-8\n"

    def test_lefschetz_provenance(self, capsys):
        t37 = "k=3;" + " 1 2" * 7
        assert cli(capsys, "lefschetz", "--braid", t37, "--n", "2", "--h", "0")[0] == 3
        assert cli(capsys, "lefschetz", "--braid", t37, "--n", "2")[0] == 3
        code, out, _ = cli(capsys, "l-n", "--braid", t37, "--n", "2", "--h", "0", "--h-provenance", "table")
        assert (code, out) == (0, "-1\n")
        code, out, _ = cli(capsys, "lspace-lefschetz", "--braid", t37, "--n", "2", "--h", "0 (table)", "--json")
        assert json.loads(out)["certificate"]["verdict"] == "NotLSpaceThisCover"

    @pytest.mark.parametrize(
        "argv, code",
        [
            (["jones", "--braid", "0 1"], 2),
            (["jones", "--pd", "X(1,2,3)"], 2),
            (["tl-sum", "--braid", "1 1 1", "--n", "6"], 3),
            (["tl-sig", "--braid", "1 1 1", "--m", "1", "--n", "6"], 3),
            (["mullins", "--braid", "1 1 1"], 3),
            (["l-n", "--braid", "1 1 1", "--n", "6", "--h", "0 (x)"], 3),
            (["brieskorn", "2", "4", "5"], 3),
            (["jones", "--braid", "1 1"], 3),
            (["tl-sig", "--braid", "1 1 1", "--m", "3", "--n", "2"], 2),
        ],
    )
    def test_exit_codes(self, capsys, argv, code):
        got, out, err = cli(capsys, *argv)
        assert got == code
        assert out == "" and err.startswith("covertor:")

    def test_usage_error_is_2(self, capsys):
        with pytest.raises(SystemExit) as e:
            run(["tl-sum", "--braid", "1 1 1"])
        assert e.value.code == 2

    def test_numerical_exit_code(self, capsys, monkeypatch):
        from covertor import batch
        from covertor.errors import PrecisionExhausted

        def boom(*a, **k):
            raise PrecisionExhausted("forced")

        monkeypatch.setattr(batch, "signature_profile", boom)
        assert cli(capsys, "tl-sum", "--braid", "1 1 1", "--n", "5")[0] == 4

    def test_console_script(self):
        p = subprocess.run(
            [sys.executable, "-m", "covertor.cli", "tl-sum", "--braid", "1 1 1", "--n", "6"],
            capture_output=True,
            text=True,
        )
        assert p.returncode == 3 and "NotRationalHomologySphere" in p.stderr and p.stdout == ""


class TestIngest:
    def test_minimal(self):
        rows = rows_from("name,braid\ntrefoil,1 1 1\n")
        assert len(rows) == 1 and rows[0].braid.letters == (1, 1, 1)

    def test_bad_braid_line(self):
        with pytest.raises(TableError) as e:
            rows_from("name,braid\ntrefoil,1 1 1\nbad,0\n")
        assert e.value.line == 3

    def test_lenient(self):
        skipped = []
        rows = rows_from("name,braid\nbad,0\ntrefoil,1 1 1\nhopf,1 1\n", lenient=True, skipped=skipped)
        assert [r.name for r in rows] == ["trefoil"]
        assert [line for line, _ in skipped] == [2, 4]

    def test_h_with_provenance(self):
        rows = rows_from("name,braid,h2\np,k=3;1 2 1 2 1 2 1 2 1 2,−1 (KM conventions)\n")
        h = rows[0].h_by_n[2]
        assert h.value == -1 and h.provenance == "KM conventions"

    def test_h_column_provenance(self):
        rows = rows_from("name,braid,h3,h_provenance\np,1 1 1,1/2,table 4\n")
        assert rows[0].h_by_n[3].value == Fraction(1, 2)
        assert rows[0].h_by_n[3].provenance == "table 4"

    def test_h_without_provenance(self):
        with pytest.raises(TableError):
            rows_from("name,braid,h2\np,1 1 1,-1\n")
        with pytest.raises(MissingFroyshov):
            parse_h("-1")

    def test_missing_header(self):
        with pytest.raises(TableError):
            rows_from("name,word\nx,1 1 1\n")

    def test_pd_column(self):
        rows = rows_from('name,braid,pd\nt,1 1 1,"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"\n')
        assert len(rows[0].pd) == 3

    def test_corpus_size(self, corpus):
        assert len(corpus) >= 25
        assert len({r.name for r in corpus}) == len(corpus)


class TestBatch:
    def test_cardinality(self):
        rows = rows_from("name,braid\na,1 1 1\nb,k=3;1 -2 1 -2\n")
        lines = list(run_batch(rows, ["det", "tl-sum"], [2], deterministic=True))
        assert len(lines) == 4
        recs = [json.loads(x) for x in lines]
        assert [(r["name"], r["invariant"], r["n"]) for r in recs] == [
            ("a", "knot_determinant", None),
            ("a", "tl_signature_sum", 2),
            ("b", "knot_determinant", None),
            ("b", "tl_signature_sum", 2),
        ]
        assert all("timestamp" not in r for r in recs)

    def test_error_record(self):
        rows = rows_from("name,braid\ntrefoil,1 1 1\n")
        (line,) = run_batch(rows, ["tl-sum"], [6], deterministic=True)
        rec = json.loads(line)
        assert rec["error"] == "NotRationalHomologySphere" and rec["n"] == 6

    def test_empty(self, tmp_path, capsys):
        src = tmp_path / "empty.csv"
        src.write_text("name,braid\n", encoding="utf-8")
        code, out, _ = cli(capsys, "batch", str(src), "--deterministic")
        assert (code, out) == (0, "")

    def test_fatal_bad_row(self, tmp_path, capsys):
        src = tmp_path / "bad.csv"
        src.write_text("name,braid\nx,0\n", encoding="utf-8")
        code, out, err = cli(capsys, "batch", str(src))
        assert code == 2 and "line 2" in err

    def test_timestamps_present_by_default(self):
        rows = rows_from("name,braid\na,1 1 1\n")
        (line,) = run_batch(rows, ["det"], [2])
        assert "timestamp" in json.loads(line)

    def test_round_trip(self, tmp_path, capsys):
        src = tmp_path / "t.csv"
        src.write_text("name,braid,h2\nt35,k=3;1 2 1 2 1 2 1 2 1 2,-1 (KM conventions)\nfig8,k=3;1 -2 1 -2,\n", encoding="utf-8")
        invs = "det,tl-sum,homology,lambda-fo,lefschetz,mullins"
        code, out, _ = cli(capsys, "batch", str(src), "--invariants", invs, "--n", "2,3", "--deterministic")
        assert code == 0
        braids = {"t35": "k=3;1 2 1 2 1 2 1 2 1 2", "fig8": "k=3;1 -2 1 -2"}
        names = {"knot_determinant": "det", "tl_signature_sum": "tl-sum", "branched_homology": "homology",
                 "lambda_fo": "lambda-fo", "monopole_lefschetz": "lefschetz",
                 "casson_double_cover_mullins": "mullins"}
        for line in out.splitlines():
            rec = json.loads(line)
            argv = [names[rec["invariant"]], "--braid", braids[rec["name"]], "--json"]
            if rec["n"] is not None:
                argv += ["--n", str(rec["n"])]
            if rec["invariant"] == "monopole_lefschetz" and rec["name"] == "t35" and rec["n"] == 2:
                argv += ["--h", "-1 (KM conventions)"]
            code, single, _ = cli(capsys, *argv)
            if "error" in rec:
                assert code != 0
                continue
            assert code == 0
            fresh = json.loads(single)
            assert (fresh["num"], fresh["den"], fresh["certificate"]) == (rec["num"], rec["den"], rec["certificate"])

import pytest

from covertor.algebra import AbelianGroupSNF
from covertor.covers import branched_homology, fox_order, is_qhs
from covertor.gauge import is_prime_power
from covertor.notation import UNKNOT, BraidWord, parse_braid
from covertor.seifert import knot_determinant, seifert_matrix

TREFOIL = seifert_matrix(BraidWord(2, (1, 1, 1)))
FIG8 = seifert_matrix(parse_braid("k=3; 1 -2 1 -2"))


class TestBranchedHomology:
    def test_trefoil_double(self):
        r = branched_homology(TREFOIL, 2)
        assert r.homology == AbelianGroupSNF((3,)) and r.order == 3 and r.qhs

    def test_figure_eight_double(self):
        r = branched_homology(FIG8, 2)
        assert r.homology == AbelianGroupSNF((5,)) and r.qhs

    def test_trefoil_six(self):
        r = branched_homology(TREFOIL, 6)
        assert r.homology.free_rank > 0 and r.order == 0 and not r.qhs

    def test_trefoil_triple(self):
        r = branched_homology(TREFOIL, 3)
        assert r.homology == AbelianGroupSNF((2, 2)) and r.order == 4
        assert fox_order(TREFOIL, 3) == 4

    def test_identity_cover(self, corpus):
        for row in corpus:
            assert branched_homology(seifert_matrix(row.braid), 1).homology.is_trivial

    def test_report_dict(self):
        assert branched_homology(TREFOIL, 3).as_dict()["group"] == "Z/2 + Z/2"


class TestFoxOrder:
    @pytest.mark.parametrize("n, order", [(2, 3), (5, 1), (6, 0)])
    def test_trefoil(self, n, order):
        assert fox_order(TREFOIL, n) == order

    def test_is_qhs(self):
        assert is_qhs(TREFOIL, 2)
        assert not is_qhs(TREFOIL, 6)
        for n in range(2, 9):
            assert is_qhs(seifert_matrix(UNKNOT), n)

    def test_corpus_agreement(self, corpus):
        for row in corpus:
            V = seifert_matrix(row.braid)
            assert branched_homology(V, 2).order == knot_determinant(V), row.name
            for n in range(2, 9):
                assert fox_order(V, n) == branched_homology(V, n).order, (row.name, n)
                if is_prime_power(n):
                    assert is_qhs(V, n), (row.name, n)

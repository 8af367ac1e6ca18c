from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pstwalk import catalog
from pstwalk.catalog import CoverParameters
from pstwalk.drg import IntersectionArray
from pstwalk.numerics import NonIntegerReport, RationalPiTime, integer_eigensystem
from pstwalk.pst import drg_pst_test
from pstwalk.scheme import SchemeError, scheme_from_graph


@pytest.fixture(scope="module")
def audit280():
    return catalog.audit_covers(280)


def _spectrum(g):
    return integer_eigensystem(g.adjacency())


class TestConstructors:
    def test_hypercube(self):
        g = catalog.hypercube(3)
        assert g.n == 8 and set(g.degrees().tolist()) == {3}
        assert _spectrum(g).eigenvalues == (3, 1, -1, -3)

    @pytest.mark.parametrize("d", range(1, 7))
    def test_hypercube_array(self, d):
        arr = scheme_from_graph(catalog.hypercube(d)).intersection_array()
        assert arr == IntersectionArray(tuple(range(d, 0, -1)), tuple(range(1, d + 1)))

    def test_cocktail_party_2_is_c4(self):
        g = catalog.cocktail_party(2)
        assert g.n == 4 and set(g.degrees().tolist()) == {2} and g.is_connected()
        assert scheme_from_graph(g).intersection_array() == scheme_from_graph(catalog.cycle(4)).intersection_array()

    def test_cycle5(self):
        assert isinstance(_spectrum(catalog.cycle(5)), NonIntegerReport)

    @pytest.mark.parametrize("fn, arg", [(catalog.hypercube, 0), (catalog.cocktail_party, 1), (catalog.cycle, 2)])
    def test_bounds(self, fn, arg):
        with pytest.raises(ValueError):
            fn(arg)

    def test_double_k4(self):
        g = catalog.bipartite_double(catalog.complete_graph(4))
        assert g.n == 8 and g.is_bipartite() and set(g.degrees().tolist()) == {3}
        assert _spectrum(g).eigenvalues == (3, 1, -1, -3)
        assert scheme_from_graph(g).intersection_array() == IntersectionArray((3, 2, 1), (1, 2, 3))

    def test_double_petersen(self):
        g = catalog.bipartite_double(catalog.petersen())
        assert g.n == 20 and set(g.degrees().tolist()) == {3} and g.is_connected()

    def test_double_k2(self):
        g = catalog.bipartite_double(catalog.complete_graph(2))
        assert g.n == 4 and len(g.edges) == 2 and not g.is_connected()

    def test_oa(self):
        g = catalog.orthogonal_array_graph(4, 2)
        assert g.n == 16 and _spectrum(g).eigenvalues == (6, 2, -2)
        g = catalog.orthogonal_array_graph(5, 3)
        assert _spectrum(g).eigenvalues == (12, 2, -3)


class TestHadamard:
    @pytest.mark.parametrize("order", [1, 2, 4, 8, 16])
    def test_sylvester(self, order):
        assert catalog.is_hadamard(catalog.sylvester_hadamard(order))

    @pytest.mark.parametrize("order", [4, 16, 64])
    def test_symmetric_constant_diagonal(self, order):
        h = catalog.symmetric_constant_diagonal_hadamard(order)
        assert catalog.is_hadamard(h) and np.array_equal(h, h.T) and len(set(np.diag(h))) == 1

    def test_not_hadamard(self):
        assert not catalog.is_hadamard([[1, 1], [1, 1]])
        with pytest.raises(ValueError):
            catalog.hadamard_graph([[1, 1], [1, 1]])

    def test_graph_order4(self):
        g = catalog.hadamard_graph(catalog.sylvester_hadamard(4))
        assert g.n == 16
        assert scheme_from_graph(g).intersection_array() == IntersectionArray.parse("4,3,2,1;1,2,3,4")
        assert _spectrum(g).eigenvalues == (4, 2, 0, -2, -4)
        cert = drg_pst_test(scheme_from_graph(g).intersection_array())
        assert cert.verdict and cert.tau == RationalPiTime.pi_over(2)

    def test_graph_order8(self):
        g = catalog.hadamard_graph(catalog.sylvester_hadamard(8))
        assert scheme_from_graph(g).intersection_array() == IntersectionArray.parse("8,7,4,1;1,4,7,8")
        assert not drg_pst_test(scheme_from_graph(g).intersection_array()).verdict

    def test_graph_order2_is_c8(self):
        g = catalog.hadamard_graph(catalog.sylvester_hadamard(2))
        assert g.n == 8 and set(g.degrees().tolist()) == {2} and g.is_connected() and g.is_bipartite()

    def test_cover4(self):
        g = catalog.hadamard_cover(catalog.symmetric_constant_diagonal_hadamard(4))
        assert g.n == 8 and _spectrum(g).eigenvalues == (3, 1, -1, -3)
        assert scheme_from_graph(g).intersection_array() == CoverParameters(4, 2, 2).array()

    def test_cover16(self):
        g = catalog.hadamard_cover(catalog.symmetric_constant_diagonal_hadamard(16))
        assert scheme_from_graph(g).intersection_array() == CoverParameters(16, 2, 8).array()
        assert _spectrum(g).eigenvalues == (15, 3, -1, -5)

    def test_cover_negated_diagonal(self):
        h = -catalog.symmetric_constant_diagonal_hadamard(4)
        g = catalog.hadamard_cover(h)
        assert scheme_from_graph(g).intersection_array() == CoverParameters(4, 2, 2).array()

    def test_cover_preconditions(self):
        with pytest.raises(ValueError):
            catalog.hadamard_cover(catalog.sylvester_hadamard(2))
        with pytest.raises(ValueError):
            catalog.hadamard_cover(catalog.sylvester_hadamard(4))  # diagonal (1,-1,-1,1)


class TestCovers:
    def test_derived(self):
        p = CoverParameters(28, 2, 10)
        assert (p.delta, p.Delta, p.sqrt_Delta) == (6, 144, 12)
        assert (p.rho, p.sigma, p.t_param) == (9, -3, 3)

    @pytest.mark.parametrize(
        "n, c, eigs", [(28, 10, (27, 9, -1, -3)), (96, 40, (95, 19, -1, -5)), (4, 2, (3, 1, -1, -3))]
    )
    def test_spectrum(self, n, c, eigs):
        s = catalog.cover_spectrum(CoverParameters(n, 2, c))
        assert s.eigenvalues == eigs and s.n == 2 * n

    def test_spectrum_non_square(self):
        assert isinstance(catalog.cover_spectrum(CoverParameters(6, 2, 2)), NonIntegerReport)

    @pytest.mark.parametrize("n, c, tau", [(28, 10, 2), (120, 54, 6), (4, 2, 2), (64, 30, 2)])
    def test_cover_pst_yes(self, n, c, tau):
        cert = catalog.cover_pst(CoverParameters(n, 2, c))
        assert cert.verdict and cert.tau == RationalPiTime.pi_over(tau)

    def test_cover_pst_delta0(self):
        cert = catalog.cover_pst(CoverParameters(6, 2, 2))
        assert not cert.verdict and cert.details["delta"] == 0

    def test_cover_pst_r(self):
        with pytest.raises(ValueError):
            catalog.cover_pst(CoverParameters(6, 3, 1))

    def test_partner(self):
        assert catalog.partner_cover(CoverParameters(96, 2, 40)) == CoverParameters(96, 2, 54)
        assert catalog.partner_cover(CoverParameters(28, 2, 10)) == CoverParameters(28, 2, 16)

    @given(st.integers(4, 400), st.data())
    def test_partner_involution(self, n, data):
        c = data.draw(st.integers(0, n - 2))
        p = CoverParameters(n, 2, c)
        q = catalog.partner_cover(p)
        assert catalog.partner_cover(q) == p and q.delta == -p.delta

    @given(st.integers(4, 300), st.data())
    def test_closed_form_agrees(self, n, data):
        c = data.draw(st.integers(1, n - 2))
        p = CoverParameters(n, 2, c)
        cert = catalog.cover_pst(p)  # raises on disagreement
        closed, _ = catalog.closed_form_cover_verdict(p)
        if closed is not None and not (cert.failure_reason or "").startswith("invalid"):
            assert closed == cert.verdict

    def test_table1(self, audit280):
        rows = [(r.n, r.c, r.delta, r.tau) for r in audit280.table1]
        assert rows == list(catalog.TABLE1)
        assert not audit280.extra_candidates
        assert all(r.delta % 4 == 2 for r in audit280.table1)

    def test_hadamard_stream(self, audit280):
        minus = [r.n for r in audit280.hadamard if r.delta == -2]
        plus = [r.n for r in audit280.hadamard if r.delta == 2]
        assert minus == [4, 16, 36, 64, 100, 144, 196, 256]
        assert plus == [16, 64, 144, 256]
        for r in audit280.hadamard:
            if r.delta == -2:
                assert r.tau == RationalPiTime.pi_over(int(r.n**0.5))

    def test_partner_presence(self, audit280):
        present = {(r.n, r.c) for r in audit280.table1}
        for n, c in present:
            q = catalog.partner_cover(CoverParameters(n, 2, c))
            assert ((q.n, q.c) in present) == catalog.cover_pst(q).verdict
        ns = [r.n for r in audit280.table1]
        assert ns.count(96) == 2 and ns.count(176) == 2 and ns.count(28) == 1

    def test_n_max_30(self):
        rows = catalog.enumerate_pst_covers(30)
        assert [(r.n, r.c, r.delta, r.tau) for r in rows] == [(28, 10, 6, RationalPiTime.pi_over(2))]

    def test_streams(self):
        assert [r.n for r in catalog.enumerate_pst_covers(20, "hadamard")] == [4, 16, 16]
        with pytest.raises(ValueError):
            catalog.enumerate_pst_covers(20, "bogus")
        with pytest.raises(ValueError):
            catalog.enumerate_pst_covers(3)

    def test_krein_filtered(self, audit280):
        reasons = {(n, c): why for n, c, _, why in audit280.filtered}
        assert "Krein" in reasons[(64, 22)] and "Krein" in reasons[(64, 40)]


class TestSporadic:
    def test_rows(self):
        assert catalog.sporadic("tight7", w=2).P[0] == (1, 56, 126, 56, 1)
        assert catalog.sporadic("tight7", w=2).n == 240
        assert catalog.sporadic("leech11").P[0] == (1, 4600, 47104, 93150, 47104, 4600, 1)
        ld = catalog.sporadic("linked_designs", s=1, l=2)
        assert ld.P[0] == (1, 32, 30, 32, 1) and ld.n == 96

    def _instances():
        out = [("leech11", {})]
        out += [("penttila_williford", {"s": s}) for s in range(3, 10)]
        out += [("linked_designs", {"s": s, "l": l}) for s in range(1, 10) for l in range(2, 6)]
        out += [("tight7", {"w": w}) for w in range(2, 8)]
        return out

    @pytest.mark.parametrize("name, params", _instances())
    def test_pq(self, name, params):
        sp = catalog.sporadic(name, **params)
        v = sp.view()
        Q = v.dual()
        d = len(sp.P)
        for i in range(d):
            for j in range(d):
                assert sum(Fraction(sp.P[i][k]) * Q[k][j] for k in range(d)) == sp.n * (i == j)
        assert all(Q[i][0] == 1 for i in range(d))
        assert all(Q[0][j] > 0 and Q[0][j].denominator == 1 for j in range(d))
        assert sum(Q[0]) == sp.n
        assert len(v.involution_candidates()) >= 1

    @pytest.mark.parametrize(
        "name, params", [("tight7", {"w": 1}), ("penttila_williford", {"s": 2}), ("bogus", {}), ("leech11", {"x": 1})]
    )
    def test_errors(self, name, params):
        with pytest.raises(ValueError):
            catalog.sporadic(name, **params)

    def test_parse(self):
        assert catalog.parse_sporadic("linked_designs:1,3").params == {"s": 1, "l": 3}
        assert catalog.parse_sporadic("tight7:2").params == {"w": 2}
        with pytest.raises(ValueError):
            catalog.parse_sporadic("tight7")


class TestFamilies:
    def test_oa(self):
        assert catalog.family_eigenvalues("oa", n=4, m=2).eigenvalues == (6, 2, -2)

    def test_hamming(self):
        assert catalog.family_eigenvalues("hamming", d=2, q=4).eigenvalues == (6, 2, -2)

    def test_hermitian(self):
        assert catalog.family_eigenvalues("hermitian_forms", d=2, q=2).eigenvalues == (5, 1, -3)

    def test_gq(self):
        assert catalog.family_eigenvalues("gq_point", s=3, t=5).eigenvalues == (18, 2, -6)
        comp = catalog.family_eigenvalues("gq_point_complement", s=3, t=5)
        assert comp.eigenvalues == (45, 5, -3)

    def test_johnson_middle(self):
        assert catalog.family_eigenvalues("johnson_middle", n=2).eigenvalues == (4, 0, -2)

    def test_unknown(self):
        with pytest.raises(ValueError):
            catalog.family_eigenvalues("bogus")

    @given(st.integers(3, 30), st.integers(2, 20))
    def test_oa_complement_is_oa(self, n, m):
        if m >= n:
            return
        a = catalog.family_eigenvalues("oa_complement", n=n, m=m)
        b = catalog.family_eigenvalues("oa", n=n, m=n + 1 - m)
        assert a == b


class TestResolve:
    @pytest.mark.parametrize(
        "name, kind",
        [
            ("hypercube:3", "graph"),
            ("catalog:cocktail-party:4", "graph"),
            ("oa:4,2", "graph"),
            ("oa:8,4", "spectrum"),
            ("hadamard-graph:4", "graph"),
            ("hadamard-cover:4", "graph"),
            ("cover:28,2,10", "array"),
            ("wells", "array"),
            ("sporadic:leech11", "pscheme"),
            ("published:meixner", "spectrum"),
            ("family:hamming:d=3,q=2", "spectrum"),
        ],
    )
    def test_kinds(self, name, kind):
        item = catalog.resolve(name)
        assert getattr(item, kind) is not None

    @pytest.mark.parametrize("name", ["bogus", "published:nothing"])
    def test_unknown(self, name):
        with pytest.raises(ValueError):
            catalog.resolve(name)

    def test_constructed_graphs_are_drg(self):
        for name in ["hypercube:4", "cocktail-party:5", "petersen", "dodecahedron", "oa:5,3", "hadamard-cover:16"]:
            scheme_from_graph(catalog.resolve(name).graph)

    def test_generalized_petersen_not_drg(self):
        with pytest.raises(SchemeError):
            scheme_from_graph(catalog.generalized_petersen(7, 2))

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pstwalk import catalog
from pstwalk.drg import IntersectionArray, eigenmatrices_from_array, spectrum_from_array
from pstwalk.numerics import RationalPiTime, integer_eigensystem, ord2
from pstwalk.pst import (
    InternalConsistencyError,
    PstCertificate,
    antipode,
    bipartite_double_pst_test,
    drg_pst_test,
    drg_spectrum_pst_test,
    mixing_eigenvalues,
    mixing_matrix,
    mixing_pst_test,
    numeric_verify,
    pst_in_scheme,
    scheme_pst_test,
)
from pstwalk.scheme import (
    Eigenmatrices,
    complete_scheme,
    eigenmatrices,
    scheme_from_graph,
    tensor_product,
)

PI2 = RationalPiTime.pi_over(2)
Q3 = IntersectionArray.parse("3,2,1;1,2,3")


class TestSchemePst:
    def test_leech(self):
        view = catalog.sporadic("leech11").view()
        col = view.column(3)
        assert col == (93150, 0, -4050, 0, 486, 0, -90)
        cert = scheme_pst_test(col, {6: view.sign_partition(6)}, 3)
        assert cert.verdict and cert.alpha == 18 and cert.tau == RationalPiTime.pi_over(18)

    def test_penttila_williford(self):
        cert = pst_in_scheme(catalog.sporadic("penttila_williford", s=3).view(), 2)
        assert cert.verdict and cert.tau == RationalPiTime.pi_over(6)

    def test_k3(self):
        cert = pst_in_scheme(eigenmatrices(complete_scheme(3)), 1)
        assert not cert.verdict and cert.failure_reason == "no order-2 class"

    def test_non_integer(self):
        cert = scheme_pst_test([2, Fraction(1, 2), -1], {2: ((0, 2), (1,))})
        assert not cert.verdict and cert.failure_reason == "non-integer eigenvalues"

    def test_partition_must_cover(self):
        with pytest.raises(ValueError):
            scheme_pst_test([3, 1, -1, -3], {3: ((0, 2), (1,))})

    def test_two_winners_raise(self):
        parts = {3: ((0, 2), (1, 3)), 4: ((0, 2), (1, 3))}
        with pytest.raises(InternalConsistencyError):
            scheme_pst_test([3, 1, -1, -3], parts)

    def test_reports_every_candidate(self):
        cert = scheme_pst_test([3, 1, -1, -3], {5: ((0, 1), (2, 3)), 3: ((0, 2), (1, 3))})
        assert cert.verdict and cert.T_index == 3
        assert [c.ok for c in cert.candidates] == [False, True]
        assert cert.candidates[0].reason.startswith("ord2(lambda_0 - lambda_1)")

    def test_json_roundtrip(self):
        cert = drg_pst_test(Q3)
        d = cert.to_dict()
        assert d["verdict"] == "yes" and d["tau"] == {"num": 1, "den": 2, "pi": True}
        assert "failure_reason" not in d
        assert PstCertificate.from_dict(d) == cert
        no = drg_pst_test(IntersectionArray.parse("2,1;1,1"))
        assert PstCertificate.from_dict(no.to_dict()).failure_reason == "non-integer eigenvalues"


class TestDrgPst:
    def test_q3(self):
        cert = drg_pst_test(Q3)
        assert cert.verdict and cert.tau == PI2 and cert.alpha == 2
        assert cert.partition == ((0, 2), (1, 3))

    def test_cocktail_party_3(self):
        cert = drg_spectrum_pst_test([4, 0, -2])
        assert not cert.verdict
        assert cert.failure_reason.startswith("ord2(lambda_0 - lambda_2) <= ord2(alpha)")

    def test_double_hoffman_singleton(self):
        assert not drg_spectrum_pst_test(catalog.PUBLISHED_SPECTRA["double_hoffman_singleton"]).verdict

    def test_not_antipodal(self):
        cert = drg_pst_test(IntersectionArray.parse("3,2;1,1"))
        assert not cert.verdict and "antipodal" in cert.failure_reason

    def test_invalid(self):
        cert = drg_pst_test(IntersectionArray.parse("2,3;1,1"))
        assert not cert.verdict and cert.failure_reason.startswith("invalid intersection array")

    def test_non_integer(self):
        cert = drg_pst_test(catalog.NAMED_ARRAYS["dodecahedron"])
        assert cert.failure_reason == "non-integer eigenvalues"

    def test_yes_invariants(self, small_drgs):
        seen = 0
        for name, g in small_drgs.items():
            arr = scheme_from_graph(g).intersection_array()
            cert = drg_pst_test(arr)
            if not cert.verdict:
                continue
            seen += 1
            eigs = spectrum_from_array(arr).eigenvalues
            plus, minus = cert.partition
            a2 = ord2(cert.alpha)
            assert 0 in plus
            assert all(ord2(eigs[0] - eigs[j]) > a2 for j in plus if j)
            assert all(ord2(eigs[0] - eigs[j]) == a2 for j in minus)
            assert cert.tau * cert.alpha == RationalPiTime(Fraction(1))
            rep = numeric_verify(g, cert)
            assert rep.checked and rep.passed, (name, rep.values)
            assert rep.values["2tau_return"] >= 1 - 1e-9
        assert seen >= 5

    def test_routes_agree(self, small_drgs):
        for name, g in small_drgs.items():
            s = scheme_from_graph(g)
            em = eigenmatrices(s)
            a = drg_pst_test(s.intersection_array())
            b = pst_in_scheme(em, 1)
            assert a.verdict == b.verdict, name
            if a.verdict:
                assert a.tau == b.tau and b.T_index == s.d

    @given(st.integers(1, 12))
    def test_hypercubes(self, d):
        arr = catalog.ClassicalParameters(d, 1, 0, 1).array()
        cert = drg_pst_test(arr)
        assert cert.verdict and cert.tau == PI2


class TestBipartiteDouble:
    def test_k4(self):
        cert = bipartite_double_pst_test([3, -1])
        assert cert.verdict and cert.tau == PI2

    def test_petersen(self):
        cert = bipartite_double_pst_test([3, 1, -4])
        assert not cert.verdict and cert.details["f"] == [0, 0, 2]
        assert cert.failure_reason == "2-adic orders f_i are not constant"

    def test_q3(self):
        cert = bipartite_double_pst_test([3, 1, -1, -3])
        assert not cert.verdict and cert.details["m"] == [3, 1, -1, -3]
        assert cert.failure_reason == "odd parts m_i not congruent mod 4"

    def test_zero(self):
        cert = bipartite_double_pst_test([2, 0, -2])
        assert not cert.verdict and cert.failure_reason == "zero eigenvalue"

    def test_tensor_route(self, small_drgs):
        for name, g in small_drgs.items():
            s = scheme_from_graph(g)
            cert = bipartite_double_pst_test(integer_eigensystem(g.adjacency()).spectrum)
            if g.n > 40:
                continue
            em = eigenmatrices(tensor_product(s, complete_scheme(2)))
            assert isinstance(em, Eigenmatrices)
            alt = pst_in_scheme(em, 3, involutions=[1])
            assert alt.verdict == cert.verdict, name
            if cert.verdict:
                assert alt.tau == cert.tau
                dbl = catalog.bipartite_double(g)
                assert numeric_verify(dbl, cert, partner=1, u=0).passed, name

    def test_oa_scan(self):
        for n in range(3, 65):
            for m in range(2, n):
                cert = bipartite_double_pst_test(catalog.family_eigenvalues("oa", n=n, m=m))
                assert cert.verdict == (ord2(n) >= ord2(m) + 2), (n, m)

    def test_oa_complement_scan(self):
        for n in range(3, 65):
            for m in range(2, n):
                cert = bipartite_double_pst_test(catalog.family_eigenvalues("oa_complement", n=n, m=m))
                assert cert.verdict == (ord2(n) >= ord2(m - 1) + 2), (n, m)


def _k2():
    return [[1, 1], [1, -1]], [[1, 1], [1, -1]], (1, -1), 2


class TestMixing:
    def test_k2(self):
        P, Q, th, n = _k2()
        assert np.allclose(mixing_eigenvalues(P, Q, th, n, PI2).eigenvalues, [1, -1], atol=1e-12)
        assert np.allclose(mixing_eigenvalues(P, Q, th, n, RationalPiTime.pi_over(4)).eigenvalues, [1, 0], atol=1e-12)

    def test_q3(self):
        P, Q = eigenmatrices_from_array(Q3)
        th = (3, 1, -1, -3)
        assert np.allclose(mixing_eigenvalues(P, Q, th, 8, PI2).eigenvalues, [1, -1, 1, -1], atol=1e-12)
        assert mixing_pst_test(P, Q, th, 8, PI2)
        assert not mixing_pst_test(P, Q, th, 8, RationalPiTime.pi_over(4))

    def test_c4(self):
        arr = IntersectionArray.parse("2,1;1,2")
        P, Q = eigenmatrices_from_array(arr)
        assert mixing_pst_test(P, Q, (2, 0, -2), 4, PI2)

    def test_dimension_mismatch(self):
        P, Q, _, n = _k2()
        with pytest.raises(ValueError):
            mixing_eigenvalues(P, Q, (1, 0, -1), n, PI2)

    @settings(max_examples=30, deadline=None)
    @given(st.floats(min_value=0.01, max_value=2 * math.pi))
    def test_matches_direct(self, t):
        g = catalog.hypercube(4)
        arr = scheme_from_graph(g).intersection_array()
        P, Q = eigenmatrices_from_array(arr)
        spec = spectrum_from_array(arr)
        mu = mixing_eigenvalues(P, Q, spec, g.n, t).eigenvalues
        expected = np.sort(np.repeat(mu, spec.multiplicities))
        direct = np.linalg.eigvalsh(mixing_matrix(integer_eigensystem(g.adjacency()), t))
        assert np.allclose(direct, expected, atol=1e-8)
        assert all(-1 - 1e-9 <= x <= 1 + 1e-9 for x in mu)


class TestNumericVerify:
    def test_q3(self):
        g = catalog.hypercube(3)
        rep = numeric_verify(g, drg_pst_test(Q3))
        assert rep.passed and abs(rep.values["tau"] - 1) < 1e-9 and rep.values["partner"] == 7

    def test_hadamard_graph(self):
        g = catalog.hadamard_graph(catalog.sylvester_hadamard(4))
        cert = drg_pst_test(scheme_from_graph(g).intersection_array())
        assert cert.verdict and cert.tau == PI2
        rep = numeric_verify(g, cert)
        assert rep.passed and abs(rep.values["tau"] - 1) < 1e-9

    def test_octahedron_no(self):
        g = catalog.cocktail_party(3)
        cert = drg_pst_test(scheme_from_graph(g).intersection_array())
        rep = numeric_verify(g, cert)
        assert not cert.verdict and rep.heuristic and rep.passed
        assert rep.values["max_fidelity"] < 1 - 1e-6

    def test_dense_limit(self, monkeypatch):
        from pstwalk import pst

        monkeypatch.setattr(pst, "DENSE_LIMIT", 4)
        rep = numeric_verify(catalog.hypercube(3), drg_pst_test(Q3))
        assert not rep.checked and "dense limit" in rep.notice

    def test_antipode(self):
        assert antipode(catalog.hypercube(4), 0) == 15
        assert antipode(catalog.cycle(5), 0) is None

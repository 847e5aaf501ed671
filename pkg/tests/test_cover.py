import cmath
import random
from dataclasses import replace
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from contactknots.braid import (
    BraidWord,
    MoveStep,
    closure_components,
    conjugate,
    cyclic_shift,
    free_reduce,
    negative_braid_stabilize,
    permutation,
    positive_markov_stabilize,
)
from contactknots.cover import (
    CoverError,
    OvertwistedCertificate,
    alexander_polynomial,
    burau_reduced,
    certify_overtwisted,
    cyclic_cover_homology_order,
    determinant,
    format_certificate,
    fox_product_exact,
    fox_product_numeric,
    homology_orders,
    parse_certificate,
    verify_certificate,
)
from contactknots.laurent import LaurentPolynomial as L
from contactknots.sampling import random_braid
from contactknots.transverse import TransverseBraid

from oracles import (
    SEIFERT,
    alexander_from_seifert,
    cyclic_cover_order_snf,
    double_cover_order,
)
from strategies import braids, same_strand_pair

T = L.t()
TREFOIL = BraidWord(2, (1, 1, 1))
FIGURE_EIGHT = BraidWord(3, (1, -2, 1, -2))
BRAIDS = {"unknot": BraidWord(1), "trefoil": TREFOIL, "figure-eight": FIGURE_EIGHT}


def mat(rows):
    return sympy.Matrix(rows)


class TestBurau:
    def test_identity(self):
        assert burau_reduced(BraidWord(4)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def test_generator_convention(self):
        assert burau_reduced(BraidWord(3, (1,))) == [[-T, 1], [0, 1]]
        assert burau_reduced(BraidWord(3, (2,))) == [[1, 0], [T, -T]]

    def test_rejects_one_strand(self):
        with pytest.raises(CoverError):
            burau_reduced(BraidWord(1))

    @given(same_strand_pair(max_letters=6))
    def test_homomorphism(self, pair):
        a, b = pair
        x = Fraction(3, 7)
        lhs = mat(burau_reduced(BraidWord(a.strands, a.letters + b.letters), x))
        assert lhs == mat(burau_reduced(a, x)) * mat(burau_reduced(b, x))

    @given(braids(min_strands=2, max_letters=8))
    def test_inverse_word(self, a):
        inv = BraidWord(a.strands, tuple(-k for k in reversed(a.letters)))
        x = Fraction(2, 5)
        prod = mat(burau_reduced(a, x)) * mat(burau_reduced(inv, x))
        assert prod == sympy.eye(a.strands - 1)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_braid_relations(self, n):
        for i in range(1, n - 1):
            lhs = burau_reduced(BraidWord(n, (i, i + 1, i)))
            rhs = burau_reduced(BraidWord(n, (i + 1, i, i + 1)))
            assert lhs == rhs
        for i in range(1, n):
            for j in range(i + 2, n):
                assert burau_reduced(BraidWord(n, (i, j))) == burau_reduced(BraidWord(n, (j, i)))

    @given(braids(min_strands=2, max_letters=10))
    def test_at_one_is_permutation_action(self, a):
        n = a.strands
        m = mat(burau_reduced(a, 1))
        assert m.det() in (1, -1)
        perm = sympy.zeros(n, n)
        for i, j in enumerate(permutation(a).images):
            perm[j - 1, i] = 1
        x = sympy.Symbol("x")
        assert sympy.expand(m.charpoly(x).as_expr() * (x - 1) - perm.charpoly(x).as_expr()) == 0

    def test_unit_complex(self):
        z = cmath.exp(2j * cmath.pi / 5)
        m = burau_reduced(FIGURE_EIGHT, z)
        exact = burau_reduced(FIGURE_EIGHT)
        for row, erow in zip(m, exact):
            for v, e in zip(row, erow):
                assert abs(v - L._lift(e)(z)) < 1e-12


class TestDeterminant:
    @given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=4, max_size=4))
    def test_matches_sympy(self, rows):
        assert determinant([r[:] for r in rows]) == mat(rows).det()


class TestAlexander:
    @pytest.mark.parametrize("name", ["unknot", "trefoil", "figure-eight"])
    def test_matches_seifert_oracle(self, name):
        delta = alexander_polynomial(BRAIDS[name])
        t = sympy.Symbol("t")
        mine = sum((c * t**e for e, c in delta.coeffs.items()), sympy.Integer(0))
        assert sympy.expand(mine - alexander_from_seifert(SEIFERT[name])) == 0

    def test_calibration(self):
        assert alexander_polynomial(TREFOIL) == T - 1 + T**-1
        assert alexander_polynomial(FIGURE_EIGHT) == -T + 3 - T**-1
        assert alexander_polynomial(BraidWord(1)) == 1
        assert alexander_polynomial(BraidWord(2, (1,))) == 1

    def test_rejects_links(self):
        with pytest.raises(CoverError, match="components"):
            alexander_polynomial(BraidWord(2, (1, 1)))

    def test_mirror(self):
        assert alexander_polynomial(BraidWord(2, (-1, -1, -1))) == alexander_polynomial(TREFOIL)

    @settings(max_examples=60, deadline=None)
    @given(braids(min_strands=2, max_strands=4, max_letters=10), st.data())
    def test_invariance(self, a, data):
        if closure_components(a) != 1:
            return
        delta = alexander_polynomial(a)
        assert delta.is_symmetric()
        g = data.draw(st.integers(1, a.strands - 1)) * data.draw(st.sampled_from((1, -1)))
        for moved in (conjugate(a, g), cyclic_shift(a), free_reduce(a),
                      positive_markov_stabilize(a), negative_braid_stabilize(a)):
            assert alexander_polynomial(moved) == delta


class TestHomology:
    @pytest.mark.parametrize("name, n, order", [
        ("trefoil", 2, 3), ("figure-eight", 2, 5), ("trefoil", 3, 4),
        ("unknot", 2, 1), ("unknot", 5, 1),
    ])
    def test_pinned_values(self, name, n, order):
        assert cyclic_cover_homology_order(BRAIDS[name], n) == order

    @pytest.mark.parametrize("name", ["trefoil", "figure-eight"])
    def test_double_cover_matches_goeritz(self, name):
        assert cyclic_cover_homology_order(BRAIDS[name], 2) == double_cover_order(SEIFERT[name])

    @pytest.mark.parametrize("name", ["unknot", "trefoil", "figure-eight"])
    @pytest.mark.parametrize("n", range(2, 8))
    def test_matches_smith_normal_form(self, name, n):
        assert cyclic_cover_homology_order(BRAIDS[name], n) == cyclic_cover_order_snf(SEIFERT[name], n)

    def test_direct_root_evaluation(self):
        w = cmath.exp(2j * cmath.pi / 3)
        d = lambda z: z - 1 + 1 / z
        assert round(abs(d(w)) * abs(d(w * w)), 9) == 4

    def test_infinite_sentinel(self):
        # Delta vanishes at primitive sixth roots of unity
        assert cyclic_cover_homology_order(TREFOIL, 6) == 0
        assert homology_orders(TREFOIL, range(2, 7)) == {2: 3, 3: 4, 4: 3, 5: 1, 6: 0}
        assert homology_orders(FIGURE_EIGHT, range(2, 7)) == {2: 5, 3: 16, 4: 45, 5: 121, 6: 320}

    def test_errors(self):
        with pytest.raises(CoverError):
            cyclic_cover_homology_order(TREFOIL, 1)
        with pytest.raises(CoverError):
            cyclic_cover_homology_order(BraidWord(2), 2)
        with pytest.raises(CoverError):
            fox_product_numeric(T - 1 + T**-1, 1)

    @settings(max_examples=40, deadline=None)
    @given(braids(min_strands=2, max_strands=4, max_letters=10), st.integers(2, 9))
    def test_numeric_agrees_with_exact(self, a, n):
        if closure_components(a) != 1:
            return
        delta = alexander_polynomial(a)
        exact = fox_product_exact(delta, n)
        assert exact >= 0
        assert fox_product_numeric(delta, n) == exact

    def test_numeric_residual_check(self):
        with pytest.raises(ArithmeticError):
            fox_product_numeric(T - 1 + T**-1, 3, bits=10, residual=1e-30)


class TestCertificate:
    def test_trivial_witness(self):
        cert = certify_overtwisted(BraidWord(3, (1, 1, 1, -2)))
        assert cert.witness.steps == () and cert.witness.terminal == 3
        assert cert.destabilized == TREFOIL
        assert verify_certificate(cert)

    def test_trefoil_has_none(self):
        assert certify_overtwisted(TREFOIL) is None

    def test_reduction_witness(self):
        b = BraidWord(3, (2, 1, 1, 1, -2, -2, -2, 2))
        cert = certify_overtwisted(TransverseBraid(b, "conj-stab"))
        assert cert is not None and cert.witness.steps
        assert verify_certificate(format_certificate(cert))

    def test_round_trip(self):
        b = conjugate(negative_braid_stabilize(FIGURE_EIGHT), 2)
        cert = certify_overtwisted(TransverseBraid(b, "fig8"))
        text = format_certificate(cert)
        assert parse_certificate(text) == cert
        assert format_certificate(parse_certificate(text)) == text
        assert text.startswith("otw-cert v1\n") and text.endswith("end\n")
        assert "label: fig8" in text and "disks: n" in text

    def _cert(self):
        b = conjugate(negative_braid_stabilize(TREFOIL), 1)
        return certify_overtwisted(b)

    def test_tampered_destabilized(self):
        cert = self._cert()
        bad = OvertwistedCertificate(cert.input, cert.witness, cert.search_budget, BraidWord(2, (1,)))
        assert not verify_certificate(bad)

    def test_tampered_steps(self):
        cert = self._cert()
        text = format_certificate(cert).replace("terminal: ", "terminal: 1")
        assert not verify_certificate(text)
        extra = replace(cert.witness, steps=cert.witness.steps + (MoveStep("cyclic-shift"),))
        assert not verify_certificate(replace(cert, witness=extra))

    @pytest.mark.parametrize("text", [
        "",
        "otw-cert v2\nend\n",
        "otw-cert v1\ninput: B2: 1\n",
        "otw-cert v1\ninput: B2: 1\nend\n",
        "otw-cert v1\nnonsense\nend\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(CoverError):
            parse_certificate(text)

    def test_disks_and_conclusion(self):
        assert OvertwistedCertificate.disk_count(5) == 5
        with pytest.raises(CoverError):
            OvertwistedCertificate.disk_count(1)
        assert "3-fold cyclic branched cover" in OvertwistedCertificate.conclusion(3)
        assert "3 embedded overtwisted disks" in OvertwistedCertificate.conclusion(3)

    def test_random_stabilized_inputs(self):
        rng = random.Random(71)
        for _ in range(200):
            b = negative_braid_stabilize(random_braid(rng, max_strands=4, max_letters=10))
            for _ in range(rng.randint(0, 2)):
                b = conjugate(b, rng.choice((1, -1)) * rng.randint(1, b.strands - 1))
            cert = certify_overtwisted(b)
            assert cert is not None
            assert verify_certificate(format_certificate(cert))

"""
Tests for Koszul Module
"""

import pytest

from core.compat import SigmaChoice
from core.exceptions import GeneratorMapError, UnsupportedPresentationError
from core.koszul import (
    SIGN_TABLE,
    double_dual_map,
    dual_generators,
    dual_name,
    find_isomorphism,
    koszul_dual,
    pairing_blocks,
    pairing_sign,
    presentations_isomorphic,
    render_scaled_map,
)
from core.koszul.verify import (
    complementarity_report,
    rank_complementarity,
    verify_classical_duals,
    verify_involution,
    verify_lin_tot_duality,
    verify_lmt_self_dual,
    verify_matching_duality,
)
from core.presentations import parse
from core.trees import antisymmetric, pair, symmetric
from core.trees.symbols import ANTISYMMETRIC, PAIR, SYMMETRIC
from core.verify.report import PASS


class TestDualGenerators:
    """쌍대 생성원 테스트"""

    @pytest.mark.parametrize(
        "name, expected",
        [
            ("m", "m_dual"),
            ("m'", "m_dual'"),
            ("m_dual", "m"),
            ("m_dual'", "m'"),
            ("Com", "Com_dual"),
        ],
    )
    def test_dual_name(self, name, expected):
        assert dual_name(name) == expected

    def test_kinds_swap(self):
        """대칭 ↔ 반대칭"""
        gmap = dual_generators((symmetric("m"), antisymmetric("b")))
        kinds = [g.kind for g in gmap.dual_generators]
        assert kinds == [ANTISYMMETRIC, SYMMETRIC]

    def test_pair_becomes_twisted(self):
        """m·(12) = m' 이면 m*·(12) = -m'*"""
        gmap = dual_generators(pair("m"))
        first = gmap.dual_generators[0]

        assert first.kind == PAIR
        symbol, coeff = first.partner()
        assert symbol.render() == "m_dual'"
        assert coeff == -1

    def test_ternary_rejected(self):
        with pytest.raises(UnsupportedPresentationError):
            dual_generators((antisymmetric("t", arity=3),))


class TestPairing:
    """가중치 2 페어링 테스트"""

    def test_sign_table(self, mono):
        for shape, sign in SIGN_TABLE.items():
            assert pairing_sign(mono(shape)) == sign

    def test_com_block_signs(self, com):
        """저장 순서 (오른쪽 빗, (12)3, (13)2) 의 부호"""
        blocks = pairing_blocks(com)

        assert [b.arity for b in blocks] == [3]
        assert blocks[0].signs == (-1, 1, -1)
        assert blocks[0].dimension == 3

    def test_unary_components_have_plus_sign(self, mono):
        assert pairing_sign(mono("u(u(1))")) == 1


class TestKoszulDual:
    """코쥘 쌍대 구성 테스트"""

    def test_com_dual_is_lie(self, com, lie):
        dual = koszul_dual(com)

        assert dual.name == "Com_dual"
        assert len(dual.relations) == 1
        assert [g.symbol.render() for g in dual.generators] == ["m_dual"]
        assert presentations_isomorphic(dual, lie, {"m_dual": "b"})

    def test_double_dual_names(self, assoc):
        twice = koszul_dual(koszul_dual(assoc))
        mapping = double_dual_map(assoc)

        assert {g.symbol for g in twice.generators} == set(mapping)
        assert presentations_isomorphic(twice, assoc, mapping)

    def test_non_isomorphic(self, com, lie):
        """대칭과 반대칭 생성원은 대응하지 않음"""
        assert find_isomorphism(com, lie) is None

    def test_assoc_self_dual_map(self, assoc):
        scaled = find_isomorphism(koszul_dual(assoc), assoc)
        assert scaled is not None
        assert set(render_scaled_map(scaled)) == {"m_dual", "m_dual'"}

    def test_bad_generator_map(self, com, lie):
        with pytest.raises(GeneratorMapError):
            presentations_isomorphic(koszul_dual(com), lie, {"x": "b"})

    def test_ternary_unsupported(self):
        p = parse("operad T { gen t:3 antisymmetric; rel t(t(1,2,3),4,5) - t(1,2,t(3,4,5)); }")
        with pytest.raises(UnsupportedPresentationError):
            koszul_dual(p)

    def test_cubic_unsupported(self):
        p = parse("operad C { gen m:2 symmetric; rel m(m(m(1,2),3),4) - m(m(m(1,3),2),4); }")
        with pytest.raises(UnsupportedPresentationError):
            koszul_dual(p)


class TestKoszulVerifiers:
    """코쥘 검증기 테스트"""

    def test_classical_duals(self):
        report = verify_classical_duals()

        assert report.theorem_id == "koszul-calibration"
        assert report.status == PASS

    def test_involution(self):
        report = verify_involution(["Com", "Lie", "As", "PreLie", "Dend"])

        assert report.theorem_id == "koszul-involution"
        assert report.status == PASS

    def test_rank_complementarity(self, com):
        """dim R + dim R^⊥ = 전체 차원"""
        assert rank_complementarity(com) == {3: (2, 1, 3)}

    def test_complementarity_report(self):
        assert complementarity_report().status == PASS

    @pytest.mark.slow
    def test_lin_tot_duality(self, com, two_colors):
        assert verify_lin_tot_duality(com, two_colors).status == PASS

    @pytest.mark.slow
    def test_lmt_self_dual(self, assoc, two_colors):
        report = verify_lmt_self_dual(assoc, two_colors, self_dual=True)
        assert report.status == PASS
        assert "(LMT P)!≅LMT P" in report.details["checks"]

    @pytest.mark.slow
    def test_identity_matching_is_self_dual(self, assoc, two_colors):
        """항등 σ의 쌍대 매칭은 항등 τ"""
        report = verify_matching_duality(assoc, two_colors, SigmaChoice())

        assert report.status == PASS
        assert report.details["tau"] == "e"

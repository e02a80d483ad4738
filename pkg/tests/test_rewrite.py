"""
Tests for Rewrite Module
"""

import pytest

from core.compat import leveled_matching
from core.exceptions import (
    ArityError,
    ResourceGuardError,
    UnknownSymbolError,
    UnsupportedPresentationError,
)
from core.presentations import builtin, parse
from core.rewrite import (
    PathLexOrder,
    candidate_orders,
    component_dimension,
    critical_monomials,
    default_order,
    dimension_sequence,
    is_confluent,
    lmt_order,
    lmt_system,
    normal_form,
    normal_monomials,
    order_from_names,
    order_variants,
    orient,
    plethysm_dimension,
    reduction_chain,
    search_confluent_order,
)
from core.rewrite.verify import (
    gb_report,
    verify_lmt_confluence,
    verify_totcom_dim4,
    verify_unique_normal_forms,
)
from core.trees import Symbol, TreePoly
from core.verify.report import FAIL, INFO, PASS

RIGHT_COMB = "m(1,m(2,3))"
LEFT_12 = "m(m(1,2),3)"
LEFT_13 = "m(m(1,3),2)"

LMT_COM_WITNESS = "m@c0(m@c0(m@c1(1,4),3),2)"
LMT_COM_NORMAL_FORMS = {"m@c0(1,m@c1(2,m@c0(3,4)))", "m@c0(1,m@c0(2,m@c1(3,4)))"}


class TestPathLexOrder:
    """경로 사전식 순서 테스트"""

    def test_arity_three_order(self, com, mono):
        """오른쪽 빗 < (13)2 < (12)3"""
        order = default_order(com)

        assert order.compare(mono(RIGHT_COMB), mono(LEFT_13)) == -1
        assert order.compare(mono(LEFT_13), mono(LEFT_12)) == -1
        assert order.compare(mono(LEFT_12), mono(LEFT_12)) == 0

    def test_sorted(self, com, mono):
        order = default_order(com)
        ranked = order.sorted([mono(LEFT_12), mono(RIGHT_COMB), mono(LEFT_13)])
        assert [m.render() for m in ranked] == [RIGHT_COMB, LEFT_13, LEFT_12]

    def test_arity_mismatch(self, com, mono):
        with pytest.raises(ArityError):
            default_order(com).compare(mono("m(1,2)"), mono(LEFT_12))

    def test_unknown_symbol(self, mono):
        order = PathLexOrder((Symbol("m"),))
        with pytest.raises(UnknownSymbolError):
            order.key(mono("x(x(1,2),3)"))

    def test_order_from_names(self):
        p = parse("operad X { gen a:2 symmetric; gen b:2 symmetric; }")

        assert order_from_names(p, ["b", "a"]).render() == "b < a"
        with pytest.raises(UnknownSymbolError):
            order_from_names(p, ["a"])

    def test_longer_first(self, com, mono):
        """긴 경로 우선이면 오른쪽 빗이 가장 큼"""
        order = order_from_names(com, ["m"], longer_first=True)
        ranked = order.sorted([mono(RIGHT_COMB), mono(LEFT_13), mono(LEFT_12)])

        assert [m.render() for m in ranked] == [LEFT_12, LEFT_13, RIGHT_COMB]
        assert order.render() == "m [긴 경로 우선]"

    def test_variant_render(self):
        order = PathLexOrder((Symbol("a"), Symbol("b")), from_leaf=True, leaves_descending=True)

        assert order.variant == "잎 쪽부터 읽기, 잎 내림차순"
        assert order.render() == "a < b [잎 쪽부터 읽기, 잎 내림차순]"
        assert default_order(parse("operad X { gen a:2 symmetric; }")).variant == ""

    def test_order_variants(self):
        variants = list(order_variants())

        assert len(variants) == 8
        assert not any(variants[0].values())
        assert len({tuple(v.items()) for v in variants}) == 8

    def test_candidate_orders(self):
        """스위치 조합 8개 × 이름 순열"""
        orders = list(candidate_orders(builtin("Pois")))

        assert len(orders) == 16
        assert orders[0] == default_order(builtin("Pois"))

    def test_lmt_order(self):
        """생성원 우선, 그 다음 색"""
        order = lmt_order(PathLexOrder((Symbol("a"), Symbol("b"))), ["c0", "c1"])
        assert order.render() == "a@c0 < a@c1 < b@c0 < b@c1"

    def test_lmt_com_chain(self, com, two_colors, mono):
        """색 있는 항수 3 단항식: 오른쪽 빗 전부, 그 다음 잎 1의 색 단어 순으로 (13)2 < (12)3"""
        pairs = [("c0", "c0"), ("c0", "c1"), ("c1", "c0"), ("c1", "c1")]
        chain = [mono(f"m@{x}(1,m@{y}(2,3))") for x, y in pairs]
        for x, y in pairs:
            chain += [mono(f"m@{x}(m@{y}(1,3),2)"), mono(f"m@{x}(m@{y}(1,2),3)")]
        order = lmt_order(default_order(com), two_colors)

        assert order.sorted(reversed(chain)) == chain
        assert order.sorted(chain[::2] + chain[1::2]) == chain


class TestRewriteRules:
    """규칙 방향 정하기와 정규형 테스트"""

    def test_orient_com(self, com):
        """Com: 두 왼쪽 빗이 lead, 오른쪽 빗만 정규"""
        system = orient(com)

        assert len(system) == 2
        assert [rule.lead.render() for rule in system] == [LEFT_13, LEFT_12]
        assert all(rule.rest.support()[0].render() == RIGHT_COMB for rule in system)

    def test_rule_render(self, com):
        assert orient(com)[1].render() == f"{LEFT_12} -> {RIGHT_COMB}"

    def test_normal_form(self, com, mono):
        system = orient(com)
        f = TreePoly.monomial(mono(LEFT_12)) + TreePoly.monomial(mono(LEFT_13))

        assert normal_form(f, system) == 2 * TreePoly.monomial(mono(RIGHT_COMB))
        assert len(reduction_chain(f, system)) == 3

    def test_normal_form_with_rng(self, com, mono, rng):
        """무작위 전략도 같은 정규형"""
        system = orient(com)
        f = TreePoly.monomial(mono(LEFT_12))
        assert normal_form(f, system, rng) == normal_form(f, system)

    @pytest.mark.parametrize("name, expected", [("Com", 1), ("As", 24), ("Lie", 6)])
    def test_normal_monomials(self, name, expected):
        """합류하는 규칙의 정규 단항식 수 = dim P(4)"""
        system = orient(builtin(name))
        assert len(normal_monomials(system, 4)) == expected

    def test_ternary_unsupported(self):
        p = parse("operad T { gen t:3 symmetric; rel t(t(1,2,3),4,5) - t(t(1,2,4),3,5); }")
        with pytest.raises(UnsupportedPresentationError):
            orient(p)


class TestConfluence:
    """합류성 검사 테스트"""

    def test_com_critical_monomials(self, com):
        assert len(critical_monomials(orient(com))) == 6

    @pytest.mark.parametrize(
        "name",
        [
            "Com",
            "As",
            "Lie",
            "PreLie",
            "Perm",
            "Zinb",
            "Leib",
            pytest.param("Dend", marks=pytest.mark.slow),
        ],
    )
    def test_confluent(self, name):
        """탐색한 순서로 정한 규칙은 합류"""
        p = builtin(name)
        order = search_confluent_order(p)

        assert order is not None
        confluent, certificate = is_confluent(orient(p, order))
        assert confluent
        assert certificate.failures == []

    def test_leib_needs_variant(self):
        """Leib: 기본 순서에서는 합류하지 않고, 변형 순서를 찾아야 함"""
        leib = builtin("Leib")
        confluent, _ = is_confluent(orient(leib))
        order = search_confluent_order(leib)

        assert not confluent
        assert order.variant != ""
        assert len(normal_monomials(orient(leib, order), 4)) == 24

    def test_leib_longer_first(self):
        """긴 경로 우선, b' < b 이면 정규 단항식이 왼쪽 빗 24개"""
        leib = builtin("Leib")
        system = orient(leib, order_from_names(leib, ["b'", "b"], longer_first=True))

        assert is_confluent(system)[0]
        assert all(m.root.children[1] in (2, 3, 4) for m in normal_monomials(system, 4))

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["Pois", "Nov"])
    def test_no_confluent_order(self, name):
        """Pois는 어떤 후보 순서에서도 정규 단항식이 26개, Nov는 코쥘이 아님"""
        assert search_confluent_order(builtin(name)) is None

    def test_mutilated_com(self, com):
        """lead (12)3 규칙을 빼면 합류하지 않음"""
        system = orient(com)
        index = next(i for i, rule in enumerate(system) if rule.lead.render() == LEFT_12)
        confluent, certificate = is_confluent(system.without(index))

        assert not confluent
        payload = certificate.to_dict()
        assert payload["failures"] > 0
        assert payload["entries"][0]["joinable"] is False

    def test_perm_has_confluent_order(self):
        assert search_confluent_order(builtin("Perm")) is not None

    def test_lmt_com(self, com, two_colors):
        """균형 트리 때문에 생성원 우선 순서에서는 합류하지 않음"""
        system = lmt_system(com, two_colors)
        confluent, certificate = is_confluent(system)

        assert len(system) == 8
        assert not confluent
        assert len(certificate.entries) == 48
        assert len(normal_monomials(system, 4)) == 8
        assert component_dimension(leveled_matching(com, two_colors), 4) == 6

    def test_lmt_com_witness(self, com, two_colors):
        """m@c0(m@c0(m@c1(1,4),3),2)의 두 재작성이 서로 다른 정규형에 닿음"""
        _, certificate = is_confluent(lmt_system(com, two_colors))
        failures = {e.monomial.render(): e for e in certificate.failures}
        entry = failures[LMT_COM_WITNESS]

        assert {f.render() for f in entry.normal_forms} == LMT_COM_NORMAL_FORMS
        assert entry.to_dict()["joinable"] is False

    def test_lmt_confluence_report(self, com, two_colors):
        report = verify_lmt_confluence(com, two_colors)

        assert report.status == FAIL
        assert report.details["checks"] == {"base_confluent": True, "lmt_confluent": False}
        assert report.details["critical_monomials"] == 48
        assert report.details["bottom_vertex_leaves"]["1,2"] == 16
        assert report.details["normal_monomials_4"] == 8
        assert report.details["dimension_4"] == 6
        assert len(report.witness["normal_forms"]) == 2
        assert report.witness["certificate"]["failures"] > 0

    def test_gb_report(self, assoc):
        report = gb_report(orient(assoc))
        assert report.status == PASS
        assert report.details["koszul"] is True

    def test_gb_report_names_variant(self):
        """보고서의 order에 찾은 변형 순서가 드러남"""
        leib = builtin("Leib")
        order = search_confluent_order(leib)
        report = gb_report(orient(leib, order))

        assert report.status == PASS
        assert report.details["order"] == order.render()
        assert "[" in report.details["order"]

    def test_unique_normal_forms(self, lie):
        assert verify_unique_normal_forms(orient(lie), samples=10).status == PASS


class TestDimensions:
    """성분 차원 테스트"""

    @pytest.mark.parametrize(
        "name, expected",
        [("Com", [1, 1, 1, 1]), ("Lie", [1, 1, 2, 6]), ("As", [1, 2, 6, 24])],
    )
    def test_dimension_sequence(self, name, expected):
        assert dimension_sequence(builtin(name), 4) == expected

    def test_component_dimension(self, com):
        assert component_dimension(com, 1) == 1
        assert component_dimension(com, 4) == 1

    def test_arity_guard(self, com, config):
        with pytest.raises(ResourceGuardError):
            component_dimension(com, config.engine.max_arity + 1)

    def test_plethysm(self):
        """Com∘Com(4) = 집합 분할 개수 (벨 수)"""
        assert plethysm_dimension([1, 1, 1, 1], [1, 1, 1, 1], 4) == 15
        assert plethysm_dimension([1], [1, 1, 1], 3) == 1

    @pytest.mark.slow
    def test_totcom_dim4(self, two_colors):
        report = verify_totcom_dim4(two_colors)

        assert report.status == INFO
        assert report.details["dimension"] == 4
        assert report.details["plethysm_com_com"] == 15

"""
Tests for Compat Module
"""

import pytest

from core.compat import (
    SigmaChoice,
    count_matching,
    enumerate_sigma_choices,
    foliation_split,
    leveled_matching,
    leveled_sigma,
    linear_compat,
    matching_admissible,
    matching_compat,
    matching_count_report,
    matching_families,
    parse_sigma,
    tc_differences,
    total_compat,
    verify_epi_chain,
    verify_iterate_lin,
    verify_lin_encodes,
    verify_lmt_lin_commute,
    verify_total_independent,
)
from core.exceptions import InadmissibleSigmaError, MalformedSigmaError
from core.koszul.verify import DEND_VOLTERRA_SIGMA
from core.polarization import WeakComposition, quasipolarize, weak_compositions
from core.presentations import builtin, parse, same_relation_spans, span_witness
from core.trees import TreePoly
from core.verify.report import FAIL, INFO, PASS

BOTH_SWAPPED = "r1:c(1,1)=(12); r2:c(1,1)=(12)"

# 중위 순서로 읽으면 레벨인 Dend 매칭
DEND_INORDER_SIGMA = "r1:c(1,1)=e,(12); r2:c(1,1)=(12); r3:c(1,1)=(12),(12)"

PRELIE_ADMISSIBLE = [
    "",
    "r1:c(1,1)=e,(12),(12)",
    "r1:c(1,1)=(12),e,(12)",
    "r1:c(1,1)=(12),(12),e",
]

COLOR_PAIRS = [("c0", "c0"), ("c0", "c1"), ("c1", "c0"), ("c1", "c1")]

COM_GENS = "gen m@c0:2 symmetric; gen m@c1:2 symmetric;"
AS_GENS = "gen m@c0:2; gen m@c1:2;"
DEND_GENS = "gen prec@c0:2; gen prec@c1:2; gen succ@c0:2; gen succ@c1:2;"


def colored_family(name, gens, templates, extra=()):
    """모든 색 쌍 (a, b)로 관계 틀을 채운 두 색 표현"""
    rels = [t.format(a=a, b=b) for a, b in COLOR_PAIRS for t in templates] + list(extra)
    body = " ".join(f"rel {r};" for r in rels)
    return parse(f"operad {name} {{ colors c0, c1; {gens} {body} }}")


def swap_differences(shapes):
    """유형 (1,1) 두 리프트의 차이 (c0,c1) - (c1,c0)"""
    return [s.format(a="c0", b="c1") + " - " + s.format(a="c1", b="c0") for s in shapes]


class TestSigma:
    """σ 선택 테스트"""

    def test_parse_and_render(self, com, two_colors):
        sigma = parse_sigma("r1:c(1,1)=(12)", com, two_colors)

        assert sigma.as_dict() == {("r1", (1, 1)): ((2, 1),)}
        assert sigma.render() == "r1:c(1,1)=(12)"
        assert not sigma.is_identity()

    def test_identity_entries_dropped(self, com, two_colors):
        sigma = parse_sigma("r1:c(1,1)=e", com, two_colors)
        assert sigma == SigmaChoice()
        assert sigma.render() == "e"

    def test_empty_text(self, com, two_colors):
        assert parse_sigma("  ", com, two_colors).is_identity()

    @pytest.mark.parametrize(
        "text",
        [
            "r1:c(1,1)",
            "r9:c(1,1)=(12)",
            "r1:c(2,1)=e",
            "r1:c(1,1)=(13)",
            "r1:c(1,1)=(12),(12)",
            "r1:c(1,1)=(12); r1:c(1,1)=e",
        ],
    )
    def test_malformed(self, text, com, two_colors):
        """형식이나 모양이 맞지 않는 σ"""
        with pytest.raises(MalformedSigmaError):
            parse_sigma(text, com, two_colors)

    @pytest.mark.parametrize(
        "name, expected",
        [("Com", 4), ("As", 2), ("Dend", 32), ("PreLie", 8)],
    )
    def test_count_matching(self, name, expected, two_colors):
        """∏_r ∏_c (β_c!)^{|Supp r| - 1}"""
        assert count_matching(builtin(name), two_colors) == expected

    def test_enumeration_matches_count(self, com, two_colors):
        choices = list(enumerate_sigma_choices(com, two_colors))

        assert len(choices) == count_matching(com, two_colors)
        assert choices[0].is_identity()
        assert len(set(choices)) == len(choices)

    def test_count_report(self, dend, two_colors):
        report = matching_count_report(dend, two_colors)
        assert report.status == INFO
        assert report.details["count"] == 32


class TestConstructions:
    """호환 구성 테스트"""

    def test_linear_compat(self, com, two_colors):
        """Lin_Ω Com: 관계 2개 × 유형 3개"""
        lin = linear_compat(com, two_colors)

        assert lin.name == "Lin_Com"
        assert len(lin.relations) == 6
        assert lin.colors == ("c0", "c1")
        assert [g.symbol.render() for g in lin.generators] == ["m@c0", "m@c1"]
        assert "r1_c1_1" in lin.relation_names

    def test_iterated_colors(self, com, two_colors):
        twice = linear_compat(linear_compat(com, two_colors), two_colors)
        assert twice.colors == ("c0.c0", "c0.c1", "c1.c0", "c1.c1")

    def test_foliation_split_sums(self, com, two_colors):
        """엽층 조각의 합 = 준편극"""
        rel = com.relation("r1")
        c = WeakComposition((1, 1))
        parts = foliation_split(rel, two_colors, c, [(2, 1)])

        assert len(parts) == 2
        assert parts[0] + parts[1] == quasipolarize(rel, two_colors, c)

    def test_foliation_split_columns(self, com, two_colors, mono):
        """σ는 첫 단항식을 뺀 열의 리프트 순서만 바꿈"""
        rel = com.relation("r1")
        first, second = rel.support()
        right = [mono("m@c0(1,m@c1(2,3))"), mono("m@c1(1,m@c0(2,3))")]
        left = [mono("m@c0(m@c1(1,2),3)"), mono("m@c1(m@c0(1,2),3)")]
        a, b = rel[first], rel[second]
        c = WeakComposition((1, 1))

        assert foliation_split(rel, two_colors, c, [(1, 2)]) == [
            TreePoly({right[0]: a, left[0]: b}),
            TreePoly({right[1]: a, left[1]: b}),
        ]
        assert foliation_split(rel, two_colors, c, [(2, 1)]) == [
            TreePoly({right[0]: a, left[1]: b}),
            TreePoly({right[1]: a, left[0]: b}),
        ]

    def test_leveled_matching(self, com, two_colors):
        lmt = leveled_matching(com, two_colors)

        assert lmt.name == "LMT_Com"
        assert len(lmt.relations) == 8

    @pytest.mark.parametrize("name", ["Com", "As", "PreLie", "Dend"])
    def test_preorder_leveled_sigma_is_identity(self, name, two_colors):
        """리프트가 전위 색 단어 순이므로 전위 레벨 매칭은 항등 σ"""
        assert leveled_sigma(builtin(name), two_colors).is_identity()

    def test_inorder_leveled_sigma(self, dend, prelie, two_colors):
        """중위 순서는 표준 평면 트리에서 읽으므로 허용되지 않을 수도 있음"""
        dend_sigma = leveled_sigma(dend, two_colors, "inorder")
        prelie_sigma = leveled_sigma(prelie, two_colors, "inorder")

        assert dend_sigma == parse_sigma(DEND_INORDER_SIGMA, dend, two_colors)
        assert matching_admissible(dend, two_colors, dend_sigma)
        assert prelie_sigma == parse_sigma("r1:c(1,1)=(12),(12),(12)", prelie, two_colors)
        assert not matching_admissible(prelie, two_colors, prelie_sigma)
        assert leveled_matching(dend, two_colors, "inorder").name == "LMT_Dend"

    def test_unknown_vertex_order(self, com, two_colors):
        with pytest.raises(ValueError):
            leveled_sigma(com, two_colors, "postorder")

    def test_identity_is_admissible(self, com, two_colors):
        assert matching_admissible(com, two_colors, SigmaChoice())

    def test_paired_swap_is_admissible(self, com, two_colors):
        """r1·(12) = r2 이므로 두 관계를 함께 바꾸면 허용"""
        sigma = parse_sigma(BOTH_SWAPPED, com, two_colors)
        assert matching_admissible(com, two_colors, sigma)
        assert matching_compat(com, two_colors, sigma).name == "MT_Com"

    def test_single_swap_is_inadmissible(self, com, two_colors):
        sigma = parse_sigma("r1:c(1,1)=(12)", com, two_colors)

        assert not matching_admissible(com, two_colors, sigma)
        with pytest.raises(InadmissibleSigmaError):
            matching_compat(com, two_colors, sigma)

    def test_unchecked_matching(self, com, two_colors):
        sigma = parse_sigma("r1:c(1,1)=(12)", com, two_colors)
        mt = matching_compat(com, two_colors, sigma, check=False)
        assert len(mt.relations) == 8

    def test_tc_differences(self, com, two_colors):
        """공유 단항식의 차이는 한 번만"""
        assert len(tc_differences(com, two_colors)) == 3

    @pytest.mark.parametrize("name, expected", [("As", 2), ("PreLie", 4), ("Dend", 8)])
    def test_tc_difference_counts(self, name, expected, two_colors):
        """지지 단항식마다 유형 (1,1) 차이 하나"""
        assert len(tc_differences(builtin(name), two_colors)) == expected

    def test_total_compat(self, com, two_colors):
        tot = total_compat(com, two_colors)

        assert tot.name == "Tot_Com"
        assert len(tot.relations) == 11

    def test_invalid_palette(self, com):
        with pytest.raises(ValueError):
            linear_compat(com, [])
        with pytest.raises(ValueError):
            linear_compat(com, ["a", "a"])


class TestGoldenFamilies:
    """손으로 쓴 두 색 관계족과 구성 결과 비교"""

    def test_com_leveled_family(self, com, two_colors):
        """뿌리 색과 안쪽 색을 고정한 세 왼쪽 빗이 모두 같음"""
        expected = colored_family(
            "G",
            COM_GENS,
            [
                "m@{a}(m@{b}(1,2),3) - m@{a}(m@{b}(2,3),1)",
                "m@{a}(m@{b}(1,2),3) - m@{a}(m@{b}(3,1),2)",
            ],
        )
        assert same_relation_spans(leveled_matching(com, two_colors), expected)

    def test_as_matching_families(self, assoc, two_colors):
        """항등 σ는 색을 그대로, (12)는 오른쪽 빗에서 두 색을 맞바꿈"""
        leveled = colored_family("G", AS_GENS, ["m@{a}(m@{b}(1,2),3) - m@{a}(1,m@{b}(2,3))"])
        swapped = colored_family("G", AS_GENS, ["m@{a}(m@{b}(1,2),3) - m@{b}(1,m@{a}(2,3))"])
        sigma = parse_sigma("r1:c(1,1)=(12)", assoc, two_colors)

        assert same_relation_spans(matching_compat(assoc, two_colors, SigmaChoice()), leveled)
        assert same_relation_spans(matching_compat(assoc, two_colors, sigma), swapped)
        assert span_witness(leveled, swapped) is not None

    def test_prelie_matching_family(self, prelie, two_colors):
        """(x ▷_a y) ▷_b z 결합자가 a, b를 바꾼 결합자와 같은 다중 pre-Lie 관계"""
        expected = colored_family(
            "G",
            AS_GENS,
            [
                "m@{b}(m@{a}(1,2),3) - m@{a}(1,m@{b}(2,3))"
                " - m@{a}(m@{b}(2,1),3) + m@{b}(2,m@{a}(1,3))"
            ],
        )
        sigma = parse_sigma("r1:c(1,1)=(12),e,(12)", prelie, two_colors)

        assert matching_admissible(prelie, two_colors, sigma)
        assert same_relation_spans(matching_compat(prelie, two_colors, sigma), expected)

    def test_dend_preorder_leveled_family(self, dend, two_colors):
        """뿌리 색이 같은 항끼리 묶인 Dend 레벨 매칭"""
        expected = colored_family(
            "G",
            DEND_GENS,
            [
                "prec@{a}(prec@{b}(1,2),3) - prec@{a}(1,prec@{b}(2,3)) - prec@{a}(1,succ@{b}(2,3))",
                "prec@{a}(succ@{b}(1,2),3) - succ@{a}(1,prec@{b}(2,3))",
                "succ@{a}(prec@{b}(1,2),3) + succ@{a}(succ@{b}(1,2),3) - succ@{a}(1,succ@{b}(2,3))",
            ],
        )
        assert same_relation_spans(leveled_matching(dend, two_colors), expected)

    def test_dend_inorder_leveled_family(self, dend, two_colors):
        """연산을 왼쪽부터 읽은 색 단어가 같은 Dend 매칭"""
        expected = colored_family(
            "G",
            DEND_GENS,
            [
                "prec@{b}(prec@{a}(1,2),3) - prec@{a}(1,prec@{b}(2,3)) - prec@{a}(1,succ@{b}(2,3))",
                "prec@{b}(succ@{a}(1,2),3) - succ@{a}(1,prec@{b}(2,3))",
                "succ@{b}(prec@{a}(1,2),3) + succ@{b}(succ@{a}(1,2),3) - succ@{a}(1,succ@{b}(2,3))",
            ],
        )
        sigma = parse_sigma(DEND_INORDER_SIGMA, dend, two_colors)

        assert same_relation_spans(matching_compat(dend, two_colors, sigma), expected)
        assert same_relation_spans(leveled_matching(dend, two_colors, "inorder"), expected)
        assert span_witness(leveled_matching(dend, two_colors), expected) is not None

    def test_dend_volterra_family(self, dend, two_colors):
        """I_a(y)I_b(z) = I_a(yI_b(z)) + I_b(I_a(y)z) 에서 x ≺_b y = xI_b(y), x ≻_a y = I_a(x)y"""
        expected = colored_family(
            "G",
            DEND_GENS,
            [
                "prec@{b}(prec@{a}(1,2),3) - prec@{a}(1,prec@{b}(2,3)) - prec@{b}(1,succ@{a}(2,3))",
                "prec@{b}(succ@{a}(1,2),3) - succ@{a}(1,prec@{b}(2,3))",
                "succ@{a}(prec@{b}(1,2),3) + succ@{b}(succ@{a}(1,2),3) - succ@{a}(1,succ@{b}(2,3))",
            ],
        )
        sigma = parse_sigma(DEND_VOLTERRA_SIGMA, dend, two_colors)

        assert same_relation_spans(matching_compat(dend, two_colors, sigma), expected)

    def test_as_total_family(self, assoc, two_colors):
        differences = swap_differences(["m@{a}(m@{b}(1,2),3)", "m@{a}(1,m@{b}(2,3))"])
        expected = colored_family(
            "G", AS_GENS, ["m@{a}(m@{b}(1,2),3) - m@{a}(1,m@{b}(2,3))"], differences
        )
        assert same_relation_spans(total_compat(assoc, two_colors), expected)

    def test_dend_total_family(self, dend, two_colors):
        """Tot Dend = 레벨 매칭 + 단항식 8개의 리프트 차이 (매칭 선택과 무관)"""
        ops = ("prec", "succ")
        shapes = [f"{x}@{{a}}(1,{y}@{{b}}(2,3))" for x in ops for y in ops]
        shapes += [f"{x}@{{a}}({y}@{{b}}(1,2),3)" for x in ops for y in ops]
        expected = colored_family(
            "G",
            DEND_GENS,
            [
                "prec@{a}(prec@{b}(1,2),3) - prec@{a}(1,prec@{b}(2,3)) - prec@{a}(1,succ@{b}(2,3))",
                "prec@{a}(succ@{b}(1,2),3) - succ@{a}(1,prec@{b}(2,3))",
                "succ@{a}(prec@{b}(1,2),3) + succ@{a}(succ@{b}(1,2),3) - succ@{a}(1,succ@{b}(2,3))",
            ],
            swap_differences(shapes),
        )
        volterra = parse_sigma(DEND_VOLTERRA_SIGMA, dend, two_colors)

        assert len(shapes) == 8
        assert same_relation_spans(total_compat(dend, two_colors), expected)
        assert same_relation_spans(total_compat(dend, two_colors, volterra), expected)


class TestMatchingFamilies:
    """σ 공간 전체의 허용성과 관계 공간 개수"""

    def test_prelie_admissible_choices(self, prelie, two_colors):
        """r·(12) = -r 가 조각을 맞바꾸려면 σ₃ = σ₁σ₂"""
        admissible = {
            sigma.normalized()
            for sigma in enumerate_sigma_choices(prelie, two_colors)
            if matching_admissible(prelie, two_colors, sigma)
        }
        assert admissible == {parse_sigma(t, prelie, two_colors) for t in PRELIE_ADMISSIBLE}

    def test_prelie_inadmissible_witness(self, prelie, two_colors):
        """σ₃ ≠ σ₁σ₂ 이면 r·(12) = -r 의 조각 집합이 어긋남"""
        sigma = parse_sigma("r1:c(1,1)=(12),e,e", prelie, two_colors)

        with pytest.raises(InadmissibleSigmaError, match=r"r1·\(2, 1, 3\)"):
            matching_compat(prelie, two_colors, sigma)

    def test_prelie_families(self, prelie, two_colors):
        families = matching_families(prelie, two_colors)

        assert len(families) == 4
        assert all(len(sigmas) == 1 for _, sigmas in families)

    @pytest.mark.slow
    def test_prelie_families_unchecked(self, prelie, two_colors):
        """허용성을 보지 않으면 σ 8개가 관계 공간 6종"""
        assert len(matching_families(prelie, two_colors, admissible_only=False)) == 6

    @pytest.mark.slow
    def test_dend_families(self, dend, two_colors):
        """Dend 관계는 S_3 대칭이 없어 σ 32개가 모두 허용되고 관계 공간도 모두 다름"""
        families = matching_families(dend, two_colors)

        assert len(families) == 32
        assert all(len(sigmas) == 1 for _, sigmas in families)


class TestCompatVerifiers:
    """호환 구성 검증기 테스트"""

    def test_lin_encodes(self, com, two_colors):
        report = verify_lin_encodes(com, two_colors)
        assert report.status == PASS

    def test_lin_encodes_three_colors(self, assoc, three_colors):
        assert verify_lin_encodes(assoc, three_colors).status == PASS

    def test_iterate_lin(self, com, two_colors):
        """두 번 입힌 색 c0.c0 … c1.c1 이 Ω² 팔레트로 그대로 통과"""
        report = verify_iterate_lin(com, two_colors)
        assert report.status == PASS

    def test_lmt_lin_commute(self, com, two_colors):
        assert verify_lmt_lin_commute(com, two_colors).status == PASS

    def test_epi_chain(self, com, two_colors):
        """Lin ⊆ MT ⊆ Tot"""
        report = verify_epi_chain(com, two_colors)

        assert report.status == PASS
        assert report.details["checks"] == {"lin⊆mt": True, "mt⊆tot": True}

    def test_total_independent(self, com, two_colors):
        sigma = parse_sigma(BOTH_SWAPPED, com, two_colors)
        assert verify_total_independent(com, two_colors, [sigma]).status == PASS

    def test_report_shape(self, com, two_colors):
        payload = verify_epi_chain(com, two_colors).to_dict()
        assert set(payload) == {"theorem", "status", "details"}
        assert payload["status"] != FAIL

    def test_lambda_points_are_distinct(self, two_colors):
        from core.compat import lambda_points

        points = lambda_points(two_colors, 2)
        assert len(points) == len(list(weak_compositions(2, 2)))
        assert len(set(points)) == len(points)

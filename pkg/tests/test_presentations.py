"""
Tests for Presentations Module
"""

import json

import pytest

from core.exceptions import ParseError, UnknownSymbolError
from core.presentations import (
    builtin,
    closed_relations,
    dumps,
    is_s_stable,
    list_builtins,
    parse,
    parse_file,
    relation_component,
    render_dsl,
    same_relation_spans,
    span_contained,
    span_witness,
    to_json,
)
from core.trees import Symbol

ASSOC_SOURCE = """
operad As {
    gen m:2;
    rel assoc: m(m(1,2),3) - m(1,m(2,3));
}
"""


class TestParse:
    """DSL 파서 테스트"""

    def test_parse_assoc(self):
        """결합 오퍼라드 파싱"""
        p = parse(ASSOC_SOURCE)

        assert p.name == "As"
        assert [g.symbol.render() for g in p.generators] == ["m", "m'"]
        assert p.relation_names == ("assoc",)
        assert p.relation("assoc").render() == "-m(1,m(2,3)) + m(m(1,2),3)"
        assert p.is_binary()
        assert p.is_quadratic()

    def test_default_relation_names(self):
        p = parse("operad Com { gen m:2 symmetric; rel m(m(1,2),3) - m(m(2,3),1); }")
        assert p.relation_names == ("r1",)

    def test_comments_and_coefficients(self):
        """주석, 분수 계수, '*' 구분자"""
        p = parse(
            """
            operad X {
                # 주석
                gen m:2 symmetric;
                rel 1/2*m(m(1,2),3) - 3 m(m(1,3),2);
            }
            """
        )
        rel = p.relations[0]
        assert sorted(rel.values()) == [-3, 0.5]

    def test_twisted_generator(self):
        """twisted는 m·(12) = -m'"""
        p = parse("operad T { gen m:2 twisted; }")
        m = p.find_generator("m")
        assert m.partner() == (Symbol("m'"), -1)

    def test_swap_declaration(self):
        p = parse("operad S { gen x:2 swap -2*y; }")
        x = p.find_generator("x")
        y = p.find_generator("y")

        assert x.partner() == (Symbol("y"), -2)
        assert y.partner()[1] == -0.5

    def test_colored_generators(self):
        p = parse("operad C { colors a, b; gen m@a:2 symmetric; gen m@b:2 symmetric; }")
        assert p.colors == ("a", "b")
        assert p.find_generator("m@b").symbol == Symbol("m", "b")

    def test_ternary_generator(self):
        p = parse("operad T { gen t:3 antisymmetric; rel t(t(1,2,3),4,5) - t(1,2,t(3,4,5)); }")
        assert not p.is_binary()
        assert p.components() == [(5, 2)]

    def test_parse_file(self, opd_file):
        path = opd_file(ASSOC_SOURCE, "as.opd")
        assert parse_file(path).relation("assoc") == parse(ASSOC_SOURCE).relation("assoc")


class TestParseErrors:
    """파싱 오류 테스트"""

    def test_syntax_error(self):
        """구문 오류는 줄/열과 함께 보고"""
        with pytest.raises(ParseError) as exc_info:
            parse("operad X {\n    gen m:2\n}")
        assert exc_info.value.line >= 1
        assert exc_info.value.column >= 1

    def test_arity_mismatch_line(self):
        """항수 불일치는 해당 줄을 가리킴"""
        text = "operad X {\n    gen m:2;\n    rel m(1,2,3) - m(1,m(2,3));\n}"
        with pytest.raises(ParseError) as exc_info:
            parse(text)
        assert exc_info.value.line == 3

    def test_unknown_generator(self):
        with pytest.raises(ParseError):
            parse("operad X { gen m:2; rel x(x(1,2),3) - m(1,m(2,3)); }")

    def test_inhomogeneous_relation(self):
        with pytest.raises(ParseError):
            parse("operad X { gen m:2; gen u:1; rel m(m(1,2),3) - u(m(1,2)); }")

    def test_zero_relation(self):
        with pytest.raises(ParseError):
            parse("operad X { gen m:2 symmetric; rel m(1,2) - m(2,1); }")

    def test_duplicate_relation_name(self):
        with pytest.raises(ParseError):
            parse("operad X { gen m:2; rel a: m(m(1,2),3); rel a: m(1,m(2,3)); }")

    def test_duplicate_generator(self):
        with pytest.raises(ParseError):
            parse("operad X { gen m:2 symmetric; gen m:2 antisymmetric; }")

    def test_undeclared_color(self):
        with pytest.raises(ParseError):
            parse("operad X { colors a; gen m@z:2; }")

    def test_ternary_needs_symmetry(self):
        with pytest.raises(ParseError):
            parse("operad X { gen t:3; }")

    def test_bad_leaf_labels(self):
        with pytest.raises(ParseError):
            parse("operad X { gen m:2; rel m(m(1,2),4) - m(1,m(2,3)); }")

    def test_error_hierarchy(self):
        """ParseError는 OperadError 계층"""
        from core.exceptions import OperadError

        assert issubclass(ParseError, OperadError)


class TestRender:
    """DSL/JSON 렌더링 테스트"""

    @pytest.mark.parametrize("name", list_builtins())
    def test_dsl_round_trip(self, name):
        """parse(render_dsl(p))는 같은 표현"""
        p = builtin(name)
        q = parse(render_dsl(p))

        assert q.generators == p.generators
        assert q.relations == p.relations
        assert q.relation_names == p.relation_names

    def test_twisted_round_trip(self):
        p = parse("operad T { gen m:2 twisted; rel m(m(1,2),3) - m(1,m(2,3)); }")
        assert "twisted" in render_dsl(p)
        assert parse(render_dsl(p)).generators == p.generators

    def test_json_payload(self, assoc):
        """JSON 내보내기 형식"""
        payload = to_json(assoc)

        assert payload["name"] == "As"
        assert payload["generators"][0] == {
            "name": "m",
            "arity": 2,
            "action": {"(12)": [[1, 1, "m'"]]},
        }
        assert payload["relations"][0] == [[-1, 1, "m(1,m(2,3))"], [1, 1, "m(m(1,2),3)"]]

    def test_dumps_is_stable(self, lie):
        text = dumps(to_json(lie))
        assert json.loads(text) == to_json(lie)
        assert dumps(to_json(lie)) == text


class TestCatalog:
    """내장 카탈로그 테스트"""

    def test_list_builtins(self):
        assert list_builtins() == [
            "Com", "Lie", "As", "PreLie", "Perm", "Nov", "Dend", "Leib", "Zinb", "Pois"
        ]

    def test_unknown_builtin(self):
        with pytest.raises(UnknownSymbolError):
            builtin("Nope")

    def test_dimensions(self, com, dend):
        assert com.dimensions() == {"generators": 1, "relations": 2}
        assert dend.dimensions() == {"generators": 4, "relations": 3}


class TestClosure:
    """S_n 폐포 테스트"""

    @pytest.mark.parametrize(
        "name, expected",
        [
            ("Com", 2),
            ("Lie", 1),
            ("As", 6),
            ("PreLie", 3),
            ("Perm", 9),
            ("Leib", 6),
            ("Zinb", 6),
            ("Dend", 18),
            ("Pois", 6),
        ],
    )
    def test_closure_dimension(self, name, expected):
        """폐포 차원 = 자유 성분 차원 - P(3)"""
        p = builtin(name)
        assert len(closed_relations(p, 3, 2)) == expected
        assert len(relation_component(p, 3, 2)) == expected

    def test_com_is_s_stable(self, com):
        """Com의 두 관계는 이미 S_3 안정"""
        assert is_s_stable(com)

    def test_same_spans(self, com):
        other = parse(
            "operad Com2 { gen m:2 symmetric;"
            " rel m(m(1,3),2) - m(m(2,3),1); rel m(m(1,2),3) - m(m(1,3),2); }"
        )
        assert same_relation_spans(com, other)
        assert span_witness(com, other) is None

    def test_span_witness(self, com):
        """폐포 공간이 다르면 반례 관계를 보고"""
        big = parse("operad Big { gen m:2 symmetric; rel m(m(1,2),3); }")
        witness = span_witness(com, big)

        assert witness["component"] == (3, 2)
        assert witness["missing_from"] == "Com"
        assert witness["dimensions"] == (2, 3)
        assert span_contained(com, big) is None
        assert span_contained(big, com) is not None

"""
Presentations Module

오퍼라드 표현 모델, DSL 파서, 내장 카탈로그, S_n 폐포를 제공합니다.
"""

from core.presentations.catalog import builtin, list_builtins
from core.presentations.closure import (
    all_closed_relations,
    closed_relations,
    closure_representatives,
    closed_space,
    is_s_stable,
    relation_component,
    s_closure,
    same_relation_spans,
    span_contained,
    span_witness,
)
from core.presentations.model import Presentation, union_presentations
from core.presentations.parser import parse, parse_file, parse_tree
from core.presentations.render import dumps, render_dsl, to_json

__all__ = [
    "Presentation",
    "union_presentations",
    "parse",
    "parse_file",
    "parse_tree",
    "render_dsl",
    "to_json",
    "dumps",
    "builtin",
    "list_builtins",
    "s_closure",
    "closure_representatives",
    "closed_relations",
    "closed_space",
    "all_closed_relations",
    "relation_component",
    "is_s_stable",
    "same_relation_spans",
    "span_witness",
    "span_contained",
]

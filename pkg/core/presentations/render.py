"""
Presentation Rendering

Presentation을 DSL 텍스트와 JSON으로 내보냅니다.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List

from core.presentations.model import Presentation
from core.trees.poly import TreePoly
from core.trees.symbols import ANTISYMMETRIC, PAIR, SYMMETRIC, UNARY, GeneratorSymbol, Symbol


def _coefficient_prefix(a: Fraction) -> str:
    sign = "-" if a < 0 else ""
    magnitude = abs(a)
    return sign if magnitude == 1 else f"{sign}{magnitude}*"


def render_generator(g: GeneratorSymbol) -> str:
    head = f"gen {g.symbol.render()}:{g.arity}"
    if g.kind == UNARY:
        return f"{head};"
    if g.kind in (SYMMETRIC, ANTISYMMETRIC):
        return f"{head} {g.kind};"
    partner, a = g.partner()
    if partner == Symbol(g.symbol.name + "'", g.symbol.color):
        if a == 1:
            return f"{head};"
        if a == -1:
            return f"{head} twisted;"
    return f"{head} swap {_coefficient_prefix(a)}{partner.render()};"


def render_dsl(p: Presentation) -> str:
    """
    표현을 DSL 텍스트로 렌더링합니다.

    parse(render_dsl(p))는 같은 생성원과 관계를 돌려줍니다.
    """
    lines = [f"operad {p.name} {{"]
    if p.colors:
        lines.append(f"    colors {', '.join(p.colors)};")
    skip = set()
    for g in p.generators:
        if g.symbol in skip:
            continue
        if g.kind == PAIR:
            skip.add(g.partner()[0])
        lines.append(f"    {render_generator(g)}")
    for name, rel in p.named_relations():
        lines.append(f"    rel {name}: {rel.render()};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _fraction_pair(a: Fraction) -> List[int]:
    return [a.numerator, a.denominator]


def relation_payload(rel: TreePoly) -> List[List[Any]]:
    return [_fraction_pair(c) + [m.render()] for m, c in rel.terms()]


def generator_payload(g: GeneratorSymbol) -> Dict[str, Any]:
    entry: Dict[str, Any] = {"name": g.symbol.render(), "arity": g.arity}
    if g.kind == UNARY:
        entry["symmetry"] = "trivial"
    elif g.kind in (SYMMETRIC, ANTISYMMETRIC):
        entry["symmetry"] = g.kind
    else:
        entry["action"] = {"(12)": [_fraction_pair(a) + [s.render()] for s, a in g.swap]}
    return entry


def to_json(p: Presentation) -> Dict[str, Any]:
    """JSON 내보내기용 사전 (키 순서 고정)"""
    return {
        "name": p.name,
        "colors": list(p.colors),
        "generators": [generator_payload(g) for g in p.generators],
        "relations": [relation_payload(r) for r in p.relations],
    }


def dumps(payload: Any) -> str:
    """바이트 단위로 안정적인 JSON 문자열"""
    return json.dumps(payload, indent=2, ensure_ascii=False)


__all__ = [
    "render_generator",
    "render_dsl",
    "relation_payload",
    "generator_payload",
    "to_json",
    "dumps",
]

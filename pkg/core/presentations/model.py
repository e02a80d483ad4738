"""
Presentation Model

생성원과 관계로 주어진 오퍼라드 표현 P = T(M)/<R>을 정의합니다.
"""

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from core.exceptions import UnknownSymbolError
from core.trees.poly import TreePoly
from core.trees.symbols import GeneratorSymbol, Signature, Symbol


@dataclass(frozen=True)
class Presentation:
    """
    오퍼라드 표현.

    Attributes:
        name: 표현 이름
        generators: 생성원 (쌍 생성원은 이웃하게 나열)
        relations: 동차 관계 목록 (저장된 그대로, S_n 폐포는 따로 계산)
        relation_names: 관계 이름 (기본값 r1..rk)
        colors: 색 집합 Ω (호환 구성에서만 사용)
    """

    name: str
    generators: Tuple[GeneratorSymbol, ...]
    relations: Tuple[TreePoly, ...] = ()
    relation_names: Tuple[str, ...] = ()
    colors: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relations", tuple(self.relations))
        object.__setattr__(self, "colors", tuple(self.colors))
        names = tuple(self.relation_names) or tuple(
            f"r{i}" for i in range(1, len(self.relations) + 1)
        )
        if len(names) != len(self.relations):
            raise ValueError(f"관계 이름 수 {len(names)}가 관계 수 {len(self.relations)}와 다릅니다")
        if len(set(names)) != len(names):
            raise ValueError(f"관계 이름이 중복되었습니다: {', '.join(names)}")
        object.__setattr__(self, "relation_names", names)
        declared = {g.symbol for g in self.generators}
        for rel_name, rel in zip(names, self.relations):
            for symbol in rel.symbols():
                if symbol not in declared:
                    raise UnknownSymbolError(f"관계 {rel_name}에 미선언 생성원 {symbol}이 있습니다")

    @cached_property
    def signature(self) -> Signature:
        return Signature(self.generators)

    def generator(self, symbol: Symbol) -> GeneratorSymbol:
        return self.signature[symbol]

    def find_generator(self, text: str) -> GeneratorSymbol:
        """'m@c0' 형식의 이름으로 생성원을 찾습니다."""
        for g in self.generators:
            if g.symbol.render() == text:
                return g
        raise UnknownSymbolError(f"{self.name}에 생성원 {text}이(가) 없습니다")

    def named_relations(self) -> List[Tuple[str, TreePoly]]:
        return list(zip(self.relation_names, self.relations))

    def relation(self, name: str) -> TreePoly:
        for rel_name, rel in self.named_relations():
            if rel_name == name:
                return rel
        raise UnknownSymbolError(f"{self.name}에 관계 {name}이(가) 없습니다")

    def components(self) -> List[Tuple[int, int]]:
        """관계가 있는 (항수, 가중치) 성분 목록 (정렬됨)"""
        return sorted({(r.arity, r.weight) for r in self.relations})

    def generator_arities(self) -> Set[int]:
        return {g.arity for g in self.generators}

    def is_quadratic(self) -> bool:
        return all(r.weight == 2 for r in self.relations)

    def is_binary(self) -> bool:
        return self.generator_arities() <= {2}

    def is_unary_binary(self) -> bool:
        return self.generator_arities() <= {1, 2}

    def with_relations(
        self,
        relations: Sequence[TreePoly],
        names: Optional[Sequence[str]] = None,
        name: Optional[str] = None,
    ) -> "Presentation":
        return replace(
            self,
            name=name or self.name,
            relations=tuple(relations),
            relation_names=tuple(names or ()),
        )

    def renamed(
        self, fn: Callable[[Symbol], Symbol], name: Optional[str] = None, colors=None
    ) -> "Presentation":
        """
        생성원 기호를 일괄 치환한 표현.

        fn은 단사여야 하며 모양과 잎 순서는 그대로이므로 관계는 정규형을 유지합니다.
        """
        mapping = {}
        for g in self.generators:
            mapping[g.symbol] = fn(g.symbol)
            for s, _ in g.swap:
                mapping.setdefault(s, fn(s))
        return Presentation(
            name=name or self.name,
            generators=tuple(g.renamed(mapping) for g in self.generators),
            relations=tuple(r.map_symbols(lambda s: mapping[s]) for r in self.relations),
            relation_names=self.relation_names,
            colors=self.colors if colors is None else tuple(colors),
        )

    def dimensions(self) -> Dict[str, int]:
        return {"generators": len(self.generators), "relations": len(self.relations)}

    def __str__(self) -> str:
        return f"Presentation({self.name}: 생성원 {len(self.generators)}개, 관계 {len(self.relations)}개)"


def union_presentations(
    a: Presentation, b: Presentation, name: Optional[str] = None
) -> Presentation:
    """
    같은 생성원 위의 두 표현의 관계를 합칩니다.

    두 매칭 구성을 합쳐 다중 매칭 표현을 만드는 데 씁니다.
    이미 있는 관계와 같은 다항식은 한 번만 남깁니다.

    Raises:
        ValueError: 생성원이 다를 때
    """
    if {g.symbol: g for g in a.generators} != {g.symbol: g for g in b.generators}:
        raise ValueError(f"생성원이 다른 표현은 합칠 수 없습니다: {a.name}, {b.name}")
    relations = list(a.relations)
    names = list(a.relation_names)
    seen = set(relations)
    for rel_name, rel in b.named_relations():
        if rel in seen:
            continue
        seen.add(rel)
        label = rel_name
        while label in names:
            label = f"{label}b"
        relations.append(rel)
        names.append(label)
    return Presentation(
        name=name or f"{a.name}+{b.name}",
        generators=a.generators,
        relations=tuple(relations),
        relation_names=tuple(names),
        colors=a.colors or b.colors,
    )


__all__ = ["Presentation", "union_presentations"]

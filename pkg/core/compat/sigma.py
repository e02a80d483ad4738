"""
Sigma Choices

매칭 호환 구성의 엽층 선택 σ⃗를 (관계, 유형)별로 보관하고,
CLI 문자열 ``r1:c(1,1)=(12),e; r3:c(1,1)=e,(12)``을 해석합니다.

지정되지 않은 (관계, 유형)은 항등 순열 조합(표준 엽층)을 뜻합니다.
"""

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

import pyparsing as pp

from core.exceptions import MalformedSigmaError
from core.polarization.compositions import WeakComposition, weak_compositions
from core.presentations.model import Presentation
from core.trees.permutations import Perm, from_cycles, identity, is_identity, to_cycles
from utils.logging import get_logger

logger = get_logger(__name__)

SigmaKey = Tuple[str, Tuple[int, ...]]


@dataclass(frozen=True)
class SigmaChoice:
    """
    (관계 이름, 유형 c) → (σ₁, …, σ_s) 대응.

    Attributes:
        entries: 키 순서로 정렬된 (키, 순열 튜플) 목록
    """

    entries: Tuple[Tuple[SigmaKey, Tuple[Perm, ...]], ...] = ()

    @classmethod
    def identity(cls) -> "SigmaChoice":
        return cls()

    @classmethod
    def from_mapping(cls, mapping: Mapping[SigmaKey, Sequence[Sequence[int]]]) -> "SigmaChoice":
        entries = []
        for (name, values), perms in mapping.items():
            entries.append(((name, tuple(values)), tuple(tuple(p) for p in perms)))
        return cls(tuple(sorted(entries)))

    def normalized(self) -> "SigmaChoice":
        """항등 항목을 뺀 동치 선택"""
        return SigmaChoice(
            tuple(e for e in self.entries if not all(is_identity(p) for p in e[1]))
        )

    def as_dict(self) -> Dict[SigmaKey, Tuple[Perm, ...]]:
        return dict(self.entries)

    def perms(self, name: str, c: WeakComposition, count: int) -> Tuple[Perm, ...]:
        """
        (name, c)에 대한 순열 튜플. 없으면 항등원 count개.
        """
        chosen = self.as_dict().get((name, c.values))
        if chosen is None:
            return tuple(identity(c.multinomial()) for _ in range(count))
        return chosen

    def is_identity(self) -> bool:
        return all(is_identity(p) for _, perms in self.entries for p in perms)

    def render(self) -> str:
        """CLI 형식 문자열 (항등 항목은 생략)"""
        parts = []
        for (name, values), perms in self.entries:
            if all(is_identity(p) for p in perms):
                continue
            c = "(" + ",".join(str(v) for v in values) + ")"
            parts.append(f"{name}:c{c}=" + ",".join(to_cycles(p) for p in perms))
        return "; ".join(parts) or "e"

    def __str__(self) -> str:
        return self.render()


def _sigma_grammar() -> pp.ParserElement:
    LPAR, RPAR, COLON, COMMA, EQUALS, SEMI = map(pp.Suppress, "():,=;")
    name = pp.Regex(r"[A-Za-z_][A-Za-z0-9_.']*")
    integer = pp.Regex(r"\d+").set_parse_action(lambda t: int(t[0]))
    composition = pp.Suppress(pp.Literal("c")) + LPAR + pp.Group(
        integer + pp.ZeroOrMore(COMMA + integer)
    ) + RPAR
    perm = pp.Regex(r"e|id|(?:\([0-9 ,]+\))+")
    entry = pp.Group(
        name + COLON + composition + EQUALS + pp.Group(perm + pp.ZeroOrMore(COMMA + perm))
    )
    return pp.Optional(entry + pp.ZeroOrMore(SEMI + entry)) + pp.Optional(SEMI) + pp.StringEnd()


_GRAMMAR = _sigma_grammar()


def parse_sigma(text: str, p: Presentation, palette: Sequence[str]) -> SigmaChoice:
    """
    ``--sigma`` 문자열을 SigmaChoice로 변환하고 모양을 검증합니다.

    Args:
        text: ``관계:c(유형)=순열,순열; ...`` 형식
        p: 대상 표현
        palette: 색 집합 Ω

    Raises:
        MalformedSigmaError: 문법 오류 또는 모양이 맞지 않을 때
    """
    if not text or not text.strip():
        return SigmaChoice()
    try:
        parsed = _GRAMMAR.parse_string(text.strip(), parse_all=True)
    except pp.ParseBaseException as e:
        raise MalformedSigmaError(f"σ 문자열 {e.col}열: 형식이 잘못되었습니다 ({text!r})") from None
    mapping: Dict[SigmaKey, Tuple[Perm, ...]] = {}
    for name, values, perm_texts in parsed:
        values = tuple(values)
        beta = WeakComposition(values).multinomial()
        try:
            perms = tuple(from_cycles(t, beta) for t in perm_texts)
        except ValueError as e:
            raise MalformedSigmaError(f"{name}:c{values}: {e}") from None
        key = (name, values)
        if key in mapping:
            raise MalformedSigmaError(f"σ 항목이 중복되었습니다: {name}:c{values}")
        mapping[key] = perms
    sigma = SigmaChoice.from_mapping(mapping)
    validate_sigma(p, palette, sigma)
    return sigma.normalized()


def validate_sigma(p: Presentation, palette: Sequence[str], sigma: SigmaChoice) -> None:
    """
    σ가 표현의 관계·유형 구조와 맞는지 검사합니다.

    Raises:
        MalformedSigmaError: 알 수 없는 관계, 잘못된 유형, 순열 개수나 차수 불일치
    """
    for (name, values), perms in sigma.entries:
        if name not in p.relation_names:
            raise MalformedSigmaError(f"{p.name}에 관계 {name}이(가) 없습니다")
        rel = p.relation(name)
        if len(values) != len(palette) or sum(values) != rel.weight:
            raise MalformedSigmaError(
                f"{name}: 유형 {values}는 색 {len(palette)}개, 가중치 {rel.weight}의 약조성이 아닙니다"
            )
        c = WeakComposition(values)
        s = len(rel) - 1
        if len(perms) != s:
            raise MalformedSigmaError(f"{name}:c{c}: 순열 {len(perms)}개가 필요 개수 {s}와 다릅니다")
        beta = c.multinomial()
        for perm in perms:
            if sorted(perm) != list(range(1, beta + 1)):
                raise MalformedSigmaError(f"{name}:c{c}: {perm}은(는) S_{beta}의 원소가 아닙니다")


def sigma_slots(p: Presentation, palette: Sequence[str]) -> List[Tuple[SigmaKey, int, int]]:
    """σ가 정해져야 하는 (키, 순열 개수 s, β) 목록 (관계 선언 순서, 유형 사전순)"""
    slots = []
    for name, rel in p.named_relations():
        s = len(rel) - 1
        for c in weak_compositions(len(palette), rel.weight):
            slots.append(((name, c.values), s, c.multinomial()))
    return slots


def count_matching(p: Presentation, palette: Sequence[str]) -> int:
    """
    매칭 선택의 개수 ∏_r ∏_c (β_c!)^{|Supp r| - 1}.

    대표 관계는 DSL에 선언된 관계들입니다.
    """
    total = 1
    for _, s, beta in sigma_slots(p, palette):
        total *= factorial(beta) ** s
    logger.debug(f"{p.name}: 매칭 선택 {total}개 (색 {len(palette)}개)")
    return total


def enumerate_sigma_choices(p: Presentation, palette: Sequence[str]) -> Iterator[SigmaChoice]:
    """
    모든 SigmaChoice를 결정적 순서로 생성합니다 (항등원이 처음).

    개수는 count_matching과 같습니다.
    """
    slots = sigma_slots(p, palette)
    per_slot = []
    for key, s, beta in slots:
        group = list(permutations(range(1, beta + 1)))
        per_slot.append([(key, combo) for combo in product(group, repeat=s)])
    for choice in product(*per_slot):
        yield SigmaChoice.from_mapping(dict(choice)).normalized()


__all__ = [
    "SigmaKey",
    "SigmaChoice",
    "parse_sigma",
    "validate_sigma",
    "sigma_slots",
    "count_matching",
    "enumerate_sigma_choices",
]

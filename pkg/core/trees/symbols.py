"""
Generator Symbols

생성원 기호, 대칭군 작용, 색 복제(colored copy)를 정의합니다.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from core.exceptions import ArityError, UnknownSymbolError
from core.trees.permutations import is_identity, sign

SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"
PAIR = "pair"
UNARY = "unary"


@dataclass(frozen=True, order=True)
class Symbol:
    """
    장식 기호 (이름 + 선택적 색).

    여러 번 색을 입히면 색 층이 '.'으로 이어집니다 (c0 → c0.c1).
    """

    name: str
    color: str = ""

    def colored(self, color: str) -> "Symbol":
        if not color:
            return self
        return Symbol(self.name, f"{self.color}.{color}" if self.color else color)

    def uncolored(self) -> "Symbol":
        return Symbol(self.name)

    def with_name(self, name: str) -> "Symbol":
        return Symbol(name, self.color)

    def render(self) -> str:
        return f"{self.name}@{self.color}" if self.color else self.name

    def __str__(self) -> str:
        return self.render()


LinearImage = Tuple[Tuple[Symbol, Fraction], ...]


@dataclass(frozen=True)
class GeneratorSymbol:
    """
    생성원 기호.

    Attributes:
        symbol: 장식 기호
        arity: 항수 (1 이상)
        kind: symmetric / antisymmetric / pair / unary
        swap: 2항 생성원에 대한 전치 (12)의 상 (기호의 유리 선형결합)
    """

    symbol: Symbol
    arity: int
    kind: str
    swap: LinearImage = ()

    def __post_init__(self):
        if self.arity < 1:
            raise ArityError(f"항수는 1 이상이어야 합니다: {self.symbol} (항수 {self.arity})")
        if self.arity == 1 and self.kind != UNARY:
            raise ArityError(f"1항 생성원은 자명한 작용만 가집니다: {self.symbol}")
        if self.arity >= 3 and self.kind not in (SYMMETRIC, ANTISYMMETRIC):
            raise ArityError(
                f"3항 이상 생성원은 symmetric/antisymmetric 작용만 지원합니다: {self.symbol}"
            )
        if self.arity == 2 and not self.swap:
            raise ArityError(f"2항 생성원에 전치 작용이 없습니다: {self.symbol}")

    @property
    def name(self) -> str:
        return self.symbol.name

    @property
    def color(self) -> str:
        return self.symbol.color

    def act(self, perm: Sequence[int]) -> LinearImage:
        """
        순열 π에 대한 작용 g·π를 기호의 선형결합으로 반환합니다.

        Raises:
            ArityError: 순열 차수가 항수와 다를 때
        """
        if len(perm) != self.arity:
            raise ArityError(f"{self.symbol}: 순열 차수 {len(perm)} != 항수 {self.arity}")
        if is_identity(perm):
            return ((self.symbol, Fraction(1)),)
        if self.arity == 2:
            return self.swap
        coeff = Fraction(sign(perm)) if self.kind == ANTISYMMETRIC else Fraction(1)
        return ((self.symbol, coeff),)

    def colored(self, color: str) -> "GeneratorSymbol":
        """색 복제. 작용은 그대로, 색만 붙습니다."""
        return GeneratorSymbol(
            symbol=self.symbol.colored(color),
            arity=self.arity,
            kind=self.kind,
            swap=tuple((s.colored(color), c) for s, c in self.swap),
        )

    def renamed(self, mapping: Mapping[Symbol, Symbol]) -> "GeneratorSymbol":
        return GeneratorSymbol(
            symbol=mapping[self.symbol],
            arity=self.arity,
            kind=self.kind,
            swap=tuple((mapping[s], c) for s, c in self.swap),
        )

    def partner(self) -> Tuple[Symbol, Fraction]:
        """2항 쌍 생성원의 상대 기호와 계수 (g·(12) = a·g')"""
        if self.kind != PAIR or len(self.swap) != 1:
            raise ArityError(f"{self.symbol}은(는) 쌍 생성원이 아닙니다")
        return self.swap[0]


def symmetric(name: str, arity: int = 2, color: str = "") -> GeneratorSymbol:
    s = Symbol(name, color)
    swap = ((s, Fraction(1)),) if arity == 2 else ()
    return GeneratorSymbol(s, arity, SYMMETRIC, swap)


def antisymmetric(name: str, arity: int = 2, color: str = "") -> GeneratorSymbol:
    s = Symbol(name, color)
    swap = ((s, Fraction(-1)),) if arity == 2 else ()
    return GeneratorSymbol(s, arity, ANTISYMMETRIC, swap)


def unary(name: str, color: str = "") -> GeneratorSymbol:
    return GeneratorSymbol(Symbol(name, color), 1, UNARY)


def pair(
    name: str, partner_name: str = None, coefficient: Fraction = Fraction(1), color: str = ""
) -> Tuple[GeneratorSymbol, GeneratorSymbol]:
    """
    대칭성이 없는 2항 생성원을 S_2 정칙 표현 쌍 {g, g·(12)}로 만듭니다.

    g·(12) = a·g' 이면 g'·(12) = (1/a)·g 입니다.
    """
    first = Symbol(name, color)
    second = Symbol(partner_name or f"{name}'", color)
    a = Fraction(coefficient)
    return (
        GeneratorSymbol(first, 2, PAIR, ((second, a),)),
        GeneratorSymbol(second, 2, PAIR, ((first, 1 / a),)),
    )


class Signature(Mapping[Symbol, GeneratorSymbol]):
    """기호 → 생성원 사전. 트리 정규화와 작용 계산에 사용합니다."""

    def __init__(self, generators: Iterable[GeneratorSymbol]):
        self._table: Dict[Symbol, GeneratorSymbol] = {}
        for g in generators:
            if g.symbol in self._table:
                raise ArityError(f"생성원이 중복 선언되었습니다: {g.symbol}")
            self._table[g.symbol] = g
        for g in self._table.values():
            for s, _ in g.swap:
                if s not in self._table:
                    raise UnknownSymbolError(f"{g.symbol}의 작용이 미선언 기호 {s}를 가리킵니다")
                if self._table[s].arity != g.arity:
                    raise ArityError(f"{g.symbol}의 작용이 다른 항수의 기호 {s}를 가리킵니다")

    def __getitem__(self, key: Symbol) -> GeneratorSymbol:
        try:
            return self._table[key]
        except KeyError:
            raise UnknownSymbolError(f"알 수 없는 기호: {key}") from None

    def __iter__(self):
        return iter(self._table)

    def __len__(self) -> int:
        return len(self._table)

    def generators(self) -> List[GeneratorSymbol]:
        return list(self._table.values())

    def of_arity(self, arity: int) -> List[GeneratorSymbol]:
        return [g for g in self._table.values() if g.arity == arity]


def colored_generators(
    generators: Sequence[GeneratorSymbol], colors: Sequence[str]
) -> List[GeneratorSymbol]:
    """
    Ω-색 복제 생성원 목록.

    쌍 생성원의 두 원소가 같은 색 안에서 이웃하도록 궤도 단위로 나열합니다.
    """
    result: List[GeneratorSymbol] = []
    for orbit in generator_orbits(generators):
        for color in colors:
            result.extend(g.colored(color) for g in orbit)
    return result


def generator_orbits(generators: Sequence[GeneratorSymbol]) -> List[List[GeneratorSymbol]]:
    """S_2 궤도(쌍 생성원은 두 원소, 나머지는 하나)로 묶습니다."""
    by_symbol = {g.symbol: g for g in generators}
    seen = set()
    orbits: List[List[GeneratorSymbol]] = []
    for g in generators:
        if g.symbol in seen:
            continue
        orbit = [g]
        seen.add(g.symbol)
        if g.kind == PAIR:
            partner = g.partner()[0]
            if partner in by_symbol and partner not in seen:
                orbit.append(by_symbol[partner])
                seen.add(partner)
        orbits.append(orbit)
    return orbits


__all__ = [
    "SYMMETRIC",
    "ANTISYMMETRIC",
    "PAIR",
    "UNARY",
    "Symbol",
    "LinearImage",
    "GeneratorSymbol",
    "Signature",
    "symmetric",
    "antisymmetric",
    "unary",
    "pair",
    "colored_generators",
    "generator_orbits",
]

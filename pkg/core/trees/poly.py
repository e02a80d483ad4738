"""
Tree Polynomials

트리 단항식의 유리수 선형결합(TreePoly)을 정의합니다.
"""

from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from core.exceptions import ArityError, WeightError
from core.trees.monomial import TreeMonomial
from core.trees.symbols import Symbol

Coefficient = Union[int, Fraction]


class TreePoly(Mapping[TreeMonomial, Fraction]):
    """
    동차 트리 다항식.

    0 계수는 저장하지 않으며 모든 단항식은 같은 항수와 가중치를 가집니다.
    생성 후에는 변경되지 않습니다.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[TreeMonomial, Coefficient], None] = None):
        cleaned: Dict[TreeMonomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            value = Fraction(coeff)
            if value:
                cleaned[mono] = value
        if cleaned:
            first = next(iter(cleaned))
            for mono in cleaned:
                if mono.arity != first.arity:
                    raise ArityError(
                        f"항수가 섞인 다항식입니다: {first} (항수 {first.arity}), "
                        f"{mono} (항수 {mono.arity})"
                    )
                if mono.weight != first.weight:
                    raise WeightError(
                        f"가중치가 섞인 다항식입니다: {first} (가중치 {first.weight}), "
                        f"{mono} (가중치 {mono.weight})"
                    )
        self._terms = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def monomial(cls, mono: TreeMonomial, coeff: Coefficient = 1) -> "TreePoly":
        return cls({mono: coeff})

    @classmethod
    def accumulate(cls, pairs: Iterable[Tuple[TreeMonomial, Coefficient]]) -> "TreePoly":
        """(단항식, 계수) 쌍을 합산해 다항식을 만듭니다."""
        acc: Dict[TreeMonomial, Fraction] = {}
        for mono, coeff in pairs:
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(coeff)
        return cls(acc)

    def __getitem__(self, mono: TreeMonomial) -> Fraction:
        return self._terms[mono]

    def __iter__(self) -> Iterator[TreeMonomial]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, mono: TreeMonomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> List[TreeMonomial]:
        """결정적 순서로 정렬된 지지 집합"""
        return sorted(self._terms, key=lambda m: m.sort_key)

    def terms(self) -> List[Tuple[TreeMonomial, Fraction]]:
        return [(m, self._terms[m]) for m in self.support()]

    @property
    def arity(self) -> Optional[int]:
        return next(iter(self._terms)).arity if self._terms else None

    @property
    def weight(self) -> Optional[int]:
        return next(iter(self._terms)).weight if self._terms else None

    def symbols(self) -> set:
        return {s for m in self._terms for s in m.decorations}

    def __add__(self, other: "TreePoly") -> "TreePoly":
        if not isinstance(other, TreePoly):
            return NotImplemented
        return TreePoly.accumulate(list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: "TreePoly") -> "TreePoly":
        if not isinstance(other, TreePoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "TreePoly":
        return TreePoly({m: -c for m, c in self._terms.items()})

    def __mul__(self, scalar: Coefficient) -> "TreePoly":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return TreePoly({m: c * scalar for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TreePoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def map_symbols(self, fn: Callable[[Symbol], Symbol]) -> "TreePoly":
        """
        장식 기호를 일괄 치환합니다.

        모양과 잎 순서가 유지되므로 결과도 셔플 정규형입니다.
        """
        return TreePoly.accumulate((m.with_symbols(fn), c) for m, c in self._terms.items())

    def normalized(self) -> "TreePoly":
        """첫 단항식(저장 순서)의 계수가 1이 되도록 스케일링합니다."""
        if not self._terms:
            return self
        lead = self._terms[self.support()[0]]
        return self * (1 / lead)

    def render(self) -> str:
        """'m(m(1,2),3) - m(1,m(2,3))' 형식의 텍스트"""
        if not self._terms:
            return "0"
        parts: List[str] = []
        for i, (mono, coeff) in enumerate(self.terms()):
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            body = mono.render() if magnitude == 1 else f"{magnitude}*{mono.render()}"
            if i == 0:
                parts.append(f"-{body}" if sign == "-" else body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"TreePoly({self.render()})"


ZERO = TreePoly()


__all__ = ["TreePoly", "Coefficient", "ZERO"]

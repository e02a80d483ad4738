"""
Polynomial Polarization

동차 다항식의 준편극, 엽층(foliation), 통합 엽층을 다룹니다.

변수 x_i의 j번째 복사본 x_i^(j)를 문자 (i, j)로 쓰고, 단항식은 문자의 순서 있는
단어로 저장합니다. x^(1)x^(2)와 x^(2)x^(1)을 구별해야 엽층을 만들 수 있기 때문입니다.
복사본 번호 0은 편극 전 변수를 뜻합니다.
"""

from fractions import Fraction
from itertools import permutations, product
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import sympy
from sympy.utilities.iterables import multiset_permutations

from core.exceptions import WeightError
from core.linalg import RowSpace
from core.polarization.compositions import WeakComposition, weak_compositions
from utils.logging import get_logger

logger = get_logger(__name__)

Letter = Tuple[int, int]
Word = Tuple[Letter, ...]


class OrderedMonomialPoly:
    """
    순서 있는 단항식(단어)의 유리수 선형결합.

    모든 단어의 길이는 같아야 합니다 (동차).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, object] = None):
        cleaned: Dict[Word, Fraction] = {}
        for word, coeff in (terms or {}).items():
            value = Fraction(coeff)
            if value:
                cleaned[tuple(tuple(letter) for letter in word)] = value
        degrees = {len(w) for w in cleaned}
        if len(degrees) > 1:
            raise WeightError(f"동차가 아닌 다항식입니다: 차수 {sorted(degrees)}")
        self._terms = cleaned

    @classmethod
    def from_commutative(cls, terms: Mapping[Tuple[int, ...], object]) -> "OrderedMonomialPoly":
        """
        {(1, 1): 2, (1, 2): 3, (2, 2): 4} → 2x₁² + 3x₁x₂ + 4x₂²

        변수 인덱스 튜플은 정렬된 단어로 저장됩니다.
        """
        return cls({tuple((i, 0) for i in sorted(key)): c for key, c in terms.items()})

    @property
    def degree(self) -> int:
        return len(next(iter(self._terms))) if self._terms else 0

    def items(self) -> List[Tuple[Word, Fraction]]:
        return sorted(self._terms.items())

    def words(self) -> List[Word]:
        return sorted(self._terms)

    def coefficient(self, word: Word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def as_dict(self) -> Dict[Word, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "OrderedMonomialPoly") -> "OrderedMonomialPoly":
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, Fraction(0)) + c
        return OrderedMonomialPoly(acc)

    def __sub__(self, other: "OrderedMonomialPoly") -> "OrderedMonomialPoly":
        return self + other * -1

    def __mul__(self, scalar) -> "OrderedMonomialPoly":
        return OrderedMonomialPoly({w: c * scalar for w, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderedMonomialPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def render(self) -> str:
        if not self._terms:
            return "0"

        def letter(l: Letter) -> str:
            return f"x{l[0]}" if l[1] == 0 else f"x{l[0]}^({l[1]})"

        parts = []
        for i, (word, coeff) in enumerate(self.items()):
            body = "".join(letter(l) for l in word)
            magnitude = abs(coeff)
            text = body if magnitude == 1 else f"{magnitude}*{body}"
            if i == 0:
                parts.append(f"-{text}" if coeff < 0 else text)
            else:
                parts.append(f"{'-' if coeff < 0 else '+'} {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"OrderedMonomialPoly({self.render()})"


def _copy_words(c: WeakComposition) -> List[Tuple[int, ...]]:
    """유형 c의 복사본 번호 단어 (1부터, 사전순)"""
    return [tuple(i + 1 for i in w) for w in multiset_permutations(c.color_word())]


def _attach(word: Word, copies: Sequence[int]) -> Word:
    return tuple((var, copy) for (var, _), copy in zip(word, copies))


def poly_lifts(word: Word, c: WeakComposition) -> List[Word]:
    """단어 하나의 유형 c 리프트 (사전순)"""
    if len(word) != c.weight:
        raise WeightError(f"단항식 차수 {len(word)}가 약조성 합 {c.weight}와 다릅니다")
    if c.weight == 0:
        return [word]
    return [_attach(word, copies) for copies in _copy_words(c)]


def poly_quasipolarize(
    f: OrderedMonomialPoly, copies: int, c: WeakComposition
) -> OrderedMonomialPoly:
    """
    f(λ₁x⁽¹⁾ + … + λ_k x⁽ᵏ⁾)에서 ∏ λᵢ^{cᵢ}의 계수.

    단어별로 계산하므로 복사본 순서가 다른 단항식은 구별됩니다.

    Raises:
        WeightError: 차수가 맞지 않을 때
    """
    if c.parts != copies:
        raise ValueError(f"약조성 길이 {c.parts}가 복사본 수 {copies}와 다릅니다")
    if not f.is_zero() and f.degree != c.weight:
        raise WeightError(f"다항식 차수 {f.degree}가 약조성 합 {c.weight}와 다릅니다")
    acc: Dict[Word, Fraction] = {}
    for word, coeff in f.items():
        for lifted in poly_lifts(word, c):
            acc[lifted] = acc.get(lifted, Fraction(0)) + coeff
    return OrderedMonomialPoly(acc)


def poly_restitute(g: OrderedMonomialPoly) -> OrderedMonomialPoly:
    """복사본을 지우고 가환 단항식으로 모읍니다."""
    acc: Dict[Word, Fraction] = {}
    for word, coeff in g.items():
        key = tuple(sorted((var, 0) for var, _ in word))
        acc[key] = acc.get(key, Fraction(0)) + coeff
    return OrderedMonomialPoly(acc)


def _standard_lifts(
    f: OrderedMonomialPoly, c: WeakComposition
) -> List[Tuple[Fraction, List[Word]]]:
    return [(coeff, poly_lifts(word, c)) for word, coeff in f.items()]


def poly_foliation(
    f: OrderedMonomialPoly, c: WeakComposition, sigmas: Sequence[Sequence[int]]
) -> List[OrderedMonomialPoly]:
    """
    σ⃗ = (σ₁..σ_s)로 정해지는 엽층 하나.

    j번째 조각은 α₀q₀^{L₀[j]} + Σᵢ αᵢqᵢ^{Lᵢ[σᵢ(j)]} 입니다.
    """
    lifted = _standard_lifts(f, c)
    if len(sigmas) != max(len(lifted) - 1, 0):
        raise ValueError(f"순열 개수 {len(sigmas)}가 s = {len(lifted) - 1}과 다릅니다")
    beta = c.multinomial()
    parts: List[OrderedMonomialPoly] = []
    for j in range(beta):
        acc: Dict[Word, Fraction] = {}
        for i, (coeff, lifts) in enumerate(lifted):
            k = j if i == 0 else sigmas[i - 1][j] - 1
            acc[lifts[k]] = acc.get(lifts[k], Fraction(0)) + coeff
        parts.append(OrderedMonomialPoly(acc))
    return parts


def poly_foliations(f: OrderedMonomialPoly, c: WeakComposition) -> List[List[OrderedMonomialPoly]]:
    """
    모든 엽층 ((β!)^s 개).

    σ⃗를 S_β^s의 사전순으로 나열하며 항등원 조합(표준 엽층)이 처음입니다.
    """
    beta = c.multinomial()
    s = max(len(f) - 1, 0)
    group = list(permutations(range(1, beta + 1)))
    result = [poly_foliation(f, c, sigmas) for sigmas in product(group, repeat=s)]
    logger.debug(f"엽층 {len(result)}개 (β={beta}, s={s})")
    return result


def poly_unified_foliation(
    f: OrderedMonomialPoly, c: WeakComposition, base: int = 0
) -> List[OrderedMonomialPoly]:
    """
    엽층 하나와 리프트 차이 qᵢ^{Lᵢ[0]} − qᵢ^{Lᵢ[j']}를 모두 합친 관계계.

    생성 공간은 기준 엽층(base)의 선택과 무관합니다.
    """
    foliation = poly_foliations(f, c)[base]
    differences: List[OrderedMonomialPoly] = []
    for _, lifts in _standard_lifts(f, c):
        for other in lifts[1:]:
            differences.append(OrderedMonomialPoly({lifts[0]: 1, other: -1}))
    return foliation + differences


def poly_span(polys: Iterable[OrderedMonomialPoly]) -> RowSpace:
    return RowSpace(p.as_dict() for p in polys)


def poly_polarization_family(
    f: OrderedMonomialPoly, copies: int
) -> List[Tuple[WeakComposition, OrderedMonomialPoly]]:
    return [(c, poly_quasipolarize(f, copies, c)) for c in weak_compositions(copies, f.degree)]


def poly_full_polarization(f: OrderedMonomialPoly) -> OrderedMonomialPoly:
    """k = m, c = (1,…,1)인 완전 편극 F"""
    m = f.degree
    return poly_quasipolarize(f, m, WeakComposition((1,) * m))


def _sympy_letter(letter: Letter) -> sympy.Symbol:
    var, copy = letter
    return sympy.Symbol(f"x{var}" if copy == 0 else f"x{var}_{copy}")


def to_sympy(g: OrderedMonomialPoly) -> sympy.Expr:
    """가환 sympy 식으로 변환합니다 (복사본은 서로 다른 기호)."""
    total = sympy.Integer(0)
    for word, coeff in g.items():
        total += sympy.Rational(coeff.numerator, coeff.denominator) * sympy.Mul(
            *[_sympy_letter(l) for l in word]
        )
    return sympy.expand(total)


def poly_evaluate(g: OrderedMonomialPoly, values: Mapping[Letter, sympy.Expr]) -> sympy.Expr:
    """문자마다 값을 대입해 가환 식으로 계산합니다."""
    total = sympy.Integer(0)
    for word, coeff in g.items():
        total += sympy.Rational(coeff.numerator, coeff.denominator) * sympy.Mul(
            *[values[l] for l in word]
        )
    return sympy.expand(total)


def poly_polarization_expand(
    f: OrderedMonomialPoly, copies: int
) -> Dict[Tuple[int, ...], sympy.Expr]:
    """
    f(λ₁x⁽¹⁾ + … + λ_k x⁽ᵏ⁾)를 sympy로 직접 전개해 λ 단항식별 계수를 구합니다.

    poly_quasipolarize의 독립 검산용입니다.
    """
    lambdas = sympy.symbols(f"lambda_0:{copies}")
    substitution = {}
    variables = sorted({var for word in f.words() for var, _ in word})
    for var in variables:
        substitution[_sympy_letter((var, 0))] = sum(
            lambdas[j] * _sympy_letter((var, j + 1)) for j in range(copies)
        )
    expanded = sympy.expand(to_sympy(f).subs(substitution, simultaneous=True))
    poly = sympy.Poly(expanded, *lambdas)
    return {tuple(monom): sympy.expand(coeff) for monom, coeff in poly.terms()}


__all__ = [
    "Letter",
    "Word",
    "OrderedMonomialPoly",
    "poly_lifts",
    "poly_quasipolarize",
    "poly_restitute",
    "poly_foliation",
    "poly_foliations",
    "poly_unified_foliation",
    "poly_span",
    "poly_polarization_family",
    "poly_full_polarization",
    "to_sympy",
    "poly_evaluate",
    "poly_polarization_expand",
]

"""
Slot Frame

항수 3, 가중치 2 성분을 세 잉여류 슬롯의 틀로 표현합니다.

슬롯 (a,b,c)의 틀 원소는 F_(a,b,c)(x, y) = x(y(a,b),c) 이며 슬롯은
(1,2,3), (2,3,1), (3,1,2) 세 가지입니다. 정규 단항식은 작용으로 틀에 옮깁니다::

    x(y(1,2),3) = F_(1,2,3)(x, y)
    x(y(1,3),2) = Σ_z a_{y,z} F_(3,1,2)(x, z)      (y·(12) = Σ a_{y,z} z)
    x(1,y(2,3)) = Σ_z a_{x,z} F_(2,3,1)(z, y)
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Dict, List, Mapping, Sequence, Tuple

from core.exceptions import UnsupportedPresentationError
from core.linalg import Matrix, solve
from core.presentations.model import Presentation
from core.trees.monomial import Node, TreeMonomial
from core.trees.operations import canonicalize, enumerate_basis, poly_from_vector
from core.trees.poly import TreePoly
from core.trees.symbols import (
    ANTISYMMETRIC,
    PAIR,
    SYMMETRIC,
    GeneratorSymbol,
    Signature,
    Symbol,
    generator_orbits,
)
from utils.logging import get_logger

logger = get_logger(__name__)

Slot = Tuple[int, int, int]
SLOTS: Tuple[Slot, ...] = ((1, 2, 3), (2, 3, 1), (3, 1, 2))

# (슬롯, 바깥 기호, 안쪽 기호) → 계수
FrameVector = Dict[Tuple[Slot, Symbol, Symbol], Fraction]
# (M 단항식, N 단항식) → 계수
PairVector = Dict[Tuple[TreeMonomial, TreeMonomial], Fraction]


def check_binary_quadratic(p: Presentation) -> None:
    """
    Raises:
        UnsupportedPresentationError: 2항이 아닌 생성원이나 이차가 아닌 관계가 있을 때
    """
    if not p.is_binary():
        raise UnsupportedPresentationError(
            f"{p.name}: 마닌 곱은 2항 생성원만 지원합니다 (항수 {sorted(p.generator_arities())})"
        )
    if not p.is_quadratic():
        raise UnsupportedPresentationError(f"{p.name}: 이차가 아닌 관계가 있습니다")


def frame_element(slot: Slot, outer: Symbol, inner: Symbol, signature: Mapping) -> TreePoly:
    """F_slot(outer, inner)의 정규형"""
    if slot not in SLOTS:
        raise UnsupportedPresentationError(f"슬롯 {slot}은(는) 잉여류 대표가 아닙니다")
    a, b, c = slot
    return canonicalize(Node(outer, (Node(inner, (a, b)), c)), signature)


def frame_coordinates(f: TreePoly, signature: Mapping) -> FrameVector:
    """
    항수 3, 가중치 2 다항식의 틀 좌표.

    Raises:
        UnsupportedPresentationError: 2항-2항 단항식이 아닌 항이 있을 때
    """
    out: FrameVector = {}

    def add(key, value):
        total = out.get(key, Fraction(0)) + value
        if total:
            out[key] = total
        else:
            out.pop(key, None)

    for mono, coeff in f.items():
        root = mono.root
        if mono.arity != 3 or mono.weight != 2 or len(root.children) != 2:
            raise UnsupportedPresentationError(f"틀로 옮길 수 없는 단항식입니다: {mono}")
        first, second = root.children
        if isinstance(second, Node):
            # x(1, y(2,3))
            for z, a in signature[root.symbol].swap:
                add(((2, 3, 1), z, second.symbol), coeff * a)
        elif mono.leaves == (1, 2, 3):
            add(((1, 2, 3), root.symbol, first.symbol), coeff)
        else:
            # x(y(1,3), 2)
            for z, a in signature[first.symbol].swap:
                add(((3, 1, 2), root.symbol, z), coeff * a)
    return out


def frame_polynomial(vector: FrameVector, signature: Mapping) -> TreePoly:
    """틀 좌표 → 정규형 다항식"""
    total = TreePoly()
    for (slot, outer, inner), coeff in vector.items():
        total = total + frame_element(slot, outer, inner, signature) * coeff
    return total


@dataclass(frozen=True)
class ProductGenerator:
    """
    텐서 생성원 μ⊗ν.

    Attributes:
        generator: 텐서 작용을 가진 생성원 (이름 'μ.ν', 색은 두 색을 '.'으로 이음)
        left: P의 생성원 μ
        right: Q의 생성원 ν
    """

    generator: GeneratorSymbol
    left: Symbol
    right: Symbol

    @property
    def symbol(self) -> Symbol:
        return self.generator.symbol


def tensor_symbol(left: Symbol, right: Symbol) -> Symbol:
    color = ".".join(c for c in (left.color, right.color) if c)
    return Symbol(f"{left.name}.{right.name}", color)


def _tensor_generator(
    g: GeneratorSymbol, h: GeneratorSymbol, twisted: bool
) -> GeneratorSymbol:
    symbol = tensor_symbol(g.symbol, h.symbol)
    epsilon = -1 if twisted else 1
    swap = tuple(
        (tensor_symbol(z, w), epsilon * a * b) for (z, a), (w, b) in product(g.swap, h.swap)
    )
    if len(swap) != 1:
        raise UnsupportedPresentationError(f"{symbol}: 전치 작용이 한 항이 아닙니다")
    image, coeff = swap[0]
    if image == symbol:
        kind = SYMMETRIC if coeff == 1 else ANTISYMMETRIC
    else:
        kind = PAIR
    return GeneratorSymbol(symbol, 2, kind, swap)


@dataclass(frozen=True)
class TensorFrame:
    """
    두 2항 이차 표현 P, Q의 텐서 생성원과 틀 계산 문맥.

    twisted이면 (μ⊗ν)·τ = sgn(τ)(μ·τ ⊗ ν·τ) 입니다 (검은 곱).
    """

    left: Presentation
    right: Presentation
    twisted: bool
    factors: Tuple[ProductGenerator, ...]

    @cached_property
    def generators(self) -> Tuple[GeneratorSymbol, ...]:
        return tuple(f.generator for f in self.factors)

    @cached_property
    def signature(self) -> Signature:
        return Signature(self.generators)

    @cached_property
    def _by_pair(self) -> Dict[Tuple[Symbol, Symbol], Symbol]:
        return {(f.left, f.right): f.symbol for f in self.factors}

    @cached_property
    def _by_symbol(self) -> Dict[Symbol, ProductGenerator]:
        return {f.symbol: f for f in self.factors}

    def tensor(self, left: Symbol, right: Symbol) -> Symbol:
        return self._by_pair[(left, right)]

    def factor(self, symbol: Symbol) -> ProductGenerator:
        return self._by_symbol[symbol]

    @property
    def colors(self) -> Tuple[str, ...]:
        if self.left.colors and self.right.colors:
            return tuple(f"{a}.{b}" for a in self.left.colors for b in self.right.colors)
        return self.left.colors or self.right.colors


def tensor_frame(p: Presentation, q: Presentation, twisted: bool) -> TensorFrame:
    """
    텐서 생성원 M⊗N을 만듭니다. 쌍 생성원의 두 원소가 이웃하도록 궤도 단위로 나열합니다.

    Raises:
        UnsupportedPresentationError: 2항 이차 표현이 아닐 때
    """
    check_binary_quadratic(p)
    check_binary_quadratic(q)
    raw: List[ProductGenerator] = [
        ProductGenerator(_tensor_generator(g, h, twisted), g.symbol, h.symbol)
        for g in p.generators
        for h in q.generators
    ]
    by_symbol = {f.symbol: f for f in raw}
    ordered = [
        by_symbol[g.symbol]
        for orbit in generator_orbits([f.generator for f in raw])
        for g in orbit
    ]
    return TensorFrame(p, q, twisted, tuple(ordered))


def phi_embed(f: TreePoly, frame: TensorFrame) -> PairVector:
    """
    Φ: T(M⊗N)(3) → T(M)(3) ⊗ T(N)(3).

    F_s(μ₁⊗ν₁, μ₂⊗ν₂) ↦ F_s(μ₁, μ₂) ⊗ F_s(ν₁, ν₂) 를 각 인수의 정규 단항식 좌표로 씁니다.

    Raises:
        UnsupportedPresentationError: 항수 3, 가중치 2의 2항 다항식이 아닐 때
    """
    out: PairVector = {}
    for (slot, outer, inner), coeff in frame_coordinates(f, frame.signature).items():
        top, bottom = frame.factor(outer), frame.factor(inner)
        left = frame_element(slot, top.left, bottom.left, frame.left.signature)
        right = frame_element(slot, top.right, bottom.right, frame.right.signature)
        for (m, a), (n, b) in product(left.items(), right.items()):
            key = (m, n)
            total = out.get(key, Fraction(0)) + coeff * a * b
            if total:
                out[key] = total
            else:
                out.pop(key, None)
    return out


def phi_matrix(
    frame: TensorFrame,
) -> Tuple[List[TreeMonomial], List[Tuple[TreeMonomial, TreeMonomial]], Matrix]:
    """
    Φ의 행렬 (행: (M 단항식, N 단항식) 쌍, 열: T(M⊗N)(3) 기저).

    Returns:
        (열 기저, 행 키, 행렬)
    """
    basis = enumerate_basis(frame.generators, 3, 2)
    columns = [phi_embed(TreePoly.monomial(t), frame) for t in basis]
    keys = sorted(
        {key for col in columns for key in col}, key=lambda k: (k[0].sort_key, k[1].sort_key)
    )
    rows = [[col.get(key, 0) for col in columns] for key in keys]
    return basis, keys, Matrix(rows, cols=len(basis))


def phi_preimage(vector: PairVector, frame: TensorFrame) -> TreePoly:
    """
    Φ(f) = vector 인 f를 구합니다.

    Raises:
        ValueError: vector가 Φ의 상에 없을 때
    """
    basis, keys, matrix = phi_matrix(frame)
    index = set(keys)
    outside = [key for key, c in vector.items() if c and key not in index]
    if outside:
        raise ValueError(f"Φ의 상에 없는 좌표가 있습니다: {outside[0][0]} ⊗ {outside[0][1]}")
    solution = solve(matrix, [vector.get(key, 0) for key in keys])
    return poly_from_vector(solution, basis)


def slot_product(r: FrameVector, s: FrameVector, frame: TensorFrame) -> FrameVector:
    """슬롯별 곱 Σ_s κ^r_s κ^s_s F_s(μ₁⊗ν₁, μ₂⊗ν₂)"""
    by_slot: Dict[Slot, List[Tuple[Symbol, Symbol, Fraction]]] = {}
    for (slot, outer, inner), coeff in s.items():
        by_slot.setdefault(slot, []).append((outer, inner, coeff))
    out: FrameVector = {}
    for (slot, x1, x2), a in r.items():
        for y1, y2, b in by_slot.get(slot, ()):
            key = (slot, frame.tensor(x1, y1), frame.tensor(x2, y2))
            total = out.get(key, Fraction(0)) + a * b
            if total:
                out[key] = total
            else:
                out.pop(key, None)
    return out


def render_pair_vector(vector: PairVector) -> List[Tuple[str, str, str]]:
    return [(m.render(), n.render(), str(c)) for (m, n), c in sorted(vector.items(), key=str)]


__all__ = [
    "Slot",
    "SLOTS",
    "FrameVector",
    "PairVector",
    "check_binary_quadratic",
    "frame_element",
    "frame_coordinates",
    "frame_polynomial",
    "ProductGenerator",
    "tensor_symbol",
    "TensorFrame",
    "tensor_frame",
    "phi_embed",
    "phi_matrix",
    "phi_preimage",
    "slot_product",
    "render_pair_vector",
]

"""
Manin Products

2항 이차 표현의 마닌 검은 곱 P●Q와 흰 곱 P○Q를 계산합니다.
"""

from fractions import Fraction
from itertools import product
from typing import Dict, List

from core.linalg import Matrix, RowSpace, kernel_basis, orthogonal_complement
from core.manin.frame import (
    TensorFrame,
    frame_coordinates,
    frame_polynomial,
    phi_embed,
    slot_product,
    tensor_frame,
)
from core.presentations.closure import (
    closed_relations,
    closure_representatives,
    relation_component,
)
from core.presentations.model import Presentation
from core.trees.monomial import TreeMonomial
from core.trees.operations import enumerate_basis, poly_from_vector
from core.trees.poly import TreePoly
from utils.logging import get_logger

logger = get_logger(__name__)


def _presentation(name: str, frame: TensorFrame, polys: List[TreePoly]) -> Presentation:
    relations = closure_representatives(polys, frame.signature)
    logger.info(f"{name}: 생성원 {len(frame.generators)}개, 관계 대표 {len(relations)}개")
    return Presentation(name, frame.generators, relations, (), frame.colors)


def black_relations(frame: TensorFrame) -> List[TreePoly]:
    """R●S: R, S 기저 쌍마다 슬롯별 κ 곱"""
    left = [frame_coordinates(r, frame.left.signature) for r in closed_relations(frame.left, 3, 2)]
    right = [
        frame_coordinates(s, frame.right.signature) for s in closed_relations(frame.right, 3, 2)
    ]
    space: RowSpace = RowSpace()
    out: List[TreePoly] = []
    for kr, ks in product(left, right):
        f = frame_polynomial(slot_product(kr, ks, frame), frame.signature)
        if space.add(f):
            out.append(f)
    return out


def black_product(p: Presentation, q: Presentation) -> Presentation:
    """
    마닌 검은 곱 P●Q.

    생성원은 부호로 꼬인 텐서 M⊗N⊗sgn, 관계는 R과 S의 틀 좌표를 슬롯별로 곱한 것입니다.

    Raises:
        UnsupportedPresentationError: 2항 이차 표현이 아닐 때
    """
    frame = tensor_frame(p, q, twisted=True)
    return _presentation(f"{p.name}_black_{q.name}", frame, black_relations(frame))


def annihilator(p: Presentation) -> List[Dict[TreeMonomial, Fraction]]:
    """표준 내적에 대한 R(3)^0 의 기저 (단항식 → 계수)"""
    basis = enumerate_basis(p.generators, 3, 2)
    vectors = relation_component(p, 3, 2)
    complement = orthogonal_complement(vectors, Matrix.identity(len(basis)))
    return [{m: c for m, c in zip(basis, v) if c} for v in complement]


def white_relations(frame: TensorFrame) -> List[TreePoly]:
    """
    Φ⁻¹(R ⊗ T(N)(3) + T(M)(3) ⊗ S).

    R⊗T + T⊗S 는 R^0 ⊗ S^0 의 소멸자이므로 모든 a ∈ R^0, b ∈ S^0 에 대해
    ⟨a⊗b, Φ(f)⟩ = 0 인 f의 공간을 구합니다.
    """
    basis = enumerate_basis(frame.generators, 3, 2)
    columns = [phi_embed(TreePoly.monomial(t), frame) for t in basis]
    rows = []
    for a, b in product(annihilator(frame.left), annihilator(frame.right)):
        rows.append(
            [
                sum(
                    (a.get(m, 0) * b.get(n, 0) * c for (m, n), c in col.items()),
                    Fraction(0),
                )
                for col in columns
            ]
        )
    if rows:
        kernel = kernel_basis(Matrix(rows, cols=len(basis)))
    else:
        size = len(basis)
        kernel = [tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size)]
    logger.debug(f"흰 곱 제약 {len(rows)}개, 관계 공간 차원 {len(kernel)} / {len(basis)}")
    return [poly_from_vector(v, basis) for v in kernel]


def white_product(p: Presentation, q: Presentation) -> Presentation:
    """
    마닌 흰 곱 P○Q.

    생성원은 텐서 M⊗N (꼬임 없음), 관계는 Φ에 대한 R⊗T(N)(3) + T(M)(3)⊗S 의 역상입니다.

    Raises:
        UnsupportedPresentationError: 2항 이차 표현이 아닐 때
    """
    frame = tensor_frame(p, q, twisted=False)
    return _presentation(f"{p.name}_white_{q.name}", frame, white_relations(frame))


def manin_product(p: Presentation, q: Presentation, kind: str) -> Presentation:
    """kind: 'black' 또는 'white'"""
    if kind == "black":
        return black_product(p, q)
    if kind == "white":
        return white_product(p, q)
    raise ValueError(f"알 수 없는 마닌 곱 종류입니다: {kind}")


def generator_count_law(p: Presentation, q: Presentation, result: Presentation) -> bool:
    return len(result.generators) == len(p.generators) * len(q.generators)


def factor_map(frame: TensorFrame) -> Dict:
    """μ^ω⊗ν → ν^ω 대응 (단위 역할의 왼쪽 인수를 지우고 색만 남김)"""
    return {f.symbol: f.right.colored(f.left.color) for f in frame.factors}


def aligned_map(source: Presentation, target: Presentation) -> Dict:
    """같은 순서로 나열된 두 생성원 목록의 대응"""
    return {g.symbol: h.symbol for g, h in zip(source.generators, target.generators)}


__all__ = [
    "black_relations",
    "black_product",
    "annihilator",
    "white_relations",
    "white_product",
    "manin_product",
    "generator_count_law",
    "factor_map",
    "aligned_map",
]

"""
Presentation Isomorphism

생성원 이름 대응(과 궤도별 ±1 배율)으로 두 표현의 관계 공간을 비교합니다.
"""

from fractions import Fraction
from itertools import permutations, product
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from config import get_config
from core.exceptions import GeneratorMapError
from core.presentations.closure import closed_space, same_relation_spans
from core.presentations.model import Presentation
from core.trees.poly import TreePoly
from core.trees.symbols import PAIR, GeneratorSymbol, Symbol, generator_orbits
from utils.logging import get_logger

logger = get_logger(__name__)

NameMap = Mapping[Union[str, Symbol], Union[str, Symbol]]
ScaledMap = Dict[Symbol, Tuple[Symbol, Fraction]]


def _as_symbol(value: Union[str, Symbol]) -> Symbol:
    if isinstance(value, Symbol):
        return value
    name, _, color = value.partition("@")
    return Symbol(name, color)


def normalize_map(p: Presentation, q: Presentation, name_map: NameMap) -> Dict[Symbol, Symbol]:
    """
    이름 대응을 기호 대응으로 바꾸고 전단사·항수 보존을 검사합니다.

    Raises:
        GeneratorMapError: 정의역/공역이 생성원과 다르거나 단사가 아니거나 항수가 다를 때
    """
    mapping = {_as_symbol(k): _as_symbol(v) for k, v in name_map.items()}
    source = {g.symbol for g in p.generators}
    target = {g.symbol for g in q.generators}
    if set(mapping) != source:
        missing = sorted(s.render() for s in source - set(mapping))
        extra = sorted(s.render() for s in set(mapping) - source)
        raise GeneratorMapError(f"{p.name}의 생성원과 대응 정의역이 다릅니다 (누락 {missing}, 초과 {extra})")
    if len(set(mapping.values())) != len(mapping):
        raise GeneratorMapError("생성원 대응이 단사가 아닙니다")
    if set(mapping.values()) != target:
        raise GeneratorMapError(f"대응의 상이 {q.name}의 생성원과 다릅니다")
    for g in p.generators:
        image = q.generator(mapping[g.symbol])
        if image.arity != g.arity:
            raise GeneratorMapError(
                f"항수를 보존하지 않습니다: {g.symbol} (항수 {g.arity}) → {image.symbol} (항수 {image.arity})"
            )
    return mapping


def _orbit_scalars(
    orbit: List[GeneratorSymbol], q: Presentation, mapping: Dict[Symbol, Symbol], sign: int
) -> Optional[Dict[Symbol, Fraction]]:
    """
    궤도의 첫 생성원 배율이 sign일 때 작용과 어울리는 배율. 작용이 맞지 않으면 None.

    x·τ = a·x', φ(x)·τ = b·φ(x)' 이면 s_{x'} = s_x·b/a 입니다.
    """
    first = orbit[0]
    image = q.generator(mapping[first.symbol])
    if image.kind != first.kind:
        return None
    scalars = {first.symbol: Fraction(sign)}
    if first.kind != PAIR:
        return scalars
    partner, a = first.partner()
    image_partner, b = image.partner()
    if mapping.get(partner) != image_partner:
        return None
    scalars[partner] = Fraction(sign) * b / a
    return scalars


def _sign_patterns(count: int, even_weights: bool) -> Iterator[Tuple[int, ...]]:
    limit = get_config().engine.max_sign_orbits
    if count > limit:
        logger.warning(f"궤도 {count}개가 한도 {limit}를 넘어 배율 +1만 시도합니다")
        yield (1,) * count
        return
    if even_weights and count:
        # 짝수 가중치 관계는 전체 부호 반전에 불변
        for rest in product((1, -1), repeat=count - 1):
            yield (1,) + rest
        return
    yield from product((1, -1), repeat=count)


def map_relations(p: Presentation, scaled: ScaledMap) -> List[TreePoly]:
    """배율 대응을 관계에 적용합니다 (모양과 잎은 그대로)."""
    out = []
    for rel in p.relations:
        pairs = []
        for mono, coeff in rel.items():
            factor = coeff
            for symbol in mono.decorations:
                factor *= scaled[symbol][1]
            pairs.append((mono.with_symbols(lambda s: scaled[s][0]), factor))
        out.append(TreePoly.accumulate(pairs))
    return out


def transport(p: Presentation, q: Presentation, scaled: ScaledMap) -> Presentation:
    """p의 관계를 q의 생성원 위로 옮긴 표현"""
    return Presentation(
        name=f"{p.name}→{q.name}",
        generators=q.generators,
        relations=tuple(map_relations(p, scaled)),
        relation_names=p.relation_names,
        colors=q.colors,
    )


def find_scaling(p: Presentation, q: Presentation, name_map: NameMap) -> Optional[ScaledMap]:
    """
    이름 대응에 ±1 배율을 붙여 관계 공간이 같아지는 경우를 찾습니다.

    Returns:
        찾으면 {기호: (상, 배율)}, 작용 종류가 맞지 않거나 없으면 None

    Raises:
        GeneratorMapError: 대응이 전단사가 아니거나 항수를 보존하지 않을 때
    """
    mapping = normalize_map(p, q, name_map)
    orbits = generator_orbits(p.generators)
    even = all(r.weight % 2 == 0 for r in p.relations)
    for signs in _sign_patterns(len(orbits), even):
        scalars: Dict[Symbol, Fraction] = {}
        for orbit, sign in zip(orbits, signs):
            part = _orbit_scalars(orbit, q, mapping, sign)
            if part is None:
                logger.debug(f"작용 종류가 맞지 않습니다: {orbit[0].symbol}")
                return None
            scalars.update(part)
        scaled = {s: (mapping[s], scalars[s]) for s in mapping}
        if same_relation_spans(transport(p, q, scaled), q):
            return scaled
    return None


def presentations_isomorphic(p: Presentation, q: Presentation, name_map: NameMap) -> bool:
    """
    생성원 대응 아래 두 표현의 관계 공간이 모든 성분에서 같은지 판정합니다.

    대응은 이름 전단사에 궤도별 ±1 배율을 곱한 것만 탐색합니다.

    Raises:
        GeneratorMapError: 대응이 전단사가 아니거나 항수를 보존하지 않을 때
    """
    return find_scaling(p, q, name_map) is not None


def _dimension_profile(p: Presentation) -> Tuple:
    return tuple(
        sorted((n, w, closed_space(p, n, w).dim) for n, w in p.components())
    )


def _orbit_signature(orbit: Sequence[GeneratorSymbol]) -> Tuple:
    return (orbit[0].arity, orbit[0].kind, len(orbit))


def candidate_maps(p: Presentation, q: Presentation) -> Iterator[Dict[Symbol, Symbol]]:
    """궤도 단위 전단사(쌍 생성원은 방향 포함) 후보를 결정적 순서로 생성합니다."""
    orbits_p = generator_orbits(p.generators)
    orbits_q = generator_orbits(q.generators)
    if len(orbits_p) != len(orbits_q):
        return
    for arrangement in permutations(orbits_q):
        if any(_orbit_signature(a) != _orbit_signature(b) for a, b in zip(orbits_p, arrangement)):
            continue
        flips = [(False, True) if len(o) == 2 else (False,) for o in orbits_p]
        for choice in product(*flips):
            mapping: Dict[Symbol, Symbol] = {}
            for source, target, flip in zip(orbits_p, arrangement, choice):
                images = list(reversed(target)) if flip else list(target)
                for g, h in zip(source, images):
                    mapping[g.symbol] = h.symbol
            yield mapping


def find_isomorphism(p: Presentation, q: Presentation) -> Optional[ScaledMap]:
    """
    궤도 대응을 모두 시도해 동형 대응을 찾습니다. 작은 표현 비교용입니다.
    """
    if len(p.generators) != len(q.generators) or _dimension_profile(p) != _dimension_profile(q):
        return None
    for mapping in candidate_maps(p, q):
        scaled = find_scaling(p, q, mapping)
        if scaled is not None:
            logger.debug(
                f"{p.name} ≅ {q.name}: "
                + ", ".join(f"{s}→{c}·{t}" for s, (t, c) in sorted(scaled.items()))
            )
            return scaled
    return None


def render_scaled_map(scaled: ScaledMap) -> Dict[str, str]:
    """{'m_dual': 'm', "m_dual'": "-m'"} 형식"""
    out = {}
    for source, (target, coeff) in sorted(scaled.items()):
        prefix = "" if coeff == 1 else ("-" if coeff == -1 else f"{coeff}*")
        out[source.render()] = prefix + target.render()
    return out


__all__ = [
    "NameMap",
    "ScaledMap",
    "normalize_map",
    "map_relations",
    "transport",
    "find_scaling",
    "presentations_isomorphic",
    "candidate_maps",
    "find_isomorphism",
    "render_scaled_map",
]

"""
Path-Lexicographic Order

셔플 트리 단항식의 경로 사전식 순서를 정의합니다.

각 잎 ℓ = 1..n 에 대해 뿌리에서 ℓ까지의 장식 단어를 만들고, 단어열을 잎 순서대로
차수-사전식(짧은 단어가 먼저, 같은 길이는 알파벳 순위 비교)으로 비교합니다.
모두 같으면 평면 잎 단어로 비교합니다. 항수 3에서는 오른쪽 빗 x(1,y(2,3))이
가장 작고 x(y(1,3),2) < x(y(1,2),3) 입니다.

변형 순서는 세 가지 스위치로 만듭니다. 긴 단어를 먼저 두기, 단어를 잎 쪽부터 읽기,
잎 단어를 내림차순으로 비교하기. 각 스위치는 접붙임에 대해 비교 결과를 보존하므로
모든 조합이 허용 순서입니다.
"""

from dataclasses import dataclass, replace
from functools import cached_property
from itertools import product
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from core.exceptions import ArityError, UnknownSymbolError, UnsupportedPresentationError
from core.presentations.model import Presentation
from core.trees.monomial import Tree, TreeMonomial
from core.trees.symbols import Symbol

PathKey = Tuple[Tuple[Tuple[int, Tuple[int, ...]], ...], Tuple[int, ...]]


def leaf_paths(tree: Tree) -> Dict[int, Tuple[Symbol, ...]]:
    """잎 레이블 → 뿌리에서 그 잎까지의 장식 단어"""
    out: Dict[int, Tuple[Symbol, ...]] = {}

    def walk(node: Tree, prefix: Tuple[Symbol, ...]) -> None:
        if isinstance(node, int):
            out[node] = prefix
            return
        for child in node.children:
            walk(child, prefix + (node.symbol,))

    walk(tree, ())
    return out


@dataclass(frozen=True)
class PathLexOrder:
    """
    순서가 주어진 장식 알파벳 위의 경로 사전식 순서.

    Attributes:
        alphabet: 작은 것부터 나열한 생성원 기호
        longer_first: 길이가 긴 경로 단어를 작게 봅니다
        from_leaf: 경로 단어를 잎 쪽 글자부터 비교합니다
        leaves_descending: 마지막 잎 단어 비교를 내림차순으로 합니다
    """

    alphabet: Tuple[Symbol, ...]
    longer_first: bool = False
    from_leaf: bool = False
    leaves_descending: bool = False

    @cached_property
    def rank(self) -> Dict[Symbol, int]:
        return {s: i for i, s in enumerate(self.alphabet)}

    def _word(self, word: Sequence[Symbol]) -> Tuple[int, Tuple[int, ...]]:
        try:
            ranks = tuple(self.rank[s] for s in word)
        except KeyError as e:
            raise UnknownSymbolError(f"순서 알파벳에 없는 기호입니다: {e.args[0]}") from e
        if self.from_leaf:
            ranks = ranks[::-1]
        return (-len(word) if self.longer_first else len(word), ranks)

    def key(self, mono: TreeMonomial) -> PathKey:
        paths = leaf_paths(mono.root)
        leaves = tuple(-leaf for leaf in mono.leaves) if self.leaves_descending else mono.leaves
        return (tuple(self._word(paths[leaf]) for leaf in sorted(paths)), leaves)

    def compare(self, a: TreeMonomial, b: TreeMonomial) -> int:
        """
        a < b 이면 -1, 같으면 0, a > b 이면 1.

        Raises:
            ArityError: 항수가 다를 때
            UnsupportedPresentationError: 2항이 아닌 꼭짓점이 있을 때
        """
        for mono in (a, b):
            if not is_binary_monomial(mono):
                raise UnsupportedPresentationError(f"2항 꼭짓점만 비교할 수 있습니다: {mono}")
        if a.arity != b.arity:
            raise ArityError(f"항수가 다른 단항식은 비교하지 않습니다: {a} / {b}")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def sorted(self, monos: Iterable[TreeMonomial], reverse: bool = False) -> List[TreeMonomial]:
        return sorted(monos, key=self.key, reverse=reverse)

    def maximum(self, monos: Iterable[TreeMonomial]) -> TreeMonomial:
        return max(monos, key=self.key)

    @property
    def variant(self) -> str:
        """기본 순서와 다른 스위치 이름 (기본 순서면 빈 문자열)"""
        flags = [
            label
            for label, on in (
                ("긴 경로 우선", self.longer_first),
                ("잎 쪽부터 읽기", self.from_leaf),
                ("잎 내림차순", self.leaves_descending),
            )
            if on
        ]
        return ", ".join(flags)

    def render(self) -> str:
        text = " < ".join(s.render() for s in self.alphabet)
        return f"{text} [{self.variant}]" if self.variant else text

    def __str__(self) -> str:
        return self.render()


def compare(a: TreeMonomial, b: TreeMonomial, order: PathLexOrder) -> int:
    return order.compare(a, b)


def default_order(p: Presentation) -> PathLexOrder:
    """(이름 등장 순서, 색 등장 순서)로 정한 알파벳"""
    return order_from_names(p, list(dict.fromkeys(g.name for g in p.generators)))


def order_from_names(p: Presentation, names: Sequence[str], **switches: bool) -> PathLexOrder:
    """
    기본 이름 순서를 바꾼 알파벳. 색은 등장 순서를 따릅니다.

    switches는 `PathLexOrder`의 변형 스위치로 그대로 넘깁니다.

    Raises:
        UnknownSymbolError: 이름 목록이 생성원 이름과 다를 때
    """
    present = {g.name for g in p.generators}
    if set(names) != present or len(names) != len(present):
        raise UnknownSymbolError(f"생성원 이름 순서가 맞지 않습니다: {list(names)}")
    colors: List[str] = []
    for g in p.generators:
        if g.color not in colors:
            colors.append(g.color)
    alphabet = sorted(
        (g.symbol for g in p.generators),
        key=lambda s: (list(names).index(s.name), colors.index(s.color)),
    )
    return PathLexOrder(tuple(alphabet), **switches)


def lmt_order(order: PathLexOrder, palette: Sequence[str]) -> PathLexOrder:
    """
    기저 알파벳 순서를 색 복제 알파벳으로 올립니다 (생성원 우선, 색은 Ω 순서).

    Examples:
        >>> lmt_order(PathLexOrder((Symbol("m"),)), ["c0", "c1"]).render()
        'm@c0 < m@c1'
    """
    return replace(order, alphabet=tuple(s.colored(c) for s in order.alphabet for c in palette))


SWITCHES = ("longer_first", "from_leaf", "leaves_descending")


def order_variants() -> Iterator[Dict[str, bool]]:
    """변형 스위치 조합 (기본 순서가 먼저)"""
    for values in product((False, True), repeat=len(SWITCHES)):
        yield dict(zip(SWITCHES, values))


def is_binary_monomial(mono: TreeMonomial) -> bool:
    return all(len(v.children) == 2 for v in mono.vertices())


__all__ = [
    "PathKey",
    "leaf_paths",
    "PathLexOrder",
    "compare",
    "default_order",
    "order_from_names",
    "lmt_order",
    "SWITCHES",
    "order_variants",
    "is_binary_monomial",
]

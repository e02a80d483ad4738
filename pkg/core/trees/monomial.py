"""
Tree Monomials

장식된 셔플 트리 단항식을 정의합니다.

트리는 정수(잎 레이블) 또는 Node(기호, 자식들)입니다. 정규형(셔플 정규형)에서는
모든 내부 꼭짓점의 자식이 부분트리의 최소 잎 레이블 오름차순으로 정렬되어 있습니다.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator, List, Tuple, Union

from core.trees.symbols import Symbol


@dataclass(frozen=True)
class Node:
    """내부 꼭짓점 (자식 순서는 임의일 수 있음)"""

    symbol: Symbol
    children: Tuple["Tree", ...]

    def render(self) -> str:
        return f"{self.symbol.render()}({','.join(render_tree(c) for c in self.children)})"


Tree = Union[int, Node]


def render_tree(tree: Tree) -> str:
    return str(tree) if isinstance(tree, int) else tree.render()


def tree_leaves(tree: Tree) -> List[int]:
    """평면 순서의 잎 레이블 목록"""
    if isinstance(tree, int):
        return [tree]
    out: List[int] = []
    for child in tree.children:
        out.extend(tree_leaves(child))
    return out


def tree_weight(tree: Tree) -> int:
    if isinstance(tree, int):
        return 0
    return 1 + sum(tree_weight(c) for c in tree.children)


def min_leaf(tree: Tree) -> int:
    if isinstance(tree, int):
        return tree
    return min(min_leaf(c) for c in tree.children)


def preorder(tree: Tree) -> Iterator[Node]:
    """내부 꼭짓점의 전위 순회"""
    if isinstance(tree, int):
        return
    yield tree
    for child in tree.children:
        yield from preorder(child)


def inorder(tree: Tree) -> Iterator[Node]:
    """내부 꼭짓점의 중위 순회 (첫 자식, 꼭짓점, 나머지 자식)"""
    if isinstance(tree, int):
        return
    yield from inorder(tree.children[0])
    yield tree
    for child in tree.children[1:]:
        yield from inorder(child)


def shape_key(tree: Tree) -> tuple:
    """모양 비교 키. 잎은 (0,), 꼭짓점은 (1, 자식 키...)"""
    if isinstance(tree, int):
        return (0,)
    return (1,) + tuple(shape_key(c) for c in tree.children)


def map_leaves(tree: Tree, fn: Callable[[int], int]) -> Tree:
    if isinstance(tree, int):
        return fn(tree)
    return Node(tree.symbol, tuple(map_leaves(c, fn) for c in tree.children))


def map_symbols(tree: Tree, fn: Callable[[Symbol], Symbol]) -> Tree:
    if isinstance(tree, int):
        return tree
    return Node(fn(tree.symbol), tuple(map_symbols(c, fn) for c in tree.children))


def is_shuffle_canonical(tree: Tree) -> bool:
    if isinstance(tree, int):
        return True
    mins = [min_leaf(c) for c in tree.children]
    return mins == sorted(mins) and all(is_shuffle_canonical(c) for c in tree.children)


def recolor_preorder(tree: Tree, colors: List[str]) -> Tree:
    """전위 순서로 꼭짓점마다 색을 입힙니다 (colors는 소비됨)"""
    if isinstance(tree, int):
        return tree
    symbol = tree.symbol.colored(colors.pop(0))
    return Node(symbol, tuple(recolor_preorder(c, colors) for c in tree.children))


@dataclass(frozen=True)
class TreeMonomial:
    """
    셔플 정규형 트리 단항식.

    정렬 순서는 (모양, 전위 장식 단어, 잎 단어)입니다.
    """

    root: Tree

    @cached_property
    def leaves(self) -> Tuple[int, ...]:
        return tuple(tree_leaves(self.root))

    @property
    def arity(self) -> int:
        return len(self.leaves)

    @cached_property
    def weight(self) -> int:
        return tree_weight(self.root)

    @cached_property
    def decorations(self) -> Tuple[Symbol, ...]:
        """전위 순회 순서의 장식 기호"""
        return tuple(node.symbol for node in preorder(self.root))

    @cached_property
    def shape(self) -> tuple:
        return shape_key(self.root)

    @cached_property
    def sort_key(self) -> tuple:
        return (self.shape, self.decorations, self.leaves)

    def vertices(self) -> List[Node]:
        return list(preorder(self.root))

    def render(self) -> str:
        return render_tree(self.root)

    def with_symbols(self, fn: Callable[[Symbol], Symbol]) -> "TreeMonomial":
        """장식만 바꾼 단항식 (모양과 잎은 그대로)"""
        return TreeMonomial(map_symbols(self.root, fn))

    def colored(self, colors: List[str]) -> "TreeMonomial":
        """전위 순서 색 단어로 색을 입힌 단항식"""
        if len(colors) != self.weight:
            raise ValueError(f"색 단어 길이 {len(colors)}가 가중치 {self.weight}와 다릅니다")
        return TreeMonomial(recolor_preorder(self.root, list(colors)))

    def __lt__(self, other: "TreeMonomial") -> bool:
        return self.sort_key < other.sort_key

    def __le__(self, other: "TreeMonomial") -> bool:
        return self.sort_key <= other.sort_key

    def __gt__(self, other: "TreeMonomial") -> bool:
        return self.sort_key > other.sort_key

    def __ge__(self, other: "TreeMonomial") -> bool:
        return self.sort_key >= other.sort_key

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"TreeMonomial({self.render()})"


__all__ = [
    "Node",
    "Tree",
    "TreeMonomial",
    "render_tree",
    "tree_leaves",
    "tree_weight",
    "min_leaf",
    "preorder",
    "inorder",
    "shape_key",
    "map_leaves",
    "map_symbols",
    "is_shuffle_canonical",
    "recolor_preorder",
]

"""
Permutations

1부터 시작하는 한 줄 표기(one-line) 순열 도구.

순열 ρ는 튜플 (ρ(1), ..., ρ(n))으로 표현합니다.
합성은 compose(ρ, τ)(i) = ρ(τ(i)) 입니다.
"""

from itertools import permutations as _permutations
from typing import Iterator, List, Sequence, Tuple

from sympy.combinatorics import Permutation

Perm = Tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_identity(perm: Sequence[int]) -> bool:
    return all(p == i + 1 for i, p in enumerate(perm))


def compose(rho: Sequence[int], tau: Sequence[int]) -> Perm:
    """(ρ∘τ)(i) = ρ(τ(i))"""
    return tuple(rho[t - 1] for t in tau)


def inverse(perm: Sequence[int]) -> Perm:
    result = [0] * len(perm)
    for i, p in enumerate(perm):
        result[p - 1] = i + 1
    return tuple(result)


def all_permutations(n: int) -> Iterator[Perm]:
    """S_n의 모든 순열을 사전순으로 생성합니다 (항등원이 처음)."""
    return _permutations(range(1, n + 1))


def adjacent_transpositions(n: int) -> List[Perm]:
    """S_n의 생성원 (i, i+1)"""
    result = []
    for i in range(1, n):
        perm = list(range(1, n + 1))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        result.append(tuple(perm))
    return result


def sign(perm: Sequence[int]) -> int:
    return -1 if Permutation([p - 1 for p in perm]).is_odd else 1


def to_cycles(perm: Sequence[int]) -> str:
    """
    순환 표기 문자열. 항등원은 'e'.

    Examples:
        >>> to_cycles((2, 1))
        '(12)'
    """
    cycles = Permutation([p - 1 for p in perm]).cyclic_form
    if not cycles:
        return "e"
    sep = "" if len(perm) < 10 else " "
    return "".join("(" + sep.join(str(i + 1) for i in cycle) + ")" for cycle in cycles)


def from_cycles(text: str, degree: int) -> Perm:
    """
    순환 표기 문자열을 한 줄 표기 순열로 변환합니다.

    '(12)(34)', '(1 2)', 'e' 형식을 받습니다. 자리 구분이 없으면
    각 숫자를 하나의 원소로 읽습니다.

    Raises:
        ValueError: 형식이 잘못되었거나 원소가 차수를 벗어날 때
    """
    text = text.strip()
    if text in ("", "e", "id", "()"):
        return identity(degree)
    cycles = []
    rest = text
    while rest:
        if not rest.startswith("(") or ")" not in rest:
            raise ValueError(f"순환 표기가 잘못되었습니다: {text!r}")
        body, rest = rest[1:].split(")", 1)
        rest = rest.strip()
        tokens = body.replace(",", " ").split()
        if len(tokens) == 1 and len(tokens[0]) > 1:
            tokens = list(tokens[0])
        try:
            cycle = [int(t) - 1 for t in tokens]
        except ValueError as e:
            raise ValueError(f"순환 표기가 잘못되었습니다: {text!r}") from e
        if any(c < 0 or c >= degree for c in cycle):
            raise ValueError(f"순환 {body!r}의 원소가 차수 {degree}를 벗어납니다")
        if len(set(cycle)) != len(cycle):
            raise ValueError(f"순환 {body!r}에 중복 원소가 있습니다")
        cycles.append(cycle)
    perm = Permutation(cycles, size=degree) if cycles else Permutation(degree - 1)
    return tuple(i + 1 for i in perm.array_form)


__all__ = [
    "Perm",
    "identity",
    "is_identity",
    "compose",
    "inverse",
    "all_permutations",
    "adjacent_transpositions",
    "sign",
    "to_cycles",
    "from_cycles",
]

"""
Progress Display

긴 반복(σ 열거, 임계 단항식 검사 등)에 tqdm 진행률 표시를 붙입니다.
"""

from typing import Iterable, Iterator, Optional, TypeVar

from tqdm import tqdm

T = TypeVar("T")


def progress(
    iterable: Iterable[T],
    desc: str = "",
    total: Optional[int] = None,
    enabled: Optional[bool] = None,
) -> Iterator[T]:
    """
    설정에 따라 진행률 표시를 감싼 반복자를 반환합니다.

    Args:
        iterable: 원본 반복 대상
        desc: 진행률 막대 설명
        total: 전체 개수 (선택사항)
        enabled: 강제 표시 여부 (None이면 performance.show_progress 사용)
    """
    if enabled is None:
        from config import get_config

        enabled = get_config().performance.show_progress
    if not enabled:
        return iter(iterable)
    return iter(tqdm(iterable, desc=desc, total=total, leave=False))


__all__ = ["progress"]

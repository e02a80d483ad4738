"""
Validation Utilities

입력 검증 및 유효성 검사 함수를 제공합니다.
"""

import re
import warnings
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from utils.logging import get_logger

logger = get_logger(__name__)

COLOR_NAME = re.compile(r"^[A-Za-z0-9_]+$")
LAYERED_COLOR_NAME = re.compile(r"^[A-Za-z0-9_]+(\.[A-Za-z0-9_]+)*$")


def validate_source_file(file_path: Union[str, Path]) -> Path:
    """
    DSL 소스 파일(.opd)의 유효성을 검사합니다.

    Args:
        file_path: 검사할 파일 경로

    Returns:
        Path: 검증된 파일 경로

    Raises:
        FileNotFoundError: 파일이 존재하지 않을 때
        ValueError: 디렉토리가 주어졌을 때
    """
    file_path = Path(file_path)

    if not file_path.exists():
        raise FileNotFoundError(f"파일을 찾을 수 없습니다: {file_path}")

    if not file_path.is_file():
        raise ValueError(f"디렉토리가 아닌 파일이어야 합니다: {file_path}")

    if file_path.suffix.lower() != ".opd":
        logger.warning(f".opd 확장자가 아닌 파일을 읽습니다: {file_path}")

    return file_path


def validate_output_path(output_path: Union[str, Path], create_dir: bool = True) -> Path:
    """
    출력 경로의 유효성을 검사합니다.

    Args:
        output_path: 출력 파일 경로 (.opd 또는 .json)
        create_dir: 디렉토리 자동 생성 여부

    Returns:
        Path: 검증된 출력 경로

    Raises:
        ValueError: 지원하지 않는 확장자일 때
    """
    output_path = Path(output_path)

    if output_path.suffix.lower() not in {".opd", ".json"}:
        raise ValueError(f"출력 파일은 .opd 또는 .json이어야 합니다: {output_path}")

    if create_dir and not output_path.parent.exists():
        output_path.parent.mkdir(parents=True, exist_ok=True)

    return output_path


def validate_colors(colors: Iterable[str], layered: bool = False) -> Tuple[str, ...]:
    """
    색 집합 Ω의 유효성을 검사합니다.

    Ω는 유한하고 순서가 있으며 비어 있지 않아야 합니다.
    '.'은 반복 구성의 색 층 구분자이므로 사용자 색 이름에는 쓸 수 없습니다.
    layered가 True이면 Ω² 같은 곱 색 (a.b)을 층마다 검사합니다.

    Args:
        colors: 색 이름 목록 (선언 순서가 곧 순서)
        layered: '.'으로 이은 곱 색 허용 여부

    Returns:
        Tuple[str, ...]: 검증된 색 튜플

    Raises:
        ValueError: 비어 있거나, 중복되거나, 이름 형식이 잘못되었을 때
    """
    result = tuple(colors)
    if not result:
        raise ValueError("색 집합이 비어 있습니다")
    if len(set(result)) != len(result):
        raise ValueError(f"색 이름이 중복되었습니다: {', '.join(result)}")
    pattern = LAYERED_COLOR_NAME if layered else COLOR_NAME
    for name in result:
        if not pattern.match(name):
            raise ValueError(f"잘못된 색 이름입니다: {name!r}")
    return result


def validate_weak_composition(
    values: Sequence[int], parts: int, weight: Optional[int] = None
) -> Tuple[int, ...]:
    """
    약조성(weak composition)의 유효성을 검사합니다.

    Args:
        values: 색별 개수
        parts: 색 개수 |Ω|
        weight: 기대하는 합 (선택사항)

    Returns:
        Tuple[int, ...]: 검증된 약조성

    Raises:
        ValueError: 길이, 부호 또는 합이 맞지 않을 때
    """
    result = tuple(int(v) for v in values)
    if len(result) != parts:
        raise ValueError(f"약조성 길이 {len(result)}가 색 개수 {parts}와 다릅니다")
    if any(v < 0 for v in result):
        raise ValueError(f"약조성에 음수가 있습니다: {result}")
    if weight is not None and sum(result) != weight:
        raise ValueError(f"약조성의 합 {sum(result)}이 가중치 {weight}와 다릅니다")
    return result


def validate_permutation(perm: Sequence[int], degree: Optional[int] = None) -> Tuple[int, ...]:
    """
    1부터 시작하는 한 줄 표기 순열의 유효성을 검사합니다.

    Raises:
        ValueError: 순열이 아니거나 차수가 다를 때
    """
    result = tuple(int(p) for p in perm)
    if degree is not None and len(result) != degree:
        raise ValueError(f"순열 차수 {len(result)}가 기대값 {degree}와 다릅니다")
    if sorted(result) != list(range(1, len(result) + 1)):
        raise ValueError(f"올바른 순열이 아닙니다: {result}")
    return result


def check_resource_guard(what: str, value: int, limit: int) -> bool:
    """
    소프트 자원 제한을 검사합니다.

    제한을 넘으면 ResourceWarning을 발생시키고 False를 반환합니다 (예외는 없음).
    """
    if value > limit:
        message = (
            f"{what} {value}이(가) 권장 한도 {limit}를 초과합니다. 계산이 오래 걸릴 수 있습니다"
        )
        logger.warning(message)
        warnings.warn(message, ResourceWarning, stacklevel=3)
        return False
    return True


def parse_color_option(
    count: Optional[int] = None, names: Optional[str] = None, prefix: str = "c"
) -> List[str]:
    """
    CLI의 --colors / --color-names 옵션을 색 목록으로 변환합니다.

    Args:
        count: 색 개수 (c0..c(N-1))
        names: 쉼표로 구분된 색 이름
        prefix: 자동 생성 이름의 접두사

    Returns:
        List[str]: 색 이름 목록
    """
    if names:
        return list(validate_colors(n.strip() for n in names.split(",") if n.strip()))
    if count is None or count < 1:
        raise ValueError(f"색 개수는 1 이상이어야 합니다: {count}")
    return [f"{prefix}{i}" for i in range(count)]


__all__ = [
    "validate_source_file",
    "validate_output_path",
    "validate_colors",
    "validate_weak_composition",
    "validate_permutation",
    "check_resource_guard",
    "parse_color_option",
]

"""
Exceptions

오퍼라드 엔진 전반에서 사용하는 예외 계층을 정의합니다.
"""

from typing import Optional


class OperadError(Exception):
    """오퍼라드 엔진의 기본 예외"""


class ParseError(OperadError):
    """
    DSL 파싱 오류.

    Attributes:
        line: 오류가 발생한 줄 번호 (1부터 시작)
        column: 오류가 발생한 열 번호 (1부터 시작)
        reason: 오류 원인
    """

    def __init__(self, line: int, column: int, reason: str):
        self.line = line
        self.column = column
        self.reason = reason
        super().__init__(f"{line}행 {column}열: {reason}")


class ArityError(OperadError, ValueError):
    """항수(arity) 불일치"""


class WeightError(OperadError, ValueError):
    """가중치(weight) 불일치"""


class DimensionMismatchError(OperadError, ValueError):
    """벡터 또는 행렬의 차원 불일치"""


class DegeneratePairingError(OperadError, ValueError):
    """퇴화된 쌍대 페어링"""


class UnknownSymbolError(OperadError, KeyError):
    """알 수 없는 생성원, 내장 오퍼라드 또는 정리 ID"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class BasisError(OperadError, KeyError):
    """기저에 없는 단항식"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class MalformedSigmaError(OperadError, ValueError):
    """형식이 잘못된 시그마 선택"""


class InadmissibleSigmaError(OperadError):
    """허용 조건을 만족하지 않는 시그마 선택"""


class UnsupportedPresentationError(OperadError):
    """모듈의 지원 범위를 벗어난 표현 (예: 3항 이상 생성원, 비이차 관계)"""


class GeneratorMapError(OperadError, ValueError):
    """전단사가 아니거나 항수를 보존하지 않는 생성원 대응"""


class ResourceGuardError(OperadError):
    """계산 규모 제한 초과"""

    def __init__(self, message: str, limit: Optional[int] = None):
        self.limit = limit
        super().__init__(message)


__all__ = [
    "OperadError",
    "ParseError",
    "ArityError",
    "WeightError",
    "DimensionMismatchError",
    "DegeneratePairingError",
    "UnknownSymbolError",
    "BasisError",
    "MalformedSigmaError",
    "InadmissibleSigmaError",
    "UnsupportedPresentationError",
    "GeneratorMapError",
    "ResourceGuardError",
]

"""
operad-compat - Core Module

이 패키지는 트리 다항식, 표현 파싱, 편극, 호환 구성, 코쥘 쌍대, 마닌 곱, 재작성 등의
핵심 기능을 포함합니다.
"""

__version__ = "0.1.0"
__author__ = "Kim Kyung Min"

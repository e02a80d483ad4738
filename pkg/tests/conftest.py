"""
Pytest Configuration and Fixtures

테스트에 사용되는 공통 픽스처와 설정을 정의합니다.
"""

import random

import pytest

from core.presentations import builtin, parse_tree
from core.trees import TreeMonomial


@pytest.fixture
def two_colors():
    """Ω = {c0, c1}"""
    return ["c0", "c1"]


@pytest.fixture
def three_colors():
    """Ω = {c0, c1, c2}"""
    return ["c0", "c1", "c2"]


@pytest.fixture
def com():
    return builtin("Com")


@pytest.fixture
def lie():
    return builtin("Lie")


@pytest.fixture
def assoc():
    return builtin("As")


@pytest.fixture
def prelie():
    return builtin("PreLie")


@pytest.fixture
def dend():
    return builtin("Dend")


@pytest.fixture
def config():
    """
    테스트용 설정을 로드합니다.

    Returns:
        Config: 설정 객체
    """
    from config import get_config

    return get_config()


@pytest.fixture
def rng(config):
    """설정의 기본 시드로 만든 난수 생성기"""
    return random.Random(config.properties.default_seed)


@pytest.fixture
def mono():
    """트리 텍스트 → TreeMonomial"""

    def make(text: str) -> TreeMonomial:
        return TreeMonomial(parse_tree(text))

    return make


@pytest.fixture
def opd_file(tmp_path):
    """
    DSL 텍스트로 임시 .opd 파일을 만드는 팩토리.

    Returns:
        Callable[[str, str], Path]: (텍스트, 파일 이름) → 경로
    """

    def make(text: str, name: str = "test.opd"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return make

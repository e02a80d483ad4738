"""
Tests for Config and Utility Modules
"""

import logging

import pytest
from pydantic import ValidationError

from config import Config, LoggingConfig, load_config
from utils.logging import ROOT_LOGGER, get_logger, setup_logger
from utils.progress import progress
from utils.validators import (
    check_resource_guard,
    parse_color_option,
    validate_colors,
    validate_output_path,
    validate_permutation,
    validate_source_file,
    validate_weak_composition,
)


class TestConfig:
    """설정 로드 테스트"""

    def test_defaults(self, config):
        assert config.engine.max_arity == 5
        assert config.engine.max_sign_orbits == 8
        assert config.colors.names() == ["c0", "c1"]

    def test_user_override(self, tmp_path):
        """사용자 설정은 기본값 위에 병합"""
        path = tmp_path / "custom.yml"
        path.write_text("engine:\n  max_arity: 4\ncolors:\n  prefix: w\n", encoding="utf-8")

        config = load_config(str(path))

        assert config.engine.max_arity == 4
        assert config.engine.max_sigma_search == 4096
        assert config.colors.names(3) == ["w0", "w1", "w2"]

    def test_invalid_level(self):
        with pytest.raises(ValidationError):
            LoggingConfig(level="loud")

    def test_level_normalized(self):
        assert LoggingConfig(level="debug").level == "DEBUG"

    def test_negative_limit_rejected(self):
        with pytest.raises(ValidationError):
            Config(engine={"max_arity": 0})


class TestValidators:
    """입력 검증 함수 테스트"""

    def test_source_file(self, opd_file):
        path = opd_file("operad X { gen m:2; }")
        assert validate_source_file(str(path)) == path

    def test_missing_source(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            validate_source_file(tmp_path / "none.opd")

    def test_source_directory(self, tmp_path):
        with pytest.raises(ValueError):
            validate_source_file(tmp_path)

    def test_output_path_creates_parent(self, tmp_path):
        target = tmp_path / "nested" / "out.json"
        assert validate_output_path(target) == target
        assert target.parent.is_dir()

    def test_output_suffix(self, tmp_path):
        with pytest.raises(ValueError):
            validate_output_path(tmp_path / "out.txt")

    @pytest.mark.parametrize("colors", [[], ["a", "a"], ["a.b"], ["red", ""]])
    def test_invalid_colors(self, colors):
        with pytest.raises(ValueError):
            validate_colors(colors)

    def test_colors_keep_order(self):
        assert validate_colors(["z", "a"]) == ("z", "a")

    def test_layered_colors(self):
        """층 색은 layered=True 에서만 허용"""
        assert validate_colors(["c0.c0", "c0.c1"], layered=True) == ("c0.c0", "c0.c1")
        with pytest.raises(ValueError):
            validate_colors(["c0.c1"])
        with pytest.raises(ValueError):
            validate_colors(["c0."], layered=True)

    def test_weak_composition(self):
        assert validate_weak_composition([2, 0], 2, weight=2) == (2, 0)
        with pytest.raises(ValueError):
            validate_weak_composition([1, 1], 3)
        with pytest.raises(ValueError):
            validate_weak_composition([2, -1], 2)
        with pytest.raises(ValueError):
            validate_weak_composition([1, 1], 2, weight=3)

    def test_permutation(self):
        assert validate_permutation([2, 3, 1], degree=3) == (2, 3, 1)
        with pytest.raises(ValueError):
            validate_permutation([1, 1, 2])

    def test_resource_guard_warns_only(self):
        """한도를 넘어도 예외 없이 경고"""
        with pytest.warns(ResourceWarning):
            assert check_resource_guard("가중치", 5, 3) is False
        assert check_resource_guard("가중치", 2, 3) is True

    def test_parse_color_option(self):
        assert parse_color_option(3) == ["c0", "c1", "c2"]
        assert parse_color_option(None, "x, y") == ["x", "y"]
        with pytest.raises(ValueError):
            parse_color_option(0)


class TestLogging:
    """로깅 유틸리티 테스트"""

    def test_child_logger(self):
        assert get_logger("core.trees").name == f"{ROOT_LOGGER}.core.trees"
        assert get_logger(ROOT_LOGGER).name == ROOT_LOGGER

    def test_file_handler_without_colors(self, tmp_path):
        log_file = tmp_path / "logs" / "operad.log"
        logger = setup_logger("operad-test", level="INFO", log_file=str(log_file), console=False)

        logger.info("기록 테스트")
        for handler in logger.handlers:
            handler.flush()

        text = log_file.read_text(encoding="utf-8")
        assert "기록 테스트" in text
        assert "\x1b[" not in text
        assert logger.level == logging.INFO


class TestProgress:
    """진행률 표시 테스트"""

    def test_disabled_passthrough(self):
        assert list(progress([1, 2, 3], enabled=False)) == [1, 2, 3]

    def test_uses_tqdm_when_enabled(self, mocker):
        fake = mocker.patch("utils.progress.tqdm", side_effect=lambda it, **kwargs: it)

        assert list(progress(range(3), desc="검사", total=3, enabled=True)) == [0, 1, 2]
        fake.assert_called_once()

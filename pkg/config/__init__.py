"""
Configuration Module

엔진 설정을 로드하고 관리하는 모듈입니다.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import BaseModel, Field, field_validator


class EngineConfig(BaseModel):
    """계산 엔진 설정"""
    max_weight: int = Field(default=3, ge=0)
    max_arity: int = Field(default=5, ge=1)
    closure_cache_size: int = Field(default=256, ge=0)
    max_sign_orbits: int = Field(default=8, ge=0)
    max_sigma_search: int = Field(default=4096, ge=1)


class ColorConfig(BaseModel):
    """색 집합(Ω) 기본 설정"""
    default_count: int = Field(default=2, ge=1)
    prefix: str = "c"

    def names(self, count: Optional[int] = None) -> List[str]:
        """c0, c1, ... 형식의 색 이름 목록"""
        n = self.default_count if count is None else count
        return [f"{self.prefix}{i}" for i in range(n)]


class LoggingConfig(BaseModel):
    """로깅 설정"""
    level: str = "INFO"
    file: str = ""
    console: bool = True
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    date_format: str = "%Y-%m-%d %H:%M:%S"

    @field_validator("level")
    @classmethod
    def _check_level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"알 수 없는 로그 레벨: {value}")
        return value


class PerformanceConfig(BaseModel):
    """성능 설정"""
    num_workers: int = Field(default=0, ge=0)
    show_progress: bool = False


class PropertyConfig(BaseModel):
    """무작위 속성 검사 설정"""
    default_seed: int = 20240229
    property_cases: int = Field(default=100, ge=1)


class Config(BaseModel):
    """전체 설정"""
    engine: EngineConfig = EngineConfig()
    colors: ColorConfig = ColorConfig()
    logging: LoggingConfig = LoggingConfig()
    performance: PerformanceConfig = PerformanceConfig()
    properties: PropertyConfig = PropertyConfig()


def load_config(config_path: Optional[str] = None) -> Config:
    """
    설정 파일을 로드합니다.

    우선순위:
    1. config_path로 지정된 파일
    2. config.local.yml
    3. config.yml
    4. config.default.yml

    Args:
        config_path: 설정 파일 경로 (선택사항)

    Returns:
        Config: 로드된 설정 객체
    """
    config_dir = Path(__file__).parent

    default_config_path = config_dir / "config.default.yml"
    config_data: Dict[str, Any] = {}
    if default_config_path.exists():
        with open(default_config_path, "r", encoding="utf-8") as f:
            config_data = yaml.safe_load(f) or {}

    user_config_paths = [
        config_path,
        config_dir / "config.local.yml",
        config_dir / "config.yml",
    ]

    for user_config_path in user_config_paths:
        if user_config_path and Path(user_config_path).exists():
            with open(user_config_path, "r", encoding="utf-8") as f:
                user_config = yaml.safe_load(f)
                if user_config:
                    _merge_config(config_data, user_config)
            break

    return Config(**config_data)


def _merge_config(base: Dict, override: Dict) -> None:
    """
    설정을 재귀적으로 병합합니다.

    Args:
        base: 기본 설정 딕셔너리
        override: 오버라이드할 설정 딕셔너리
    """
    for key, value in override.items():
        if key in base and isinstance(base[key], dict) and isinstance(value, dict):
            _merge_config(base[key], value)
        else:
            base[key] = value


_config: Optional[Config] = None


def get_config() -> Config:
    """
    전역 설정 인스턴스를 반환합니다.

    Returns:
        Config: 설정 객체
    """
    global _config
    if _config is None:
        _config = load_config()
    return _config


def reload_config(config_path: Optional[str] = None) -> Config:
    """
    설정을 다시 로드합니다.

    Args:
        config_path: 설정 파일 경로 (선택사항)

    Returns:
        Config: 재로드된 설정 객체
    """
    global _config
    _config = load_config(config_path)
    return _config


__all__ = [
    "Config",
    "EngineConfig",
    "ColorConfig",
    "LoggingConfig",
    "PerformanceConfig",
    "PropertyConfig",
    "load_config",
    "get_config",
    "reload_config",
]

"""
Configuration Management

환경 변수 및 설정 관리
"""

from typing import Optional
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv


class NumericsConfig(BaseSettings):
    """수치 백엔드 설정"""
    tolerance: float = Field(default=1e-9, description="float 백엔드 영(0) 판정 허용오차 τ")
    backend: str = Field(default="exact", description="스칼라 백엔드 (exact | float)")
    fuzz_bound: int = Field(default=16, description="퍼징 유리수 분자/분모 상한")
    cross_trials: int = Field(default=100, description="외적 공리 검증용 무작위 벡터 수")

    model_config = SettingsConfigDict(env_prefix="G2C_", extra="ignore")

    @field_validator("backend")
    @classmethod
    def _check_backend(cls, value: str) -> str:
        if value not in ("exact", "float"):
            raise ValueError(f"지원하지 않는 백엔드: {value}")
        return value

    @field_validator("tolerance")
    @classmethod
    def _check_tolerance(cls, value: float) -> float:
        if value <= 0:
            raise ValueError("허용오차는 양수여야 합니다")
        return value


class LoggingConfig(BaseSettings):
    """로깅 설정"""
    level: str = Field(default="INFO", description="로그 레벨")
    file: str = Field(default="", description="로그 파일명 (비어 있으면 파일 로깅 안함)")

    model_config = SettingsConfigDict(env_prefix="LOG_", extra="ignore")


class PathConfig(BaseSettings):
    """파일 경로 설정"""
    output_dir: str = Field(default="./output", description="보고서 출력 디렉토리")

    model_config = SettingsConfigDict(env_prefix="G2C_", extra="ignore")


class Config:
    """전체 설정 관리 클래스"""

    def __init__(self, env_file: Optional[str] = None):
        # .env 파일 로드
        if env_file:
            load_dotenv(env_file)
        else:
            load_dotenv()

        self.numerics = NumericsConfig()
        self.logging = LoggingConfig()
        self.paths = PathConfig()


# 전역 설정 인스턴스
config = Config()

"""
Utilities Module

설정 관리, 로깅, 예외, 검증 보고서, 파일 관리
"""

from .config import Config, config
from .logger import setup_logger, get_logger, log_check_report, LoggerMixin
from .errors import (
    G2AcmsError,
    AlgebraError,
    NonUnitVectorError,
    SpecValidationError,
    InternalConsistencyError,
)
from .checks import CheckResult, CheckReport
from .file_manager import FileManager, ReportFileManager

__all__ = [
    "Config", "config", "setup_logger", "get_logger", "log_check_report", "LoggerMixin",
    "G2AcmsError", "AlgebraError", "NonUnitVectorError", "SpecValidationError", "InternalConsistencyError",
    "CheckResult", "CheckReport", "FileManager", "ReportFileManager",
]

"""
Logging Configuration

엔진 로거 설정. 콘솔 출력은 stderr로 보내 stdout의 JSON 보고서와 섞이지 않게 한다.
"""

import logging
from pathlib import Path
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from .checks import CheckReport

ROOT_LOGGER = "g2acms"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def _rich_handler() -> RichHandler:
    return RichHandler(
        console=Console(stderr=True),
        show_time=True,
        show_path=False,
        rich_tracebacks=True,
        markup=False,
    )


def _file_handler(log_file: str) -> logging.FileHandler:
    path = Path(log_file)
    path.parent.mkdir(parents=True, exist_ok=True)
    return logging.FileHandler(path, encoding="utf-8")


def setup_logger(
    name: str = ROOT_LOGGER,
    level: str = "INFO",
    log_file: Optional[str] = None,
    console_output: bool = True,
) -> logging.Logger:
    """
    엔진 로거 설정

    하위 로거(g2acms.pipeline, g2acms.ManifoldAnalyzer 등)는 전파로 같은 핸들러를 쓴다.
    다시 호출하면 기존 핸들러를 교체한다.

    Args:
        name: 로거 이름
        level: 로그 레벨 이름 (DEBUG, INFO, ...)
        log_file: 로그 파일 경로 (None 또는 빈 문자열이면 파일 로깅 안함)
        console_output: stderr 콘솔 출력 여부

    Returns:
        설정된 로거
    """
    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, level.upper(), logging.INFO))
    logger.handlers.clear()

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)
    handlers = []
    if console_output:
        handlers.append(_rich_handler())
    if log_file:
        handlers.append(_file_handler(log_file))
    for handler in handlers:
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    return logger


def get_logger(name: str = ROOT_LOGGER) -> logging.Logger:
    return logging.getLogger(name)


def log_check_report(logger: logging.Logger, report: CheckReport, failure_level: int = logging.WARNING) -> None:
    """
    검증 보고서를 항목별로 기록

    통과 항목은 DEBUG, 실패 항목은 failure_level로 반례와 함께 기록한다.
    """
    for result in report.results:
        if result.passed:
            logger.debug(f"{report.subject}.{result.name}: 통과")
        else:
            logger.log(failure_level, f"{report.subject}.{result.name}: {result.witness}")


class LoggerMixin:
    """서비스 클래스용 로깅 믹스인 (로거 이름 g2acms.<클래스명>)"""

    @property
    def logger(self) -> logging.Logger:
        return get_logger(f"{ROOT_LOGGER}.{type(self).__name__}")

    def log_info(self, message: str) -> None:
        self.logger.info(message)

    def log_warning(self, message: str) -> None:
        self.logger.warning(message)

    def log_error(self, message: str) -> None:
        self.logger.error(message)

    def log_debug(self, message: str) -> None:
        self.logger.debug(message)

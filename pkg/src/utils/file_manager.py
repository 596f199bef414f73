"""
File Management Utilities

보고서와 매니폴드 명세 파일 저장
"""

from pathlib import Path
from typing import Optional, Union

from .config import config


class FileManager:
    """파일 관리 클래스 (디렉토리는 처음 저장할 때 생성)"""

    def __init__(self, base_dir: Optional[Union[str, Path]] = None):
        self.base_dir = Path(base_dir or config.paths.output_dir)

    def _ensure_dir(self) -> Path:
        self.base_dir.mkdir(parents=True, exist_ok=True)
        return self.base_dir

    def save_file(self, content: str, filename: str) -> str:
        """UTF-8 텍스트 파일 저장"""
        file_path = self._ensure_dir() / filename
        with open(file_path, "w", encoding="utf-8") as f:
            f.write(content)
        return str(file_path)


class ReportFileManager(FileManager):
    """보고서/명세 파일 전용 관리 클래스"""

    def save_spec(self, content: str, name: str) -> str:
        """매니폴드 명세 저장 (<name>.json)"""
        return self.save_file(content, f"{name}.json")

    def save_report(self, content: str, path: Union[str, Path]) -> str:
        """
        보고서 저장

        Args:
            content: 렌더링된 보고서
            path: 절대/상대 경로, 디렉토리 부분이 없으면 base_dir 기준

        Returns:
            저장된 경로
        """
        path = Path(path)
        if path.parent == Path("."):
            return self.save_file(content, path.name)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
        return str(path)

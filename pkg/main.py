"""
G2 ACMS - Main CLI

매니폴드 명세 → 검증 → 접속 → ACMS → ∇Φ → 불변량 → 분류 → 정리 감사
"""

from typing import List, Optional

import typer
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn, TimeElapsedColumn
from rich.table import Table

from src.pipeline import (
    FORMATS,
    ManifoldAnalyzer,
    PropertyFuzzer,
    ReportFormatter,
    build_manifold,
    builtin_examples,
    parse_spec,
    resolve_xi,
    serialize_spec,
)
from src.utils import (
    InternalConsistencyError,
    NonUnitVectorError,
    ReportFileManager,
    SpecValidationError,
    config,
    setup_logger,
)

EXIT_VALIDATION = 1
EXIT_INCONSISTENT = 2

# CLI 앱 초기화
app = typer.Typer(help="G2 구조가 유도하는 거의 접촉 계량 구조 분석 도구")
console = Console(stderr=True)

logger = setup_logger("g2acms", config.logging.level, config.logging.file or None)


def _split(values: Optional[str], name: str) -> Optional[List[str]]:
    """"1,0,3/5" → ["1", "0", "3/5"]"""
    if values is None:
        return None
    parts = [part.strip() for part in values.split(",")]
    if not all(parts):
        raise SpecValidationError(f"{name} 값에 빈 성분이 있습니다", location=name)
    return parts


def _check_format(output_format: str) -> None:
    if output_format not in FORMATS:
        _fail(f"지원하지 않는 출력 형식: {output_format} ({' | '.join(FORMATS)})", EXIT_VALIDATION)


def _emit(content: str, output: Optional[str]) -> None:
    """stdout 출력, --output이 있으면 파일로도 저장"""
    typer.echo(content, nl=False)
    if output:
        path = ReportFileManager().save_report(content, output)
        console.print(f"✅ 저장 완료: {path}", style="green")


def _fail(message: str, code: int) -> None:
    console.print(f"❌ {escape(message)}", style="red")
    raise typer.Exit(code)


@app.command()
def validate(
    spec_file: str = typer.Argument(..., help="매니폴드 명세 JSON 파일 또는 내장 예제 이름"),
    backend: Optional[str] = typer.Option(None, help="스칼라 백엔드 (exact | float)"),
):
    """명세 검증 (스키마, 야코비 항등식, 외적 공리, 접속, ξ 단위성)"""
    try:
        spec = parse_spec(spec_file, validate=False)
        manifold = build_manifold(spec, backend)
        resolve_xi(spec, manifold.field)

        table = Table(title=f"검증 결과: {spec.name}")
        table.add_column("대상", style="cyan")
        table.add_column("항목", style="white")
        table.add_column("결과", style="green")
        for report in manifold.checks:
            for result in report.results:
                table.add_row(report.subject, result.name, "통과" if result.passed else escape(result.witness or "실패"))
        console.print(table)
        console.print("✅ 명세가 유효합니다", style="green")

    except SpecValidationError as e:
        _fail(f"명세 검증 실패: {e}", EXIT_VALIDATION)


@app.command()
def tables(
    spec_file: str = typer.Argument(..., help="매니폴드 명세 JSON 파일 또는 내장 예제 이름"),
    output_format: str = typer.Option("text", "--format", help="출력 형식 (text | json)"),
    backend: Optional[str] = typer.Option(None, help="스칼라 백엔드 (exact | float)"),
    output: Optional[str] = typer.Option(None, help="출력 파일 경로"),
):
    """괄호, 레비-치비타 접속, 외적, dη, dφ 대 ⋆φ 표"""
    _check_format(output_format)
    try:
        manifold = build_manifold(parse_spec(spec_file, validate=False), backend)
        data = {"manifold": manifold.name, **ManifoldAnalyzer().tables(manifold)}
        _emit(ReportFormatter().render(data, output_format), output)

    except SpecValidationError as e:
        _fail(f"명세 검증 실패: {e}", EXIT_VALIDATION)


@app.command()
def analyze(
    spec_file: str = typer.Argument(..., help="매니폴드 명세 JSON 파일 또는 내장 예제 이름"),
    xi: Optional[str] = typer.Option(None, help="ξ 성분 7개, 쉼표 구분 (예: 3/5,4/5,0,0,0,0,0)"),
    u: Optional[str] = typer.Option(None, help="입체 사영 매개변수 6개, 쉼표 구분"),
    output_format: str = typer.Option("text", "--format", help="출력 형식 (text | json)"),
    backend: Optional[str] = typer.Option(None, help="스칼라 백엔드 (exact | float)"),
    output: Optional[str] = typer.Option(None, help="출력 파일 경로"),
):
    """한 ξ에 대한 전체 분석과 정리 감사"""
    _check_format(output_format)
    try:
        spec = parse_spec(spec_file, validate=False)
        manifold = build_manifold(spec, backend)
        vector = resolve_xi(spec, manifold.field, _split(xi, "xi"), _split(u, "u"))

        report = ManifoldAnalyzer().analyze(manifold, vector)
        _emit(ReportFormatter().render(report.to_dict(), output_format), output)

    except (SpecValidationError, NonUnitVectorError) as e:
        _fail(f"명세 검증 실패: {e}", EXIT_VALIDATION)
    except InternalConsistencyError as e:
        _fail(f"정리 감사 실패: {e}", EXIT_INCONSISTENT)


@app.command()
def fuzz(
    spec_file: str = typer.Argument(..., help="매니폴드 명세 JSON 파일 또는 내장 예제 이름"),
    trials: int = typer.Option(100, help="시행 횟수"),
    seed: int = typer.Option(1, help="난수 시드"),
    output_format: str = typer.Option("text", "--format", help="출력 형식 (text | json)"),
    backend: Optional[str] = typer.Option(None, help="스칼라 백엔드 (exact | float)"),
    output: Optional[str] = typer.Option(None, help="출력 파일 경로"),
):
    """시드 고정 무작위 유리수 ξ로 속성 퍼징"""
    _check_format(output_format)
    if trials < 1:
        _fail(f"시행 횟수는 1 이상이어야 합니다: {trials}", EXIT_VALIDATION)
    try:
        manifold = build_manifold(parse_spec(spec_file, validate=False), backend)

        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TimeElapsedColumn(),
            console=console,
        ) as progress:
            task = progress.add_task(f"{manifold.name} 퍼징 중...", total=trials)
            summary = PropertyFuzzer().fuzz(
                manifold, trials, seed, on_trial=lambda t: progress.update(task, completed=t + 1)
            )

        _emit(ReportFormatter().render(summary.to_dict(), output_format), output)

    except SpecValidationError as e:
        _fail(f"명세 검증 실패: {e}", EXIT_VALIDATION)
    except InternalConsistencyError as e:
        _fail(f"정리 감사 실패: {e}", EXIT_INCONSISTENT)


@app.command()
def examples(
    output_dir: Optional[str] = typer.Option(None, help="명세 JSON을 저장할 디렉토리 (기본: G2C_OUTPUT_DIR)"),
):
    """내장 예제 명세를 JSON 파일로 저장"""
    console.print(Panel("📐 내장 예제", style="bold blue"))
    manager = ReportFileManager(output_dir)

    table = Table(title="내장 매니폴드")
    table.add_column("이름", style="cyan")
    table.add_column("괄호 수", style="white")
    table.add_column("설명", style="white")
    table.add_column("파일", style="blue")
    for spec in builtin_examples():
        path = manager.save_spec(serialize_spec(spec) + "\n", spec.name)
        table.add_row(spec.name, str(len(spec.brackets)), escape(spec.description), escape(path))
    console.print(table)
    typer.echo("\n".join(spec.name for spec in builtin_examples()))


if __name__ == "__main__":
    app()

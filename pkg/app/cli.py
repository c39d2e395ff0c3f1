"""
Command line - hopf-lab
app/cli.py
"""
import json
import sys
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence

import click
from pydantic import BaseModel

from app.core.config import settings
from app.core.exceptions import HopfLabError, VerificationFailedError
from app.core.logging import logger
from app.domain.entities.linear import LinComb, format_scalar, key_text
from app.domain.entities.report import LawCheck
from app.schemas.algebra import ElementResponse, ScalarResponse
from app.schemas.forest import CutSchema, CutsResponse, EnumerateResponse
from app.schemas.report import (
    CertificateResponse, GradedMapSchema, IsoResponse, KernelResponse, LawReport,
    MatrixResponse, PrimTotResponse, VerifyResponse
)
from app.schemas.series import SeriesResponse
from app.services.dupdend_service import CORRUPTIONS
from app.services.forest_service import FOREST_KINDS
from app.services.parsing import parse_matching, parse_steps
from app.services.registry import ALGEBRA_NAMES, CARRIER_NAMES
from app.services.word_service import WORD_KINDS
from app.services.workbench_service import LAW_GROUPS, WORD_ACTIONS, WorkbenchService

SIDE_ALIASES = {"prec": "prec", "<": "prec", "succ": "succ", ">": "succ"}


@dataclass
class CliContext:
    service: WorkbenchService
    output_format: str

    @property
    def json(self) -> bool:
        return self.output_format == "json"


def _emit_model(model: BaseModel) -> None:
    click.echo(model.model_dump_json(indent=2, exclude_none=True))


def _emit_element(ctx: CliContext, algebra: str, value: LinComb) -> None:
    if ctx.json:
        _emit_model(ElementResponse.of(algebra, value))
    else:
        click.echo(value.to_text())


def _emit_scalar(ctx: CliContext, value: Any) -> None:
    if isinstance(value, bool):
        text = str(value).lower()
    elif isinstance(value, str):
        text = value
    else:
        text = format_scalar(value)
    if ctx.json:
        _emit_model(ScalarResponse(value=text))
    else:
        click.echo(text)


def _law_line(report: LawCheck) -> List[str]:
    status = "PASS" if report.passed else "FAIL"
    lines = [
        f"{status} {report.law} [{report.carrier}] degree<={report.degree} "
        f"checked={report.checked} failures={len(report.failures)}"
    ]
    lines += [f"    {failure}" for failure in report.failures]
    return lines


def _finish(reports: Sequence[LawCheck]) -> None:
    failed = [r.law for r in reports if not r.passed]
    if failed:
        raise VerificationFailedError(f"{len(failed)} law(s) failed: {', '.join(failed)}")


def _side(value: str) -> str:
    if value not in SIDE_ALIASES:
        raise click.BadParameter(f"expected one of {', '.join(SIDE_ALIASES)}")
    return SIDE_ALIASES[value]


pass_cli = click.make_pass_decorator(CliContext)

algebra_option = click.option("--algebra", "-a", type=click.Choice(ALGEBRA_NAMES), required=True)
alphabet_option = click.option("--alphabet", default=None, help="hp 장식 알파벳 (`a:1,b:2` 또는 `#1,1,7`)")
carrier_option = click.option("--carrier", "-c", type=click.Choice(CARRIER_NAMES), required=True)


@click.group(name="hopf-lab")
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text")
@click.option("--jobs", "-j", type=click.IntRange(min=1), default=None, help="검증 병렬 스레드 수")
@click.option("--force", is_flag=True, help="차수 가드 무시")
@click.version_option(settings.VERSION, prog_name="hopf-lab")
@click.pass_context
def cli(ctx: click.Context, output_format: str, jobs: Optional[int], force: bool) -> None:
    """Hopf algebras of forests and words: arithmetic, verification suites and isomorphism certificates."""
    ctx.obj = CliContext(WorkbenchService(jobs=jobs, force=force), output_format)
    logger.debug(f"hopf-lab {ctx.invoked_subcommand}: format={output_format} jobs={jobs} force={force}")


# ================================================================================
# 열거와 숲
# ================================================================================

@cli.command("enumerate")
@click.option("--kind", "-k", type=click.Choice(FOREST_KINDS + WORD_KINDS), required=True)
@click.option("--degree", "-n", type=int, required=True)
@alphabet_option
@pass_cli
def enumerate_command(ctx: CliContext, kind: str, degree: int, alphabet: Optional[str]) -> None:
    """n 차 기저를 정규 순서로 출력"""
    items = ctx.service.enumerate(kind, degree, alphabet)
    if ctx.json:
        _emit_model(EnumerateResponse(kind=kind, degree=degree, count=len(items), items=[key_text(i) for i in items]))
        return
    for item in items:
        click.echo(key_text(item))


@cli.command("cuts")
@click.option("--kind", "-k", type=click.Choice(FOREST_KINDS), default="ordered")
@alphabet_option
@click.argument("forest")
@pass_cli
def cuts_command(ctx: CliContext, kind: str, alphabet: Optional[str], forest: str) -> None:
    """허용 절단과 Lea / Roo"""
    cuts = ctx.service.cuts(kind, forest, alphabet)
    rows = [
        CutSchema(vertices=sorted(cut.vertices), lea=key_text(lea), roo=key_text(roo))
        for cut, lea, roo in cuts
    ]
    if ctx.json:
        _emit_model(CutsResponse(forest=forest, cuts=rows))
        return
    for row in rows:
        click.echo(f"{{{','.join(str(v) for v in row.vertices)}}}  {row.lea} (x) {row.roo}")


@cli.command("factorial")
@click.option("--kind", "-k", type=click.Choice(FOREST_KINDS), default="planar")
@click.argument("forest")
@pass_cli
def factorial_command(ctx: CliContext, kind: str, forest: str) -> None:
    """F! (정점마다 자손 포함 개수의 곱)"""
    _emit_scalar(ctx, ctx.service.factorial(kind, forest))


@cli.command("word")
@click.argument("action", type=click.Choice(WORD_ACTIONS))
@click.argument("word")
@pass_cli
def word_command(ctx: CliContext, action: str, word: str) -> None:
    """단어 유틸리티"""
    result = ctx.service.word(action, word)
    if hasattr(result, "to_text"):
        _emit_scalar(ctx, result.to_text())
    else:
        _emit_scalar(ctx, result)


# ================================================================================
# 대수 연산
# ================================================================================

@cli.command("mul")
@algebra_option
@alphabet_option
@click.argument("left")
@click.argument("right")
@pass_cli
def mul_command(ctx: CliContext, algebra: str, alphabet: Optional[str], left: str, right: str) -> None:
    """곱"""
    _emit_element(ctx, algebra, ctx.service.multiply(algebra, left, right, alphabet))


@cli.command("nwarrow")
@algebra_option
@alphabet_option
@click.argument("left")
@click.argument("right")
@pass_cli
def nwarrow_command(ctx: CliContext, algebra: str, alphabet: Optional[str], left: str, right: str) -> None:
    """↖ 곱"""
    _emit_element(ctx, algebra, ctx.service.nwarrow(algebra, left, right, alphabet))


@cli.command("comul")
@algebra_option
@alphabet_option
@click.option("--reduced", is_flag=True, help="단위원 항 제외")
@click.argument("element")
@pass_cli
def comul_command(ctx: CliContext, algebra: str, alphabet: Optional[str], reduced: bool, element: str) -> None:
    """쌍대곱"""
    _emit_element(ctx, algebra, ctx.service.comultiply(algebra, element, reduced, alphabet))


@cli.command("split")
@algebra_option
@alphabet_option
@click.option("--side", "-s", required=True, help="prec (<) 또는 succ (>)")
@click.argument("element")
@pass_cli
def split_command(ctx: CliContext, algebra: str, alphabet: Optional[str], side: str, element: str) -> None:
    """δ≺ / δ≻"""
    _emit_element(ctx, algebra, ctx.service.split(algebra, _side(side), element, alphabet))


@cli.command("antipode")
@algebra_option
@alphabet_option
@click.argument("element")
@pass_cli
def antipode_command(ctx: CliContext, algebra: str, alphabet: Optional[str], element: str) -> None:
    """대합사상 S"""
    _emit_element(ctx, algebra, ctx.service.antipode(algebra, element, alphabet))


@cli.command("dual")
@click.option("--side", "-s", default=None, help="prec (<) 또는 succ (>), 생략하면 전체 곱")
@click.option("--rule", type=click.Choice(["root", "leaf"]), default="root")
@click.argument("left")
@click.argument("right")
@pass_cli
def dual_command(ctx: CliContext, side: Optional[str], rule: str, left: str, right: str) -> None:
    """평면 숲 쌍대 기저 Z 의 곱"""
    value = ctx.service.dual(_side(side) if side else None, left, right, rule)
    _emit_element(ctx, "hp-dual", value)


# ================================================================================
# Θ 와 짝짓기
# ================================================================================

@cli.command("theta")
@click.argument("element")
@pass_cli
def theta_command(ctx: CliContext, element: str) -> None:
    """Θ: H_o → FQSym"""
    _emit_element(ctx, "fqsym", ctx.service.theta(element))


@cli.command("pairing")
@click.argument("left")
@click.argument("right")
@pass_cli
def pairing_command(ctx: CliContext, left: str, right: str) -> None:
    """순서 숲 짝짓기 ⟨x, y⟩"""
    _emit_scalar(ctx, ctx.service.pairing(left, right))


@cli.command("pairing-matrix")
@click.option("--degree", "-n", type=int, required=True)
@pass_cli
def pairing_matrix_command(ctx: CliContext, degree: int) -> None:
    """n 차 짝짓기 행렬 (정규 기저 순서)"""
    basis, matrix = ctx.service.pairing_matrix(degree)
    if ctx.json:
        _emit_model(MatrixResponse(degree=degree, basis=[key_text(b) for b in basis], matrix=matrix))
        return
    for row in matrix:
        click.echo(" ".join(str(value) for value in row))


@cli.command("kernel")
@click.option("--degree", "-n", type=int, required=True)
@click.option("--of", "of", type=click.Choice(["pairing", "theta"]), default="pairing")
@pass_cli
def kernel_command(ctx: CliContext, degree: int, of: str) -> None:
    """짝짓기 또는 Θ 의 핵 기저"""
    basis = ctx.service.kernel(degree, of)
    if ctx.json:
        _emit_model(KernelResponse(degree=degree, of=of, dimension=len(basis), basis=[b.to_text() for b in basis]))
        return
    for element in basis:
        click.echo(element.to_text())


# ================================================================================
# Dup-Dend
# ================================================================================

@cli.command("primtot")
@carrier_option
@click.option("--degree", "-n", type=int, required=True)
@click.option("--upto", is_flag=True, help="1..n 차원 목록만 출력")
@click.option("--dimension-only", is_flag=True, help="기저 없이 차원만 (계수 계산)")
@pass_cli
def primtot_command(ctx: CliContext, carrier: str, degree: int, upto: bool, dimension_only: bool) -> None:
    """Prim_tot = Ker δ≺ ∩ Ker δ≻"""
    if upto:
        dims = [ctx.service.primtot(carrier, n, dimension_only=True)[0] for n in range(1, degree + 1)]
        if ctx.json:
            click.echo(json.dumps(dims))
        else:
            click.echo(",".join(str(d) for d in dims))
        return
    dimension, basis = ctx.service.primtot(carrier, degree, dimension_only)
    if ctx.json:
        _emit_model(PrimTotResponse(
            carrier=carrier, degree=degree, dimension=dimension, basis=[b.to_text() for b in basis]
        ))
        return
    click.echo(f"dim = {dimension}")
    for element in basis:
        click.echo(element.to_text())


@cli.command("degp")
@carrier_option
@click.option("--steps", default=None, help="반복 쌍대곱 단계 (`<,>@1`); 주면 deg_p 대신 반복값 출력")
@click.argument("element")
@pass_cli
def degp_command(ctx: CliContext, carrier: str, steps: Optional[str], element: str) -> None:
    """deg_p 또는 지정한 반복 분할 쌍대곱"""
    if steps:
        _emit_element(ctx, carrier, ctx.service.iterate(carrier, parse_steps(steps), element))
    else:
        _emit_scalar(ctx, ctx.service.deg_p(carrier, element))


@cli.command("verify")
@click.option("--carrier", "-c", type=click.Choice(CARRIER_NAMES), default=None)
@click.option("--algebra", "-a", type=click.Choice(ALGEBRA_NAMES), default=None, help="hopf 묶음을 돌릴 대수")
@click.option("--laws", "-l", default="e1,e2,e3,e4", help=f"쉼표 목록 ({','.join(LAW_GROUPS)})")
@click.option("--degree", "-n", type=int, default=None)
@click.option("--corrupt", type=click.Choice(CORRUPTIONS), default=None, help="구조 상수 하나를 변조 (음성 대조군)")
@alphabet_option
@pass_cli
def verify_command(
        ctx: CliContext,
        carrier: Optional[str],
        algebra: Optional[str],
        laws: str,
        degree: Optional[int],
        corrupt: Optional[str],
        alphabet: Optional[str]
) -> None:
    """법칙 검증 (실패가 있으면 종료 코드 2)"""
    degree = degree if degree is not None else settings.DEFAULT_DEGREE
    groups = [law.strip() for law in laws.split(",") if law.strip()]
    reports = ctx.service.verify(carrier, groups, degree, corrupt, alphabet, algebra)
    if ctx.json:
        _emit_model(VerifyResponse(
            carrier=carrier or algebra or "",
            degree=degree,
            passed=all(r.passed for r in reports),
            laws=[LawReport.model_validate(r) for r in reports],
        ))
    else:
        for report in reports:
            for line in _law_line(report):
                click.echo(line)
    _finish(reports)


@cli.command("certificate")
@carrier_option
@click.option("--degree", "-n", type=int, default=None)
@click.option("--no-verify", is_flag=True, help="φ 의 Dup-Dend 사상 법칙 검사 생략")
@pass_cli
def certificate_command(ctx: CliContext, carrier: str, degree: Optional[int], no_verify: bool) -> None:
    """운반체 하나에 대한 강성 정리 인증서 (알파벳 크기, 차수별 계수)"""
    degree = degree if degree is not None else settings.DEFAULT_DEGREE
    cert = ctx.service.certificate(carrier, degree, verify=not no_verify)
    if ctx.json:
        _emit_model(CertificateResponse(
            carrier=cert.carrier,
            degree=cert.degree,
            alphabet_sizes=cert.alphabet_sizes,
            ranks=cert.ranks,
            dimensions=cert.dimensions,
            full_rank=cert.full_rank,
            passed=cert.passed,
            laws=[LawReport.model_validate(r) for r in cert.laws],
            phi=GradedMapSchema.of(cert.phi),
        ))
    else:
        click.echo(f"carrier {cert.carrier} degree<={cert.degree}")
        click.echo(f"alphabet sizes {','.join(str(s) for s in cert.alphabet_sizes)}")
        for n in sorted(cert.dimensions):
            click.echo(f"degree {n}: rank {cert.ranks[n]} / {cert.dimensions[n]}")
        for report in cert.laws:
            for line in _law_line(report):
                click.echo(line)
    _finish(cert.laws)


@cli.command("iso")
@click.option("--from", "source", type=click.Choice(CARRIER_NAMES), required=True)
@click.option("--to", "target", type=click.Choice(CARRIER_NAMES), required=True)
@click.option("--degree", "-n", type=int, default=None)
@click.option("--via", type=click.Choice(["rigidity", "theta"]), default="rigidity")
@click.option("--untwist", is_flag=True, help="χ = rev∘S 를 합성해 PQSym (cop 아님) 으로의 Hopf 사상도 검증")
@click.option("--match", "matching", default=None, help="생성원 치환 (`d3_1=d3_2,d3_2=d3_1`)")
@click.option("--matrices/--no-matrices", default=True)
@pass_cli
def iso_command(
        ctx: CliContext,
        source: str,
        target: str,
        degree: Optional[int],
        via: str,
        untwist: bool,
        matching: Optional[str],
        matrices: bool
) -> None:
    """명시적 동형 Ψ 와 그 검증 (실패가 있으면 종료 코드 2)"""
    degree = degree if degree is not None else min(settings.DEFAULT_DEGREE, settings.guard_for("iso"))
    result = ctx.service.iso(source, target, degree, via, untwist, parse_matching(matching) if matching else None)
    if ctx.json:
        _emit_model(IsoResponse(
            source=source,
            target=target,
            degree=degree,
            passed=result.passed,
            alphabet_sizes=[c.alphabet_sizes for c in result.certificates],
            laws=[LawReport.model_validate(r) for r in result.laws],
            psi=GradedMapSchema.of(result.psi),
        ))
    else:
        for cert in result.certificates:
            click.echo(f"{cert.carrier}: alphabet sizes {','.join(str(s) for s in cert.alphabet_sizes)}")
        for report in result.laws:
            for line in _law_line(report):
                click.echo(line)
        if matrices:
            for n in result.psi.degrees():
                size = len(result.psi.source_bases[n])
                click.echo(f"degree {n}: {len(result.psi.target_bases[n])}x{size}")
                for row in result.psi.matrix_text(n):
                    click.echo(" ".join(row))
    _finish(result.laws)


# ================================================================================
# 급수
# ================================================================================

@cli.command("series")
@click.option("--direction", type=click.Choice(["to-alphabet", "from-alphabet"]), default="to-alphabet")
@click.option("--source", default="ordered", help="ordered, heap-ordered, catalan, x 또는 계수 목록 `0,1,1`")
@click.option("--order", "-n", type=int, default=8)
@pass_cli
def series_command(ctx: CliContext, direction: str, source: str, order: int) -> None:
    """포앵카레-힐베르트 급수와 알파벳 급수 사이의 변환"""
    value = ctx.service.series(direction, source, order)
    if ctx.json:
        _emit_model(SeriesResponse(direction=direction, source=source, order=order, coefficients=value.to_json()))
    else:
        click.echo(value.to_text())


# ================================================================================
# 진입점
# ================================================================================

def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    CLI 실행 후 종료 코드 반환

    Returns:
        int: 0 성공, 1 파싱/사용 오류, 2 검증 실패, 3 차수 가드 초과
    """
    try:
        result = cli.main(args=list(argv) if argv is not None else None, prog_name="hopf-lab", standalone_mode=False)
    except HopfLabError as e:
        click.echo(f"error: {e}", err=True)
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return 1
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""
Operad CLI Module

오퍼라드 표현의 구성, 쌍대, 마닌 곱, 재작성, 검증을 위한 CLI 명령어를 제공합니다.

표준 출력에는 JSON 결과만, 표준 에러에는 로그와 소요 시간을 씁니다.
종료 코드: 0 (PASS/INFO), 1 (FAIL 또는 계산 오류), 2 (사용법·파싱 오류)
"""

import functools
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional

import click

from config import get_config, reload_config
from core.compat import (
    VERTEX_ORDERS,
    SigmaChoice,
    leveled_matching,
    linear_compat,
    matching_compat,
    matching_count_report,
    parse_sigma,
    total_compat,
)
from core.exceptions import (
    MalformedSigmaError,
    OperadError,
    ParseError,
    UnknownSymbolError,
)
from core.koszul import koszul_dual
from core.manin import manin_product
from core.polarization import WeakComposition, polarization_family, quasipolarize
from core.presentations import builtin, dumps, list_builtins, parse_file, render_dsl, to_json
from core.presentations.model import Presentation
from core.rewrite import component_dimension, dimension_sequence, normal_monomials
from core.rewrite.verify import gb_report, rewrite_system_for, verify_unique_normal_forms
from core.verify.registry import list_verifiers, run_verifier
from core.verify.report import FAIL, INFO, VerificationReport, jsonable
from utils.logging import ROOT_LOGGER, setup_logger
from utils.validators import parse_color_option, validate_output_path, validate_source_file

logger = None


def init_logger(debug: bool = False):
    """로거를 초기화합니다."""
    global logger
    config = get_config()

    level = "DEBUG" if debug else config.logging.level

    logger = setup_logger(
        ROOT_LOGGER,
        level=level,
        log_file=config.logging.file or None,
        console=config.logging.console,
        log_format=config.logging.format,
        date_format=config.logging.date_format,
    )

    return logger


def handle_errors(fn):
    """
    도메인 예외를 종료 코드로 바꿉니다.

    파싱·σ 형식·알 수 없는 이름·잘못된 값은 2, 그 밖의 엔진 오류는 1입니다.
    """

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        debug = ctx.obj.get("debug", False) if ctx.obj else False
        try:
            return fn(*args, **kwargs)
        except (ParseError, MalformedSigmaError, UnknownSymbolError) as e:
            click.echo(f"오류: {e}", err=True)
            ctx.exit(2)
        except OperadError as e:
            logger.error(f"계산 실패: {e}", exc_info=debug)
            click.echo(f"오류: {e}", err=True)
            ctx.exit(1)
        except (ValueError, FileNotFoundError) as e:
            click.echo(f"오류: {e}", err=True)
            ctx.exit(2)

    return wrapper


def load_presentation(source: str) -> Presentation:
    """파일 경로 또는 내장 오퍼라드 이름"""
    if Path(source).exists():
        return parse_file(validate_source_file(source))
    if source in list_builtins():
        return builtin(source)
    raise FileNotFoundError(f"파일도 내장 오퍼라드도 아닙니다: {source}")


def palette_from(colors: Optional[int], color_names: Optional[str]) -> List[str]:
    config = get_config().colors
    count = colors if colors is not None else config.default_count
    return parse_color_option(count, color_names, config.prefix)


def color_options(fn):
    fn = click.option("--color-names", help="쉼표로 구분한 색 이름 (선언 순서)")(fn)
    fn = click.option("--colors", "-c", type=int, help="색 개수 N (c0..c(N-1))")(fn)
    return fn


def output_option(fn):
    return click.option("--output", "-o", type=click.Path(), help="결과 저장 경로 (.opd / .json)")(fn)


def emit(
    ctx: click.Context,
    status: str,
    payload: Dict[str, Any],
    output: Optional[str] = None,
    presentation: Optional[Presentation] = None,
) -> None:
    """CommandReport를 출력하고 FAIL이면 종료 코드 1로 끝냅니다."""
    report = {
        "command": {"name": ctx.info_name, "params": jsonable(ctx.params)},
        "status": status,
        "payload": jsonable(payload),
    }
    text = dumps(report)
    click.echo(text)
    if output:
        path = validate_output_path(output)
        if path.suffix.lower() == ".opd":
            if presentation is None:
                raise ValueError(".opd 출력은 표현을 만드는 명령에서만 쓸 수 있습니다")
            path.write_text(render_dsl(presentation), encoding="utf-8")
        else:
            path.write_text(text + "\n", encoding="utf-8")
        click.echo(f"결과 저장: {path}", err=True)
    started = ctx.find_root().obj.get("started")
    if started is not None:
        click.echo(f"소요 시간: {time.perf_counter() - started:.3f}s", err=True)
    if status == FAIL:
        ctx.exit(1)


def emit_presentation(ctx: click.Context, p: Presentation, output: Optional[str]) -> None:
    payload = {"presentation": to_json(p), "dsl": render_dsl(p), "dimensions": p.dimensions()}
    emit(ctx, INFO, payload, output, p)


def emit_report(ctx: click.Context, report: VerificationReport, output: Optional[str]) -> None:
    emit(ctx, report.status, report.to_dict(), output)


@click.group()
@click.option('--debug', is_flag=True, help='디버그 모드 활성화')
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False),
              help='설정 파일 경로 (YAML)')
@click.pass_context
def cli(ctx, debug, config_path):
    """
    operad-compat - 호환 오퍼라드 구성 및 검증 CLI 도구

    선형·매칭·완전 호환 오퍼라드, 코쥘 쌍대, 마닌 곱, 그뢰브너 기저를 정확한 유리수 연산으로
    계산합니다.
    """
    ctx.ensure_object(dict)
    if config_path:
        reload_config(config_path)
    ctx.obj['logger'] = init_logger(debug)
    ctx.obj['debug'] = debug
    ctx.obj['started'] = time.perf_counter()


@cli.command()
@click.argument('source')
@output_option
@click.pass_context
@handle_errors
def parse(ctx, source, output):
    """
    표현을 파싱해 DSL과 JSON으로 출력합니다.

    SOURCE: .opd 파일 경로 또는 내장 오퍼라드 이름
    """
    emit_presentation(ctx, load_presentation(source), output)


@cli.command()
@click.argument('source')
@click.option('--arity', '-n', type=int, required=True, help='항수 n')
@click.option('--sequence', 'with_sequence', is_flag=True, help='항수 1..n 차원을 모두 출력')
@output_option
@click.pass_context
@handle_errors
def dims(ctx, source, arity, with_sequence, output):
    """
    항수 n 에서 오퍼라드 성분의 차원을 계산합니다 (2항 표현).

    SOURCE: .opd 파일 경로 또는 내장 오퍼라드 이름
    """
    p = load_presentation(source)
    payload: Dict[str, Any] = {
        "operad": p.name,
        "arity": arity,
        "dimension": component_dimension(p, arity),
    }
    if with_sequence:
        payload["sequence"] = dimension_sequence(p, arity)
    emit(ctx, INFO, payload, output)


@cli.command()
@click.argument('source')
@color_options
@click.option('--type', 'type_text', help='약조성 c (예: 1,1). 생략하면 모든 유형')
@output_option
@click.pass_context
@handle_errors
def polarize(ctx, source, colors, color_names, type_text, output):
    """
    각 관계의 준편극을 유형별로 출력합니다.

    SOURCE: .opd 파일 경로 또는 내장 오퍼라드 이름
    """
    p = load_presentation(source)
    palette = palette_from(colors, color_names)
    entries = []
    for name, rel in p.named_relations():
        if type_text:
            c = WeakComposition(tuple(int(v) for v in type_text.split(",")))
            if len(c.values) != len(palette):
                raise ValueError(f"유형 {c} 의 길이가 색 개수 {len(palette)}와 다릅니다")
            family = [(c, quasipolarize(rel, palette, c))]
        else:
            family = polarization_family(rel, palette)
        for c, g in family:
            entries.append({"relation": name, "type": c.render(), "polarization": g.render()})
    emit(ctx, INFO, {"operad": p.name, "colors": palette, "polarizations": entries}, output)


@cli.command()
@click.argument('source')
@color_options
@output_option
@click.pass_context
@handle_errors
def lin(ctx, source, colors, color_names, output):
    """선형 호환 표현 Lin_Ω(P)"""
    p = load_presentation(source)
    emit_presentation(ctx, linear_compat(p, palette_from(colors, color_names)), output)


@cli.command()
@click.argument('source')
@color_options
@click.option('--sigma', '-s', default="", help='매칭 선택 (예: "r1:c(1,1)=(12),e")')
@output_option
@click.pass_context
@handle_errors
def mt(ctx, source, colors, color_names, sigma, output):
    """σ-매칭 호환 표현 MT^σ_Ω(P). σ를 생략하면 레벨 매칭입니다."""
    p = load_presentation(source)
    palette = palette_from(colors, color_names)
    emit_presentation(ctx, matching_compat(p, palette, parse_sigma(sigma, p, palette)), output)


@cli.command()
@click.argument('source')
@color_options
@click.option(
    '--vertex-order',
    type=click.Choice(VERTEX_ORDERS),
    default='preorder',
    show_default=True,
    help='색 단어를 읽는 꼭짓점 순서 (inorder: 표준 평면 트리의 중위 순서)',
)
@output_option
@click.pass_context
@handle_errors
def lmt(ctx, source, colors, color_names, vertex_order, output):
    """레벨 매칭 호환 표현 LMT_Ω(P)"""
    p = load_presentation(source)
    palette = palette_from(colors, color_names)
    emit_presentation(ctx, leveled_matching(p, palette, vertex_order), output)


@cli.command()
@click.argument('source')
@color_options
@click.option('--sigma', '-s', default="", help='매칭 선택 (관계 공간은 선택과 무관)')
@output_option
@click.pass_context
@handle_errors
def tot(ctx, source, colors, color_names, sigma, output):
    """완전 호환 표현 Tot_Ω(P)"""
    p = load_presentation(source)
    palette = palette_from(colors, color_names)
    choice = parse_sigma(sigma, p, palette) if sigma else None
    emit_presentation(ctx, total_compat(p, palette, choice), output)


@cli.command()
@click.argument('source')
@output_option
@click.pass_context
@handle_errors
def dual(ctx, source, output):
    """코쥘 쌍대 P^! (생성원 이름 x → x_dual)"""
    emit_presentation(ctx, koszul_dual(load_presentation(source)), output)


@cli.command()
@click.argument('left')
@click.argument('right')
@click.option('--black', 'kind', flag_value='black', default=True, help='검은 곱 P●Q')
@click.option('--white', 'kind', flag_value='white', help='흰 곱 P○Q')
@output_option
@click.pass_context
@handle_errors
def manin(ctx, left, right, kind, output):
    """
    마닌 곱을 계산합니다.

    LEFT, RIGHT: .opd 파일 경로 또는 내장 오퍼라드 이름
    """
    p, q = load_presentation(left), load_presentation(right)
    emit_presentation(ctx, manin_product(p, q, kind), output)


@cli.command()
@click.argument('source')
@click.option('--colors', '-c', type=int, help='색 개수 N (주면 LMT 규칙)')
@click.option('--color-names', help='쉼표로 구분한 색 이름')
@click.option('--check-confluence', is_flag=True, help='임계 단항식 합류성 검사')
@click.option('--normal-arity', type=int, help='이 항수의 정규 단항식 개수 보고')
@click.option('--samples', type=int, default=0, help='무작위 재작성 전략 비교 횟수')
@click.option('--seed', type=int, help='무작위 시드 (기본: properties.default_seed)')
@output_option
@click.pass_context
@handle_errors
def gb(ctx, source, colors, color_names, check_confluence, normal_arity, samples, seed, output):
    """
    관계를 경로 사전식 순서로 방향을 정해 재작성 규칙을 만듭니다.

    SOURCE: .opd 파일 경로 또는 내장 오퍼라드 이름
    """
    p = load_presentation(source)
    palette = parse_color_option(colors, color_names) if colors or color_names else None
    system = rewrite_system_for(p, palette)
    if check_confluence:
        report = gb_report(system)
    else:
        report = VerificationReport(
            "gb",
            INFO,
            {
                "operad": system.name,
                "order": system.order.render(),
                "rules": [rule.render() for rule in system],
            },
        )
    if normal_arity:
        report.details["normal_monomials"] = {
            normal_arity: len(normal_monomials(system, normal_arity))
        }
    if samples:
        seed = seed if seed is not None else get_config().properties.default_seed
        unique = verify_unique_normal_forms(system, samples, seed)
        report.details["unique_normal_forms"] = unique.to_dict()
        if unique.status == FAIL:
            report.status = FAIL
    emit_report(ctx, report, output)


@cli.command('count-matching')
@click.argument('source')
@color_options
@output_option
@click.pass_context
@handle_errors
def count_matching_command(ctx, source, colors, color_names, output):
    """매칭 선택 σ의 개수 |Λ(R)|"""
    p = load_presentation(source)
    emit_report(ctx, matching_count_report(p, palette_from(colors, color_names)), output)


@cli.command()
@click.argument('theorem_id', required=False)
@click.argument('source', required=False)
@color_options
@click.option('--sigma', '-s', default="", help='mt-dual-search 의 σ')
@click.option('--list', 'list_only', is_flag=True, help='검증기 목록 출력')
@output_option
@click.pass_context
@handle_errors
def verify(ctx, theorem_id, source, colors, color_names, sigma, list_only, output):
    """
    정리 검증기를 실행합니다.

    THEOREM_ID: 검증기 id (--list 로 확인)
    SOURCE: .opd 파일 경로 또는 내장 오퍼라드 이름 (생략하면 검증기 기본값)
    """
    if list_only or not theorem_id:
        verifiers = [{"id": i, "description": d} for i, d in list_verifiers()]
        emit(ctx, INFO, {"verifiers": verifiers}, output)
        return
    p = load_presentation(source) if source else None
    palette = palette_from(colors, color_names)
    choice: Optional[SigmaChoice] = None
    if sigma:
        if p is None:
            raise ValueError("--sigma 는 SOURCE와 함께 써야 합니다")
        choice = parse_sigma(sigma, p, palette)
    emit_report(ctx, run_verifier(theorem_id, p, palette, choice), output)


@cli.command()
@click.pass_context
@handle_errors
def builtins(ctx):
    """내장 오퍼라드 목록"""
    entries = []
    for name in list_builtins():
        p = builtin(name)
        entries.append(
            {
                "name": name,
                "generators": [g.symbol.render() for g in p.generators],
                "relations": len(p.relations),
            }
        )
    emit(ctx, INFO, {"builtins": entries})


def run(argv: Optional[List[str]] = None) -> int:
    """
    명령을 실행하고 종료 코드를 돌려줍니다.

    Args:
        argv: 명령행 인자 (None이면 sys.argv)
    """
    try:
        cli.main(args=argv, prog_name="operad", obj={})
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    return 0


def main():
    """메인 진입점"""
    sys.exit(run())


if __name__ == '__main__':
    main()

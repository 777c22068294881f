#!/usr/bin/env python3
"""
CLI Commands
------------
Subcomandos click que envolvem cada operação da biblioteca.

Códigos de saída:
    0 sucesso ou veredito verdadeiro, 1 veredito falso, 2 erro de uso ou de
    parsing, 3 falha de propriedade, 4 recursos esgotados.
"""

import functools
import json
import logging
from typing import Callable, List, Optional

import click
import jsonschema

from bundles.dominance import common_factor_decompose, slopewise_dominates
from bundles.errors import BundleError, InvariantViolation, VerifyResourceError
from bundles.hn_core import dual, format_slope, slice_bundle, stretch, tensor, twist
from bundles.pairing import (
    deg_pair,
    deg_pair_nonneg,
    ext1_vanishes_sufficient,
    hom_is_zero,
    hom_moduli_dim,
)
from criteria.classify import (
    is_globally_generated,
    is_quotient,
    is_quotient_polygonal,
    subbundle_necessary,
    subbundle_sufficient,
)
from criteria.reduction import (
    HYPOTHESIS_TAGS,
    c_value,
    key_inequality_check,
    slope_reduction_sequence,
)
from verify.config import EnumBounds, get_settings, triple_bounds
from verify.properties import PROPERTIES
from verify.runner import run_property_suite

from .formatter import (
    format_bundle,
    format_info,
    format_key_report,
    format_report,
    format_trace,
    format_verdict,
)
from .parser import parse_bundle, parse_slope
from .schemas import (
    BundleModel,
    TraceModel,
    dump_json,
    get_schema_for_payload,
    validate_payload,
)
from .svg import ALIGNMENTS, render_svg
from .utils import (
    EXIT_FALSE,
    EXIT_OK,
    EXIT_PROPERTY_FAILURE,
    clean_logger,
    exit_code_for,
    get_user_friendly_error_message,
    log_error,
)

logger = logging.getLogger(__name__)

SLICE_ALIASES = {"le": "<=", "lt": "<", "ge": ">=", "gt": ">"}


class BundleParamType(click.ParamType):
    """Argumento click na gramática de fibrados."""

    name = "bundle"

    def convert(self, value, param, ctx):
        try:
            return parse_bundle(value)
        except BundleError as e:
            self.fail(get_user_friendly_error_message(e), param, ctx)


class SlopeParamType(click.ParamType):
    name = "slope"

    def convert(self, value, param, ctx):
        try:
            return parse_slope(value)
        except BundleError as e:
            self.fail(get_user_friendly_error_message(e), param, ctx)

BUNDLE = BundleParamType()
SLOPE = SlopeParamType()


def handle_errors(command: Callable) -> Callable:
    """Converte rejeições da biblioteca em mensagem no stderr e código de saída."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (BundleError, InvariantViolation, VerifyResourceError, OSError,
                jsonschema.ValidationError) as e:
            log_error(e, command.__name__)
            click.echo(get_user_friendly_error_message(e), err=True)
            click.get_current_context().exit(exit_code_for(e))

    return wrapper


def verdict_exit(answer: bool) -> None:
    click.get_current_context().exit(EXIT_OK if answer else EXIT_FALSE)


def verdict_json(verdict, **extra) -> str:
    condition, witness = verdict.failed_condition, verdict.witness_mu
    payload = {
        "answer": verdict.answer,
        "failed_condition": condition.value if condition else None,
        "witness_mu": format_slope(witness) if witness is not None else None,
        **extra,
    }
    return json.dumps(payload, sort_keys=True, indent=2)


def checked_json(model, kind: str) -> str:
    """Serializa o modelo e confere o documento contra o schema do tipo `kind`."""
    text = dump_json(model)
    validate_payload(json.loads(text), get_schema_for_payload(kind))
    return text


def write_json(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
    logger.info("wrote %s", path)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option("0.1.0", prog_name="hnff")
def cli():
    """Cálculo exato de polígonos HN de fibrados vetoriais."""


@cli.command()
@click.argument("bundle", type=BUNDLE)
@click.option("--json", "as_json", is_flag=True, help="Print the JSON wire form")
@handle_errors
def info(bundle, as_json):
    """Rank, degree, slopes and semistability of BUNDLE."""
    if as_json:
        click.echo(checked_json(BundleModel.from_bundle(bundle), "bundle"), nl=False)
    else:
        click.echo(format_info(bundle))


@cli.command(name="tensor")
@click.argument("a", type=BUNDLE)
@click.argument("b", type=BUNDLE)
@handle_errors
def tensor_cmd(a, b):
    """Tensor product A ⊗ B."""
    click.echo(format_bundle(tensor(a, b)))


@cli.command(name="dual")
@click.argument("bundle", type=BUNDLE)
@handle_errors
def dual_cmd(bundle):
    """Dual bundle."""
    click.echo(format_bundle(dual(bundle)))


@cli.command(name="twist")
@click.argument("bundle", type=BUNDLE)
@click.argument("slope", type=SLOPE)
@handle_errors
def twist_cmd(bundle, slope):
    """BUNDLE ⊗ O(SLOPE)."""
    click.echo(format_bundle(twist(bundle, slope)))


@cli.command(name="stretch")
@click.argument("bundle", type=BUNDLE)
@click.argument("factor", type=click.IntRange(min=1))
@handle_errors
def stretch_cmd(bundle, factor):
    """Vertical stretch of the HN polygon by FACTOR."""
    click.echo(format_bundle(stretch(bundle, factor)))


@cli.command(name="slice")
@click.argument("bundle", type=BUNDLE)
@click.argument("mu", type=SLOPE)
@click.argument("mode", type=click.Choice(["<=", "<", ">=", ">", *SLICE_ALIASES]))
@handle_errors
def slice_cmd(bundle, mu, mode):
    """Factors of BUNDLE whose slope compares to MU by MODE."""
    click.echo(format_bundle(slice_bundle(bundle, mu, SLICE_ALIASES.get(mode, mode))))


@cli.command()
@click.argument("v", type=BUNDLE)
@click.argument("w", type=BUNDLE)
@handle_errors
def pairing(v, w):
    """Degree pairings, Hom vanishing and moduli dimension for V → W."""
    click.echo(f"deg(V^∨⊗W) = {deg_pair(v, w)}")
    click.echo(f"deg(V^∨⊗W)^≥0 = {deg_pair_nonneg(v, w)}")
    click.echo(f"hom vanishes: {str(hom_is_zero(v, w)).lower()}")
    click.echo(f"moduli dimension: {hom_moduli_dim(v, w)}")
    if not v.is_zero and not w.is_zero:
        guaranteed = ext1_vanishes_sufficient(v, w)
        click.echo(f"ext1 vanishes: {'true' if guaranteed else 'not guaranteed'}")


@cli.command()
@click.argument("v", type=BUNDLE)
@click.argument("w", type=BUNDLE)
@handle_errors
def dominates(v, w):
    """Does V slopewise dominate W? Prints the common factor split if so."""
    answer = slopewise_dominates(v, w)
    click.echo(str(answer).lower())
    if answer:
        split = common_factor_decompose(v, w)
        click.echo(f"U = {split.common}  V' = {split.v_rest}  W' = {split.w_rest}")
    verdict_exit(answer)


@cli.command()
@click.argument("e", type=BUNDLE)
@click.argument("f", type=BUNDLE)
@click.option("--explain", is_flag=True, help="Report the failing condition and mu")
@click.option("--polygonal", is_flag=True, help="Use the right-aligned polygon criterion")
@click.option("--json", "as_json", is_flag=True, help="Print the verdict as JSON")
@handle_errors
def quotient(e, f, explain, polygonal, as_json):
    """Is F a quotient bundle of E?"""
    verdict = (is_quotient_polygonal if polygonal else is_quotient)(e, f)
    if as_json:
        click.echo(verdict_json(verdict))
    else:
        click.echo(format_verdict(verdict, explain))
    verdict_exit(verdict.answer)


@cli.command()
@click.argument("e", type=BUNDLE)
@click.argument("d", type=BUNDLE)
@click.option("--conjecture", is_flag=True, help="Also report the conjectural criterion")
@click.option("--explain", is_flag=True, help="Report the failing condition and mu")
@click.option("--json", "as_json", is_flag=True, help="Print the verdict as JSON")
@handle_errors
def sub(e, d, conjecture, explain, as_json):
    """Is D a subbundle of E? A false sufficient test is reported as inconclusive."""
    verdict = subbundle_sufficient(e, d)
    necessary = subbundle_necessary(e, d) if conjecture else None
    if as_json:
        extra = {"necessary": necessary} if conjecture else {}
        click.echo(verdict_json(verdict, **extra))
        verdict_exit(verdict.answer)
    click.echo("true" if verdict.answer else "inconclusive")
    if explain:
        click.echo(verdict.explain())
    if conjecture:
        click.echo(
            f"necessary condition (conjecturally sufficient): {str(necessary).lower()}"
        )
    verdict_exit(verdict.answer)


@cli.command()
@click.argument("f", type=BUNDLE)
@click.argument("n", type=click.IntRange(min=1))
@handle_errors
def globgen(f, n):
    """Is F generated by N global sections?"""
    answer = is_globally_generated(f, n)
    click.echo(str(answer).lower())
    verdict_exit(answer)


@cli.command(name="c")
@click.argument("e", type=BUNDLE)
@click.argument("f", type=BUNDLE)
@click.argument("q", type=BUNDLE)
@click.option("--report", "with_report", is_flag=True,
              help="Show the key inequality hypotheses")
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON")
@handle_errors
def c_cmd(e, f, q, with_report, as_json):
    """The quantity c_{E,F}(Q)."""
    if as_json:
        report = key_inequality_check(e, f, q)
        payload = {
            "c": report.c,
            "hypotheses": dict(zip(HYPOTHESIS_TAGS, report.hypotheses)),
            "inequality_holds": report.inequality_holds,
            "equality_consistent": report.equality_consistent,
            "conclusion_holds": report.conclusion_holds,
        }
        click.echo(json.dumps(payload, sort_keys=True, indent=2))
    elif with_report:
        click.echo(format_key_report(key_inequality_check(e, f, q)))
    else:
        click.echo(str(c_value(e, f, q)))


@cli.command()
@click.argument("e", type=BUNDLE)
@click.argument("f", type=BUNDLE)
@click.argument("q", type=BUNDLE)
@click.option("--trace", "trace_path", type=click.Path(dir_okay=False, writable=True),
              help="Write the reduction trace as JSON")
@click.option("--json", "as_json", is_flag=True, help="Print the trace as JSON")
@handle_errors
def reduce(e, f, q, trace_path, as_json):
    """Run the slope reduction sequence from F down to Q."""
    trace = slope_reduction_sequence(e, f, q)
    text = checked_json(TraceModel.from_trace(trace), "trace")
    if as_json:
        click.echo(text, nl=False)
    else:
        click.echo(format_trace(trace))
    if trace_path:
        write_json(trace_path, text)


@cli.command()
@click.option("--max-rank", type=click.IntRange(min=1), default=4, show_default=True)
@click.option("--max-deg", type=click.IntRange(min=0), default=4, show_default=True)
@click.option("--max-den", type=click.IntRange(min=1), default=2, show_default=True)
@click.option("--include-zero/--no-zero", default=False, show_default=True)
@click.option("--jobs", type=click.IntRange(min=1), default=None,
              help="Worker processes [default: HNFF_MAX_JOBS]")
@click.option("--triple-rank", type=click.IntRange(min=1), default=None,
              help="Rank bound of the integer triple domain")
@click.option("--triple-slope", type=click.IntRange(min=0), default=None,
              help="Bound on |slope| in the integer triple domain")
@click.option("--failure-limit", type=click.IntRange(min=1), default=None)
@click.option("--property", "names", multiple=True, type=click.Choice(sorted(PROPERTIES)),
              help="Run only these properties (repeatable)")
@click.option("--report", "report_path", type=click.Path(dir_okay=False, writable=True),
              help="Write the report as JSON")
@click.option("--progress/--no-progress", default=False)
@handle_errors
def verify(max_rank, max_deg, max_den, include_zero, jobs, triple_rank, triple_slope,
           failure_limit, names, report_path, progress):
    """Exhaustive property suite over all bundles within the bounds."""
    bounds = EnumBounds(
        max_rank=max_rank,
        max_abs_degree=max_deg,
        max_denominator=max_den,
        include_zero=include_zero,
    )
    jobs = jobs or get_settings().max_jobs
    clean_logger.info(f"🚀 verify: rank<={max_rank} |deg|<={max_deg} den<={max_den} jobs={jobs}")
    report = run_property_suite(
        bounds,
        jobs=jobs,
        triples=triple_bounds(triple_rank, triple_slope),
        properties=list(names) or None,
        failure_limit=failure_limit,
        progress=progress,
    )
    click.echo(format_report(report))
    if report_path:
        write_json(report_path, checked_json(report, "report"))
    if not report.passed:
        clean_logger.info(f"❌ failing properties: {', '.join(report.failing)}")
        click.get_current_context().exit(EXIT_PROPERTY_FAILURE)


@cli.command()
@click.argument("bundles", type=BUNDLE, nargs=-1, required=True)
@click.option("--align", type=click.Choice(ALIGNMENTS), default="left", show_default=True)
@click.option("--scale", type=click.IntRange(min=1), default=None,
              help="Pixels per unit [default: HNFF_SVG_SCALE]")
@click.option("-o", "--output", type=click.File("w", encoding="utf-8"), default="-",
              show_default=True)
@handle_errors
def svg(bundles, align, scale, output):
    """Render the HN polygons of BUNDLES as SVG."""
    output.write(render_svg(list(bundles), align, scale))


def main(argv: Optional[List[str]] = None) -> int:
    """
    Executa a CLI e devolve o código de saída em vez de encerrar o processo.
    """
    try:
        result = cli.main(args=argv, prog_name="hnff", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_FALSE
    return result if isinstance(result, int) else EXIT_OK

"""
wr-ideals command line.

Every subcommand writes rows with a fixed column order to stdout in the
format chosen by --format; logs go to stderr. Domain errors exit with
status 1 and a one-line diagnostic, usage errors with status 2.
"""

import functools
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import click
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from .arith.integers import is_squarefree
from .config import (
    A_MAX_FACTOR,
    DEFAULT_NU,
    DEFAULT_PRINCIPAL_HEIGHT,
    LOG_FORMAT,
    PACKAGE_NAME,
    PACKAGE_VERSION,
    ScanOptions,
)
from .diophantine.nearsquare import as_nu, nearsquare_witness
from .diophantine.solver import bound_report, count_functions, f2_divisor_count, solve_pq
from .errors import InvalidArgumentError, WRIdealError
from .latgeom.ideal_lattices import gram_of_ideal, wr_real_criterion
from .latgeom.minima import brute_force_minima
from .latgeom.reduction import is_matrix_integral, is_wr, minimal_vector_count, reduce_form, similarity_class
from .models.fields import IdealBasis
from .models.forms import QuadForm
from .models.survey import SurveyRecord
from .output import FORMATS, RowWriter
from .quadfield.fields import make_field
from .quadfield.ideals import construct_wr_ideal, enumerate_ideals
from .survey.classify import class_number_imag, classify_wr_ideals, principal_wr_search, real_field_scan
from .survey.scan import density_report, iter_survey_records, summarize
from .survey.table1 import table1_report

logger = logging.getLogger(__name__)


def setup_logging(verbose: bool, quiet: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        handlers=[RichHandler(console=Console(stderr=True), show_time=False, show_path=False)],
        force=True,
    )


def format_option(f: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--format", "fmt", type=click.Choice(FORMATS), default="csv", show_default=True,
        help="Output encoding",
    )(f)


def writer(fmt: str, columns: Sequence[str], title: Optional[str] = None) -> RowWriter:
    return RowWriter(fmt, columns, sys.stdout, title=title)


def form_row(prefix: str, form: QuadForm) -> Dict[str, int]:
    return {f"{prefix}A": form.A, f"{prefix}B": form.B, f"{prefix}C": form.C}


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Debug logging on stderr")
@click.option("--quiet", "-q", is_flag=True, help="Only warnings and errors on stderr")
@click.version_option(version=PACKAGE_VERSION, prog_name=PACKAGE_NAME)
def cli(verbose: bool, quiet: bool) -> None:
    """Well-rounded ideals in quadratic fields."""
    setup_logging(verbose, quiet)


@cli.command()
@click.option("--D", "D", type=int, required=True, help="Squarefree D ≥ 1")
@click.option("--r", "r", type=int, default=1, show_default=True)
@format_option
def solve(D: int, r: int, fmt: str) -> None:
    """Coprime (p, q) with p² + r²D = q² and p/q ≤ 1/2."""
    with writer(fmt, ["D", "r", "p", "q"], title=f"p² + {r}²·{D} = q²") as out:
        for p, q in solve_pq(D, r):
            out.write({"D": D, "r": r, "p": p, "q": q})


@cli.command()
@click.option("--D", "D", type=int, required=True)
@click.option("--nu", "nu", default=str(DEFAULT_NU), show_default=True, help="Threshold ν > 1 as num/den")
@format_option
def nearsquare(D: int, nu: str, fmt: str) -> None:
    """Smallest divisor d of D with √(D/ν) ≤ d < √D."""
    value = as_nu(nu)
    witness = nearsquare_witness(D, value)
    with writer(fmt, ["D", "nu", "witness", "nearsquare"]) as out:
        out.write({"D": D, "nu": value, "witness": witness, "nearsquare": witness is not None})


@cli.command()
@click.option("--D", "D", type=int, required=True)
@click.option("--r", "r", type=int, default=1, show_default=True)
@format_option
def counts(D: int, r: int, fmt: str) -> None:
    """Counting functions f, f1, f2 and the bound on f1 for odd D."""
    triple = count_functions(D, r)
    divisor_count = f2_divisor_count(D, r)
    row: Dict[str, Any] = {
        "D": D, "r": r, "f": triple.f, "f1": triple.f1, "f2": triple.f2,
        "f2_divisors": divisor_count, "f2_parity_mismatch": divisor_count != triple.f2,
        "omega": None, "f1_bound": None, "f1_bound_ok": None, "f_over_2_pow_omega": None,
    }
    if divisor_count != triple.f2:
        logger.warning(f"D={D}, r={r}: divisor count {divisor_count} differs from f2={triple.f2}")
    if D % 2:
        report = bound_report(D)
        row.update(
            omega=report.omega, f1_bound=report.f1_bound,
            f1_bound_ok=report.f1_bound_ok, f_over_2_pow_omega=report.ratio,
        )
    with writer(fmt, list(row)) as out:
        out.write(row)


@cli.command()
@click.option("--D", "D", type=int, required=True, help="Odd squarefree D")
@click.option("--p", "p", type=int, default=None, help="Defaults to every solution")
@click.option("--q", "q", type=int, default=None)
@click.option("--sign", type=click.Choice(["real", "imaginary", "both"]), default="both", show_default=True)
@click.option("--companion", is_flag=True, help="Use s = q − p instead of s = p + q")
@format_option
def construct(
    D: int, p: Optional[int], q: Optional[int], sign: str, companion: bool, fmt: str
) -> None:
    """Primitive well-rounded ideals of class (p, q, 1, D)."""
    if (p is None) != (q is None):
        raise InvalidArgumentError("--p and --q must be given together")
    pairs = [(p, q)] if p is not None and q is not None else solve_pq(D, 1)
    signs = ["real", "imaginary"] if sign == "both" else [sign]
    columns = ["D", "p", "q", "sign", "m", "a", "b", "g", "A", "B", "C", "wr", "class_p", "class_q", "class_r"]
    # build every row first so an invalid (p, q) fails before the header is written
    rows: List[Dict[str, Any]] = []
    for p, q in pairs:
        for field_sign in signs:
            ideal = construct_wr_ideal(D, p, q, field_sign, companion=companion)
            form = gram_of_ideal(ideal)
            cls = similarity_class(form)
            rows.append({
                "D": D, "p": p, "q": q, "sign": field_sign, "m": ideal.field.m,
                "a": ideal.a, "b": ideal.b, "g": ideal.g, **form_row("", form), "wr": is_wr(form),
                "class_p": cls.p, "class_q": cls.q, "class_r": cls.r,
            })
    with writer(fmt, columns) as out:
        for row in rows:
            out.write(row)


@cli.command()
@click.option("--field", "m", type=int, required=True, help="Signed squarefree m")
@click.option("--a-max", "a_max", type=int, required=True)
@click.option("--primitive", is_flag=True, help="Only ideals with g = 1")
@format_option
def ideals(m: int, a_max: int, primitive: bool, fmt: str) -> None:
    """Canonical ideal bases with a ≤ a_max and their norm forms."""
    field = make_field(m)
    columns = ["m", "a", "b", "g", "norm", "A", "B", "C", "wr"]
    with writer(fmt, columns, title=f"Ideals of {field}") as out:
        for ideal in enumerate_ideals(field, a_max, primitive_only=primitive):
            form = gram_of_ideal(ideal)
            out.write({
                "m": m, "a": ideal.a, "b": ideal.b, "g": ideal.g, "norm": ideal.norm,
                **form_row("", form), "wr": is_wr(form),
            })


@cli.command()
@click.option("--field", "m", type=int, required=True)
@click.option("--a-max", "a_max", type=int, default=None, help=f"Defaults to {A_MAX_FACTOR}·D")
@format_option
def classify(m: int, a_max: Optional[int], fmt: str) -> None:
    """
    Well-rounded ideals of one field grouped by similarity class.

    Ideal rows are sorted by (p, q, r), then (a, g, b); a summary row follows.
    """
    field = make_field(m)
    report = classify_wr_ideals(field, a_max)
    columns = ["kind", "m", "a", "b", "g", "p", "q", "r", "wr_class_count", "h", "complete"]
    rows: List[Dict[str, Any]] = []
    for ideal in report.representatives:
        cls = similarity_class(gram_of_ideal(ideal))
        rows.append({
            "kind": "ideal", "m": m, "a": ideal.a, "b": ideal.b, "g": ideal.g,
            "p": cls.p, "q": cls.q, "r": cls.r,
        })
    # representatives come in (a, g, b) order and sorted() is stable
    rows.sort(key=lambda row: (row["p"], row["q"], row["r"]))
    with writer(fmt, columns, title=f"Well-rounded ideals of {field}") as out:
        for row in rows:
            out.write(row)
        out.write({
            "kind": "summary", "m": m, "wr_class_count": report.wr_class_count,
            "h": report.h, "complete": report.complete,
        })


@cli.command()
@click.option("--form", "coefficients", type=int, nargs=3, required=True, metavar="A B C")
@format_option
def reduce(coefficients: Tuple[int, int, int], fmt: str) -> None:
    """Reduce Ax² + Bxy + Cy² to 0 ≤ B ≤ A ≤ C."""
    form = QuadForm(*coefficients)
    result = reduce_form(form)
    reduced = result.form
    wr = reduced.A == reduced.C
    cls = similarity_class(form) if wr else None
    columns = [
        "A", "B", "C", "reduced_A", "reduced_B", "reduced_C", "s1", "s2", "s3", "s4",
        "wr", "minimal_vectors", "matrix_integral", "cos_theta", "r", "type_D",
    ]
    s1, s2, s3, s4 = result.transform
    with writer(fmt, columns) as out:
        out.write({
            **form_row("", form), **form_row("reduced_", reduced),
            "s1": s1, "s2": s2, "s3": s3, "s4": s4, "wr": wr,
            "minimal_vectors": minimal_vector_count(form),
            "matrix_integral": is_matrix_integral(form),
            "cos_theta": cls.ratio if cls else None,
            "r": cls.r if cls else None,
            "type_D": cls.D if cls else None,
        })


@cli.command()
@click.option("--form", "coefficients", type=int, nargs=3, required=True, metavar="A B C")
@click.option("--bound", type=int, required=True, help="Largest value listed")
@format_option
def minima(coefficients: Tuple[int, int, int], bound: int, fmt: str) -> None:
    """Every nonzero vector with F(x, y) ≤ bound."""
    form = QuadForm(*coefficients)
    with writer(fmt, ["x", "y", "value"]) as out:
        for vector in brute_force_minima(form, bound):
            out.write({"x": vector.x, "y": vector.y, "value": vector.value})


@cli.command()
@click.option("--field", "m", type=int, required=True, help="Positive squarefree m")
@click.option("--a", "a", type=int, required=True)
@click.option("--b", "b", type=int, required=True)
@format_option
def criterion(m: int, a: int, b: int, fmt: str) -> None:
    """Sufficient well-roundedness test for a primitive real-field ideal ⟨a, b+δ⟩."""
    ideal = IdealBasis(field=make_field(m), a=a, b=b, g=1)
    verdict = wr_real_criterion(ideal)
    with writer(fmt, ["m", "a", "b", "verdict", "wr"]) as out:
        out.write({"m": m, "a": a, "b": b, "verdict": verdict.value, "wr": is_wr(gram_of_ideal(ideal))})


@cli.command()
@click.option("--max", "N", type=int, required=True)
@format_option
def density(N: int, fmt: str) -> None:
    """Nearsquare and solvable ratios among squarefree D ≤ N."""
    report = density_report(N)
    summary = report.summary
    columns = [
        "N", "squarefree_count", "nearsquare_count", "solvable_count", "ratio_nearsquare",
        "ratio_solvable", "squarefree_density", "squarefree_density_limit_display",
        "bound_display", "meets_bound", "below_proof_threshold",
    ]
    with writer(fmt, columns) as out:
        out.write({
            "N": N,
            "squarefree_count": summary.squarefree_count,
            "nearsquare_count": summary.nearsquare_count,
            "solvable_count": summary.solvable_count,
            "ratio_nearsquare": summary.ratio_nearsquare,
            "ratio_solvable": summary.ratio_solvable,
            "squarefree_density": report.squarefree_density,
            "squarefree_density_limit_display": report.squarefree_density_limit,
            "bound_display": report.bound,
            "meets_bound": report.meets_bound,
            "below_proof_threshold": report.below_proof_threshold,
        })


SCAN_COLUMNS = [
    "kind", "D", "nearsquare3", "witness", "solvable", "f", "f1", "f2", "f2_divisors",
    "omega", "tau", "f1_bound_ok", "real_claim",
    "squarefree_count", "nearsquare_count", "solvable_count", "ratio_nearsquare", "ratio_solvable",
]


@cli.command()
@click.option("--max", "N", type=int, required=True)
@click.option("--workers", type=int, default=1, show_default=True)
@format_option
def scan(N: int, workers: int, fmt: str) -> None:
    """One row per squarefree D ≤ N, then a summary row."""
    options = ScanOptions(max_D=N, workers=workers)
    records: List[SurveyRecord] = []
    with writer(fmt, SCAN_COLUMNS) as out:
        for record in iter_survey_records(options):
            records.append(record)
            out.write({"kind": "field", **record.model_dump()})
        summary = summarize(N, records)
        out.write({"kind": "summary", "D": N, **summary.model_dump(exclude={"N"})})


@cli.command()
@click.option("--D", "D", type=int, default=None)
@click.option("--max", "N", type=int, default=None, help="Every squarefree D ≤ N")
@format_option
def classnumber(D: Optional[int], N: Optional[int], fmt: str) -> None:
    """Class number of Q(√−D) against the number of well-rounded classes."""
    if D is not None and N is None:
        values = [D]
    elif N is not None and D is None:
        values = [n for n in range(1, N + 1) if is_squarefree(n)]
    else:
        raise InvalidArgumentError("give exactly one of --D and --max")
    with writer(fmt, ["D", "delta", "h", "wr_classes", "forms"]) as out:
        for value in values:
            record = class_number_imag(value)
            forms = ";".join(f"{a} {b} {c}" for a, b, c in record.forms)
            out.write({
                "D": record.D, "delta": record.delta, "h": record.h,
                "wr_classes": record.wr_classes, "forms": forms,
            })


@cli.command()
@click.option("--field", "m", type=int, required=True)
@click.option("--height", type=int, default=DEFAULT_PRINCIPAL_HEIGHT, show_default=True)
@format_option
def principal(m: int, height: int, fmt: str) -> None:
    """
    Well-rounded principal ideals with a generator of height ≤ height.

    Rows are sorted by (p, q, r), then by ideal norm.
    """
    field = make_field(m)
    columns = ["m", "x", "y", "a", "b", "g", "p", "q", "r"]
    hits = sorted(principal_wr_search(field, height), key=lambda hit: (hit.cls.p, hit.cls.q, hit.cls.r))
    with writer(fmt, columns, title=f"Principal well-rounded ideals of {field}") as out:
        for hit in hits:
            out.write({
                "m": m, "x": hit.x, "y": hit.y, "a": hit.ideal.a, "b": hit.ideal.b,
                "g": hit.ideal.g, "p": hit.cls.p, "q": hit.cls.q, "r": hit.cls.r,
            })


@cli.command()
@format_option
def table1(fmt: str) -> None:
    """Recompute the reference table of well-rounded ideals in real fields."""
    with writer(fmt, ["D", "ideal_1", "ideal_2", "ratio", "r"]) as out:
        for row in table1_report():
            out.write(row.model_dump())


@cli.command()
@click.option("--max", "N", type=int, required=True)
@click.option("--a-max-factor", type=int, default=A_MAX_FACTOR, show_default=True)
@click.option("--height", type=int, default=10, show_default=True)
@format_option
def realscan(N: int, a_max_factor: int, height: int, fmt: str) -> None:
    """Well-rounded and principal well-rounded ideals of real fields Q(√D), D ≤ N."""
    columns = ["D", "d_mod_4", "solvable", "wr_class_count", "first_wr_ideal", "principal_wr"]
    with writer(fmt, columns) as out:
        for row in real_field_scan(N, a_max_factor, height):
            out.write(row.model_dump())


def domain_command(f: Callable[..., Any]) -> Callable[..., Any]:
    """Turn domain failures into a one-line diagnostic and exit status 1"""
    @functools.wraps(f)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return f(*args, **kwargs)
        except WRIdealError as e:
            message = str(e)
        except ValidationError as e:
            message = e.errors()[0]["msg"]
        click.echo(f"error: {message}", err=True)
        click.get_current_context().exit(1)
    return wrapper


# Apply the domain-error wrapper to every subcommand
for command in cli.commands.values():
    if command.callback is not None:
        command.callback = domain_command(command.callback)


def run(argv: Sequence[str]) -> int:
    """Run one command line and return its exit status"""
    try:
        result = cli.main(args=list(argv), prog_name=PACKAGE_NAME, standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        return 1
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

import configparser
import functools
import logging
import sys
from collections.abc import Callable
from enum import Enum
from typing import Any, Optional, TypeVar

import orjson
import typer

from gcrystal.crystal_basic import Axis, e_op, kappa, r_i, structure_maps, weyl_s
from gcrystal.crystal_gt import gt_decoration, gt_e, gt_e_explicit, gt_maps, gt_maps_explicit, phi_param, psi_param
from gcrystal.errors import GcrystalError, InputError
from gcrystal.grsk import central_charge, central_charge_from_q, glue, grsk_insert, grsk_inverse, grsk_local, split
from gcrystal.loopsym import loop_e, loop_h, loop_schur_jt, lsym_reduce, shape_invariant
from gcrystal.semifield import GEOMETRIC, TROPICAL, Semifield, TropInt, format_value, parse_rational
from gcrystal.serialize import (
    crystal_data_to_json,
    dumps,
    matrix_to_json,
    parse_grid,
    parse_int_matrix,
    parse_pattern,
    parse_poly,
    parse_pq,
    parse_sf_matrix,
    pattern_to_json,
    poly_to_json,
    pq_to_json,
    q_analogue_to_json,
    read_input,
    reduction_to_json,
    tableau_to_json,
)
from gcrystal.trop_comb import q_analogue, schensted_rsk, trop_central_charge, trop_grsk
from gcrystal.utils import path_check, write_output
from gcrystal.verify import load_run_config, run_suites, suite_listing

# Load configuration
config = configparser.ConfigParser()
config.read("setup.cfg")
CONF_SECTION = "gcrystal-test" if "pytest" in sys.modules else "gcrystal"
LOG_FILE = config.get(CONF_SECTION, "log_file", fallback="gcrystal.log")
OUTPUT_DIR = config.get(CONF_SECTION, "output_dir", fallback="output")

logger = logging.getLogger(__name__)

app = typer.Typer()

F = TypeVar("F", bound=Callable[..., Any])

EXIT_SUITE_FAILURE = 1
EXIT_BAD_INPUT = 2


class Mode(str, Enum):
    geometric = "geometric"
    tropical = "tropical"


def carrier(mode: Mode) -> Semifield:
    return TROPICAL if mode == Mode.tropical else GEOMETRIC


def parse_c(text: str, sf: Semifield) -> Any:
    """--c is a positive rational string geometrically and an integer tropically."""
    if sf is TROPICAL:
        try:
            return TropInt(int(text))
        except ValueError as err:
            raise InputError(f"tropical --c must be an integer, got {text!r}") from err
    value = parse_rational(text)
    if value <= 0:
        raise InputError(f"--c must be a positive rational, got {text!r}")
    return value


def parse_ints(text: str) -> tuple[int, ...]:
    """'4,3,2' -> (4, 3, 2); the empty string is the empty tuple."""
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError as err:
        raise InputError(f"expected comma-separated integers, got {text!r}") from err


def emit(obj: Any, output: Optional[str]) -> None:
    write_output(dumps(obj), output)


def handles_errors(command: F) -> F:
    """Turn library and JSON errors into a one-line diagnostic and exit code 2."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except (GcrystalError, orjson.JSONDecodeError) as err:
            logger.warning("%s failed: %s", command.__name__, err)
            typer.echo(f"error: {err}", err=True)
            raise typer.Exit(EXIT_BAD_INPUT) from err

    return wrapper  # type: ignore[return-value]


###########
# gRSK
###########


@app.command()
@handles_errors
def grsk(
    input_path: Optional[str] = typer.Option(None, "--input", help="JSON matrix; standard input when omitted"),
    output: Optional[str] = None,
    mode: Mode = Mode.geometric,
) -> None:
    """
    Geometric RSK of a matrix: {"P", "Q", "glued", "shape"}. Tropical mode runs the local
    moves over (min, +) on integer entries.
    """
    sf = carrier(mode)
    x = parse_grid(read_input(input_path), sf)
    glued = grsk_local(x)
    pq = grsk_insert(x) if mode == Mode.geometric else split(glued)
    emit(pq_to_json(pq, glued), output)


@app.command("grsk-inverse")
@handles_errors
def grsk_inverse_cmd(
    input_path: Optional[str] = typer.Option(None, "--input"),
    output: Optional[str] = None,
    mode: Mode = Mode.geometric,
) -> None:
    """Recover x from a glued matrix or from a {"P", "Q"} pair."""
    sf = carrier(mode)
    obj = read_input(input_path)
    y = glue(parse_pq(obj, sf)) if isinstance(obj, dict) and "P" in obj else parse_grid(obj, sf)
    emit(matrix_to_json(grsk_inverse(y)), output)


@app.command()
@handles_errors
def rsk(input_path: Optional[str] = typer.Option(None, "--input"), output: Optional[str] = None) -> None:
    """Classical RSK of a nonnegative integer matrix: {"P": tableau, "Q": tableau}."""
    p, q = schensted_rsk(parse_int_matrix(read_input(input_path)))
    emit({"P": tableau_to_json(p), "Q": tableau_to_json(q)}, output)


@app.command("trop-grsk")
@handles_errors
def trop_grsk_cmd(input_path: Optional[str] = typer.Option(None, "--input"), output: Optional[str] = None) -> None:
    """Tropical gRSK of a nonnegative integer matrix, as the glued integer matrix."""
    emit(matrix_to_json(trop_grsk(parse_int_matrix(read_input(input_path)))), output)


@app.command("central-charge")
@handles_errors
def central_charge_cmd(
    input_path: Optional[str] = typer.Option(None, "--input"),
    output: Optional[str] = None,
    mode: Mode = Mode.geometric,
) -> None:
    """Delta(x) = F(x) - F(P), alongside its recording-side form F(Q) + corner."""
    obj = read_input(input_path)
    if mode == Mode.tropical:
        emit({"charge": trop_central_charge(parse_int_matrix(obj))}, output)
        return
    x = parse_grid(obj)
    delta = central_charge(x)
    emit({"charge": format_value(delta), "from_q": format_value(central_charge_from_q(grsk_insert(x)))}, output)


###########
# Crystals
###########


@app.command()
@handles_errors
def crystal(
    op: str = typer.Argument(..., help="e, ebar, s or sbar; the bar forms act on columns"),
    i: int = typer.Option(1, "--i", help="crystal index"),
    c: str = typer.Option("1", "--c", help="rational c (an integer in tropical mode)"),
    input_path: Optional[str] = typer.Option(None, "--input"),
    output: Optional[str] = None,
    mode: Mode = Mode.geometric,
) -> None:
    """Apply a crystal operator or Weyl group element to a matrix."""
    sf = carrier(mode)
    x = parse_grid(read_input(input_path), sf)
    axis: Axis = "columns" if op.endswith("bar") else "rows"
    match op:
        case "e" | "ebar":
            result = e_op(x, i, parse_c(c, sf), axis)
        case "s" | "sbar":
            result = weyl_s(x, i, axis)
        case _:
            raise InputError(f"unknown crystal operator {op!r}")
    emit({"result": matrix_to_json(result), "maps": crystal_data_to_json(structure_maps(result, i, axis))}, output)


@app.command()
@handles_errors
def rmatrix(
    i: int = typer.Option(1, "--i", help="swap rows i and i + 1"),
    input_path: Optional[str] = typer.Option(None, "--input"),
    output: Optional[str] = None,
) -> None:
    """The geometric R-matrix R_i on a matrix, with the kappa of the swapped rows."""
    x = parse_grid(read_input(input_path))
    result = r_i(x, i)
    ks = kappa(x.row(i), x.row(i + 1))
    emit({"result": matrix_to_json(result), "kappa": [format_value(v) for v in ks]}, output)


@app.command()
@handles_errors
def gt(
    op: str = typer.Argument(..., help="phi, psi, e, maps or decoration"),
    j: int = typer.Option(1, "--j", help="crystal index"),
    c: str = typer.Option("1", "--c"),
    m: Optional[int] = typer.Option(None, "--m", help="pattern height, for psi"),
    input_path: Optional[str] = typer.Option(None, "--input"),
    output: Optional[str] = None,
    mode: Mode = Mode.geometric,
) -> None:
    """
    Gelfand-Tsetlin patterns. phi takes a pattern to its matrix and psi a matrix (with --m) back.
    Tropical mode uses the explicit, subtraction-free formulas.
    """
    sf = carrier(mode)
    obj = read_input(input_path)
    tropical = mode == Mode.tropical
    match op:
        case "phi":
            emit(matrix_to_json(phi_param(parse_pattern(obj))), output)
        case "psi":
            a = parse_sf_matrix(obj)
            emit(pattern_to_json(psi_param(a, m if m is not None else a.rows)), output)
        case "e":
            z = parse_pattern(obj, sf)
            moved = gt_e_explicit(z, j, parse_c(c, sf)) if tropical else gt_e(z, j, parse_c(c, sf))
            emit(pattern_to_json(moved), output)
        case "maps":
            z = parse_pattern(obj, sf)
            emit(crystal_data_to_json(gt_maps_explicit(z, j) if tropical else gt_maps(z, j)), output)
        case "decoration":
            emit({"decoration": format_value(gt_decoration(parse_pattern(obj, sf)))}, output)
        case _:
            raise InputError(f"unknown gt operation {op!r}")


###########
# Loop symmetric functions
###########


@app.command()
@handles_errors
def loopsym(
    op: str = typer.Argument(..., help="e, h, schur or shape"),
    m: int = typer.Option(..., "--m"),
    n: int = typer.Option(..., "--n"),
    k: int = typer.Option(1, "--k", help="degree, or the index of a shape invariant"),
    r: int = typer.Option(1, "--r", help="color"),
    shape: str = typer.Option("", help="lambda, e.g. 2,1"),
    skew: str = typer.Option("", help="mu for a skew shape"),
    output: Optional[str] = None,
) -> None:
    """Loop elementary, homogeneous and Schur functions, and the shape invariants S_k."""
    match op:
        case "e":
            f = loop_e(k, r, m, n)
        case "h":
            f = loop_h(k, r, m, n)
        case "schur":
            f = loop_schur_jt(parse_ints(shape), parse_ints(skew), r, m, n)
        case "shape":
            f = shape_invariant(k, m, n)
        case _:
            raise InputError(f"unknown loopsym operation {op!r}")
    emit(poly_to_json(f), output)


@app.command()
@handles_errors
def reduce(
    m: int = typer.Option(..., "--m"),
    n: int = typer.Option(..., "--n"),
    input_path: Optional[str] = typer.Option(None, "--input"),
    output: Optional[str] = None,
) -> None:
    """Write a polynomial in the loop elementary functions, or report the remainder."""
    emit(reduction_to_json(lsym_reduce(parse_poly(read_input(input_path)), m, n)), output)


@app.command("q-analogue")
@handles_errors
def q_analogue_cmd(
    content: str = typer.Option(..., help="row sums, e.g. 4,3,2"),
    n: int = typer.Option(..., "--n", help="column count"),
    output: Optional[str] = None,
) -> None:
    """Tropical central charges of the recording patterns of {content}, grouped by shape."""
    emit(q_analogue_to_json(q_analogue(parse_ints(content), n)), output)


###########
# Verification
###########


@app.command()
@handles_errors
def verify(
    suite: str = typer.Option("all", help="suite name, module name, comma list or 'all'"),
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    m: Optional[int] = typer.Option(None, "--m", help="largest row count"),
    n: Optional[int] = typer.Option(None, "--n", help="largest column count"),
    workers: Optional[int] = None,
    list_suites: bool = typer.Option(False, "--list", help="list the suites and exit"),
    progress: bool = False,
    output: Optional[str] = None,
) -> None:
    """Run named invariant suites; exit 1 and print the first failing input when any trial fails."""
    if list_suites:
        emit(suite_listing(), output)
        return
    cfg = load_run_config(trials=trials, seed=seed, m_max=m, n_max=n, workers=workers, suite=suite)
    logger.info("verifying %s with %s", suite, cfg)
    reports = run_suites(suite, cfg, progress)
    emit([report.to_json() for report in reports], output)
    failed = [report for report in reports if not report.passed]
    if failed:
        for report in failed:
            typer.echo(f"FAILED {report.name}: {orjson.dumps(report.to_json()['first_failure']).decode()}", err=True)
        raise typer.Exit(EXIT_SUITE_FAILURE)


@app.callback()
def main() -> None:
    """
    Geometric crystals and geometric RSK in exact arithmetic.

    Results are JSON on standard output (or --output); `verify --list` shows the
    invariant suites.
    """
    logging.basicConfig(
        filename=LOG_FILE,
        filemode="w",
        format="%(asctime)s: %(name)s - %(levelname)s - %(message)s",
    )
    path_check(OUTPUT_DIR)


if __name__ == "__main__":
    app()
